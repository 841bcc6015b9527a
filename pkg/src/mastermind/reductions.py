"""Solution-preserving compilers from 3-CNF formulas to Mastermind instances.

Three targets share one variable layout. Every clause gets three helper
variables whose values are forced by how many of the clause's literals a
model satisfies (the first is true iff exactly one literal holds, the second
is false iff all three hold, the third is true iff the first two agree), so
each model of the formula corresponds to exactly one solution code and the
solution count carries over unchanged.

* ``reduce_to_white``: each variable becomes a pair of colors (one per truth
  value) plus one mask color excluded from the secret by a zero-rated query;
  a solution is a multiset holding exactly one color per variable.
* ``reduce_to_black2``: each variable becomes a pair of positions in a
  two-color code of twice the variable count; an all-zeros query rated with
  half the length forces exactly one 1 per pair region.
* ``reduce_to_full2``: the same guesses as black2 with the white scores
  filled in (they are constant across all census-conforming codes).

Variable order is originals first, then helpers clause by clause. Positive
color/position of variable j is 2j, negative is 2j+1, and the mask color is
the largest color index. The layout is deterministic so compiled instances
can be compared byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cnf import CnfFormula
from .counting import Instance, Query
from .errors import (
    InconsistentCodeError,
    InvalidInstanceError,
    NotAModelError,
    UnsupportedVariantError,
)

TARGETS = ("white", "black2", "full2")


def lift_color(inst: Instance) -> Instance:
    """Add one never-used color: same solutions over c+1 colors.

    Appends a query guessing the new color everywhere with a zero rating,
    which forces the new color out of every solution.
    """
    if inst.variant == "white":
        raise UnsupportedVariantError(
            "color lifting is defined for the full and black variants only"
        )
    guess = (inst.c,) * inst.n
    rating = (0, 0) if inst.variant == "full" else 0
    return Instance(inst.n, inst.c + 1, inst.variant, inst.queries + (Query(guess, rating),))


@dataclass(frozen=True)
class ReductionLayout:
    """Mapping between formula variables and colors/positions of a compiled
    instance. Everything is derived from the target and the formula, so the
    layout doubles as the recipe for translating solutions back and forth."""

    target: str
    formula: CnfFormula

    def __post_init__(self):
        if self.target not in TARGETS:
            raise InvalidInstanceError(
                f"unknown reduction target {self.target!r}; expected one of {TARGETS}"
            )

    @property
    def total_vars(self) -> int:
        return self.formula.v + 3 * self.formula.m

    def aux_vars(self, i: int) -> tuple[int, int, int]:
        """Indices of clause i's three helper variables."""
        base = self.formula.v + 3 * i
        return base, base + 1, base + 2

    # white target: variable j owns colors 2j (true) and 2j+1 (false)

    def positive_color(self, j: int) -> int:
        return 2 * j

    def negative_color(self, j: int) -> int:
        return 2 * j + 1

    @property
    def mask_color(self) -> int:
        return 2 * self.total_vars

    def literal_color(self, literal) -> int:
        var, positive = literal
        return self.positive_color(var) if positive else self.negative_color(var)

    # position targets: variable j owns positions 2j (true) and 2j+1 (false)

    def positive_position(self, j: int) -> int:
        return 2 * j

    def negative_position(self, j: int) -> int:
        return 2 * j + 1

    def literal_position(self, literal) -> int:
        var, positive = literal
        return self.positive_position(var) if positive else self.negative_position(var)

    def to_doc(self) -> dict:
        """Sidecar document tying variables to colors/positions."""
        v, m = self.formula.v, self.formula.m
        doc = {
            "target": self.target,
            "original_vars": v,
            "clauses": [
                [var + 1 if pos else -(var + 1) for var, pos in clause]
                for clause in self.formula.clauses
            ],
            "total_vars": self.total_vars,
            "aux_vars": [
                dict(zip(("clause", "a", "b", "c"), (i, *self.aux_vars(i))))
                for i in range(m)
            ],
        }
        if self.target == "white":
            doc["positive_color"] = [self.positive_color(j) for j in range(self.total_vars)]
            doc["negative_color"] = [self.negative_color(j) for j in range(self.total_vars)]
            doc["mask_color"] = self.mask_color
        else:
            doc["positive_position"] = [
                self.positive_position(j) for j in range(self.total_vars)
            ]
            doc["negative_position"] = [
                self.negative_position(j) for j in range(self.total_vars)
            ]
        return doc

    @classmethod
    def from_doc(cls, doc) -> "ReductionLayout":
        try:
            clauses = tuple(
                tuple((abs(lit) - 1, lit > 0) for lit in clause) for clause in doc["clauses"]
            )
            layout = cls(doc["target"], CnfFormula(doc["original_vars"], clauses))
        except (KeyError, TypeError) as exc:
            raise InvalidInstanceError(f"malformed layout document: {exc}") from exc
        if doc.get("total_vars") != layout.total_vars:
            raise InvalidInstanceError(
                f"layout document declares {doc.get('total_vars')} total variables, "
                f"expected {layout.total_vars}"
            )
        return layout


def reduce_to_white(formula: CnfFormula) -> tuple[Instance, ReductionLayout]:
    """Compile a formula into a white-variant instance with one solution
    multiset per model."""
    layout = ReductionLayout("white", formula)
    total = layout.total_vars
    n = total
    c = 2 * total + 1
    mask = layout.mask_color

    def padded(head, rating):
        return Query(tuple(head) + (mask,) * (n - len(head)), rating)

    queries = [padded((), 0)]
    for j in range(total):
        pos, neg = layout.positive_color(j), layout.negative_color(j)
        queries.append(padded((pos, pos, neg, neg), 1))
    for i, clause in enumerate(formula.clauses):
        a, b, _ = layout.aux_vars(i)
        head = tuple(layout.literal_color(lit) for lit in clause)
        head += (layout.positive_color(a), layout.positive_color(b))
        queries.append(padded(head, 3))
    for i in range(formula.m):
        a, b, c_aux = layout.aux_vars(i)
        head = (
            layout.negative_color(a),
            layout.positive_color(b),
            layout.positive_color(c_aux),
        )
        queries.append(padded(head, 2))
    return Instance(n, c, "white", tuple(queries)), layout


def _position_guesses(layout: ReductionLayout) -> list[tuple[int, ...]]:
    total = layout.total_vars
    length = 2 * total

    def ones_at(positions):
        guess = [0] * length
        for p in positions:
            guess[p] = 1
        return tuple(guess)

    guesses = [ones_at(())]
    for j in range(total):
        guesses.append(ones_at((layout.positive_position(j), layout.negative_position(j))))
    for i, clause in enumerate(layout.formula.clauses):
        a, b, _ = layout.aux_vars(i)
        guesses.append(
            ones_at(
                [layout.literal_position(lit) for lit in clause]
                + [layout.positive_position(a), layout.positive_position(b)]
            )
        )
    for i in range(layout.formula.m):
        a, b, c_aux = layout.aux_vars(i)
        guesses.append(
            ones_at(
                (
                    layout.negative_position(a),
                    layout.positive_position(b),
                    layout.positive_position(c_aux),
                )
            )
        )
    return guesses


def reduce_to_black2(formula: CnfFormula) -> tuple[Instance, ReductionLayout]:
    """Compile a formula into a two-color black-variant instance with one
    solution code per model."""
    layout = ReductionLayout("black2", formula)
    total = layout.total_vars
    guesses = _position_guesses(layout)
    ratings = [total] + [total] * total + [total + 1] * (2 * formula.m)
    queries = tuple(Query(g, r) for g, r in zip(guesses, ratings))
    return Instance(2 * total, 2, "black", queries), layout


def reduce_to_full2(formula: CnfFormula) -> tuple[Instance, ReductionLayout]:
    """Same guesses as reduce_to_black2 with full (black, white) ratings."""
    layout = ReductionLayout("full2", formula)
    total = layout.total_vars
    guesses = _position_guesses(layout)
    ratings: list[tuple[int, int]] = [(total, 0)]
    ratings += [(total, 2)] * total
    ratings += [(total + 1, 4)] * formula.m
    ratings += [(total + 1, 2)] * formula.m
    queries = tuple(Query(g, r) for g, r in zip(guesses, ratings))
    return Instance(2 * total, 2, "full", queries), layout


def _forced_helpers(satisfied: int) -> tuple[bool, bool, bool]:
    # Forcing rule: a <-> exactly one literal holds, b <-> not all three
    # hold, c <-> a and b agree. satisfied == 0 never reaches here.
    a = satisfied == 1
    b = satisfied != 3
    return a, b, a == b


def extend_assignment(formula: CnfFormula, assignment) -> tuple[bool, ...]:
    """Original assignment -> full assignment including forced helper values.

    Raises NotAModelError when the assignment does not satisfy the formula.
    """
    assignment = tuple(bool(v) for v in assignment)
    if not formula.evaluate(assignment):
        raise NotAModelError(f"assignment {assignment} does not satisfy the formula")
    values = list(assignment)
    for clause in formula.clauses:
        satisfied = sum(assignment[var] == pos for var, pos in clause)
        values.extend(_forced_helpers(satisfied))
    return tuple(values)


def assignment_to_code(formula: CnfFormula, assignment, layout: ReductionLayout):
    """Map a model of the formula to the unique solution code of the
    compiled instance (sorted color multiset for white, binary code for the
    position targets)."""
    if layout.formula != formula:
        raise InvalidInstanceError("layout was built for a different formula")
    values = extend_assignment(formula, assignment)
    if layout.target == "white":
        return tuple(
            sorted(
                layout.positive_color(j) if val else layout.negative_color(j)
                for j, val in enumerate(values)
            )
        )
    code = [0] * (2 * layout.total_vars)
    for j, val in enumerate(values):
        code[layout.positive_position(j) if val else layout.negative_position(j)] = 1
    return tuple(code)


def code_to_assignment(code, layout: ReductionLayout) -> tuple[bool, ...]:
    """Read the original variables back out of a solution code.

    Rejects any code that is not a solution of the compiled instance: the
    decoded assignment must satisfy the formula and re-encoding it must
    reproduce the code exactly.
    """
    code = tuple(code)
    formula = layout.formula
    if layout.target == "white":
        expected_len = layout.total_vars
        present = set(code)

        def value_of(j):
            pos = layout.positive_color(j) in present
            neg = layout.negative_color(j) in present
            if pos == neg:
                raise InconsistentCodeError(
                    f"code does not pick exactly one truth color for variable {j}"
                )
            return pos

    else:
        expected_len = 2 * layout.total_vars

        def value_of(j):
            return code[layout.positive_position(j)] == 1

    if len(code) != expected_len:
        raise InconsistentCodeError(
            f"code has length {len(code)}, compiled instance uses {expected_len}"
        )
    assignment = tuple(value_of(j) for j in range(formula.v))
    if not formula.evaluate(assignment):
        raise InconsistentCodeError("code decodes to an assignment that falsifies the formula")
    if assignment_to_code(formula, assignment, layout) != code:
        raise InconsistentCodeError("code is not the canonical encoding of any model")
    return assignment


def reduce_to(target: str, formula: CnfFormula) -> tuple[Instance, ReductionLayout]:
    """Dispatch by target name ("white", "black2", "full2")."""
    if target == "white":
        return reduce_to_white(formula)
    if target == "black2":
        return reduce_to_black2(formula)
    if target == "full2":
        return reduce_to_full2(formula)
    raise InvalidInstanceError(f"unknown reduction target {target!r}; expected one of {TARGETS}")
