"""Instances and exact solution-space counting.

An instance is (n, c, variant, queries). Its solution space is:

* full/black: ordered codes in Z_c^n consistent with every query;
* white: multisets over c colors, kept in canonical non-decreasing form.
  A white rating only sees color multiplicities, so a white-rated secret is
  determined at best up to reordering and counting ordered codes would
  overcount every orbit.

Counting paths, in order of preference:

* no queries: closed form (c^n ordered codes, C(n+c-1, c-1) multisets).
* ordered variants with a pinned census: monochromatic queries fix the exact
  multiplicity of single colors (an all-t guess rated r means the secret
  holds color t exactly r times). When those pins determine every color's
  multiplicity, only codes with that census are enumerated. If at most two
  colors are actually present, candidates are popcount-classed bitmasks
  produced by combinatorial unranking and every query filter collapses to
  popcount arithmetic, which is what makes compiled-formula instances
  (~10^7 candidates) countable in seconds.
* ordered variants otherwise: chunked lexicographic enumeration of all c^n
  codes, filtered per query with numpy.
* white: depth-first search over color-multiplicity vectors with sound
  interval pruning and a closed form for the unconstrained color tail. It
  visits the same space plain multiset enumeration would and returns
  identical results (tested), merely skipping prefixes no completion can
  rescue.

Every path is exact. A search that would have to visit ``budget`` or more
candidates raises BudgetExceededError instead of returning a partial count;
the white search applies the same cap to visited search nodes.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .codes import (
    Code,
    check_code,
    check_rating,
    check_variant,
    rate,
    rating_from_doc,
    rating_to_doc,
)
from .errors import BudgetExceededError, InvalidInstanceError

DEFAULT_BUDGET = 1 << 26

# Widest code for the bitmask engine; C(63, 31) still fits in int64.
_MAX_BITS = 63
_CHUNK = 1 << 18


@dataclass(frozen=True)
class Query:
    """One guess together with the rating it received."""

    guess: Code
    rating: object

    def __post_init__(self):
        object.__setattr__(self, "guess", tuple(self.guess))
        if isinstance(self.rating, list):
            object.__setattr__(self, "rating", tuple(self.rating))


@dataclass(frozen=True)
class Instance:
    """A Mastermind satisfiability/counting problem: shape plus query set."""

    n: int
    c: int
    variant: str
    queries: tuple[Query, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self,
            "queries",
            tuple(q if isinstance(q, Query) else Query(*q) for q in self.queries),
        )
        check_variant(self.variant)
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidInstanceError(f"code length must be a positive integer, got {self.n!r}")
        if not isinstance(self.c, int) or self.c < 1:
            raise InvalidInstanceError(f"color count must be a positive integer, got {self.c!r}")
        for q in self.queries:
            check_code(q.guess, self.n, self.c)
            check_rating(q.rating, self.n, self.variant)

    def with_query(self, guess, rating) -> "Instance":
        """A copy of this instance with one more query appended."""
        return Instance(self.n, self.c, self.variant, self.queries + (Query(guess, rating),))

    def space_size(self) -> int:
        """Size of the unconstrained solution space for this shape."""
        return search_space_size(self.n, self.c, self.variant)

    def to_doc(self) -> dict:
        """The instance document: {n, c, variant, queries:[{guess, rating}]}."""
        return {
            "n": self.n,
            "c": self.c,
            "variant": self.variant,
            "queries": [
                {"guess": list(q.guess), "rating": rating_to_doc(q.rating, self.variant)}
                for q in self.queries
            ],
        }

    @classmethod
    def from_doc(cls, doc) -> "Instance":
        """Parse and validate an instance document."""
        if not isinstance(doc, dict):
            raise InvalidInstanceError(f"instance document must be an object, got {type(doc).__name__}")
        missing = {"n", "c", "variant", "queries"} - set(doc)
        if missing:
            raise InvalidInstanceError(f"instance document missing fields: {sorted(missing)}")
        n, c, variant = doc["n"], doc["c"], doc["variant"]
        check_variant(variant)
        if not isinstance(n, int) or isinstance(n, bool):
            raise InvalidInstanceError(f"n must be an integer, got {n!r}")
        if not isinstance(doc["queries"], list):
            raise InvalidInstanceError("instance queries must be an array")
        queries = []
        for entry in doc["queries"]:
            if not isinstance(entry, dict) or "guess" not in entry or "rating" not in entry:
                raise InvalidInstanceError(f"query entry must be {{guess, rating}}, got {entry!r}")
            rating = rating_from_doc(entry["rating"], n, variant)
            queries.append(Query(tuple(entry["guess"]), rating))
        return cls(n, c, variant, tuple(queries))


@dataclass(frozen=True)
class SolutionSet:
    """Exact solution count plus an explicit (possibly capped) listing."""

    count: int
    solutions: tuple[Code, ...] = ()
    truncated: bool = False


def search_space_size(n: int, c: int, variant: str) -> int:
    """c^n ordered codes for full/black; multiset count for white."""
    check_variant(variant)
    if variant == "white":
        return math.comb(n + c - 1, c - 1)
    return c**n


def is_consistent(x, q: Query, variant: str) -> bool:
    """True iff code x would have produced exactly q's rating for q's guess."""
    return rate(x, q.guess, variant) == q.rating


def count_solutions(inst: Instance, budget: int = DEFAULT_BUDGET) -> int:
    """Exact number of solutions of the instance.

    full/black count ordered codes, white counts multisets. Raises
    BudgetExceededError when the search would visit budget or more
    candidates; never returns a partial count.
    """
    return _solve(inst, budget, limit=0, want_list=False).count


def enumerate_solutions(
    inst: Instance, limit: int | None = None, budget: int = DEFAULT_BUDGET
) -> SolutionSet:
    """Solutions in lexicographic order (white: canonical sorted codes).

    The listing stops at ``limit`` entries (flagged via ``truncated``) but
    the count field is always exact.
    """
    if limit is not None and limit < 0:
        raise InvalidInstanceError(f"limit must be non-negative, got {limit}")
    return _solve(inst, budget, limit=limit, want_list=True)


# ---------------------------------------------------------------------------
# dispatch


def _solve(inst, budget, limit, want_list, use_census=True):
    if inst.variant == "white":
        return _solve_white(inst, budget, limit, want_list)
    return _solve_ordered(inst, budget, limit, want_list, use_census)


def _check_budget(required, budget, detail):
    if required >= budget:
        raise BudgetExceededError(required, budget, detail)


def _cap(limit):
    return math.inf if limit is None else limit


# ---------------------------------------------------------------------------
# ordered variants (full / black)


def _solve_ordered(inst, budget, limit, want_list, use_census=True):
    if not inst.queries:
        total = inst.c**inst.n
        if not want_list:
            return SolutionSet(total)
        keep = total if limit is None else min(limit, total)
        _check_budget(keep, budget, "solution listing")
        codes = [_decode_index(r, inst.n, inst.c) for r in range(keep)]
        return SolutionSet(total, tuple(codes), keep < total)

    census = _pinned_census(inst) if use_census else None
    if census == "impossible":
        return SolutionSet(0)
    if census is not None:
        required = _multinomial(census)
        _check_budget(required, budget, "census-restricted enumeration")
        present = [t for t, m in enumerate(census) if m > 0]
        if len(present) <= 2 and inst.n <= _MAX_BITS:
            return _solve_census_bitmask(inst, census, present, limit, want_list)
        chunks = _census_chunks(census)
    else:
        required = inst.c**inst.n
        _check_budget(required, budget, "ordered enumeration")
        chunks = _lex_chunks(inst.n, inst.c)
    return _filter_stream(inst, chunks, limit, want_list)


def _decode_index(rank, n, c):
    digits = []
    for _ in range(n):
        rank, d = divmod(rank, c)
        digits.append(d)
    return tuple(reversed(digits))


def _lex_chunks(n, c):
    """All of Z_c^n in lexicographic order, as (chunk, n) integer arrays."""
    total = c**n
    dtype = np.int16 if c <= np.iinfo(np.int16).max else np.int32
    weights = np.array([c ** (n - 1 - j) for j in range(n)], dtype=np.int64)
    for lo in range(0, total, _CHUNK):
        ranks = np.arange(lo, min(lo + _CHUNK, total), dtype=np.int64)
        yield ((ranks[:, None] // weights[None, :]) % c).astype(dtype)


def _census_chunks(census):
    """Lexicographic multiset permutations of the census, as numpy chunks."""
    n = sum(census)
    counts = list(census)
    buf: list[tuple] = []

    def gen():
        for _ in _census_walk(counts, n, [], buf):
            if len(buf) >= _CHUNK:
                arr = np.array(buf, dtype=np.int16)
                buf.clear()
                yield arr
        if buf:
            yield np.array(buf, dtype=np.int16)

    return gen()


def _census_walk(counts, n, prefix, buf):
    if len(prefix) == n:
        buf.append(tuple(prefix))
        yield None
        return
    for t in range(len(counts)):
        if counts[t]:
            counts[t] -= 1
            prefix.append(t)
            yield from _census_walk(counts, n, prefix, buf)
            prefix.pop()
            counts[t] += 1


def _filter_stream(inst, chunks, limit, want_list):
    count = 0
    out = []
    truncated = False
    cap = _cap(limit)
    guesses = [np.array(q.guess, dtype=np.int32) for q in inst.queries]
    for chunk in chunks:
        for q, g in zip(inst.queries, guesses):
            if not len(chunk):
                break
            chunk = chunk[_query_mask(chunk, g, q.rating, inst.variant)]
        count += len(chunk)
        if want_list:
            for row in chunk:
                if len(out) < cap:
                    out.append(tuple(int(v) for v in row))
                else:
                    truncated = True
                    break
    return SolutionSet(count, tuple(out), truncated)


def _query_mask(codes, guess, rating, variant):
    alpha = (codes == guess).sum(axis=1)
    if variant == "black":
        return alpha == rating
    black, white = rating
    beta = np.zeros(len(codes), dtype=np.int64)
    for t, gcount in Counter(int(v) for v in guess).items():
        beta += np.minimum((codes == t).sum(axis=1), gcount)
    return (alpha == black) & ((beta - alpha) == white)


def _pinned_census(inst):
    """Complete per-color multiplicity vector forced by monochromatic queries.

    Returns the census list, "impossible" when the pins contradict each other
    (the instance has no solutions), or None when the pins do not determine
    every color.
    """
    pins: dict[int, int] = {}
    for q in inst.queries:
        colors = set(q.guess)
        if len(colors) != 1:
            continue
        t = colors.pop()
        if inst.variant == "full":
            black, white = q.rating
            # A monochromatic guess can never score white pegs.
            if white != 0:
                return "impossible"
            r = black
        else:
            r = q.rating
        if pins.setdefault(t, r) != r:
            return "impossible"
    if not pins:
        return None
    pinned_total = sum(pins.values())
    if pinned_total > inst.n:
        return "impossible"
    free = [t for t in range(inst.c) if t not in pins]
    if pinned_total == inst.n:
        return [pins.get(t, 0) for t in range(inst.c)]
    if len(free) == 1:
        pins[free[0]] = inst.n - pinned_total
        return [pins[t] for t in range(inst.c)]
    if not free:
        return "impossible"
    return None


def _multinomial(census):
    total = sum(census)
    out = 1
    for m in census:
        out *= math.comb(total, m)
        total -= m
    return out


# ---------------------------------------------------------------------------
# census bitmask engine (at most two colors actually present)


def _popcount(arr):
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(arr).astype(np.int64)
    return _popcount_portable(arr)


def _popcount_portable(arr):
    # numpy < 2.0 has no bitwise_count
    v = arr.copy()
    out = np.zeros(arr.shape, dtype=np.int64)
    while v.any():
        out += (v & np.uint64(1)).astype(np.int64)
        v >>= np.uint64(1)
    return out


def _positions_mask(guess, color, n):
    """Bitmask with bit (n-1-i) set iff guess[i] == color."""
    mask = 0
    for i, peg in enumerate(guess):
        if peg == color:
            mask |= 1 << (n - 1 - i)
    return mask


def _binom_table(n, k):
    table = np.zeros((n + 1, k + 2), dtype=np.int64)
    for i in range(n + 1):
        for j in range(min(i, k + 1) + 1):
            table[i, j] = math.comb(i, j)
    return table


def _combination_mask_chunks(n, k):
    """All n-bit masks with popcount k, ascending, by combinatorial unranking."""
    total = math.comb(n, k)
    table = _binom_table(n, k)
    for lo in range(0, total, _CHUNK):
        ranks = np.arange(lo, min(lo + _CHUNK, total), dtype=np.int64)
        masks = np.zeros(len(ranks), dtype=np.uint64)
        rem = ranks.copy()
        need = np.full(len(ranks), k, dtype=np.int64)
        for bit in range(n - 1, -1, -1):
            below = table[bit, need]
            take = rem >= below
            masks[take] |= np.uint64(1 << bit)
            rem[take] -= below[take]
            need[take] -= 1
        yield masks


def _solve_census_bitmask(inst, census, present, limit, want_list):
    n = inst.n
    if len(present) == 1:
        code = (present[0],) * n
        ok = all(is_consistent(code, q, inst.variant) for q in inst.queries)
        if not ok:
            return SolutionSet(0)
        listed = (code,) if want_list and _cap(limit) >= 1 else ()
        return SolutionSet(1, listed, want_list and not listed)

    lo_color, hi_color = present
    specs = []
    for q in inst.queries:
        if inst.variant == "full":
            black, white = q.rating
            beta = sum(min(census[t], cnt) for t, cnt in Counter(q.guess).items())
            # The census fixes every candidate's color counts, so the white
            # score is the same for all of them; mismatch kills the query.
            if beta - black != white:
                return SolutionSet(0)
            target = black
        else:
            target = q.rating
        gm_hi = _positions_mask(q.guess, hi_color, n)
        gm_lo = _positions_mask(q.guess, lo_color, n)
        specs.append((np.uint64(gm_hi), np.uint64(gm_lo), bin(gm_lo).count("1"), target))

    count = 0
    out = []
    truncated = False
    cap = _cap(limit)
    for masks in _combination_mask_chunks(n, census[hi_color]):
        keep = np.ones(len(masks), dtype=bool)
        for gm_hi, gm_lo, lo_total, target in specs:
            if not keep.any():
                break
            alpha = _popcount(masks & gm_hi) + lo_total - _popcount(masks & gm_lo)
            keep &= alpha == target
        survivors = masks[keep]
        count += len(survivors)
        if want_list:
            for mask in survivors:
                if len(out) < cap:
                    mask = int(mask)
                    out.append(
                        tuple(
                            hi_color if (mask >> (n - 1 - i)) & 1 else lo_color
                            for i in range(n)
                        )
                    )
                else:
                    truncated = True
                    break
    return SolutionSet(count, tuple(out), truncated)


# ---------------------------------------------------------------------------
# white variant: search over color-multiplicity vectors


def _solve_white(inst, budget, limit, want_list):
    n, c = inst.n, inst.c
    gcounts = [np.bincount(q.guess, minlength=c).tolist() for q in inst.queries]
    targets = [q.rating for q in inst.queries]
    nq = len(targets)

    # Static per-color ceiling: min(m_t, g_t) <= r forces m_t <= r when g_t > r.
    ub = [n] * c
    for g, r in zip(gcounts, targets):
        for t in range(c):
            if g[t] > r:
                ub[t] = min(ub[t], r)

    # smax[q][t]: the most colors >= t can still add to query q's overlap.
    smax = [[0] * (c + 1) for _ in range(nq)]
    for qi, g in enumerate(gcounts):
        for t in range(c - 1, -1, -1):
            smax[qi][t] = smax[qi][t + 1] + min(ub[t], g[t])
    # cap[t]: the most slots colors >= t can still fill.
    cap_suffix = [0] * (c + 1)
    for t in range(c - 1, -1, -1):
        cap_suffix[t] = cap_suffix[t + 1] + ub[t]

    touches = [[qi for qi in range(nq) if gcounts[qi][t] > 0] for t in range(c)]
    last_touch = [max((t for t in range(c) if g[t] > 0), default=-1) for g in gcounts]
    finalize_at = [[] for _ in range(c)]
    for qi, t in enumerate(last_touch):
        if t >= 0:
            finalize_at[t].append(qi)
    free_from = 1 + max(last_touch, default=-1)

    for qi in range(nq):
        if smax[qi][0] < targets[qi]:
            return SolutionSet(0)

    count = 0
    out: list[Code] = []
    truncated = False
    cap = _cap(limit)
    nodes = 0
    partial = [0] * nq
    counts_prefix = [0] * c

    def tail_count(slots, colors_left):
        if colors_left == 0:
            return 1 if slots == 0 else 0
        return math.comb(slots + colors_left - 1, colors_left - 1)

    def emit(code):
        # Listing work counts against the budget too, or an uncapped
        # listing of a huge weakly-constrained space would never return.
        nonlocal nodes
        nodes += 1
        if nodes >= budget:
            raise BudgetExceededError(nodes, budget, "white-variant solution listing")
        out.append(code)

    def emit_tail(t, slots):
        # Lexicographic completions over the unconstrained colors [t, c).
        nonlocal truncated
        if len(out) >= cap:
            truncated = True
            return
        if t == c - 1:
            counts_prefix[t] = slots
            emit(_expand_counts(counts_prefix))
            counts_prefix[t] = 0
            return
        for m in range(slots, -1, -1):
            if len(out) >= cap:
                truncated = True
                return
            counts_prefix[t] = m
            emit_tail(t + 1, slots - m)
            counts_prefix[t] = 0

    def dfs(t, used):
        nonlocal count, nodes, truncated
        if t >= free_from:
            slots = n - used
            k = c - t
            sub = tail_count(slots, k)
            if sub:
                count += sub
                if want_list:
                    if k == 0:
                        if len(out) < cap:
                            emit(_expand_counts(counts_prefix))
                        else:
                            truncated = True
                    else:
                        emit_tail(t, slots)
            return
        top = min(ub[t], n - used)
        for m in range(top, -1, -1):
            nodes += 1
            if nodes >= budget:
                raise BudgetExceededError(nodes, budget, "white-variant search")
            if used + m + cap_suffix[t + 1] < n:
                # m only shrinks from here, so no smaller m can fill n slots.
                break
            ok = True
            for qi in touches[t]:
                partial[qi] += min(m, gcounts[qi][t])
                if partial[qi] > targets[qi] or partial[qi] + smax[qi][t + 1] < targets[qi]:
                    ok = False
            if ok:
                for qi in finalize_at[t]:
                    if partial[qi] != targets[qi]:
                        ok = False
                        break
            if ok:
                counts_prefix[t] = m
                dfs(t + 1, used + m)
                counts_prefix[t] = 0
            for qi in touches[t]:
                partial[qi] -= min(m, gcounts[qi][t])

    dfs(0, 0)
    return SolutionSet(count, tuple(out), truncated)


def _expand_counts(counts):
    return tuple(
        itertools.chain.from_iterable((t,) * m for t, m in enumerate(counts) if m)
    )
