"""Compiling a 3-CNF formula into Mastermind query sets whose solutions are
exactly the formula's models, in all three rating variants."""

from mastermind import (
    assignment_to_code,
    code_to_assignment,
    count_sat,
    count_solutions,
    enumerate_models,
    enumerate_solutions,
    lift_color,
    parse_dimacs,
    reduce_to_black2,
    reduce_to_full2,
    reduce_to_white,
)

DIMACS = """\
c (x or not y or z) and (not x or y or w) and (y or not z or not w)
p cnf 4 3
1 -2 3 0
-1 2 4 0
2 -3 -4 0
"""

formula = parse_dimacs(DIMACS)
print(f"formula: {formula.v} variables, {formula.m} clauses")
print(f"models (by brute force): {count_sat(formula)}")
print()

for name, compiler in (
    ("white", reduce_to_white),
    ("black2", reduce_to_black2),
    ("full2", reduce_to_full2),
):
    inst, layout = compiler(formula)
    print(
        f"{name:>6}: {inst.n} pegs, {inst.c} colors, {len(inst.queries)} queries"
        f" -> {count_solutions(inst)} solutions"
    )

print()
print("solutions and models are the same thing, code for code:")
inst, layout = reduce_to_full2(formula)
models = enumerate_models(formula)
codes = enumerate_solutions(inst).solutions
for code in codes[:3]:
    assignment = code_to_assignment(code, layout)
    pretty = "".join("T" if v else "F" for v in assignment)
    print(f"  {''.join(map(str, code))} -> {pretty}")
print(f"  ... {len(codes)} in total")
assert [code_to_assignment(c, layout) for c in codes] == models
assert [assignment_to_code(formula, a, layout) for a in models] == sorted(codes)

print()
print("adding a never-used color changes nothing:")
lifted = lift_color(inst)
print(f"  {lifted.c} colors now, still {count_solutions(lifted)} solutions")
