"""How the solution space shrinks as queries accumulate, and what the
counting engine does to stay exact without enumerating the impossible."""

import time

from mastermind import (
    BudgetExceededError,
    Instance,
    count_solutions,
    enumerate_solutions,
    rate,
)

# A classic board: 4 pegs, 6 colors, full ratings.
secret = (0, 1, 2, 3)
inst = Instance(4, 6, "full")
print(f"fresh board: {count_solutions(inst)} possible codes (6^4)")

for guess in [(0, 0, 1, 1), (2, 3, 0, 1), (0, 1, 2, 3)]:
    inst = inst.with_query(guess, rate(secret, guess, "full"))
    print(f"after guessing {guess}: {count_solutions(inst)} codes remain")

print()
listing = enumerate_solutions(Instance(2, 3, "black", (((0, 1), 1),)))
print(f"solutions of a small instance, lexicographic: {listing.solutions}")

print()
print("white-variant spaces count multisets, not ordered codes:")
print(f"  4 pegs / 6 colors: {count_solutions(Instance(4, 6, 'white'))} multisets")

print()
print("a monochromatic query pins how often its color occurs; when that")
print("determines the whole color census, enumeration restricts to codes")
print("with that census:")
inst = Instance(26, 2, "black", (((0,) * 26, 13),))
t0 = time.perf_counter()
count = count_solutions(inst)
print(f"  26-peg two-color board, all-zeros rated 13 -> {count} codes "
      f"(C(26,13), counted in {time.perf_counter() - t0:.2f}s)")

print()
print("without such structure the same shape is refused, never guessed:")
try:
    count_solutions(Instance(26, 2, "black", (((0, 1) * 13, 13),)))
except BudgetExceededError as exc:
    print(f"  BudgetExceededError: {exc}")
