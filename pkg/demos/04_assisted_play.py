"""Minimax self-play against a fixed secret, then a round against the
adaptive codemaker that re-chooses its secret every turn."""

from mastermind import (
    Instance,
    adaptive_rating,
    chvatal_bound,
    count_solutions,
    perfect_rating,
    rate,
    suggest_guess,
)

n, c = 4, 6
secret = (3, 1, 4, 1)
print(f"honest game on {n} pegs / {c} colors, secret {secret}")
print(f"guaranteed ceiling: {chvatal_bound(n, c)} guesses")

inst = Instance(n, c, "full")
for turn in range(1, 11):
    guess = suggest_guess(inst)
    rating = rate(secret, guess, "full")
    remaining_before = count_solutions(inst)
    inst = inst.with_query(guess, rating)
    print(
        f"  turn {turn}: guess {guess} rated {rating}, "
        f"{remaining_before} -> {count_solutions(inst)} candidates"
    )
    if rating == perfect_rating(n, "full"):
        print(f"solved in {turn} guesses")
        break

print()
print("adaptive codemaker: it never picks a secret, it just answers so that")
print("as many codes as possible stay alive")
inst = Instance(2, 3, "black")
for turn in range(1, 7):
    guess = suggest_guess(inst)
    rating = adaptive_rating(inst, guess)
    inst = inst.with_query(guess, rating)
    left = count_solutions(inst)
    print(f"  turn {turn}: guess {guess} rated {rating}, {left} candidates left")
    if rating == perfect_rating(2, "black") and left == 1:
        print("  cornered: the codebreaker finally pinned it down")
        break
