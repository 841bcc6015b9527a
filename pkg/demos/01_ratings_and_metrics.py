"""Tour of codes and ratings: the three feedback variants and the two
distances they induce on the code space."""

from mastermind import color_matches, exact_matches, perfect_rating, rate

secret = (0, 1, 2, 3)
guesses = [
    (4, 4, 1, 1),
    (3, 2, 2, 4),
    (0, 3, 0, 4),
    (5, 5, 3, 4),
    (1, 2, 0, 3),
    (0, 1, 2, 3),
]

print(f"secret: {secret}")
print(f"{'guess':<14} {'full':<8} {'black':<6} {'white':<6}")
for g in guesses:
    black, white = rate(secret, g, "full")
    print(
        f"{str(g):<14} ({black},{white})   "
        f"{rate(secret, g, 'black'):<6} {rate(secret, g, 'white'):<6}"
    )

print()
print("exact_matches counts agreeing positions; color_matches is the")
print("multiset overlap, i.e. the best exact-match count over reorderings:")
x, y = (0, 1, 2, 3), (1, 2, 0, 3)
print(f"  exact_matches{x, y} = {exact_matches(x, y)}")
print(f"  color_matches{x, y} = {color_matches(x, y)}")

n = len(x)
print()
print(f"n - exact_matches is a distance on ordered codes:")
print(f"  d(x, x) = {n - exact_matches(x, x)}")
print(f"  d(x, y) = {n - exact_matches(x, y)} = d(y, x) = {n - exact_matches(y, x)}")
print(f"n - color_matches is a distance on codes up to reordering:")
xs, ys = tuple(sorted(x)), tuple(sorted(y))
print(f"  sorted forms {xs} and {ys}: d = {n - color_matches(xs, ys)}")

print()
print("a correct guess earns the maximal rating:")
for variant in ("full", "black", "white"):
    print(f"  {variant}: rate(s, s) = {rate(secret, secret, variant)}"
          f" (perfect = {perfect_rating(n, variant)})")
