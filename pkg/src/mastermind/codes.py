"""Codes and rating arithmetic shared by every game variant.

A code is a tuple of color indices in ``[0, c)``. Three rating variants are
supported:

* ``"full"``  -- classic feedback ``(black, white)``: black counts exact
  position matches, white counts additional color-only matches.
* ``"black"`` -- the exact-position count alone.
* ``"white"`` -- the color-overlap count alone; order never matters, so a
  white-rated code is determined only up to reordering.

``color_matches`` is computed as the per-color minimum of multiplicities,
which equals the best exact-match count over all reorderings of one code
(linear time instead of permutation search; the equivalence is covered by
tests, not assumed).
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Sequence

from .errors import DimensionMismatchError, InvalidInstanceError

Code = tuple[int, ...]
# (black, white) for the full variant, a bare int for black/white variants.
Rating = tuple[int, int] | int

VARIANTS = ("full", "black", "white")


def check_variant(variant: str) -> str:
    if variant not in VARIANTS:
        raise InvalidInstanceError(
            f"unknown variant {variant!r}; expected one of {', '.join(VARIANTS)}"
        )
    return variant


def check_code(code: Sequence[int], n: int, c: int) -> Code:
    """Validate a code against an instance shape and return it as a tuple."""
    code = tuple(code)
    if len(code) != n:
        raise DimensionMismatchError(f"code {code} has length {len(code)}, expected {n}")
    for peg in code:
        if not isinstance(peg, int) or isinstance(peg, bool) or not 0 <= peg < c:
            raise InvalidInstanceError(f"code {code} has color {peg!r} outside [0, {c})")
    return code


def check_rating(rating, n: int, variant: str):
    """Validate a rating value for the given variant and code length."""
    if variant == "full":
        if (
            not isinstance(rating, tuple)
            or len(rating) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in rating)
        ):
            raise InvalidInstanceError(
                f"full-variant rating must be a (black, white) pair, got {rating!r}"
            )
        black, white = rating
        if black < 0 or white < 0 or black + white > n:
            raise InvalidInstanceError(
                f"rating {rating} out of bounds for code length {n}"
            )
        return rating
    if not isinstance(rating, int) or isinstance(rating, bool):
        raise InvalidInstanceError(
            f"{variant}-variant rating must be a single integer, got {rating!r}"
        )
    if not 0 <= rating <= n:
        raise InvalidInstanceError(f"rating {rating} out of bounds for code length {n}")
    return rating


def _check_same_length(x: Sequence[int], y: Sequence[int]) -> None:
    if len(x) != len(y):
        raise DimensionMismatchError(
            f"codes have different lengths ({len(x)} vs {len(y)})"
        )


def exact_matches(x: Sequence[int], y: Sequence[int]) -> int:
    """Number of positions where the two codes agree. Symmetric, in [0, n]."""
    _check_same_length(x, y)
    return sum(a == b for a, b in zip(x, y))


def color_matches(x: Sequence[int], y: Sequence[int]) -> int:
    """Multiset overlap of the two codes: sum over colors of min(count, count).

    Equals the largest exact_matches(x, y') over all reorderings y' of y.
    Symmetric, and exact_matches(x, y) <= color_matches(x, y) <= n.
    """
    _check_same_length(x, y)
    return sum((Counter(x) & Counter(y)).values())


def rate(secret: Sequence[int], guess: Sequence[int], variant: str):
    """Rate a guess against a secret under the given variant.

    full -> (black, white) with black = exact matches and
    white = color matches - exact matches; black -> exact matches;
    white -> color matches.
    """
    check_variant(variant)
    if variant == "black":
        return exact_matches(secret, guess)
    if variant == "white":
        return color_matches(secret, guess)
    black = exact_matches(secret, guess)
    return (black, color_matches(secret, guess) - black)


def perfect_rating(n: int, variant: str):
    """The rating a correct guess receives: (n, 0), n, or n."""
    return (n, 0) if variant == "full" else n


def rating_to_doc(rating, variant: str):
    """Rating value -> its JSON document form ({black, white} or bare int)."""
    if variant == "full":
        return {"black": rating[0], "white": rating[1]}
    return rating


def rating_from_doc(doc, n: int, variant: str):
    """JSON document form -> rating value, validated for the variant."""
    if variant == "full":
        if not isinstance(doc, dict) or set(doc) != {"black", "white"}:
            raise InvalidInstanceError(
                f"full-variant rating document must be {{black, white}}, got {doc!r}"
            )
        return check_rating((doc["black"], doc["white"]), n, variant)
    return check_rating(doc, n, variant)
