"""Guess planning: minimax suggestions, an adaptive codemaker, and the
classic guess-count ceiling.

The suggestion rule is the greedy worst-case heuristic: score every guess in
the whole code space by the size of the largest class of still-eligible
secrets it could leave behind, and pick a guess minimizing that size. Ties
prefer guesses that are themselves eligible (they might win outright), then
the lexicographically smallest guess, so results are deterministic.

The adaptive codemaker never commits to a secret: asked to rate a guess, it
answers with a rating that keeps the most secrets eligible (ties broken by
the smallest rating), so it can never contradict its own history.
"""

from __future__ import annotations

import math
from collections import Counter
from itertools import combinations_with_replacement

import numpy as np

from .codes import Code, check_code, rate
from .counting import DEFAULT_BUDGET, Instance, _lex_chunks, enumerate_solutions
from .errors import BudgetExceededError, NoCandidateError

_GUESS_CHUNK = 512


def candidate_codes(history: Instance, budget: int = DEFAULT_BUDGET) -> tuple[Code, ...]:
    """All codes still consistent with the transcript, in lexicographic
    order (canonical sorted codes for the white variant)."""
    return enumerate_solutions(history, limit=None, budget=budget).solutions


def worst_case_partition(guess, candidates, variant: str) -> int:
    """Size of the largest candidate class left after rating guess.

    Candidates are split by the rating each would give the guess; whatever
    the true secret is, at least the largest class survives.
    """
    if not candidates:
        raise NoCandidateError("cannot partition an empty candidate set")
    classes = Counter(rate(secret, guess, variant) for secret in candidates)
    return max(classes.values())


def suggest_guess(history: Instance, budget: int = DEFAULT_BUDGET) -> Code:
    """The minimax guess for the transcript so far.

    Searches the entire code space (not only eligible codes): a throwaway
    guess can split the candidates better than any eligible one. A single
    remaining candidate is returned directly.
    """
    candidates = candidate_codes(history, budget)
    if not candidates:
        raise NoCandidateError("no code is consistent with the transcript")
    if len(candidates) == 1:
        return candidates[0]

    n, c, variant = history.n, history.c, history.variant
    space = math.comb(n + c - 1, c - 1) if variant == "white" else c**n
    if space >= budget:
        raise BudgetExceededError(space, budget, "guess-space search")

    cand_arr = np.array(candidates, dtype=np.int16)
    cand_set = set(candidates)
    best_key = None
    best_guess = None
    for chunk in _guess_chunks(n, c, variant):
        worst = _worst_class_sizes(chunk, cand_arr, variant, n, c)
        eligible = np.fromiter(
            (tuple(int(v) for v in row) in cand_set for row in chunk),
            dtype=bool,
            count=len(chunk),
        )
        keys = worst * 2 + ~eligible
        idx = int(np.argmin(keys))
        if best_key is None or keys[idx] < best_key:
            best_key = int(keys[idx])
            best_guess = tuple(int(v) for v in chunk[idx])
    return best_guess


def adaptive_rating(history: Instance, guess, budget: int = DEFAULT_BUDGET):
    """The rating an adaptive codemaker gives: keep as many candidates
    eligible as possible, smallest rating on ties. Never contradicts the
    transcript (the returned rating always leaves at least one candidate)."""
    candidates = candidate_codes(history, budget)
    if not candidates:
        raise NoCandidateError("no code is consistent with the transcript")
    guess = check_code(guess, history.n, history.c)
    classes = Counter(rate(secret, guess, history.variant) for secret in candidates)
    return min(classes.items(), key=lambda item: (-item[1], item[0]))[0]


def chvatal_bound(n: int, c: int) -> int:
    """Guess-count ceiling ceil(2n log2 c + 4n + ceil(c/n)) for honest play."""
    return math.ceil(2 * n * math.log2(c) + 4 * n + math.ceil(c / n))


# ---------------------------------------------------------------------------


def _guess_chunks(n, c, variant):
    if variant != "white":
        # Re-slice the enumeration chunks: scoring holds a (guesses x
        # candidates x colors) block in memory, so keep guess blocks small.
        for chunk in _lex_chunks(n, c):
            for lo in range(0, len(chunk), _GUESS_CHUNK):
                yield chunk[lo : lo + _GUESS_CHUNK]
        return
    buf = []
    for code in combinations_with_replacement(range(c), n):
        buf.append(code)
        if len(buf) >= _GUESS_CHUNK:
            yield np.array(buf, dtype=np.int16)
            buf = []
    if buf:
        yield np.array(buf, dtype=np.int16)


def _worst_class_sizes(guesses, cand_arr, variant, n, c):
    """For each guess row, the largest rating-class size over the candidates."""
    worst = np.empty(len(guesses), dtype=np.int64)
    classes = _rating_class_codes(guesses, cand_arr, variant, n, c)
    bins = (n + 1) ** 2 if variant == "full" else n + 1
    for i in range(len(guesses)):
        worst[i] = np.bincount(classes[i], minlength=bins).max()
    return worst


def _rating_class_codes(guesses, cand_arr, variant, n, c):
    """(G, M) matrix of ratings encoded as small ints."""
    if variant != "white":
        alpha = (guesses[:, None, :] == cand_arr[None, :, :]).sum(axis=2, dtype=np.int32)
        if variant == "black":
            return alpha
    gcnt = np.stack([(guesses == t).sum(axis=1) for t in range(c)], axis=1).astype(np.int16)
    ccnt = np.stack([(cand_arr == t).sum(axis=1) for t in range(c)], axis=1).astype(np.int16)
    beta = np.minimum(gcnt[:, None, :], ccnt[None, :, :]).sum(axis=2, dtype=np.int32)
    if variant == "white":
        return beta
    return alpha * (n + 1) + (beta - alpha)
