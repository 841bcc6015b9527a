"""Command-line front end.

Subcommands: rate, count, enumerate, reduce, verify, suggest, bound, serve,
play. Codes on the command line are comma-separated color indices
("0,1,2,3"); full-variant ratings print as "black=B white=W", single-count
ratings as a bare integer. Exit codes: 0 success, 1 validation or usage
error, 2 enumeration budget exceeded, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cnf import parse_dimacs
from .codes import perfect_rating, rate, rating_to_doc
from .counting import DEFAULT_BUDGET, Instance, count_solutions, enumerate_solutions
from .errors import BudgetExceededError, MastermindError
from .reductions import reduce_to
from .satcount import MAX_VARS, count_sat
from .service import DEFAULT_PORT, make_server
from .sessions import MODES, SessionStore
from .strategy import candidate_codes, chvatal_bound, suggest_guess, worst_case_partition

_RATE_USAGE_EXIT = 1
_BUDGET_EXIT = 2
_VERIFY_FAIL_EXIT = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for budget errors.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(_RATE_USAGE_EXIT)


def _parse_code(text: str) -> tuple[int, ...]:
    try:
        code = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise MastermindError(f"codes are comma-separated integers, got {text!r}") from None
    if any(peg < 0 for peg in code):
        raise MastermindError(f"colors are non-negative integers, got {text!r}")
    return code


def _format_rating(rating, variant: str) -> str:
    if variant == "full":
        return f"black={rating[0]} white={rating[1]}"
    return str(rating)


def _parse_rating_text(text: str, variant: str):
    try:
        if variant == "full":
            black, white = (int(part) for part in text.split(","))
            return (black, white)
        return int(text)
    except ValueError:
        expected = "B,W" if variant == "full" else "a single integer"
        raise MastermindError(f"ratings are entered as {expected}, got {text!r}") from None


def _load_instance(path: str) -> Instance:
    with open(path, encoding="utf-8") as fh:
        return Instance.from_doc(json.load(fh))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mastermind", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rate", help="rate a guess against a secret")
    p.add_argument("--variant", required=True, choices=("full", "black", "white"))
    p.add_argument("--secret", required=True)
    p.add_argument("--guess", required=True)

    p = sub.add_parser("count", help="count the solutions of an instance file")
    p.add_argument("instance")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    p = sub.add_parser("enumerate", help="list the solutions of an instance file")
    p.add_argument("instance")
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    p = sub.add_parser("reduce", help="compile a DIMACS formula to an instance")
    p.add_argument("cnf")
    p.add_argument("--target", required=True, choices=("white", "black2", "full2"))
    p.add_argument("--out-instance")
    p.add_argument("--out-layout")

    p = sub.add_parser("verify", help="check all three compilers against model counting")
    p.add_argument("cnf")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    p = sub.add_parser("suggest", help="minimax guess for an instance file")
    p.add_argument("instance")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    p = sub.add_parser("bound", help="guess-count ceiling for a shape")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=int, required=True)

    p = sub.add_parser("serve", help="run the local HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument(
        "--port",
        type=int,
        default=int(os.environ.get("MASTERMIND_PORT", DEFAULT_PORT)),
    )
    p.add_argument("--journal")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    p = sub.add_parser("play", help="terminal play loop (reads guesses from stdin)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--variant", required=True, choices=("full", "black", "white"))
    p.add_argument("--mode", default="engine-secret", choices=MODES)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else _RATE_USAGE_EXIT
    try:
        return _dispatch(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _BUDGET_EXIT
    except (MastermindError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _RATE_USAGE_EXIT


def _dispatch(args) -> int:
    handler = {
        "rate": _cmd_rate,
        "count": _cmd_count,
        "enumerate": _cmd_enumerate,
        "reduce": _cmd_reduce,
        "verify": _cmd_verify,
        "suggest": _cmd_suggest,
        "bound": _cmd_bound,
        "serve": _cmd_serve,
        "play": _cmd_play,
    }[args.command]
    return handler(args)


def _cmd_rate(args) -> int:
    secret = _parse_code(args.secret)
    guess = _parse_code(args.guess)
    print(_format_rating(rate(secret, guess, args.variant), args.variant))
    return 0


def _cmd_count(args) -> int:
    print(count_solutions(_load_instance(args.instance), args.budget))
    return 0


def _cmd_enumerate(args) -> int:
    result = enumerate_solutions(_load_instance(args.instance), args.limit, args.budget)
    print(
        json.dumps(
            {
                "count": result.count,
                "truncated": result.truncated,
                "solutions": [list(code) for code in result.solutions],
            }
        )
    )
    return 0


def _cmd_reduce(args) -> int:
    with open(args.cnf, encoding="utf-8") as fh:
        formula = parse_dimacs(fh.read())
    instance, layout = reduce_to(args.target, formula)
    stem = os.path.splitext(args.cnf)[0]
    instance_path = args.out_instance or f"{stem}.{args.target}.instance.json"
    layout_path = args.out_layout or f"{stem}.{args.target}.layout.json"
    with open(instance_path, "w", encoding="utf-8") as fh:
        json.dump(instance.to_doc(), fh, indent=2)
        fh.write("\n")
    with open(layout_path, "w", encoding="utf-8") as fh:
        json.dump(layout.to_doc(), fh, indent=2)
        fh.write("\n")
    print(instance_path)
    print(layout_path)
    return 0


def _cmd_verify(args) -> int:
    with open(args.cnf, encoding="utf-8") as fh:
        formula = parse_dimacs(fh.read())
    if formula.v > MAX_VARS:
        print(f"SKIP: formula has {formula.v} variables, model counting caps at {MAX_VARS}")
        return 0
    expected = count_sat(formula)
    failed = False
    for target in ("white", "black2", "full2"):
        instance, _ = reduce_to(target, formula)
        try:
            got = count_solutions(instance, args.budget)
        except BudgetExceededError as exc:
            print(f"{target}: SKIP ({exc})")
            continue
        verdict = "PASS" if got == expected else "FAIL"
        failed = failed or verdict == "FAIL"
        print(f"{target}: {expected}={got} {verdict}")
    return _VERIFY_FAIL_EXIT if failed else 0


def _cmd_suggest(args) -> int:
    instance = _load_instance(args.instance)
    guess = suggest_guess(instance, args.budget)
    worst = worst_case_partition(guess, candidate_codes(instance, args.budget), instance.variant)
    print("guess=" + ",".join(str(peg) for peg in guess))
    print(f"worstCase={worst}")
    return 0


def _cmd_bound(args) -> int:
    print(chvatal_bound(args.n, args.c))
    return 0


def _cmd_serve(args) -> int:
    store = SessionStore(budget=args.budget, journal_path=args.journal)
    server = make_server(store, args.host, args.port)
    host, port = server.server_address[:2]
    print(f"listening on http://{host}:{port}", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


def _cmd_play(args) -> int:
    store = SessionStore(budget=args.budget)
    state = store.create(args.n, args.c, args.variant, args.mode, args.seed)
    session_id = state["id"]
    interactive = sys.stdin.isatty()
    print(f"{args.mode} game, {args.n} pegs over {args.c} colors, {args.variant} ratings")
    print(f"remaining: {state['remaining']}")
    while state["status"] == "in-progress":
        if interactive:
            print("guess> ", end="", flush=True)
        line = sys.stdin.readline()
        if not line:
            print("bye")
            return 0
        line = line.strip()
        if not line:
            continue
        try:
            guess = _parse_code(line)
            rating = None
            if args.mode == "external-assistant":
                if interactive:
                    print("rating> ", end="", flush=True)
                rating_line = sys.stdin.readline()
                if not rating_line:
                    print("bye")
                    return 0
                rating = _parse_rating_text(rating_line.strip(), args.variant)
            given, state = store.submit_guess(session_id, guess, rating)
        except MastermindError as exc:
            print(f"error: {exc}")
            continue
        print(f"rating: {_format_rating(given, args.variant)}")
        print(f"remaining: {state['remaining']}")
    if state["status"] == "solved":
        print(f"solved in {state['turn']} guesses")
        if "secret" in state:
            print("secret: " + ",".join(str(peg) for peg in state["secret"]))
    else:
        print("contradicted: no code fits the ratings you entered")
    return 0


if __name__ == "__main__":
    sys.exit(main())
