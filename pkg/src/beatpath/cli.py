"""Command-line front end.

Exit codes: 0 on success, 2 for bad input, 3 when a number leaves the
64-bit range.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bench
from .ballots import (
    BallotSyntaxError,
    aggregate,
    candidate_names,
    double_if_odd,
    format_ballots,
    mcgarvey_ballots,
    parse_ballots,
)
from .core import CandidateSet, MarginMatrix, ModelError
from .formats import FormatError, looks_like_matrix, read_matrix, read_order, write_beatpaths, write_matrix
from .oracle import floyd_warshall_beatpaths, random_margins, realize_partial_order
from .winner import all_maximal, derive_seed, make_rng, perturb, quickselect_winner

EXIT_INPUT = 2
EXIT_RANGE = 3


class InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _candidates(flag: str | None, text: str) -> CandidateSet:
    names = [n.strip() for n in flag.split(",")] if flag else candidate_names(text)
    if not names:
        raise InputError("no candidates: pass --candidates or list some ballots")
    return CandidateSet(names)


def _load_margins(path: str, candidates: str | None = None) -> MarginMatrix:
    text = _read(path)
    if looks_like_matrix(text):
        return read_matrix(text)
    return aggregate(parse_ballots(text, _candidates(candidates, text)))


def cmd_tally(args) -> int:
    text = _read(args.ballots)
    ballots = parse_ballots(text, _candidates(args.candidates, text))
    sys.stdout.write(write_matrix(aggregate(ballots)))
    return 0


def cmd_winner(args) -> int:
    margins = _load_margins(args.input, args.candidates)
    g = perturb(margins, derive_seed(args.seed, 1)) if args.perturb else margins
    names = margins.candidates.names
    if args.all_maximal:
        found = all_maximal(g, args.seed)
        record = {
            "winner": names[found.members[0]],
            "unique": len(found.members) == 1,
            "iterations": sum(found.rounds),
            "seed": args.seed,
            "maximal": found.names,
        }
    else:
        res = quickselect_winner(g, args.seed)
        record = {
            "winner": names[res.winner],
            "unique": res.is_unique,
            "iterations": res.iterations,
            "seed": args.seed,
        }
    if args.json:
        print(json.dumps(record))
        return 0
    for key, value in record.items():
        if isinstance(value, bool):
            value = str(value).lower()
        elif isinstance(value, list):
            value = " ".join(value)
        print(f"{key}: {value}")
    return 0


def cmd_beatpaths(args) -> int:
    margins = _load_margins(args.input, args.candidates)
    sys.stdout.write(write_beatpaths(floyd_warshall_beatpaths(margins)))
    return 0


def cmd_gen(args) -> int:
    if args.kind == "mcgarvey":
        target = read_matrix(_read(args.input))
        if args.auto_double:
            target, scale = double_if_odd(target)
        else:
            scale = 1
        ballots = mcgarvey_ballots(target, args.seed)
        if scale != 1:
            print(f"margins scaled by {scale}", file=sys.stderr)
            sys.stdout.write(f"# margins scaled by {scale}\n")
        sys.stdout.write(format_ballots(ballots))
    elif args.kind == "realize":
        spec = read_order(_read(args.input), extra=(args.top, args.bottom))
        g = realize_partial_order(spec, spec.candidates.index(args.top), spec.candidates.index(args.bottom))
        sys.stdout.write(write_matrix(g))
    else:
        if args.m < 1 or args.max_weight < 0:
            raise InputError("--m must be positive and --max-weight non-negative")
        g = random_margins(args.m, args.max_weight, make_rng(args.seed))
        sys.stdout.write(write_matrix(g))
    return 0


def cmd_bench(args) -> int:
    try:
        ms = [int(v) for v in args.m.split(",")]
    except ValueError:
        raise InputError(f"bad --m list {args.m!r}") from None
    if any(m < 2 for m in ms) or args.trials < 1:
        raise InputError("sizes must be >= 2 and --trials >= 1")
    results = bench.run_bench(ms, args.trials, args.seed, args.algo, args.instance, args.max_weight)
    if args.json:
        print(json.dumps({
            "algo": args.algo,
            "instance": args.instance,
            "seed": args.seed,
            "trials": [vars(r) for r in results],
            "summary": {str(m): s for m, s in bench.summarize(results).items()},
        }))
        return 0
    print("kind,m,trial,seconds,iterations")
    for r in results:
        iters = "" if r.iterations is None else r.iterations
        print(f"trial,{r.m},{r.trial},{r.seconds:.6f},{iters}")
    for m, s in bench.summarize(results).items():
        for stat in ("mean", "median"):
            it = s[f"{stat}_iterations"]
            print(f"{stat},{m},,{s[f'{stat}_seconds']:.6f},{'' if it is None else f'{it:.4f}'}")
    return 0


def _seed(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=_seed, default=argparse.SUPPRESS, help="RNG seed (default 0)")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")

    parser = argparse.ArgumentParser(prog="beatpath", description="Schulze winners by quickselect.")
    parser.add_argument("--seed", type=_seed, default=0, help="RNG seed (default 0)")
    parser.add_argument("--json", action="store_true", help="emit JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tally", parents=[common], help="aggregate ballots into a margin matrix")
    p.add_argument("ballots")
    p.add_argument("--candidates", help="comma-separated candidate names")
    p.set_defaults(func=cmd_tally)

    p = sub.add_parser("winner", parents=[common], help="Schulze winner of a matrix or ballot file")
    p.add_argument("input")
    p.add_argument("--candidates", help="candidate names when the input is a ballot file")
    p.add_argument("--perturb", action="store_true", help="break ties by random perturbation")
    p.add_argument("--all-maximal", action="store_true", help="list every maximal candidate")
    p.set_defaults(func=cmd_winner)

    p = sub.add_parser("beatpaths", parents=[common], help="print the all-pairs beatpath table")
    p.add_argument("input")
    p.add_argument("--candidates")
    p.set_defaults(func=cmd_beatpaths)

    p = sub.add_parser("gen", parents=[common], help="generate synthetic instances")
    gen = p.add_subparsers(dest="kind", required=True)
    g = gen.add_parser("mcgarvey", parents=[common], help="ballots realizing a margin matrix")
    g.add_argument("input")
    g.add_argument("--auto-double", action="store_true", help="double all margins if any is odd")
    g = gen.add_parser("realize", parents=[common], help="matrix whose Schulze order is a given order")
    g.add_argument("input", help="order file with one 'x < y' per line")
    g.add_argument("--top", required=True)
    g.add_argument("--bottom", required=True)
    g = gen.add_parser("random", parents=[common], help="uniform random margin matrix")
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--max-weight", type=int, default=100)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", parents=[common], help="time quickselect or the cubic oracle")
    p.add_argument("--m", default="64,128,256", help="comma-separated sizes")
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--algo", choices=bench.ALGOS, default="quickselect")
    p.add_argument("--instance", choices=bench.INSTANCES, default="random")
    p.add_argument("--max-weight", type=int, default=100)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OverflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except (InputError, BallotSyntaxError, FormatError, ModelError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
