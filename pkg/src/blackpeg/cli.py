"""Command-line entry point: ``blackpeg {solve,play,sat,reduce,bench}``.

Exit codes: 0 ok/SAT, 1 UNSAT, 2 usage or parse error, 3 inconsistent
oracle, 4 budget exhausted, 5 equivalence/bound check failed.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from blackpeg import formats
from blackpeg.bench import random_secrets, run_bench, to_csv
from blackpeg.errors import BudgetExhausted, InconsistentOracle, MalformedInstance, TooLarge
from blackpeg.reduction import (
    extract_matching,
    matching_witness,
    reduce,
    solve_3dm_bruteforce,
    verify_matching,
)
from blackpeg.satisfiability import (
    DEFAULT_NODE_BUDGET,
    SatInstance,
    is_consistent,
    solve_backtracking,
    solve_exhaustive,
)
from blackpeg.solver import (
    HonestOracle,
    InteractiveOracle,
    guess_bound,
    naive_solve,
    solve,
)

EXIT_OK, EXIT_UNSAT, EXIT_USAGE, EXIT_INCONSISTENT, EXIT_BUDGET, EXIT_CHECK = range(6)


def _int_list(text: str):
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _vec(v) -> str:
    return ",".join(map(str, v))


def _transcript_text(N, K, queries, tail: str) -> str:
    return formats.format_instance(SatInstance(N, K, tuple(queries))) + tail + "\n"


def _emit_transcript(args, transcript, out) -> None:
    summary = (f"recovered={_vec(transcript.recovered)} queries={transcript.query_count} "
               f"bound={guess_bound(transcript.N, transcript.K)}")
    out.write(_transcript_text(transcript.N, transcript.K, transcript.queries, summary))
    if getattr(args, "transcript", None):
        formats.write_instance(transcript.to_instance(), args.transcript)


def _emit_inconsistent(args, exc: InconsistentOracle, out) -> int:
    queries = exc.transcript or ()
    out.write(_transcript_text(args.n, args.k, queries,
                               f"inconsistent: the scores admit no secret ({exc})"))
    return EXIT_INCONSISTENT


def cmd_solve(args, parser) -> int:
    N, K = args.n, args.k
    if args.secret is not None:
        secret = args.secret
        if len(secret) != N or any(not 0 <= c < K for c in secret):
            parser.error(f"--secret must have {N} colors in [0, {K})")
    else:
        secret = random_secrets(N, K, 1, args.seed)[0].tolist()
    oracle = HonestOracle(secret, K)
    run = naive_solve if args.algorithm == "naive" else solve
    try:
        transcript = run(oracle)
    except InconsistentOracle as exc:
        return _emit_inconsistent(args, exc, sys.stdout)
    _emit_transcript(args, transcript, sys.stdout)
    return EXIT_OK


def cmd_play(args, parser) -> int:
    oracle = InteractiveOracle(args.n, args.k, sys.stdin, sys.stderr)
    try:
        transcript = solve(oracle)
    except InconsistentOracle as exc:
        return _emit_inconsistent(args, exc, sys.stdout)
    except EOFError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit_transcript(args, transcript, sys.stdout)
    return EXIT_OK


def _load(reader, path):
    try:
        return reader(path)
    except OSError as exc:
        print(f"error: cannot read {path}: {exc.strerror}", file=sys.stderr)
    except formats.ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
    return None


def cmd_sat(args, parser) -> int:
    inst = _load(formats.read_instance, args.instance)
    if inst is None:
        return EXIT_USAGE
    try:
        if args.method == "exhaustive":
            witness = solve_exhaustive(inst, limit=args.budget or 10**8)
        else:
            witness = solve_backtracking(inst, budget=args.budget or DEFAULT_NODE_BUDGET)
    except (BudgetExhausted, TooLarge):
        print("UNKNOWN (budget)")
        return EXIT_BUDGET
    if witness is None:
        print("UNSAT")
        return EXIT_UNSAT
    print(f"SAT {_vec(witness)}")
    return EXIT_OK


def cmd_reduce(args, parser) -> int:
    tdm = _load(formats.read_3dm, args.tdm)
    if tdm is None:
        return EXIT_USAGE
    try:
        inst = reduce(tdm)
    except MalformedInstance as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    formats.write_instance(inst, args.out)
    if not args.check:
        return EXIT_OK
    try:
        matching = solve_3dm_bruteforce(tdm)
        witness = solve_backtracking(inst, budget=args.budget)
    except (BudgetExhausted, TooLarge) as exc:
        print(f"UNKNOWN ({exc})")
        return EXIT_BUDGET
    problems = []
    if (matching is None) != (witness is None):
        problems.append(f"3DM matching={matching is not None} but instance sat={witness is not None}")
    if witness is not None and not verify_matching(tdm, extract_matching(witness, tdm, inst)):
        problems.append("extracted matching is not perfect")
    if matching is not None and not is_consistent(matching_witness(tdm, matching), inst):
        problems.append("matching does not yield a satisfying vector")
    if problems:
        print("EQUIV FAIL: " + "; ".join(problems))
        return EXIT_CHECK
    print(f"EQUIV OK (sat={'true' if witness is not None else 'false'})")
    return EXIT_OK


def cmd_bench(args, parser) -> int:
    records = run_bench(args.n_list, args.k_list, args.trials, args.seed, args.exhaustive)
    text = to_csv(records)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if args.plot:
        from blackpeg.plotting import plot_bench
        plot_bench(records, args.plot)
    bad = [r for r in records if r.max_queries > r.our_bound]
    for r in bad:
        print(f"bound violated: N={r.N} K={r.K} max_queries={r.max_queries} > {r.our_bound}",
              file=sys.stderr)
    return EXIT_CHECK if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="blackpeg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="break a secret held by an in-memory codemaker")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--k", type=_positive, required=True)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--secret", type=_int_list, help="comma-separated colors")
    src.add_argument("--seed", type=int, help="draw a uniform random secret")
    p.add_argument("--algorithm", choices=("split", "naive"), default="split")
    p.add_argument("--transcript", help="also write the transcript as an instance file")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("play", help="you hold the secret and type black-peg scores")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--transcript", help="also write the transcript as an instance file")
    p.set_defaults(func=cmd_play)

    p = sub.add_parser("sat", help="decide whether an instance file has a consistent secret")
    p.add_argument("--instance", required=True)
    p.add_argument("--method", choices=("exhaustive", "backtracking"), default="backtracking")
    p.add_argument("--budget", type=_positive, default=None,
                   help="node budget (backtracking) or enumeration cap (exhaustive)")
    p.set_defaults(func=cmd_sat)

    p = sub.add_parser("reduce", help="reduce a 3DM instance to a satisfiability instance")
    p.add_argument("--tdm", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--check", action="store_true",
                   help="solve both sides by brute force and compare")
    p.add_argument("--budget", type=_positive, default=10**7)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("bench", help="query counts versus bounds, as CSV")
    p.add_argument("--n-list", type=_int_list, required=True)
    p.add_argument("--k-list", type=_int_list, required=True)
    p.add_argument("--trials", type=_positive, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exhaustive", action="store_true",
                   help="enumerate every secret when K^N <= 10^6")
    p.add_argument("--out", help="write the CSV here instead of stdout")
    p.add_argument("--plot", help="also render a bar chart (png/pdf/svg)")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "bench" and (min(args.n_list) < 1 or min(args.k_list) < 1):
        parser.error("--n-list and --k-list entries must be positive")
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
