"""Command-line front end: solve, generate, and benchmark parity games.

Exit codes: 0 success, 2 parse/validation/flag errors, 3 size guard refusals,
4 cross-algorithm winner disagreement in a benchmark run.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import bench as bench_mod
from .digest import mix64
from .errors import SizeGuardError
from .game import Owner, ParityGame, make_colours_unique, parse_pgsolver, validate, write_pgsolver
from .generators import RandomGameParams, TrapParams, gen_friedmann_trap, gen_random
from .solvers import (
    Converged,
    CycleDetected,
    RuleKind,
    SwitchRule,
    brute_force_solve,
    classic_si,
    naive_symmetric,
    slow_si,
    symmetric_si,
    symmetric_si_early,
)
from .strategy import PositionalStrategy, random_strategy
from .valuation import valuation_json_lines

RULE_NAMES = tuple(kind.value for kind in RuleKind)


def _read_game(path: str) -> ParityGame:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    game = parse_pgsolver(text)
    problems = validate(game)
    hard = [p for p in problems if p.rule != "duplicate-colour"]
    if hard:
        raise ValueError("; ".join(p.message for p in hard))
    # Imported games may reuse colours; normalization preserves the winners.
    return make_colours_unique(game)


def _load_init(game: ParityGame, spec: str, seed: int) -> tuple:
    if spec == "first":
        return None, None
    if spec == "random":
        return (
            random_strategy(game, Owner.MAX, random.Random(mix64(seed, 0))),
            random_strategy(game, Owner.MIN, random.Random(mix64(seed, 1))),
        )
    if spec.startswith("file:"):
        raw = json.loads(Path(spec[5:]).read_text(encoding="utf-8"))
        sigma = tau = None
        if "sigma" in raw:
            sigma = PositionalStrategy(Owner.MAX, {int(k): int(v) for k, v in raw["sigma"].items()})
        if "tau" in raw:
            tau = PositionalStrategy(Owner.MIN, {int(k): int(v) for k, v in raw["tau"].items()})
        return sigma, tau
    raise ValueError(f"--init must be first, random or file:<path>, got {spec!r}")


def _print_report(report, dump_valuation: bool) -> None:
    payload = {
        "winners": {str(v): w.name.lower() for v, w in enumerate(report.winners)},
        "sigma": {str(v): w for v, w in report.sigma_opt.items()},
        "tau": {str(v): w for v, w in report.tau_opt.items()},
        "iterations": report.iterations,
        "evaluations": report.evaluations,
    }
    print(json.dumps(payload, sort_keys=True))
    if dump_valuation:
        sys.stdout.write(valuation_json_lines(report.value))


def cmd_solve(args: argparse.Namespace) -> int:
    game = _read_game(args.game)
    player = Owner.MAX if args.player == "max" else Owner.MIN
    init_sigma, init_tau = _load_init(game, args.init, args.seed)
    init_own = init_sigma if player is Owner.MAX else init_tau
    if args.algo == "classic":
        rule = SwitchRule.from_name(args.rule, args.seed)
        report = classic_si(game, player, rule, init_own, trace=args.trace)
    elif args.algo == "slow":
        report = slow_si(game, player, init_own, trace=args.trace)
    elif args.algo == "symmetric":
        report = symmetric_si(game, init_sigma, init_tau, trace=args.trace)
    elif args.algo == "symmetric-early":
        report = symmetric_si_early(game, init_sigma, init_tau, trace=args.trace)
    elif args.algo == "brute":
        report = brute_force_solve(game)
    else:
        outcome = naive_symmetric(game, init_sigma, init_tau)
        if isinstance(outcome, CycleDetected):
            print(json.dumps(
                {"cycle": {"first_index": outcome.first_index, "period": outcome.period}},
                sort_keys=True,
            ))
            return 0
        report = outcome.report
    if args.trace and report.trace:
        for entry in report.trace:
            print(entry.json_line(), file=sys.stderr)
    _print_report(report, args.dump_valuation)
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "random":
        params = RandomGameParams(args.n, args.outmin, args.outmax, args.colours, args.bias)
        game = gen_random(params, args.seed)
    else:
        game = gen_friedmann_trap(TrapParams(bits=args.bits))
    text = write_pgsolver(game)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    algos = tuple(args.algos.split(","))
    rules = tuple(args.rules.split(",")) if args.rules else ()
    for rule in rules:
        if rule not in RULE_NAMES:
            raise ValueError(f"unknown rule {rule!r}")
    if args.suite == "friedmann":
        plan = bench_mod.SuitePlan(
            generator="friedmann",
            params=tuple(range(1, args.bits_max + 1)),
            algos=algos,
            rules=rules,
            repeat=args.repeat,
            seed_base=args.seed_base,
            timing=not args.no_timing,
        )
    else:
        template = RandomGameParams(args.n, args.outmin, args.outmax, args.colours, args.bias)
        plan = bench_mod.SuitePlan(
            generator="random",
            params=(args.n,),
            algos=algos,
            rules=rules,
            repeat=args.repeat,
            seed_base=args.seed_base,
            random_template=template,
            timing=not args.no_timing,
        )
    records = bench_mod.run_suite(plan)
    text = bench_mod.records_to_csv(records)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def _add_random_params(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, required=True, help="number of vertices")
    parser.add_argument("--outmin", type=int, default=1)
    parser.add_argument("--outmax", type=int, default=2)
    parser.add_argument("--colours", type=int, default=7, help="largest colour drawn")
    parser.add_argument("--bias", type=float, default=0.5, help="probability a vertex is Max's")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sigames", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve a PGSolver-format game")
    solve.add_argument("game", help="path to the game file, or - for stdin")
    solve.add_argument(
        "--algo",
        choices=["classic", "slow", "naive", "symmetric", "symmetric-early", "brute"],
        default="symmetric",
    )
    solve.add_argument("--player", choices=["max", "min"], default="max",
                       help="side improved by classic/slow")
    solve.add_argument("--rule", choices=list(RULE_NAMES), default="switch-all",
                       help="switching rule for --algo classic")
    solve.add_argument("--seed", type=int, default=0,
                       help="seed for randomized rules and --init random")
    solve.add_argument("--init", default="first",
                       help="initial strategies: first, random or file:<path>")
    solve.add_argument("--trace", action="store_true",
                       help="write per-iteration JSON lines to stderr")
    solve.add_argument("--dump-valuation", action="store_true",
                       help="append the optimal valuation as JSON lines")
    solve.set_defaults(func=cmd_solve)

    gen = sub.add_parser("gen", help="generate a game in PGSolver format")
    gen_sub = gen.add_subparsers(dest="family", required=True)
    gen_random_p = gen_sub.add_parser("random", help="seeded random arena")
    _add_random_params(gen_random_p)
    gen_random_p.add_argument("--seed", type=int, default=0)
    gen_random_p.add_argument("--out", help="output file (default stdout)")
    gen_fried = gen_sub.add_parser("friedmann", help="switch-all lower-bound family")
    gen_fried.add_argument("--bits", type=int, required=True)
    gen_fried.add_argument("--out", help="output file (default stdout)")
    gen.set_defaults(func=cmd_gen)

    bench = sub.add_parser("bench", help="run a benchmark sweep, emit CSV")
    bench.add_argument("--suite", choices=["random", "friedmann"], required=True)
    bench.add_argument("--algos", default="classic,symmetric",
                       help="comma-separated: classic,slow,symmetric,symmetric-early,brute")
    bench.add_argument("--rules", default="switch-all",
                       help="comma-separated switching rules for classic")
    bench.add_argument("--repeat", type=int, default=1)
    bench.add_argument("--seed-base", type=int, default=0)
    bench.add_argument("--bits-max", type=int, default=5, help="friedmann suite: run bits 1..B")
    bench.add_argument("--no-timing", action="store_true", help="report wall_ms as 0")
    bench.add_argument("--out", help="output CSV file (default stdout)")
    _add_random_params_optional(bench)
    bench.set_defaults(func=cmd_bench)
    return parser


def _add_random_params_optional(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, default=100, help="random suite: vertices per game")
    parser.add_argument("--outmin", type=int, default=1)
    parser.add_argument("--outmax", type=int, default=2)
    parser.add_argument("--colours", type=int, default=7)
    parser.add_argument("--bias", type=float, default=0.5)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except bench_mod.DigestMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except SizeGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
