"""Benchmark harness: run solver sweeps over generated games, emit CSV.

The CSV is deterministic for fixed flags: instance seeds are derived from
(seed_base, param, repeat index) with a splitmix-style mixer, randomized rules
reuse the row seed, rows are emitted in sorted order, and the timing column can
be forced to zero for byte-stable comparisons.  Every row carries a digest of
the winner partition; rows describing the same instance must agree across
algorithms, otherwise one of the solvers is wrong and the run fails loudly.
"""

from __future__ import annotations

import csv
import io
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .digest import mix64, winners_digest
from .game import ParityGame
from .generators import (
    RandomGameParams,
    TrapParams,
    gen_friedmann_trap,
    gen_random,
    trap_initial_strategy,
)
from .solvers import (
    SolveReport,
    SwitchRule,
    brute_force_solve,
    classic_si,
    slow_si,
    symmetric_si,
    symmetric_si_early,
)

CSV_HEADER = (
    "generator",
    "param",
    "seed",
    "algorithm",
    "rule",
    "iterations",
    "evaluations",
    "wall_ms",
    "winners_digest",
)

ALGORITHMS = ("classic", "slow", "symmetric", "symmetric-early", "brute")


class DigestMismatchError(Exception):
    """Two algorithms disagreed on the winners of the same instance."""


@dataclass(frozen=True)
class BenchRecord:
    generator: str
    param: int
    seed: int
    algorithm: str
    rule: str
    iterations: int
    evaluations: int
    wall_ms: int
    winners_digest: int

    @property
    def sort_key(self) -> tuple:
        return (self.generator, self.param, self.seed, self.algorithm, self.rule)

    def row(self) -> tuple:
        return (
            self.generator,
            self.param,
            self.seed,
            self.algorithm,
            self.rule,
            self.iterations,
            self.evaluations,
            self.wall_ms,
            self.winners_digest,
        )


@dataclass(frozen=True)
class SuitePlan:
    """One benchmark sweep: which games to build and what to run on them."""

    generator: str
    params: tuple[int, ...]
    algos: tuple[str, ...]
    rules: tuple[str, ...]
    repeat: int = 1
    seed_base: int = 0
    random_template: RandomGameParams | None = None
    timing: bool = True

    def __post_init__(self) -> None:
        if self.generator not in ("random", "friedmann"):
            raise ValueError(f"unknown suite generator {self.generator!r}")
        if self.generator == "random" and self.random_template is None:
            raise ValueError("random suite needs generator parameters")
        if self.repeat < 1:
            raise ValueError("repeat must be at least 1")
        if not self.params:
            raise ValueError("empty parameter list")
        if not self.algos:
            raise ValueError("empty algorithm list")
        for algo in self.algos:
            if algo not in ALGORITHMS:
                raise ValueError(f"unknown benchmark algorithm {algo!r}")
        if "classic" in self.algos and not self.rules:
            raise ValueError("classic runs need at least one rule")


def _build_game(plan: SuitePlan, param: int, seed: int) -> ParityGame:
    if plan.generator == "friedmann":
        return gen_friedmann_trap(TrapParams(bits=param))
    t = plan.random_template
    return gen_random(
        RandomGameParams(param, t.min_out, t.max_out, t.colour_max, t.owner_bias), seed
    )


def _run_algorithm(game, algorithm, rule, seed, init_sigma) -> SolveReport:
    if algorithm == "classic":
        return classic_si(game, rule=SwitchRule.from_name(rule, seed), init=init_sigma)
    if algorithm == "slow":
        return slow_si(game, init=init_sigma)
    if algorithm == "symmetric":
        return symmetric_si(game, init_sigma=init_sigma)
    if algorithm == "symmetric-early":
        return symmetric_si_early(game, init_sigma=init_sigma)
    if algorithm == "brute":
        return brute_force_solve(game)
    raise ValueError(f"unknown benchmark algorithm {algorithm!r}")


def _run_cell(plan: SuitePlan, param: int, seed: int, algorithm: str, rule: str) -> BenchRecord:
    game = _build_game(plan, param, seed)
    # The trap family only shows its exponential behaviour from the designated
    # opening configuration, so the friedmann suite starts every improving
    # algorithm there.
    init_sigma = trap_initial_strategy(game) if plan.generator == "friedmann" else None
    start = time.perf_counter()
    report = _run_algorithm(game, algorithm, rule, seed, init_sigma)
    elapsed_ms = round((time.perf_counter() - start) * 1000) if plan.timing else 0
    return BenchRecord(
        generator=plan.generator,
        param=param,
        seed=seed,
        algorithm=algorithm,
        rule=rule if algorithm == "classic" else "-",
        iterations=report.iterations,
        evaluations=report.evaluations,
        wall_ms=elapsed_ms,
        winners_digest=winners_digest(report.winners),
    )


def _worker_count() -> int:
    raw = os.environ.get("SI_GAMES_THREADS")
    if raw is not None:
        try:
            n = int(raw)
        except ValueError:
            raise ValueError(f"SI_GAMES_THREADS must be an integer, got {raw!r}") from None
        return max(1, n)
    return 1


def run_suite(plan: SuitePlan) -> list[BenchRecord]:
    """Run every cell of the sweep and return records in sorted order."""
    cells = []
    for param in plan.params:
        for rep in range(plan.repeat):
            seed = mix64(plan.seed_base, param, rep)
            for algo in plan.algos:
                rules = plan.rules if algo == "classic" else ("-",)
                for rule in rules:
                    cells.append((param, seed, algo, rule))
    workers = _worker_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(lambda c: _run_cell(plan, *c), cells))
    else:
        records = [_run_cell(plan, *cell) for cell in cells]
    records.sort(key=lambda r: r.sort_key)
    _check_digests(records)
    return records


def _check_digests(records: list[BenchRecord]) -> None:
    seen: dict[tuple, tuple[int, str]] = {}
    for rec in records:
        key = (rec.generator, rec.param, rec.seed)
        if key in seen:
            ref_digest, ref_algo = seen[key]
            if rec.winners_digest != ref_digest:
                raise DigestMismatchError(
                    f"winner digests disagree on {rec.generator} param={rec.param} "
                    f"seed={rec.seed}: {ref_algo} vs {rec.algorithm}/{rec.rule}"
                )
        else:
            seen[key] = (rec.winners_digest, rec.algorithm)


def records_to_csv(records: list[BenchRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rec in records:
        writer.writerow(rec.row())
    return buf.getvalue()
