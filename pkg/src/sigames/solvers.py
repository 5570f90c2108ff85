"""Strategy improvement solvers.

``classic_si`` improves one player's strategy against exact best responses,
with a pluggable switching rule.  ``symmetric_si`` improves both players at
once but restricts each player's switches to edges the opponent's current best
response agrees with, which keeps the iteration monotone on both sides;
``symmetric_si_early`` additionally stops as soon as either player's strategy
has no profitable update at all.  ``naive_symmetric`` replaces both strategies
by their mutual best responses each round and is only a demonstrator: it may
cycle, which it reports instead of looping.  ``brute_force_solve`` enumerates
positional strategies outright and is the oracle the others are tested
against.

Iteration counts follow one convention everywhere: a round is counted iff it
applies at least one switch, so the terminal check that finds nothing to do is
free.
"""

from __future__ import annotations

import enum
import itertools
import json
import random
import sys
from dataclasses import dataclass

from . import digest
from .errors import RoundLimitError, SizeGuardError, SolverInternalError
from .game import Owner, ParityGame
from .strategy import PositionalStrategy, array_strategy, default_strategy, strategy_array
from .valuation import (
    EQUAL,
    GREATER,
    LESS,
    PlayValuation,
    _Arrays,
    _best_response,
    _combine,
    _compile,
    _evaluate,
    _profitable,
    compare,
)


class RuleKind(enum.Enum):
    SWITCH_ALL = "switch-all"
    SINGLE_SWITCH = "single-switch"
    RANDOM_EDGE = "random-edge"
    RANDOM_FACET = "random-facet"
    SWITCH_HALF = "switch-half"


@dataclass(frozen=True)
class SwitchRule:
    """A switching rule; ``seed`` only matters for the randomized kinds.

    Randomized rules are reproducible: the per-round random stream is derived
    from (seed, iteration index), so equal inputs give identical runs.
    """

    kind: RuleKind = RuleKind.SWITCH_ALL
    seed: int = 0

    @classmethod
    def from_name(cls, name: str, seed: int = 0) -> "SwitchRule":
        return cls(RuleKind(name), seed)


class SymmetricMode(enum.Enum):
    MAXIMAL = "maximal"
    SLOW = "slow"


@dataclass(frozen=True)
class TraceEntry:
    """One player's switches in one counted round."""

    index: int
    player: Owner
    switched: tuple[tuple[int, int], ...]
    prof_size: int
    value_digest: int
    values: tuple | None = None

    def json_line(self) -> str:
        return json.dumps(
            {
                "iter": self.index,
                "player": self.player.name.lower(),
                "switched": [list(e) for e in self.switched],
                "prof_size": self.prof_size,
                "value_digest": self.value_digest,
            }
        )


@dataclass(frozen=True)
class SolveReport:
    winners: tuple[Owner, ...]
    sigma_opt: PositionalStrategy
    tau_opt: PositionalStrategy
    value: tuple[PlayValuation, ...]
    iterations: int
    evaluations: int
    trace: tuple[TraceEntry, ...] | None = None

    def max_region(self) -> frozenset[int]:
        return frozenset(v for v, w in enumerate(self.winners) if w is Owner.MAX)

    def min_region(self) -> frozenset[int]:
        return frozenset(v for v, w in enumerate(self.winners) if w is Owner.MIN)


@dataclass(frozen=True)
class Converged:
    report: SolveReport


@dataclass(frozen=True)
class CycleDetected:
    first_index: int
    period: int


NaiveOutcome = Converged | CycleDetected


# ---------------------------------------------------------------------------
# shared plumbing

def _init_array(game: ParityGame, player: Owner, init: PositionalStrategy | None) -> list[int]:
    if init is None:
        init = default_strategy(game, player)
    if init.player is not player:
        raise ValueError(f"initial strategy belongs to {init.player.name}, expected {player.name}")
    return strategy_array(game, init)


def _strategy_space(arrays: _Arrays, player: Owner) -> int:
    verts = arrays.max_vertices if player is Owner.MAX else arrays.min_vertices
    size = 1
    for v in verts:
        size *= len(arrays.succ[v])
    return size


def _winners(vals) -> tuple[Owner, ...]:
    return tuple(Owner.MAX if t[0] % 2 == 0 else Owner.MIN for t in vals)


def _report(game, sigma_arr, tau_arr, vals, iterations, evaluations, entries, trace) -> SolveReport:
    return SolveReport(
        winners=_winners(vals),
        sigma_opt=array_strategy(game, Owner.MAX, sigma_arr),
        tau_opt=array_strategy(game, Owner.MIN, tau_arr),
        value=tuple(PlayValuation(*t) for t in vals),
        iterations=iterations,
        evaluations=evaluations,
        trace=tuple(entries) if trace else None,
    )


def _locally_best(vals, prof, want) -> dict[int, int]:
    """Best profitable target per vertex; ties fall to the smallest successor id."""
    best: dict[int, int] = {}
    for v, w in prof:  # prof is sorted by (v, w)
        b = best.get(v)
        if b is None:
            best[v] = w
        elif compare(vals[w], vals[b]) == want:
            best[v] = w
    return best


def _select_switches(rule: SwitchRule, vals, prof, want, iteration: int) -> list[tuple[int, int]]:
    if rule.kind is RuleKind.SWITCH_ALL:
        return list(_locally_best(vals, prof, want).items())
    if rule.kind is RuleKind.SINGLE_SWITCH:
        v = prof[0][0]
        best = _locally_best(vals, [e for e in prof if e[0] == v], want)
        return [(v, best[v])]
    rng = random.Random(digest.mix64(rule.seed, iteration))
    if rule.kind is RuleKind.RANDOM_EDGE:
        return [rng.choice(prof)]
    if rule.kind is RuleKind.SWITCH_HALF:
        best = _locally_best(vals, prof, want)
        verts = sorted(best)
        while True:
            chosen = [v for v in verts if rng.random() < 0.5]
            if chosen:
                return [(v, best[v]) for v in chosen]
    raise ValueError(f"rule {rule.kind} has no per-round selection")


# ---------------------------------------------------------------------------
# classic strategy improvement

def classic_si(
    game: ParityGame,
    player: Owner = Owner.MAX,
    rule: SwitchRule | None = None,
    init: PositionalStrategy | None = None,
    trace: bool = False,
) -> SolveReport:
    """Improve ``player``'s strategy against exact best responses until optimal."""
    if rule is None:
        rule = SwitchRule()
    arrays = _compile(game)
    strat = _init_array(game, player, init)
    if rule.kind is RuleKind.RANDOM_FACET:
        return _random_facet(arrays, game, player, strat, rule.seed, trace)
    opponent = player.opponent
    want = GREATER if player is Owner.MAX else LESS
    cap = _strategy_space(arrays, player)
    iterations = evaluations = 0
    entries: list[TraceEntry] = []
    while True:
        counter, vals = _best_response(arrays, strat, opponent)
        evaluations += 1
        prof = _profitable(arrays, strat, vals, player)
        if not prof:
            break
        switches = _select_switches(rule, vals, prof, want, iterations)
        if trace:
            entries.append(
                TraceEntry(iterations, player, tuple(switches), len(prof),
                           digest.valuation_digest(vals), tuple(vals))
            )
        for v, w in switches:
            strat[v] = w
        iterations += 1
        if iterations > cap:
            raise SolverInternalError("classic iteration exceeded the strategy-space bound")
    if player is Owner.MAX:
        sigma_arr, tau_arr = strat, counter
    else:
        sigma_arr, tau_arr = counter, strat
    return _report(game, sigma_arr, tau_arr, vals, iterations, evaluations, entries, trace)


def slow_si(
    game: ParityGame,
    player: Owner = Owner.MAX,
    init: PositionalStrategy | None = None,
    trace: bool = False,
) -> SolveReport:
    """Classic improvement applying a single switch per round."""
    return classic_si(game, player, SwitchRule(RuleKind.SINGLE_SWITCH), init, trace)


def _random_facet(arrays, game, player, init_arr, seed, trace) -> SolveReport:
    """Classic random-facet scheme (Ludwig; Bjorklund-Vorobyov).

    Remove a uniformly random non-strategy edge, solve the smaller game
    recursively, then test the removed edge against the sub-optimum: if it is
    profitable, switch it (one counted iteration) and re-solve with it back in
    play.  Each switch is a single profitable update, so the valuation strictly
    improves over the whole run and termination is inherited.
    """
    opponent = player.opponent
    want = GREATER if player is Owner.MAX else LESS
    owned = sorted(arrays.max_vertices if player is Owner.MAX else arrays.min_vertices)
    avail: dict[int, set[int]] = {v: set(arrays.succ[v]) for v in owned}
    edge_count = sum(len(s) for s in avail.values())
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 2 * edge_count + 200))
    rng = random.Random(digest.mix64(seed))
    state = {"iter": 0, "eval": 0}
    entries: list[TraceEntry] = []

    def solve(strat: list[int]) -> list[int]:
        while True:
            cands = [(v, w) for v in owned for w in sorted(avail[v]) if w != strat[v]]
            if not cands:
                return strat
            v, w = rng.choice(cands)
            avail[v].remove(w)
            res = solve(strat)
            avail[v].add(w)
            _, vals = _best_response(arrays, res, opponent)
            state["eval"] += 1
            if compare(vals[w], vals[res[v]]) == want:
                if trace:
                    prof = _profitable(arrays, res, vals, player)
                    entries.append(
                        TraceEntry(state["iter"], player, ((v, w),), len(prof),
                                   digest.valuation_digest(vals), tuple(vals))
                    )
                res = list(res)
                res[v] = w
                state["iter"] += 1
                strat = res
            else:
                return res

    final = solve(list(init_arr))
    counter, vals = _best_response(arrays, final, opponent)
    state["eval"] += 1
    if player is Owner.MAX:
        sigma_arr, tau_arr = final, counter
    else:
        sigma_arr, tau_arr = counter, final
    return _report(game, sigma_arr, tau_arr, vals, state["iter"], state["eval"], entries, trace)


# ---------------------------------------------------------------------------
# symmetric strategy improvement

def symmetric_si(
    game: ParityGame,
    init_sigma: PositionalStrategy | None = None,
    init_tau: PositionalStrategy | None = None,
    mode: SymmetricMode = SymmetricMode.MAXIMAL,
    trace: bool = False,
) -> SolveReport:
    """Improve both strategies at once, filtered through the counter strategies.

    Each round updates sigma with profitable edges the current best response to
    tau agrees with, and tau dually; it stops when both strategies are
    unchanged, at which point the pair is optimal.
    """
    return _symmetric(game, init_sigma, init_tau, mode, trace, early=False)


def symmetric_si_early(
    game: ParityGame,
    init_sigma: PositionalStrategy | None = None,
    init_tau: PositionalStrategy | None = None,
    mode: SymmetricMode = SymmetricMode.MAXIMAL,
    trace: bool = False,
) -> SolveReport:
    """Symmetric improvement that stops once either player is already optimal,
    pairing that strategy with the opponent's best response."""
    return _symmetric(game, init_sigma, init_tau, mode, trace, early=True)


def _symmetric(game, init_sigma, init_tau, mode, trace, early) -> SolveReport:
    arrays = _compile(game)
    sig = _init_array(game, Owner.MAX, init_sigma)
    tau = _init_array(game, Owner.MIN, init_tau)
    cap = _strategy_space(arrays, Owner.MAX) * _strategy_space(arrays, Owner.MIN)
    iterations = evaluations = 0
    entries: list[TraceEntry] = []
    while True:
        tau_c, val_sig = _best_response(arrays, sig, Owner.MIN)
        sig_c, val_tau = _best_response(arrays, tau, Owner.MAX)
        evaluations += 2
        prof_sig = _profitable(arrays, sig, val_sig, Owner.MAX)
        prof_tau = _profitable(arrays, tau, val_tau, Owner.MIN)
        if early:
            if not prof_sig:
                return _report(game, sig, tau_c, val_sig, iterations, evaluations, entries, trace)
            if not prof_tau:
                return _report(game, sig_c, tau, val_tau, iterations, evaluations, entries, trace)
        p_sig = [(v, w) for v, w in prof_sig if sig_c[v] == w]
        p_tau = [(v, w) for v, w in prof_tau if tau_c[v] == w]
        if mode is SymmetricMode.SLOW:
            p_sig, p_tau = p_sig[:1], p_tau[:1]
        if not p_sig and not p_tau:
            return _report(game, sig, tau, val_sig, iterations, evaluations, entries, trace)
        if trace:
            entries.append(TraceEntry(iterations, Owner.MAX, tuple(p_sig), len(prof_sig),
                                      digest.valuation_digest(val_sig), tuple(val_sig)))
            entries.append(TraceEntry(iterations, Owner.MIN, tuple(p_tau), len(prof_tau),
                                      digest.valuation_digest(val_tau), tuple(val_tau)))
        for v, w in p_sig:
            sig[v] = w
        for v, w in p_tau:
            tau[v] = w
        iterations += 1
        if iterations > cap:
            raise SolverInternalError("symmetric iteration exceeded the strategy-space bound")


def naive_symmetric(
    game: ParityGame,
    init_sigma: PositionalStrategy | None = None,
    init_tau: PositionalStrategy | None = None,
    max_rounds: int = 1_000_000,
) -> NaiveOutcome:
    """Replace both strategies by their mutual best responses each round.

    Returns ``Converged`` when the pair is a fixed point (mutually optimal,
    hence optimal) or ``CycleDetected`` when a pair repeats; raises
    :class:`RoundLimitError` if ``max_rounds`` ends the run first.
    """
    if max_rounds < 1:
        raise ValueError("max_rounds must be at least 1")
    arrays = _compile(game)
    sig = _init_array(game, Owner.MAX, init_sigma)
    tau = _init_array(game, Owner.MIN, init_tau)
    seen: dict[tuple, int] = {(tuple(sig), tuple(tau)): 0}
    evaluations = 0
    for round_no in range(max_rounds):
        sig_c, _ = _best_response(arrays, tau, Owner.MAX)
        tau_c, _ = _best_response(arrays, sig, Owner.MIN)
        evaluations += 2
        if sig_c == sig and tau_c == tau:
            vals = _evaluate(arrays, _combine(arrays, sig, tau))
            return Converged(_report(game, sig, tau, vals, round_no, evaluations, [], False))
        sig, tau = sig_c, tau_c
        key = (tuple(sig), tuple(tau))
        if key in seen:
            return CycleDetected(first_index=seen[key], period=round_no + 1 - seen[key])
        seen[key] = round_no + 1
    raise RoundLimitError(f"no fixed point or cycle within {max_rounds} rounds")


# ---------------------------------------------------------------------------
# brute force

def brute_force_solve(game: ParityGame, guard: int = 1_000_000) -> SolveReport:
    """Optimal pair by enumerating every positional strategy of both players.

    The game value at ``v`` is the max over sigma of the min over tau of the
    pair valuation; determinacy guarantees single strategies attaining it at
    every vertex simultaneously, and the first such pair in enumeration order
    is returned.  Refuses games whose strategy-pair count exceeds ``guard``.
    """
    arrays = _compile(game)
    size = _strategy_space(arrays, Owner.MAX) * _strategy_space(arrays, Owner.MIN)
    if size > guard:
        raise SizeGuardError(f"{size} strategy pairs exceed the guard of {guard}")
    max_vs, min_vs = arrays.max_vertices, arrays.min_vertices
    evaluations = 0

    def assignments(verts):
        for combo in itertools.product(*(arrays.succ[v] for v in verts)):
            arr = [-1] * arrays.n
            for v, w in zip(verts, combo):
                arr[v] = w
            yield arr

    def min_over_tau(sig):
        nonlocal evaluations
        minvec = None
        for tau in assignments(min_vs):
            vals = _evaluate(arrays, _combine(arrays, sig, tau))
            evaluations += 1
            if minvec is None:
                minvec = vals
            else:
                minvec = [a if compare(a, b) != GREATER else b for a, b in zip(minvec, vals)]
        return minvec

    value = None
    for sig in assignments(max_vs):
        minvec = min_over_tau(sig)
        if value is None:
            value = minvec
        else:
            value = [a if compare(a, b) != LESS else b for a, b in zip(value, minvec)]
    sigma_star = None
    for sig in assignments(max_vs):
        if min_over_tau(sig) == value:
            sigma_star = sig
            break
    tau_star = None
    for tau in assignments(min_vs):
        maxvec = None
        for sig in assignments(max_vs):
            vals = _evaluate(arrays, _combine(arrays, sig, tau))
            evaluations += 1
            if maxvec is None:
                maxvec = vals
            else:
                maxvec = [a if compare(a, b) != LESS else b for a, b in zip(maxvec, vals)]
        if maxvec == value:
            tau_star = tau
            break
    if sigma_star is None or tau_star is None:
        raise SolverInternalError("no positional strategy attains the enumerated value")
    return _report(game, sigma_star, tau_star, value, 0, evaluations, [], False)
