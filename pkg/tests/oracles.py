"""Independent reference implementations the solver tests check against.

Everything here is built from first principles on purpose: plays are simulated
step by step and winners are decided by the parity of the highest colour on
the reached cycle, without going through the library's valuation machinery.
Slow, obviously-correct, and only usable on small games.
"""

from __future__ import annotations

import itertools

from sigames import Owner, ParityGame, PositionalStrategy
from sigames.valuation import GREATER, LESS, PlayValuation, compare


def all_strategies(game: ParityGame, player: Owner):
    """Yield every positional strategy of ``player``, first-choice first."""
    owned = list(game.owned_by(player))
    for combo in itertools.product(*(game.successors[v] for v in owned)):
        yield PositionalStrategy(player, dict(zip(owned, combo)))


def strategy_count(game: ParityGame, player: Owner) -> int:
    total = 1
    for v in game.owned_by(player):
        total *= len(game.successors[v])
    return total


def walk(game: ParityGame, sigma: PositionalStrategy, tau: PositionalStrategy, start: int):
    """Follow the unique play; returns (path before the cycle, the cycle)."""
    seen: dict[int, int] = {}
    path: list[int] = []
    v = start
    while v not in seen:
        seen[v] = len(path)
        path.append(v)
        v = sigma[v] if game.owners[v] is Owner.MAX else tau[v]
    cut = seen[v]
    return path[:cut], path[cut:]


def limsup_winner(game, sigma, tau, start: int) -> Owner:
    """Winner of the single play from ``start``: parity of the top cycle colour."""
    _, cycle = walk(game, sigma, tau, start)
    top = max(game.colours[v] for v in cycle)
    return Owner.MAX if top % 2 == 0 else Owner.MIN


def walk_valuation(game, sigma, tau, start: int) -> PlayValuation:
    """Play valuation computed literally from the definition."""
    prefix, cycle = walk(game, sigma, tau, start)
    c = max(game.colours[v] for v in cycle)
    dominant = next(v for v in cycle if game.colours[v] == c)
    play = prefix + cycle
    d = play.index(dominant)
    colours = {game.colours[v] for v in play[:d] if game.colours[v] > c}
    return PlayValuation.make(c, colours, d)


def certify_winners(game: ParityGame, winners, sigma: PositionalStrategy,
                    tau: PositionalStrategy) -> bool:
    """Check a claimed solution against every opposing strategy.

    ``sigma`` must win each claimed-Max vertex no matter what Min plays, and
    ``tau`` each claimed-Min vertex no matter what Max plays.  This is the
    definition of winning, so it accepts exactly the correct partitions with
    certifying strategies.
    """
    for opp_tau in all_strategies(game, Owner.MIN):
        for v in game.vertices():
            if winners[v] is Owner.MAX and limsup_winner(game, sigma, opp_tau, v) is not Owner.MAX:
                return False
    for opp_sigma in all_strategies(game, Owner.MAX):
        for v in game.vertices():
            if winners[v] is Owner.MIN and limsup_winner(game, opp_sigma, tau, v) is not Owner.MIN:
                return False
    return True


def pair_valuation_vector(game, sigma, tau) -> list[PlayValuation]:
    return [walk_valuation(game, sigma, tau, v) for v in game.vertices()]


def pointwise(vecs, keep):
    """Fold valuation vectors, keeping per vertex the entry ``keep`` prefers."""
    out = list(vecs[0])
    for vec in vecs[1:]:
        for i, t in enumerate(vec):
            if compare(t, out[i]) == keep:
                out[i] = t
    return out


def enumeration_value(game: ParityGame) -> list[PlayValuation]:
    """Game value by exhausting both strategy spaces: max over sigma of the
    min over tau of the play valuations."""
    minvecs = []
    for sigma in all_strategies(game, Owner.MAX):
        vecs = [pair_valuation_vector(game, sigma, tau)
                for tau in all_strategies(game, Owner.MIN)]
        minvecs.append(pointwise(vecs, LESS))
    return pointwise(minvecs, GREATER)


def enumeration_winners(game: ParityGame) -> list[Owner]:
    return [Owner.MAX if t.c % 2 == 0 else Owner.MIN for t in enumeration_value(game)]


def best_response_value_min(game, sigma) -> list[PlayValuation]:
    """Min's exact best answer to a fixed sigma, by enumeration."""
    vecs = [pair_valuation_vector(game, sigma, tau)
            for tau in all_strategies(game, Owner.MIN)]
    return pointwise(vecs, LESS)


def best_response_value_max(game, tau) -> list[PlayValuation]:
    vecs = [pair_valuation_vector(game, sigma, tau)
            for sigma in all_strategies(game, Owner.MAX)]
    return pointwise(vecs, GREATER)
