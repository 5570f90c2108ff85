"""Play valuations, their preference order, and best-response machinery.

Under a pair of positional strategies every play is a lasso: a simple path
into a cycle.  With injective colours its valuation is the triple ``(c, C, d)``
where ``c`` is the highest colour on the cycle, ``d`` the 0-based index of the
first visit to the vertex carrying ``c``, and ``C`` the set of colours greater
than ``c`` seen strictly before that visit.

The preference order is from Player Max's point of view and decides, in turn:

* different dominants ``c`` by parity preference -- any even colour beats any
  odd one, larger is better among evens, smaller is better among odds;
* different ``C`` sets by the highest colour ``h`` in their symmetric
  difference -- the side containing ``h`` wins iff ``h`` is even;
* different ``d`` -- with an even dominant a smaller ``d`` is better (reach the
  good cycle sooner), with an odd dominant a larger ``d`` is better (put off
  the bad cycle).

Sets ``C`` are carried as descending tuples, which makes the second rule a
first-difference scan and keeps comparisons cheap.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from .errors import SolverInternalError
from .game import Owner, ParityGame
from .strategy import PositionalStrategy, array_strategy, strategy_array

LESS, EQUAL, GREATER = -1, 0, 1


class PlayValuation(NamedTuple):
    """Valuation triple of a play; ``C`` is stored as a descending tuple."""

    c: int
    C: tuple[int, ...]
    d: int

    @classmethod
    def make(cls, c: int, colours: Iterable[int], d: int) -> "PlayValuation":
        return cls(c, tuple(sorted(colours, reverse=True)), d)


#: Per-vertex valuations, indexed by vertex id.
ValuationVector = Sequence[PlayValuation]


def compare(a, b) -> int:
    """Three-way comparison of two valuations: LESS, EQUAL or GREATER for Max."""
    ca, Ca, da = a
    cb, Cb, db = b
    if ca != cb:
        ea = ca % 2 == 0
        if ea != (cb % 2 == 0):
            return GREATER if ea else LESS
        if ea:
            return GREATER if ca > cb else LESS
        return GREATER if ca < cb else LESS
    if Ca != Cb:
        la, lb = len(Ca), len(Cb)
        i = 0
        while i < la and i < lb and Ca[i] == Cb[i]:
            i += 1
        if i == la:
            h, in_a = Cb[i], False
        elif i == lb:
            h, in_a = Ca[i], True
        elif Ca[i] > Cb[i]:
            h, in_a = Ca[i], True
        else:
            h, in_a = Cb[i], False
        if h % 2 == 0:
            return GREATER if in_a else LESS
        return LESS if in_a else GREATER
    if da == db:
        return EQUAL
    if ca % 2 == 0:
        return GREATER if da < db else LESS
    return GREATER if da > db else LESS


@dataclass(frozen=True)
class ProfitableSet:
    """Edges whose target currently values strictly better than the chosen one."""

    player: Owner
    edges: frozenset[tuple[int, int]]

    @property
    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __iter__(self):
        return iter(self.sorted_edges)

    def __len__(self) -> int:
        return len(self.edges)

    def __contains__(self, edge: tuple[int, int]) -> bool:
        return edge in self.edges

    def __bool__(self) -> bool:
        return bool(self.edges)


# ---------------------------------------------------------------------------
# compiled arrays shared by the solver cores

@dataclass(frozen=True)
class _Arrays:
    n: int
    colours: tuple[int, ...]
    is_max: tuple[bool, ...]
    succ: tuple[tuple[int, ...], ...]
    max_vertices: tuple[int, ...]
    min_vertices: tuple[int, ...]


@lru_cache(maxsize=256)
def _compile(game: ParityGame) -> _Arrays:
    n = game.vertex_count
    if n == 0:
        raise ValueError("empty game")
    if len(set(game.colours)) != n:
        raise ValueError("colours are not injective; apply make_colours_unique first")
    for v, succ in enumerate(game.successors):
        if not succ:
            raise ValueError(f"vertex {v} has no successors")
        for w in succ:
            if not 0 <= w < n:
                raise ValueError(f"vertex {v} has dangling successor {w}")
    is_max = tuple(o is Owner.MAX for o in game.owners)
    return _Arrays(
        n=n,
        colours=game.colours,
        is_max=is_max,
        succ=game.successors,
        max_vertices=tuple(v for v in range(n) if is_max[v]),
        min_vertices=tuple(v for v in range(n) if not is_max[v]),
    )


def _combine(arrays: _Arrays, sigma_arr: Sequence[int], tau_arr: Sequence[int]) -> list[int]:
    is_max = arrays.is_max
    return [sigma_arr[v] if is_max[v] else tau_arr[v] for v in range(arrays.n)]


def _prepend(colour: int, nxt: tuple) -> tuple:
    """Valuation of a play that visits ``colour`` once and then continues as ``nxt``."""
    c, C, d = nxt
    if colour > c:
        i, lc = 0, len(C)
        while i < lc and C[i] > colour:
            i += 1
        C = C[:i] + (colour,) + C[i:]
    return (c, C, d + 1)


def _evaluate(arrays: _Arrays, F: Sequence[int]) -> list[tuple]:
    """Valuations of every vertex in the functional graph ``F``.

    Each weakly connected component is a cycle with trees hanging off it; the
    component is valued backwards from the cycle's dominant vertex so shared
    path suffixes share their ``C`` tuples.
    """
    n, colours = arrays.n, arrays.colours
    val: list = [None] * n
    done = bytearray(n)
    for start in range(n):
        if done[start]:
            continue
        path: list[int] = []
        pos: dict[int, int] = {}
        v = start
        while not done[v] and v not in pos:
            pos[v] = len(path)
            path.append(v)
            v = F[v]
        if done[v]:
            cut = len(path)
        else:
            k = pos[v]
            cycle = path[k:]
            c = max(colours[u] for u in cycle)
            j = next(i for i, u in enumerate(cycle) if colours[u] == c)
            vc = cycle[j]
            val[vc] = (c, (), 0)
            done[vc] = 1
            length = len(cycle)
            for t in range(j - 1, j - length, -1):
                u = cycle[t % length]
                val[u] = _prepend(colours[u], val[F[u]])
                done[u] = 1
            cut = k
        for i in range(cut - 1, -1, -1):
            u = path[i]
            val[u] = _prepend(colours[u], val[F[u]])
            done[u] = 1
    return val


def _best_response(arrays: _Arrays, fixed_arr: Sequence[int], responder: Owner) -> tuple[list[int], list[tuple]]:
    """Optimal responder strategy and resulting valuations against a fixed strategy.

    One-player strategy iteration on the restricted game: the opponent has no
    choices left, so the pair valuation is the responder's game valuation and
    switching every locally better edge converges to the pointwise optimum.
    Starts from the first stored successor; switches only on strict improvement
    with ties towards the smallest successor id, so the result is a
    deterministic function of (game, fixed strategy).
    """
    resp_is_max = responder is Owner.MAX
    resp_vertices = arrays.max_vertices if resp_is_max else arrays.min_vertices
    want = GREATER if resp_is_max else LESS
    succ, is_max = arrays.succ, arrays.is_max
    F = [succ[v][0] if is_max[v] == resp_is_max else fixed_arr[v] for v in range(arrays.n)]
    cap = 1
    for v in resp_vertices:
        cap *= len(succ[v])
    rounds = 0
    while True:
        vals = _evaluate(arrays, F)
        changed = False
        for v in resp_vertices:
            lst = succ[v]
            if len(lst) == 1:
                continue
            cur = F[v]
            best, bval = cur, vals[cur]
            for w in lst:
                if w == best:
                    continue
                r = compare(vals[w], bval)
                if r == want or (r == EQUAL and w < best):
                    best, bval = w, vals[w]
            if best != cur and compare(bval, vals[cur]) == want:
                F[v] = best
                changed = True
        if not changed:
            resp = [-1] * arrays.n
            for v in resp_vertices:
                resp[v] = F[v]
            return resp, vals
        rounds += 1
        if rounds > cap:
            raise SolverInternalError("best-response iteration exceeded the strategy-space bound")


def _profitable(arrays: _Arrays, strat_arr: Sequence[int], vals: Sequence[tuple], player: Owner) -> list[tuple[int, int]]:
    verts = arrays.max_vertices if player is Owner.MAX else arrays.min_vertices
    want = GREATER if player is Owner.MAX else LESS
    out = []
    for v in verts:
        chosen = strat_arr[v]
        cur = vals[chosen]
        for w in arrays.succ[v]:
            if w != chosen and compare(vals[w], cur) == want:
                out.append((v, w))
    out.sort()
    return out


# ---------------------------------------------------------------------------
# public interface

def play_valuation(game: ParityGame, sigma: PositionalStrategy, tau: PositionalStrategy, vertex: int) -> PlayValuation:
    """Valuation of the single play from ``vertex``, by walking it literally.

    Deliberately naive (record the walk until a vertex repeats, then read the
    triple off the walk); serves as the independent cross-check for
    :func:`evaluate_pair`.
    """
    arrays = _compile(game)
    sig, tau_arr = strategy_array(game, sigma), strategy_array(game, tau)
    F = _combine(arrays, sig, tau_arr)
    seen: dict[int, int] = {}
    walk: list[int] = []
    v = vertex
    while v not in seen:
        seen[v] = len(walk)
        walk.append(v)
        v = F[v]
    cycle = walk[seen[v]:]
    c = max(game.colours[u] for u in cycle)
    vc = next(u for u in cycle if game.colours[u] == c)
    d = walk.index(vc)
    return PlayValuation.make(c, (game.colours[u] for u in walk[:d] if game.colours[u] > c), d)


def evaluate_pair(game: ParityGame, sigma: PositionalStrategy, tau: PositionalStrategy) -> list[PlayValuation]:
    """Valuations of all vertices under the strategy pair, in one linear pass."""
    arrays = _compile(game)
    F = _combine(arrays, strategy_array(game, sigma), strategy_array(game, tau))
    return [PlayValuation(*t) for t in _evaluate(arrays, F)]


def best_response_min(game: ParityGame, sigma: PositionalStrategy) -> tuple[PositionalStrategy, list[PlayValuation]]:
    """Min's optimal counter strategy to ``sigma`` and the valuations it attains."""
    arrays = _compile(game)
    resp, vals = _best_response(arrays, strategy_array(game, sigma), Owner.MIN)
    return array_strategy(game, Owner.MIN, resp), [PlayValuation(*t) for t in vals]


def best_response_max(game: ParityGame, tau: PositionalStrategy) -> tuple[PositionalStrategy, list[PlayValuation]]:
    """Max's optimal counter strategy to ``tau`` and the valuations it attains."""
    arrays = _compile(game)
    resp, vals = _best_response(arrays, strategy_array(game, tau), Owner.MAX)
    return array_strategy(game, Owner.MAX, resp), [PlayValuation(*t) for t in vals]


def profitable_updates_max(game: ParityGame, sigma: PositionalStrategy, vals: ValuationVector) -> ProfitableSet:
    """Max edges strictly better than the chosen one under ``vals``.

    ``vals`` must be the valuation vector of ``sigma`` against Min's best
    response, i.e. the second component of ``best_response_min(game, sigma)``.
    """
    arrays = _compile(game)
    edges = _profitable(arrays, strategy_array(game, sigma), vals, Owner.MAX)
    return ProfitableSet(Owner.MAX, frozenset(edges))


def profitable_updates_min(game: ParityGame, tau: PositionalStrategy, vals: ValuationVector) -> ProfitableSet:
    """Min edges strictly better (for Min) than the chosen one under ``vals``."""
    arrays = _compile(game)
    edges = _profitable(arrays, strategy_array(game, tau), vals, Owner.MIN)
    return ProfitableSet(Owner.MIN, frozenset(edges))


def valuation_json_lines(vals: ValuationVector) -> str:
    """Canonical JSON-lines serialization, one vertex per line in id order.

    This exact byte sequence (UTF-8, ``\\n``-terminated lines) is what the
    valuation digest hashes.
    """
    lines = [
        json.dumps({"v": v, "c": t[0], "C": list(t[1]), "d": t[2]})
        for v, t in enumerate(vals)
    ]
    return "\n".join(lines) + "\n"
