"""Positional strategies and helpers for picking initial ones."""

from __future__ import annotations

import random
import types
from typing import Iterable, Iterator, Mapping

from .game import Owner, ParityGame


class PositionalStrategy:
    """A successor choice at every vertex owned by one player.

    Instances are immutable values: equal when player and choices agree, and
    hashable so strategy pairs can be used as visited-set keys.
    """

    __slots__ = ("_player", "_choice", "_hash")

    def __init__(self, player: Owner, choice: Mapping[int, int] | Iterable[tuple[int, int]]):
        self._player = player
        self._choice = dict(choice)
        self._hash: int | None = None

    @property
    def player(self) -> Owner:
        return self._player

    @property
    def choice(self) -> Mapping[int, int]:
        return types.MappingProxyType(self._choice)

    def __getitem__(self, vertex: int) -> int:
        return self._choice[vertex]

    def get(self, vertex: int, default: int | None = None) -> int | None:
        return self._choice.get(vertex, default)

    def items(self):
        return self._choice.items()

    def __iter__(self) -> Iterator[int]:
        return iter(self._choice)

    def __len__(self) -> int:
        return len(self._choice)

    def __contains__(self, vertex: int) -> bool:
        return vertex in self._choice

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PositionalStrategy):
            return NotImplemented
        return self._player is other._player and self._choice == other._choice

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._player, tuple(sorted(self._choice.items()))))
        return self._hash

    def __repr__(self) -> str:
        pairs = ", ".join(f"{v}->{w}" for v, w in sorted(self._choice.items()))
        return f"PositionalStrategy({self._player.name}, {{{pairs}}})"

    def with_switches(
        self, updates: Mapping[int, int] | Iterable[tuple[int, int]]
    ) -> "PositionalStrategy":
        new = dict(self._choice)
        pairs = updates.items() if isinstance(updates, Mapping) else updates
        for v, w in pairs:
            if v not in new:
                raise KeyError(f"vertex {v} is not a decision vertex of this strategy")
            new[v] = w
        return PositionalStrategy(self._player, new)


def default_strategy(game: ParityGame, player: Owner) -> PositionalStrategy:
    """First stored successor at every owned vertex: the default initial strategy."""
    return PositionalStrategy(player, {v: game.successors[v][0] for v in game.owned_by(player)})


def random_strategy(game: ParityGame, player: Owner, seed: int | random.Random) -> PositionalStrategy:
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return PositionalStrategy(player, {v: rng.choice(game.successors[v]) for v in game.owned_by(player)})


def strategy_array(game: ParityGame, strategy: PositionalStrategy) -> list[int]:
    """Dense array form used by the solver cores: choice at owned vertices, -1 elsewhere.

    Raises ValueError when the strategy is partial or plays a non-edge.
    """
    arr = [-1] * game.vertex_count
    for v in game.owned_by(strategy.player):
        w = strategy.get(v)
        if w is None:
            raise ValueError(f"strategy is not total: no choice at vertex {v}")
        if w not in game.successors[v]:
            raise ValueError(f"strategy plays ({v}, {w}) which is not an edge")
        arr[v] = w
    return arr


def array_strategy(game: ParityGame, player: Owner, arr: list[int]) -> PositionalStrategy:
    return PositionalStrategy(player, {v: arr[v] for v in game.owned_by(player)})
