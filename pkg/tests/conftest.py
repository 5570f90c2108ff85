"""Shared fixtures: the worked four-vertex example and seeded game corpora."""

from __future__ import annotations

import pytest

from sigames import Owner, ParityGame, PositionalStrategy, RandomGameParams, gen_random


def example_game() -> ParityGame:
    """Four-vertex game used throughout: labels name the colours.

    id 0: colour 1, Min, -> 0          (self loop)
    id 1: colour 4, Min, -> 0, 2
    id 2: colour 3, Max, -> 1, 2, 3
    id 3: colour 0, Min, -> 3          (self loop)
    """
    return ParityGame(
        owners=(Owner.MIN, Owner.MIN, Owner.MAX, Owner.MIN),
        colours=(1, 4, 3, 0),
        successors=((0,), (0, 2), (1, 2, 3), (3,)),
        labels=("1", "4", "3", "0"),
    )


def blue_sigma() -> PositionalStrategy:
    return PositionalStrategy(Owner.MAX, {2: 2})


def red_tau() -> PositionalStrategy:
    return PositionalStrategy(Owner.MIN, {0: 0, 1: 2, 3: 3})


@pytest.fixture
def fig_game() -> ParityGame:
    return example_game()


@pytest.fixture
def fig_sigma() -> PositionalStrategy:
    return blue_sigma()


@pytest.fixture
def fig_tau() -> PositionalStrategy:
    return red_tau()


def small_corpus(count: int, seed0: int = 1000) -> list[ParityGame]:
    """Seeded corpus of tiny games (|V| <= 8) cheap enough to enumerate."""
    games = []
    for s in range(count):
        n = 2 + s % 7
        params = RandomGameParams(
            vertices=n,
            min_out=1,
            max_out=min(3, n - 1),
            colour_max=2 * n,
            owner_bias=0.5,
        )
        games.append(gen_random(params, seed0 + s))
    return games


@pytest.fixture(scope="session")
def corpus() -> list[ParityGame]:
    return small_corpus(40)
