"""Game generators: seeded random arenas and a hard family for switch-all.

Both generators are deterministic functions of their parameters, so any game
appearing in a benchmark row can be rebuilt from (generator, param, seed).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .game import Owner, ParityGame, make_colours_unique
from .strategy import PositionalStrategy


@dataclass(frozen=True)
class RandomGameParams:
    vertices: int
    min_out: int = 1
    max_out: int = 2
    colour_max: int = 7
    owner_bias: float = 0.5

    def __post_init__(self) -> None:
        if self.vertices < 2:
            raise ValueError("need at least two vertices")
        if not 1 <= self.min_out <= self.max_out:
            raise ValueError("need 1 <= min_out <= max_out")
        if self.max_out >= self.vertices:
            raise ValueError("max_out must be smaller than the vertex count")
        if self.colour_max < 0:
            raise ValueError("colour_max must be non-negative")
        if not 0.0 <= self.owner_bias <= 1.0:
            raise ValueError("owner_bias must lie in [0, 1]")


def gen_random(params: RandomGameParams, seed: int) -> ParityGame:
    """Random arena; colours are drawn in [0, colour_max] then disambiguated.

    Per vertex, in a fixed order: owner (bias = probability of Max), then
    out-degree, then a sorted sample of successors, then the colour.  Self
    loops are allowed.
    """
    rng = random.Random(seed)
    owners = []
    colours = []
    successors = []
    population = range(params.vertices)
    for _ in range(params.vertices):
        owners.append(Owner.MAX if rng.random() < params.owner_bias else Owner.MIN)
        degree = rng.randint(params.min_out, params.max_out)
        successors.append(tuple(sorted(rng.sample(population, degree))))
        colours.append(rng.randint(0, params.colour_max))
    game = ParityGame(tuple(owners), tuple(colours), tuple(successors))
    return make_colours_unique(game)


@dataclass(frozen=True)
class TrapParams:
    bits: int

    def __post_init__(self) -> None:
        if self.bits < 1:
            raise ValueError("bits must be at least 1")


def gen_friedmann_trap(params: TrapParams) -> ParityGame:
    """Binary-counter arena on which switch-all needs exponentially many rounds.

    The arena simulates an n-bit counter: each bit i has a gate cycle
    (d_i, e_i) that is closed when the bit is set, plus access structure
    (g_i, k_i, f_i, h_i) and a deceleration lane (t_j, a_j, c) that slows the
    cheap switches down so the counter steps through all 2^n states.  Min wins
    everywhere; the even colours that would reward Max all sit on cycles Min
    can avoid.  10n + 4 vertices for n bits.
    """
    n = params.bits
    names: list[str] = ["x"]
    for i in range(1, n + 1):
        names += [f"d{i}", f"e{i}", f"g{i}"]
    for j in range(1, 2 * n + 1):
        names += [f"t{j}", f"a{j}"]
    names += ["c", "s", "r"]
    for i in range(1, n + 1):
        names += [f"k{i}", f"f{i}", f"h{i}"]
    index = {name: v for v, name in enumerate(names)}

    owner_of: dict[str, Owner] = {"x": Owner.MIN, "c": Owner.MAX, "s": Owner.MAX, "r": Owner.MAX}
    colour_of: dict[str, int] = {"x": 1, "c": 8 * n + 4, "s": 8 * n + 6, "r": 8 * n + 8}
    succ_of: dict[str, list[str]] = {
        "x": ["x"],
        "c": ["r", "s"],
        "s": [f"f{i}" for i in range(1, n + 1)] + ["x"],
        "r": [f"g{i}" for i in range(1, n + 1)] + ["x"],
    }
    for i in range(1, n + 1):
        owner_of[f"d{i}"] = Owner.MAX
        colour_of[f"d{i}"] = 4 * i - 1
        succ_of[f"d{i}"] = [f"e{i}"] + [f"a{j}" for j in range(1, 2 * i + 1)] + ["r", "s"]
        owner_of[f"e{i}"] = Owner.MIN
        colour_of[f"e{i}"] = 4 * i
        succ_of[f"e{i}"] = [f"d{i}", f"h{i}"]
        owner_of[f"g{i}"] = Owner.MAX
        colour_of[f"g{i}"] = 4 * i + 2
        succ_of[f"g{i}"] = [f"f{i}", f"k{i}"]
        owner_of[f"k{i}"] = Owner.MAX
        colour_of[f"k{i}"] = 8 * n + 5 + 4 * i
        succ_of[f"k{i}"] = ["x"] + [f"g{m}" for m in range(i + 1, n + 1)]
        owner_of[f"f{i}"] = Owner.MIN
        colour_of[f"f{i}"] = 8 * n + 7 + 4 * i
        succ_of[f"f{i}"] = [f"e{i}"]
        owner_of[f"h{i}"] = Owner.MIN
        colour_of[f"h{i}"] = 8 * n + 8 + 4 * i
        succ_of[f"h{i}"] = [f"k{i}"]
    for j in range(1, 2 * n + 1):
        owner_of[f"t{j}"] = Owner.MAX
        colour_of[f"t{j}"] = 4 * n + 1 + 2 * j
        succ_of[f"t{j}"] = [("c" if j == 1 else f"t{j - 1}"), "r", "s"]
        owner_of[f"a{j}"] = Owner.MIN
        colour_of[f"a{j}"] = 4 * n + 2 + 2 * j
        succ_of[f"a{j}"] = [f"t{j}"]

    owners = tuple(owner_of[name] for name in names)
    colours = tuple(colour_of[name] for name in names)
    successors = tuple(tuple(index[s] for s in succ_of[name]) for name in names)
    return ParityGame(owners, colours, successors, labels=tuple(names))


def trap_initial_strategy(game: ParityGame) -> PositionalStrategy:
    """The counter's designated opening configuration for a trap instance.

    Every bit starts unset (d_i avoids its cycle and aims at the access node
    r), r watches the lowest gate and s escapes straight to the sink; all
    remaining Max vertices take their first stored successor.  Starting
    switch-all from here walks the counter through all 2^n states, taking
    9 * 2^n - 7 rounds; the plain first-successor default instead closes every
    cycle at once, which is already optimal play for Max, so the exponential
    behaviour never shows.
    """
    if game.labels is None:
        raise ValueError("not a generated trap instance (labels missing)")
    index = {name: v for v, name in enumerate(game.labels)}
    n = sum(1 for name in game.labels if name.startswith("d"))
    required = {"r", "s", "g1", "x"} | {f"d{i}" for i in range(1, n + 1)}
    if n < 1 or not required.issubset(index):
        raise ValueError("not a generated trap instance (unexpected labels)")
    choice = {v: game.successors[v][0] for v in game.owned_by(Owner.MAX)}
    for i in range(1, n + 1):
        choice[index[f"d{i}"]] = index["r"]
    choice[index["r"]] = index["g1"]
    choice[index["s"]] = index["x"]
    return PositionalStrategy(Owner.MAX, choice)
