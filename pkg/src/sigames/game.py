"""Arena model and PGSolver text-format support.

The max-parity convention is used throughout: vertices carry natural-number
colours (priorities) and Player Max wins a play iff the highest colour seen
infinitely often is even.  Vertex ids are dense naturals ``0..n-1``.

The text format is the PGSolver one::

    parity <max-id>;
    <id> <colour> <owner> <succ>(,<succ>)* ["<label>"];

with owner code 0 for Max and 1 for Min, single spaces between fields,
successors separated by commas without spaces, and ``\\n`` line endings.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, replace
from typing import TYPE_CHECKING, Iterable, Iterator

if TYPE_CHECKING:
    from .strategy import PositionalStrategy


class Owner(enum.Enum):
    """The two players.  Enum values match the PGSolver owner codes."""

    MAX = 0
    MIN = 1

    @property
    def opponent(self) -> "Owner":
        return Owner.MIN if self is Owner.MAX else Owner.MAX

    def __repr__(self) -> str:
        return self.name


class ParseError(ValueError):
    """Malformed PGSolver input.  ``line`` is 1-based, or None for file-level errors."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class Violation:
    """A single validation failure; ``subject`` is a vertex id or a colour."""

    rule: str
    subject: int
    message: str

    def __str__(self) -> str:
        return f"{self.rule}: {self.message}"


@dataclass(frozen=True)
class ParityGame:
    """Immutable arena: parallel tuples indexed by vertex id.

    ``owners[v]`` is the player choosing at ``v``, ``colours[v]`` its colour and
    ``successors[v]`` a non-empty tuple of successor ids whose stored order is
    significant (it fixes default initial strategies).  ``labels`` is an
    optional tuple of display names.
    """

    owners: tuple[Owner, ...]
    colours: tuple[int, ...]
    successors: tuple[tuple[int, ...], ...]
    labels: tuple[str | None, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "owners", tuple(self.owners))
        object.__setattr__(self, "colours", tuple(int(c) for c in self.colours))
        object.__setattr__(self, "successors", tuple(tuple(s) for s in self.successors))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
        n = len(self.owners)
        if len(self.colours) != n or len(self.successors) != n:
            raise ValueError("owners, colours and successors must have equal length")
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("labels must cover every vertex or be None")

    @property
    def vertex_count(self) -> int:
        return len(self.owners)

    def vertices(self) -> range:
        return range(len(self.owners))

    def owned_by(self, player: Owner) -> list[int]:
        return [v for v, o in enumerate(self.owners) if o is player]

    def edges(self) -> Iterator[tuple[int, int]]:
        for v, succ in enumerate(self.successors):
            for w in succ:
                yield v, w


_HEADER_RE = re.compile(r"^parity (\d+);$")
_VERTEX_RE = re.compile(r'^(\d+) (\d+) ([01]) (\d+(?:,\d+)*)( "([^"]*)")?;$')
_NO_SUCC_RE = re.compile(r"^(\d+) (\d+) ([01]) ?;$")


def parse_pgsolver(text: str) -> ParityGame:
    """Parse PGSolver text into a :class:`ParityGame`.

    The ``parity <max-id>;`` header is optional and its value is not checked
    (tools disagree on whether it is the count or the highest id).  Successor
    order is preserved exactly as written.
    """
    decls: dict[int, tuple[int, Owner, tuple[int, ...], str | None, int]] = {}
    header_allowed = True
    for line_no, raw in enumerate(text.split("\n"), 1):
        line = raw[:-1] if raw.endswith("\r") else raw
        if not line.strip():
            continue
        if header_allowed:
            header_allowed = False
            if _HEADER_RE.match(line):
                continue
        m = _VERTEX_RE.match(line)
        if m is None:
            empty = _NO_SUCC_RE.match(line)
            if empty:
                raise ParseError(f"vertex {empty.group(1)} has no successors", line_no)
            raise ParseError("malformed vertex line", line_no)
        v = int(m.group(1))
        if v in decls:
            raise ParseError(f"duplicate vertex id {v}", line_no)
        succ = tuple(int(s) for s in m.group(4).split(","))
        decls[v] = (int(m.group(2)), Owner(int(m.group(3))), succ, m.group(6), line_no)
    if not decls:
        raise ParseError("no vertices declared")
    n = max(decls) + 1
    for i in range(n):
        if i not in decls:
            raise ParseError(f"vertex ids are not contiguous: missing {i}")
    for v in range(n):
        colour, owner, succ, label, line_no = decls[v]
        for w in succ:
            if w not in decls:
                raise ParseError(f"vertex {v}: successor {w} does not exist", line_no)
    labels = tuple(decls[v][3] for v in range(n))
    return ParityGame(
        owners=tuple(decls[v][1] for v in range(n)),
        colours=tuple(decls[v][0] for v in range(n)),
        successors=tuple(decls[v][2] for v in range(n)),
        labels=labels if any(l is not None for l in labels) else None,
    )


def write_pgsolver(game: ParityGame) -> str:
    """Serialize a game; ``parse_pgsolver(write_pgsolver(g))`` reproduces ``g`` exactly."""
    n = game.vertex_count
    if n == 0:
        raise ValueError("cannot serialize an empty game")
    lines = [f"parity {n - 1};"]
    for v in range(n):
        succ = ",".join(str(w) for w in game.successors[v])
        label = ""
        if game.labels is not None and game.labels[v] is not None:
            label = f' "{game.labels[v]}"'
        lines.append(f"{v} {game.colours[v]} {game.owners[v].value} {succ}{label};")
    return "\n".join(lines) + "\n"


def validate(game: ParityGame) -> list[Violation]:
    """Check structural invariants; an empty list means every solver accepts the game."""
    out: list[Violation] = []
    n = game.vertex_count
    for v in range(n):
        succ = game.successors[v]
        if not succ:
            out.append(Violation("no-successor", v, f"vertex {v} has no outgoing edge"))
        seen: set[int] = set()
        for w in succ:
            if not 0 <= w < n:
                out.append(Violation("dangling-successor", v, f"vertex {v} lists missing successor {w}"))
            elif w in seen:
                out.append(Violation("duplicate-successor", v, f"vertex {v} lists successor {w} twice"))
            seen.add(w)
        if game.colours[v] < 0:
            out.append(Violation("negative-colour", v, f"vertex {v} has negative colour {game.colours[v]}"))
    by_colour: dict[int, list[int]] = {}
    for v in range(n):
        by_colour.setdefault(game.colours[v], []).append(v)
    for colour, vs in sorted(by_colour.items()):
        if len(vs) > 1:
            out.append(Violation("duplicate-colour", colour, f"colour {colour} used by vertices {vs}"))
    return out


def make_colours_unique(game: ParityGame) -> ParityGame:
    """Reassign colours injectively, preserving parity and relative preference.

    Vertices sorted by (old colour, id) receive strictly increasing colours:
    each vertex gets the smallest colour that is at least its old colour,
    greater than the previously assigned one and of the same parity as the old
    colour.  Already-injective games come back unchanged, so the map is
    idempotent, and the winner partition is preserved.
    """
    n = game.vertex_count
    order = sorted(range(n), key=lambda v: (game.colours[v], v))
    new = list(game.colours)
    prev: int | None = None
    for v in order:
        c = game.colours[v]
        if prev is not None and c <= prev:
            c = prev + 1 if (prev + 1) % 2 == c % 2 else prev + 2
        new[v] = c
        prev = c
    if tuple(new) == game.colours:
        return game
    return replace(game, colours=tuple(new))


def restrict_to_strategies(game: ParityGame, edge_sets: Iterable["PositionalStrategy"]) -> ParityGame:
    """Subgame keeping only the edges some given strategy plays.

    Every vertex must be covered, so the iterable needs at least one total
    strategy per player.  Successor lists of the result are sorted ascending.
    """
    allowed: list[set[int]] = [set() for _ in range(game.vertex_count)]
    for strat in edge_sets:
        for v, w in strat.items():
            if game.owners[v] is not strat.player:
                raise ValueError(f"strategy for {strat.player.name} has a choice at vertex {v} owned by the opponent")
            if w not in game.successors[v]:
                raise ValueError(f"strategy plays ({v}, {w}) which is not an edge")
            allowed[v].add(w)
    for v, kept in enumerate(allowed):
        if not kept:
            raise ValueError(f"restriction leaves vertex {v} without successors")
    return replace(game, successors=tuple(tuple(sorted(kept)) for kept in allowed))
