"""Deterministic 64-bit digests and seed mixing.

Hashes are FNV-1a over documented byte strings so that independent
implementations can reproduce them:

* winners digest: the string of ``1`` (Max wins) and ``0`` (Min wins)
  characters in vertex-id order, UTF-8 encoded;
* valuation digest: the canonical JSON-lines serialization produced by
  :func:`sigames.valuation.valuation_json_lines`, UTF-8 encoded.

Seed mixing folds integer parts into a single 64-bit seed with the splitmix64
finalizer: starting from 0, each part is XORed in and the state passed through
splitmix64.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .game import Owner
from .valuation import ValuationVector, valuation_json_lines

_MASK64 = (1 << 64) - 1
_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3


def fnv1a64(data: bytes) -> int:
    h = _FNV_OFFSET
    for byte in data:
        h = ((h ^ byte) * _FNV_PRIME) & _MASK64
    return h


def splitmix64(x: int) -> int:
    z = (x + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def mix64(*parts: int) -> int:
    acc = 0
    for p in parts:
        acc = splitmix64(acc ^ (p & _MASK64))
    return acc


def winners_digest(winners: Sequence[Owner]) -> int:
    bits = "".join("1" if w is Owner.MAX else "0" for w in winners)
    return fnv1a64(bits.encode("utf-8"))


def valuation_digest(vals: ValuationVector) -> int:
    return fnv1a64(valuation_json_lines(vals).encode("utf-8"))
