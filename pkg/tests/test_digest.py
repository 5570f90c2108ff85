"""Hashes used in reports and benchmark rows, pinned to published vectors."""

from hypothesis import given
from hypothesis import strategies as st

from sigames import Owner, PlayValuation
from sigames.digest import fnv1a64, mix64, splitmix64, valuation_digest, winners_digest


def test_fnv1a64_reference_vectors():
    assert fnv1a64(b"") == 0xCBF29CE484222325
    assert fnv1a64(b"a") == 0xAF63DC4C8601EC8C
    assert fnv1a64(b"foobar") == 0x85944171F73967E8


def test_splitmix64_reference_vectors():
    assert splitmix64(0) == 0xE220A8397B1DCDAF
    assert splitmix64(1) == 0x910A2DEC89025CC1


@given(st.integers(0, 2**64 - 1))
def test_splitmix64_stays_in_64_bits(x):
    assert 0 <= splitmix64(x) < 2**64


def test_mix64_is_order_sensitive():
    assert mix64(1, 2) != mix64(2, 1)
    assert mix64(7) != mix64(7, 0)
    assert mix64(5, 3, 1) == mix64(5, 3, 1)


def test_winners_digest_is_the_bit_string_hash():
    assert winners_digest([Owner.MAX, Owner.MIN]) == fnv1a64(b"10")
    assert winners_digest([]) == fnv1a64(b"")
    assert winners_digest([Owner.MIN] * 3) == fnv1a64(b"000")


def test_winners_digest_separates_partitions():
    a = winners_digest([Owner.MAX, Owner.MAX, Owner.MIN])
    b = winners_digest([Owner.MAX, Owner.MIN, Owner.MAX])
    assert a != b


def test_valuation_digest_depends_on_every_field():
    base = [PlayValuation.make(2, {3}, 1), PlayValuation.make(0, set(), 0)]
    assert valuation_digest(base) == valuation_digest(list(base))
    bumped_c = [PlayValuation.make(4, {5}, 1), base[1]]
    bumped_d = [PlayValuation.make(2, {3}, 2), base[1]]
    bumped_set = [PlayValuation.make(2, set(), 1), base[1]]
    digests = {valuation_digest(v) for v in (base, bumped_c, bumped_d, bumped_set)}
    assert len(digests) == 4
