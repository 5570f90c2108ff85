"""The sweep harness: cell layout, ordering, digest cross-checks, CSV shape."""

import pytest

from sigames import RandomGameParams
from sigames.bench import (
    ALGORITHMS,
    CSV_HEADER,
    BenchRecord,
    DigestMismatchError,
    SuitePlan,
    _check_digests,
    records_to_csv,
    run_suite,
)
from sigames.digest import mix64

TEMPLATE = RandomGameParams(vertices=8, min_out=1, max_out=2, colour_max=12)


def small_plan(**overrides) -> SuitePlan:
    base = dict(
        generator="random",
        params=(6, 8),
        algos=("classic", "symmetric", "brute"),
        rules=("switch-all", "single-switch"),
        repeat=2,
        seed_base=11,
        random_template=TEMPLATE,
        timing=False,
    )
    base.update(overrides)
    return SuitePlan(**base)


def test_suite_layout_and_ordering():
    records = run_suite(small_plan())
    # 2 params x 2 repeats x (2 classic rules + symmetric + brute)
    assert len(records) == 2 * 2 * 4
    assert [r.sort_key for r in records] == sorted(r.sort_key for r in records)
    for rec in records:
        if rec.algorithm == "classic":
            assert rec.rule in ("switch-all", "single-switch")
        else:
            assert rec.rule == "-"
        assert rec.wall_ms == 0
        assert 0 <= rec.winners_digest < 2 ** 64


def test_suite_seeds_derived_from_base():
    records = run_suite(small_plan(repeat=3, params=(6,), algos=("symmetric",)))
    expected = {mix64(11, 6, rep) for rep in range(3)}
    assert {r.seed for r in records} == expected


def test_suite_digests_agree_across_algorithms():
    records = run_suite(small_plan())
    by_instance = {}
    for rec in records:
        by_instance.setdefault((rec.param, rec.seed), set()).add(rec.winners_digest)
    assert all(len(ds) == 1 for ds in by_instance.values())


def test_suite_is_deterministic_without_timing():
    a = records_to_csv(run_suite(small_plan()))
    b = records_to_csv(run_suite(small_plan()))
    assert a == b


def test_thread_count_does_not_change_records(monkeypatch):
    sequential = run_suite(small_plan())
    monkeypatch.setenv("SI_GAMES_THREADS", "3")
    threaded = run_suite(small_plan())
    assert sequential == threaded


def test_thread_count_must_be_integer(monkeypatch):
    monkeypatch.setenv("SI_GAMES_THREADS", "lots")
    with pytest.raises(ValueError):
        run_suite(small_plan(params=(6,), algos=("symmetric",), repeat=1))


def test_friedmann_suite_counts():
    # the trap suite starts improvement from the designated opening, so the
    # classic column shows the doubling counts and symmetric stays flat
    plan = SuitePlan(
        generator="friedmann",
        params=(1, 2, 3),
        algos=("classic", "symmetric"),
        rules=("switch-all",),
        timing=False,
    )
    records = run_suite(plan)
    classic = {r.param: r.iterations for r in records if r.algorithm == "classic"}
    symmetric = {r.param: r.iterations for r in records if r.algorithm == "symmetric"}
    assert classic == {1: 11, 2: 29, 3: 65}
    assert all(symmetric[n] <= 2 * n + 6 for n in (1, 2, 3))


def test_csv_shape():
    text = records_to_csv(run_suite(small_plan(params=(6,), repeat=1)))
    lines = text.splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    assert len(lines) == 1 + 4
    for line in lines[1:]:
        assert len(line.split(",")) == len(CSV_HEADER)
    assert text.endswith("\n")


def test_digest_mismatch_raises():
    def rec(algo, dig):
        return BenchRecord("random", 6, 1, algo, "-", 0, 1, 0, dig)

    with pytest.raises(DigestMismatchError):
        _check_digests([rec("brute", 10), rec("symmetric", 11)])
    _check_digests([rec("brute", 10), rec("symmetric", 10)])


@pytest.mark.parametrize("bad", [
    dict(generator="fancy"),
    dict(generator="random", random_template=None),
    dict(repeat=0),
    dict(params=()),
    dict(algos=()),
    dict(algos=("classic",), rules=()),
    dict(algos=("quantum",)),
])
def test_plan_validation(bad):
    with pytest.raises(ValueError):
        small_plan(**bad)


def test_known_algorithm_names():
    assert ALGORITHMS == ("classic", "slow", "symmetric", "symmetric-early", "brute")
