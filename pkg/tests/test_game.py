"""Arena model, PGSolver text format, validation and colour normalization."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sigames import (
    Owner,
    ParityGame,
    ParseError,
    PositionalStrategy,
    RandomGameParams,
    gen_random,
    make_colours_unique,
    parse_pgsolver,
    restrict_to_strategies,
    validate,
    write_pgsolver,
)

from conftest import example_game


def test_owner_codes_and_opponent():
    assert Owner.MAX.value == 0
    assert Owner.MIN.value == 1
    assert Owner.MAX.opponent is Owner.MIN
    assert Owner.MIN.opponent is Owner.MAX


def test_game_accessors():
    g = example_game()
    assert g.vertex_count == 4
    assert list(g.vertices()) == [0, 1, 2, 3]
    assert list(g.owned_by(Owner.MAX)) == [2]
    assert list(g.owned_by(Owner.MIN)) == [0, 1, 3]
    assert (2, 3) in set(g.edges())
    assert len(list(g.edges())) == 7


def test_mismatched_field_lengths_rejected():
    with pytest.raises(ValueError):
        ParityGame((Owner.MAX,), (0, 1), ((0,),))
    with pytest.raises(ValueError):
        ParityGame((Owner.MAX,), (0,), ((0,), (0,)))
    with pytest.raises(ValueError):
        ParityGame((Owner.MAX,), (0,), ((0,),), labels=("a", "b"))


# ---------------------------------------------------------------------------
# parsing

FIG_TEXT = 'parity 3;\n0 1 1 0 "1";\n1 4 1 0,2 "4";\n2 3 0 1,2,3 "3";\n3 0 1 3 "0";\n'


def test_parse_worked_example():
    g = parse_pgsolver(FIG_TEXT)
    assert g == example_game()
    assert g.labels == ("1", "4", "3", "0")


def test_parse_header_is_optional():
    g = parse_pgsolver('0 2 0 1;\n1 3 1 0;\n')
    assert g.vertex_count == 2
    assert g.labels is None


def test_parse_tolerates_blank_lines_and_crlf():
    g = parse_pgsolver('\nparity 1;\r\n\n0 2 0 1;\r\n1 3 1 0;\n\n')
    assert g.colours == (2, 3)


def test_parse_out_of_order_ids():
    g = parse_pgsolver('1 3 1 0;\n0 2 0 1;\n')
    assert g.colours == (2, 3)


def test_parse_error_empty_successors_names_vertex():
    with pytest.raises(ParseError) as info:
        parse_pgsolver('parity 1;\n0 2 0 ;\n1 1 1 0;\n')
    assert "vertex 0" in str(info.value)
    assert info.value.line == 2


def test_parse_error_duplicate_vertex():
    with pytest.raises(ParseError, match="duplicate"):
        parse_pgsolver('0 2 0 0;\n0 3 1 0;\n')


def test_parse_error_gap_in_ids():
    with pytest.raises(ParseError):
        parse_pgsolver('0 2 0 0;\n2 3 1 2;\n')


def test_parse_error_dangling_successor():
    with pytest.raises(ParseError, match="5"):
        parse_pgsolver('0 2 0 5;\n')


def test_parse_error_malformed_line():
    with pytest.raises(ParseError) as info:
        parse_pgsolver('0 2 2 0;\n')
    assert info.value.line == 1
    with pytest.raises(ParseError):
        parse_pgsolver('hello world\n')


def test_parse_empty_input():
    with pytest.raises(ParseError):
        parse_pgsolver('')
    with pytest.raises(ParseError):
        parse_pgsolver('parity 4;\n')


def test_write_worked_example_exact_bytes():
    assert write_pgsolver(example_game()) == FIG_TEXT


def test_write_without_labels():
    g = parse_pgsolver('0 2 0 1;\n1 3 1 0,1;\n')
    assert write_pgsolver(g) == 'parity 1;\n0 2 0 1;\n1 3 1 0,1;\n'


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10_000), n=st.integers(2, 12))
def test_write_parse_round_trip(seed, n):
    g = gen_random(RandomGameParams(n, 1, min(3, n - 1), 2 * n, 0.4), seed)
    assert parse_pgsolver(write_pgsolver(g)) == g


# ---------------------------------------------------------------------------
# validation

def test_validate_clean_game():
    assert validate(example_game()) == []


def test_validate_duplicate_colours():
    g = ParityGame((Owner.MAX, Owner.MIN), (2, 2), ((1,), (0,)))
    problems = validate(g)
    assert [p.rule for p in problems] == ["duplicate-colour"]
    assert "2" in problems[0].message


def test_validate_duplicate_successor():
    g = ParityGame((Owner.MAX,), (0,), ((0, 0),))
    assert "duplicate-successor" in [p.rule for p in validate(g)]


def test_validate_reports_sorted_by_colour():
    g = ParityGame(
        (Owner.MAX, Owner.MIN, Owner.MAX, Owner.MIN), (5, 3, 5, 3), ((1,), (0,), (3,), (2,))
    )
    assert [p.rule for p in validate(g)] == ["duplicate-colour", "duplicate-colour"]
    assert "3" in validate(g)[0].message


# ---------------------------------------------------------------------------
# colour normalization

def test_colours_unique_splits_equal_pair():
    g = ParityGame((Owner.MAX, Owner.MIN), (2, 2), ((1,), (0,)))
    assert make_colours_unique(g).colours == (2, 4)


def test_colours_unique_keeps_parity_and_relative_order():
    g = ParityGame(
        (Owner.MAX,) * 5, (3, 3, 2, 3, 8), ((0,), (1,), (2,), (3,), (4,))
    )
    out = make_colours_unique(g)
    for old, new in zip(g.colours, out.colours):
        assert new % 2 == old % 2
        assert new >= old
    assert len(set(out.colours)) == 5
    # ties split by vertex id, strict old-colour order survives
    assert out.colours[2] < min(out.colours[0], out.colours[1], out.colours[3])
    assert out.colours[0] < out.colours[1] < out.colours[3]
    assert out.colours[4] > out.colours[3]


def test_colours_unique_identity_when_already_injective():
    g = example_game()
    assert make_colours_unique(g) is g


@settings(max_examples=60, deadline=None)
@given(colours=st.lists(st.integers(0, 6), min_size=1, max_size=9))
def test_colours_unique_properties(colours):
    n = len(colours)
    g = ParityGame((Owner.MAX,) * n, tuple(colours), tuple(((v + 1) % n,) for v in range(n)))
    out = make_colours_unique(g)
    assert len(set(out.colours)) == n
    for old, new in zip(g.colours, out.colours):
        assert new >= old and new % 2 == old % 2
    for v in range(n):
        for w in range(n):
            if colours[v] < colours[w]:
                assert out.colours[v] < out.colours[w]
    assert make_colours_unique(out) is out


# ---------------------------------------------------------------------------
# restriction

def test_restrict_to_strategies_keeps_only_played_edges():
    g = example_game()
    sigma = PositionalStrategy(Owner.MAX, {2: 3})
    tau = PositionalStrategy(Owner.MIN, {0: 0, 1: 2, 3: 3})
    sub = restrict_to_strategies(g, [sigma, tau])
    assert sub.successors == ((0,), (2,), (3,), (3,))
    assert sub.owners == g.owners and sub.colours == g.colours


def test_restrict_union_of_two_strategies_per_player():
    g = example_game()
    s1 = PositionalStrategy(Owner.MAX, {2: 1})
    s2 = PositionalStrategy(Owner.MAX, {2: 3})
    tau = PositionalStrategy(Owner.MIN, {0: 0, 1: 0, 3: 3})
    sub = restrict_to_strategies(g, [s1, s2, tau])
    assert sub.successors[2] == (1, 3)


def test_restrict_requires_total_cover():
    g = example_game()
    with pytest.raises(ValueError):
        restrict_to_strategies(g, [PositionalStrategy(Owner.MAX, {2: 2})])
