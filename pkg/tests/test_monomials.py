import pytest

from sopcm.exceptions import InputFormatError, UnitIdealError
from sopcm.monomial import (
    Monomial,
    format_monomial,
    monomials_sorted,
    parse_monomial,
    parse_monomial_lines,
)
from sopcm.ideal import minimalize


def m(text, n=None):
    return parse_monomial(text, n)


def test_parse_and_format_round_trip():
    for text in ("x1^2 x3", "x1", "x2^5", "x1 x2 x3"):
        mono = parse_monomial(text, 3)
        assert format_monomial(mono) == text
    assert parse_monomial("x1^2 x3").exps == (2, 0, 1)


def test_parse_rejects_garbage():
    with pytest.raises(InputFormatError):
        parse_monomial("y1", 2)
    with pytest.raises(InputFormatError):
        parse_monomial("x0", 2)
    with pytest.raises(InputFormatError):
        parse_monomial("x1^0", 2)
    with pytest.raises(InputFormatError):
        parse_monomial("x5", 2)


def test_degree_support_and_divisibility():
    a = m("x1 x2", 3)
    b = m("x1 x2 x3", 3)
    assert a.degree == 2 and b.degree == 3
    assert a.divides(b) and not b.divides(a)
    assert a.support == (1, 2)
    assert (a * m("x3", 3)).exps == (1, 1, 1)
    assert m("x1^2", 2).lcm(m("x1 x2", 2)).exps == (2, 1)


def test_minimalize_divisibility_example():
    ideal = minimalize([m("x1 x2", 3), m("x1 x2 x3", 3)], 3)
    assert ideal.gens == (m("x1 x2", 3),)


def test_minimalize_duplicate_removal_example():
    ideal = minimalize([m("x1^2", 3), m("x1 x3", 3), m("x3^2", 3), m("x1 x3", 3)], 3)
    assert set(ideal.gens) == {m("x1^2", 3), m("x1 x3", 3), m("x3^2", 3)}
    assert ideal.mu == 3


def test_minimalize_c6_reduction_already_minimal():
    gens = [m(t, 6) for t in ("x1^2", "x3^2", "x5^2", "x1 x3", "x3 x5", "x1 x5")]
    ideal = minimalize(gens, 6)
    assert set(ideal.gens) == set(gens)
    assert ideal.mu == 6


def test_minimalize_rejects_unit():
    with pytest.raises(UnitIdealError):
        minimalize([Monomial.one(2), m("x1", 2)], 2)


def test_canonical_ordering_is_degree_then_revlex():
    gens = [m(t, 3) for t in ("x3", "x1^2", "x1 x2", "x2")]
    ordered = monomials_sorted(gens)
    assert [format_monomial(g) for g in ordered] == ["x2", "x3", "x1^2", "x1 x2"]


def test_parse_monomial_lines_with_comments():
    lines = ["# edge ideal", "x1 x2", "", "x2 x3  # second edge"]
    parsed = parse_monomial_lines(lines)
    assert [p.exps for p in parsed] == [(1, 1, 0), (0, 1, 1)]
