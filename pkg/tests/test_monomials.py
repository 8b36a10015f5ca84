import pytest

from srreg.algebra.monomials import (
    MonomialIdeal,
    add,
    add_variable,
    clique_order,
    colon,
    contains,
    format_monomial,
    intersect,
    minimalize,
    multiply,
    order,
    parse_monomial,
    polarize,
    power,
    radical,
    radical_colon,
    rho,
    star_derivative,
)
from srreg.errors import DimensionMismatchError, IdealError, InputFormatError
from srreg.utils import power_cache


def test_minimalize_keeps_antichain_in_canonical_order():
    I = minimalize(2, [(1, 1), (0, 1), (2, 0), (1, 0)])
    assert I.gens == ((1, 0), (0, 1))
    assert minimalize(2, [(0, 1), (1, 0)]) == I


def test_zero_and_unit():
    assert MonomialIdeal.zero(3).is_zero
    assert MonomialIdeal.unit(3).is_unit
    assert not minimalize(2, [(1, 0)]).is_unit
    assert minimalize(2, [(0, 0), (1, 0)]).is_unit


def test_membership():
    I = minimalize(3, [(2, 1, 0), (0, 0, 3)])
    assert contains(I, (3, 1, 1))
    assert (0, 1, 4) in I
    assert not contains(I, (1, 5, 2))
    with pytest.raises(DimensionMismatchError):
        contains(I, (1, 1))


def test_add_multiply_intersect():
    x1 = minimalize(2, [(1, 0)])
    x2 = minimalize(2, [(0, 1)])
    assert add(x1, x2).gens == ((1, 0), (0, 1))
    assert multiply(x1, x2).gens == ((1, 1),)
    assert intersect(x1, x2).gens == ((1, 1),)
    with pytest.raises(DimensionMismatchError):
        add(x1, minimalize(3, [(1, 0, 0)]))


def test_power():
    m = minimalize(2, [(1, 0), (0, 1)])
    assert power(m, 2).gens == ((2, 0), (1, 1), (0, 2))
    assert power(m, 0).is_unit
    assert power(m, 1) is m
    with pytest.raises(IdealError):
        power(m, -1)


def test_power_is_cached(triangle_edges):
    first = power(triangle_edges, 3)
    assert power_cache.get("power", triangle_edges.key(), 3) == first
    assert power(triangle_edges, 3) == first


def test_colon_and_radical():
    I = minimalize(2, [(2, 1), (0, 3)])
    assert colon(I, (1, 0)).gens == ((1, 1), (0, 3))
    assert radical(I).gens == ((0, 1),)
    assert radical_colon(I, (2, 0)).gens == ((0, 1),)
    assert colon(I, (2, 1)).is_unit


def test_add_variable():
    I = minimalize(2, [(1, 1)])
    assert add_variable(I, 0).gens == ((1, 0),)
    with pytest.raises(DimensionMismatchError):
        add_variable(I, 2)


def test_star_derivative_clamps_at_zero():
    assert star_derivative((2, 1, 0), (1, 2, 0)) == (1, 0, 0)


def test_order_on_triangle(triangle_edges):
    assert order(triangle_edges, (1, 1, 1)) == 1
    assert order(triangle_edges, (2, 2, 0)) == 2
    assert order(triangle_edges, (2, 2, 2)) == 3
    assert order(triangle_edges, (4, 1, 0)) == 1
    assert order(triangle_edges, (1, 0, 0)) == 0


def test_order_rejects_zero_and_unit():
    with pytest.raises(IdealError):
        order(MonomialIdeal.zero(2), (1, 1))
    with pytest.raises(IdealError):
        order(MonomialIdeal.unit(2), (1, 1))


@pytest.mark.parametrize("a,expected", [((1, 1, 1), 1), ((4, 1, 0), 1), ((2, 2, 2), 3), ((3, 3, 0), 3), ((), 0)])
def test_clique_order(a, expected):
    assert clique_order(a) == expected


def test_rho():
    assert rho(minimalize(3, [(2, 1, 0), (0, 3, 0)])) == (2, 3, 0)


def test_polarization():
    I = minimalize(2, [(2, 0), (1, 1)])
    polarized = polarize(I)
    assert polarized.ideal.n == 3
    assert polarized.ideal.is_squarefree
    assert polarized.variables == ((0, 1), (0, 2), (1, 1))
    assert polarized.ideal.gens == ((1, 1, 0), (1, 0, 1))
    assert polarized.depolarize() == I


def test_polarize_rejects_unit():
    with pytest.raises(IdealError):
        polarize(MonomialIdeal.unit(2))


def test_monomial_text():
    assert parse_monomial("x1^2*x3", 3) == (2, 0, 1)
    assert parse_monomial("1", 2) == (0, 0)
    assert parse_monomial("x2 * x2", 2) == (0, 2)
    assert format_monomial((2, 0, 1)) == "x1^2*x3"
    assert format_monomial((0, 0)) == "1"


@pytest.mark.parametrize("text", ["x4", "y1", "x1^", "x0"])
def test_parse_monomial_errors(text):
    with pytest.raises(InputFormatError):
        parse_monomial(text, 3)
