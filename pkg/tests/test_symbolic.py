from itertools import product

import pytest

from srreg.algebra.complexes import sr_ideal
from srreg.algebra.graphs import Graph
from srreg.algebra.monomials import contains, minimalize, power, radical_colon
from srreg.algebra.symbolic import (
    IntermediateFamily,
    Selection,
    criterion_in_power_predict,
    criterion_in_sym_check,
    differential_membership,
    intermediate_family,
    intermediate_ideals,
    intersection_membership,
    minimal_primes,
    symbolic_membership,
    symbolic_power,
    symbolic_power_by_intersection,
)
from srreg.algebra.regularity import regularity
from srreg.errors import GraphError, GuardLimitError, IdealError
from srreg.harness.corpus import intro_extras
from srreg.harness.suites import check_bull_orders, check_clique_term, check_criterion_in_power
from srreg.utils import power_cache


def test_minimal_primes_are_vertex_covers(triangle_edges):
    assert minimal_primes(triangle_edges) == [(0, 1), (0, 2), (1, 2)]


def test_symbolic_square_of_triangle(triangle_edges):
    assert symbolic_power(triangle_edges, 2).gens == ((1, 1, 1), (2, 2, 0), (2, 0, 2), (0, 2, 2))
    assert symbolic_power_by_intersection(triangle_edges, 2) == symbolic_power(triangle_edges, 2)
    assert symbolic_power(triangle_edges, 1) is triangle_edges


@pytest.mark.parametrize("s", [1, 2, 3])
def test_membership_routes_agree(remark, s):
    for a in product(range(s + 1), repeat=remark.n):
        covering = symbolic_membership(remark, s, a)
        assert covering == differential_membership(remark, s, a)
        assert covering == intersection_membership(remark, s, a)
        assert covering == contains(symbolic_power(remark, s), a)


def test_differential_membership(triangle_edges):
    assert differential_membership(triangle_edges, 2, (1, 1, 1))
    assert not differential_membership(triangle_edges, 2, (2, 0, 0))
    assert not differential_membership(triangle_edges, 3, (1, 1, 0))


def test_symbolic_power_requirements(triangle_edges):
    with pytest.raises(IdealError):
        symbolic_power(minimalize(2, [(2, 0)]), 2)
    with pytest.raises(IdealError):
        symbolic_power(triangle_edges, 0)
    power_cache.clear()
    with pytest.raises(GuardLimitError):
        symbolic_power(triangle_edges, 3, box_limit=10)


def test_ordinary_power_lies_in_symbolic_power(remark):
    top = symbolic_power(remark, 3)
    assert all(contains(top, g) for g in power(remark, 3).gens)


def test_symbolic_power_must_contain_the_ordinary_power(triangle_edges, monkeypatch):
    power_cache.clear()
    monkeypatch.setattr("srreg.algebra.symbolic.minimalize", lambda n, gens: minimalize(n, gens[:1]))
    with pytest.raises(IdealError):
        symbolic_power(triangle_edges, 2)
    assert power_cache.get("symbolic", triangle_edges.key(), 2) is None


def test_remark_separation(remark):
    a = (1, 1, 1, 1, 0)
    x5 = (0, 0, 0, 0, 1)
    assert contains(radical_colon(symbolic_power(remark, 3), a), x5)
    assert not contains(radical_colon(power(remark, 3), a), x5)


def test_intro_extras(intro):
    family = intermediate_family(sr_ideal(intro), 3, Selection.sample(count=4, seed=0))
    assert len(family.extras) == 16
    assert set(intro_extras()) <= set(family.extras)
    assert {(1, 0, 1, 1, 0, 2), (1, 0, 2, 0, 0, 2)} <= set(family.extras)
    assert all(not contains(family.base, f) for f in family.extras)
    assert family.member(range(16)) == family.top


@pytest.mark.slow
def test_intro_chain_keeps_regularity_seven(intro):
    base = power(sr_ideal(intro), 3)
    chain = intro_extras()
    values = [regularity(minimalize(base.n, base.gens + tuple(chain[:k]))) for k in range(4)]
    assert values == [7, 7, 7, 7]


def test_triangle_family(triangle_edges):
    family = intermediate_family(triangle_edges, 2)
    assert family.extras == ((1, 1, 1),)
    assert list(intermediate_ideals(triangle_edges, 2)) == [power(triangle_edges, 2), symbolic_power(triangle_edges, 2)]


def test_all_mode_guard(intro):
    with pytest.raises(GuardLimitError):
        intermediate_family(sr_ideal(intro), 3, max_intermediates=2)


def test_sampled_family_is_seeded(intro):
    I = sr_ideal(intro)
    family = intermediate_family(I, 3, Selection.sample(count=4, seed=7))
    subsets = family.subsets()
    assert subsets[:2] == [(), tuple(range(16))]
    assert 2 < len(subsets) <= 4
    assert intermediate_family(I, 3, Selection.sample(count=4, seed=7)).subsets() == subsets


def test_family_validation(triangle_edges):
    base = power(triangle_edges, 2)
    top = symbolic_power(triangle_edges, 2)
    with pytest.raises(ValueError):
        IntermediateFamily(base=base, top=top, extras=(base.gens[0],))
    with pytest.raises(ValueError):
        IntermediateFamily(base=top, top=base, extras=())


def test_criterion_in_power_on_an_edge():
    G = Graph.from_edges(2, [(0, 1)])
    assert not criterion_in_power_predict(G, 1, (0, 0), [0])
    assert criterion_in_power_predict(G, 1, (0, 1), [0])
    with pytest.raises(GraphError):
        criterion_in_power_predict(G, 1, (0, 0), [0, 1])


def test_criterion_in_power_holds(bull):
    assert check_criterion_in_power(bull, 2).violations == 0


def test_order_formulas():
    assert check_clique_term(max_clique=3, max_exponent=3).violations == 0
    assert check_bull_orders(max_exponent=3).violations == 0


def test_criterion_in_sym(triangle_edges):
    J = power(triangle_edges, 2)
    a = (1, 1, 0)
    assert criterion_in_sym_check(triangle_edges, J, 2, a, (0, 0, 1), [2])
    with pytest.raises(IdealError):
        criterion_in_sym_check(triangle_edges, J, 2, a, (1, 1, 0), [2])
    assert not criterion_in_sym_check(triangle_edges, J, 2, (0, 0, 0), (0, 0, 1), [2], check_preconditions=False)
