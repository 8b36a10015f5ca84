import pytest

from srreg.algebra.complexes import SimplicialComplex, cycle_complex, sr_ideal
from srreg.algebra.homology import FieldSpec
from srreg.algebra.monomials import MonomialIdeal, minimalize, power
from srreg.algebra.regularity import (
    Witness,
    box_stability,
    gamma_bound,
    reg_polarization_oracle,
    reg_restriction_in,
    reg_squarefree_links,
    reg_takayama,
    regularity,
    restrict_ideal,
    verify_witness,
    witness_support_property,
)
from srreg.errors import ComplexError, GuardLimitError, IdealError


def test_maximal_ideal_has_linear_resolution():
    cert = reg_takayama(minimalize(2, [(1, 0), (0, 1)]))
    assert (cert.reg_module, cert.reg_ideal) == (0, 1)


def test_principal_square():
    cert = reg_takayama(minimalize(1, [(2,)]))
    assert cert.reg_ideal == 2
    assert cert.witnesses == [Witness(a=(1,), i=0, face=())]
    assert cert.gamma_box == (2,)


@pytest.mark.parametrize("s,expected", [(1, 3), (2, 6), (3, 9)])
def test_hollow_triangle_powers(s, expected):
    assert regularity(power(sr_ideal(cycle_complex(3)), s)) == expected


@pytest.mark.parametrize("s,expected", [(1, 3), (2, 5)])
def test_square_powers(square, s, expected):
    assert regularity(power(sr_ideal(square), s)) == expected


def test_small_edge_ideals(triangle_edges, remark):
    assert regularity(triangle_edges) == 2
    assert regularity(remark) == 3


def test_regularity_does_not_depend_on_characteristic_here(square):
    I = power(sr_ideal(square), 2)
    assert regularity(I, FieldSpec.rational()) == regularity(I) == regularity(I, FieldSpec.prime(3))


def test_zero_and_unit_ideals():
    cert = reg_takayama(MonomialIdeal.zero(3))
    assert (cert.reg_module, cert.reg_ideal) == (0, 1)
    with pytest.raises(IdealError):
        reg_takayama(MonomialIdeal.unit(3))
    with pytest.raises(IdealError):
        gamma_bound(MonomialIdeal.zero(3))


def test_box_guard():
    with pytest.raises(GuardLimitError) as info:
        reg_takayama(minimalize(2, [(2, 0), (0, 2)]), box_limit=3)
    assert info.value.estimate == 4
    assert info.value.limit == 3


def test_links_formula(square):
    assert reg_squarefree_links(square) == 2
    assert reg_squarefree_links(cycle_complex(3)) == 2
    with pytest.raises(ComplexError):
        reg_squarefree_links(SimplicialComplex.void(2))


@pytest.mark.parametrize("gens", [
    [(2, 1, 0), (0, 2, 1), (1, 0, 2)],
    [(3, 0), (1, 1), (0, 2)],
    [(2, 2, 0), (0, 1, 1)],
    [(1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1)],
])
def test_polarization_oracle_agrees(gens):
    I = minimalize(len(gens[0]), gens)
    assert reg_takayama(I).reg_module == reg_polarization_oracle(I)


def test_polarization_oracle_guard():
    I = minimalize(2, [(3, 3)])
    with pytest.raises(GuardLimitError):
        reg_polarization_oracle(I, vertex_limit=5)


def test_witnesses_recheck(square):
    I = power(sr_ideal(square), 2)
    cert = reg_takayama(I)
    assert cert.witnesses
    for w in cert.witnesses:
        assert verify_witness(I, w, cert.reg_module)
        assert witness_support_property(I, w) is None
        assert all(aj < max(rj, 1) for aj, rj in zip(w.a, cert.gamma_box))


def test_tampered_witness_is_rejected(square):
    I = power(sr_ideal(square), 2)
    cert = reg_takayama(I)
    w = cert.witnesses[0]
    assert not verify_witness(I, Witness(a=w.a, i=w.i + 1, face=w.face), cert.reg_module)


def test_certificate_is_independent_of_jobs(square):
    I = power(sr_ideal(square), 2)
    assert reg_takayama(I, jobs=1).to_payload() == reg_takayama(I, jobs=2).to_payload()


def test_box_stability(remark, square):
    first, second = box_stability(remark)
    assert first == second
    first, second = box_stability(power(sr_ideal(square), 2))
    assert first == second


def test_restriction(remark, triangle_edges):
    assert restrict_ideal(remark, [0, 1, 2]) == minimalize(5, [(1, 1, 0, 0, 0), (1, 0, 1, 0, 0), (0, 1, 1, 0, 0)])
    assert reg_restriction_in(remark, 2) == (3, 3)
    smaller, larger = reg_restriction_in(triangle_edges, 0)
    assert smaller <= larger
