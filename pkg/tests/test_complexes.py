import math

import pytest

from srreg.algebra.complexes import (
    ComplexKind,
    SimplicialComplex,
    complex_from_faces,
    cycle_complex,
    degree_complex,
    degree_complex_direct,
    dim,
    f_vector,
    faces,
    girth,
    is_cone,
    is_face,
    is_subcomplex,
    link,
    restrict,
    simplex,
    skeleton,
    sr_complex,
    sr_ideal,
    vertices,
)
from srreg.algebra.monomials import MonomialIdeal, minimalize
from srreg.errors import ComplexError, DimensionMismatchError, IdealError
from srreg.harness.corpus import intro_complex


def test_kinds():
    assert SimplicialComplex.void(3).kind == ComplexKind.VOID
    assert SimplicialComplex.irrelevant(3).kind == ComplexKind.IRRELEVANT
    assert cycle_complex(3).kind == ComplexKind.ORDINARY


def test_from_facets_drops_non_maximal_faces():
    delta = SimplicialComplex.from_facets(3, [(0,), (0, 1), (1, 2), (2,)])
    assert delta.facet_sets() == [(0, 1), (1, 2)]
    with pytest.raises(ComplexError):
        SimplicialComplex.from_facets(2, [(0, 2)])


def test_dimension_and_f_vector(square):
    assert dim(square) == 1
    assert dim(SimplicialComplex.irrelevant(2)) == -1
    assert f_vector(square) == {-1: 1, 0: 4, 1: 4}
    with pytest.raises(ComplexError):
        dim(SimplicialComplex.void(2))


def test_sr_ideal_of_square(square):
    assert sr_ideal(square).gens == ((1, 0, 1, 0), (0, 1, 0, 1))


def test_sr_ideal_of_hollow_triangle():
    assert sr_ideal(cycle_complex(3)).gens == ((1, 1, 1),)


def test_sr_ideal_missing_vertex_is_a_variable():
    delta = SimplicialComplex.from_facets(3, [(0, 1)])
    assert sr_ideal(delta).gens == ((0, 0, 1),)


def test_sr_ideal_special_complexes():
    assert sr_ideal(SimplicialComplex.irrelevant(2)).gens == ((1, 0), (0, 1))
    assert sr_ideal(simplex(3)).is_zero
    with pytest.raises(ComplexError):
        sr_ideal(SimplicialComplex.void(2))


def test_sr_round_trip(intro):
    assert sr_complex(sr_ideal(intro)) == intro
    assert sr_complex(MonomialIdeal.unit(3)).is_void
    assert sr_complex(MonomialIdeal.zero(3)) == simplex(3)
    with pytest.raises(IdealError):
        sr_complex(minimalize(2, [(2, 0)]))


def test_link_and_cone(square):
    assert link(square, [0]) == SimplicialComplex.from_facets(4, [[1], [3]])
    assert link(square, []) == square
    with pytest.raises(ComplexError):
        link(square, [0, 2])
    assert is_cone(simplex(3), 0)
    assert not is_cone(square, 0)


def test_restrict_and_skeleton(square):
    assert restrict(square, [0, 1, 2]) == SimplicialComplex.from_facets(4, [(0, 1), (1, 2)])
    assert skeleton(simplex(3), 1) == cycle_complex(3)
    assert is_subcomplex(skeleton(simplex(3), 1), simplex(3))
    assert is_face(square, (0, 1))
    assert not is_face(square, (0, 2))
    assert vertices(SimplicialComplex.from_facets(5, [(1, 3)])) == (1, 3)


def test_girth():
    assert girth(cycle_complex(5)) == 5
    assert girth(intro_complex()) == 4
    assert girth(SimplicialComplex.from_facets(4, [(0, 1), (1, 2), (2, 3)])) == math.inf
    assert girth(SimplicialComplex.from_facets(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])) == 3
    with pytest.raises(ComplexError):
        girth(simplex(3))


def test_degree_complex_at_zero_is_sr_complex(intro):
    I = sr_ideal(intro)
    assert degree_complex(I, (0,) * 6) == intro


@pytest.mark.parametrize("a", [(0, 0, 0, 0, 0), (1, 1, 1, 1, 0), (2, 0, 1, 0, 1), (0, 3, 0, 2, 0), (1, 1, 0, 0, 1)])
def test_degree_complex_routes_agree(remark, a):
    assert degree_complex(remark, a) == degree_complex_direct(remark, a)


def test_degree_complex_of_member_is_void():
    I = minimalize(2, [(1, 1)])
    assert degree_complex(I, (1, 1)).is_void
    assert degree_complex_direct(I, (1, 1)).is_void


def test_degree_complex_rejects_bad_length(remark):
    with pytest.raises(DimensionMismatchError):
        degree_complex(remark, (1, 1))


def test_faces_of_a_path():
    path = complex_from_faces(3, [[0, 1], [1, 2], [1]])
    assert faces(path) == [0b000, 0b001, 0b010, 0b100, 0b011, 0b110]
    assert faces(SimplicialComplex.void(2)) == []
