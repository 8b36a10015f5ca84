import asyncio

import pytest

from srreg.algebra.complexes import SimplicialComplex
from srreg.algebra.graphs import Graph
from srreg.algebra.monomials import MonomialIdeal, minimalize
from srreg.errors import InputFormatError
from srreg.utils.codecs import (
    format_complex_text,
    format_ideal_text,
    load_input,
    parse_complex_text,
    parse_input_text,
    parse_payload,
    to_json_dict,
)


def test_ideal_payload_accepts_both_monomial_spellings():
    I = parse_payload({"type": "ideal", "n": 3, "generators": [[1, 1, 0], "x2*x3", "x1*x2*x3"]})
    assert I == minimalize(3, [(1, 1, 0), (0, 1, 1)])


def test_payload_type_is_inferred_from_keys():
    assert isinstance(parse_payload({"n": 2, "generators": ["x1"]}), MonomialIdeal)
    assert parse_payload({"n": 3, "facets": [[1, 2], [3]]}) == SimplicialComplex.from_facets(3, [(0, 1), (2,)])
    assert parse_payload({"n": 3, "edges": [[1, 3]]}) == Graph.from_edges(3, [(0, 2)])


@pytest.mark.parametrize("data", [
    {"n": 2},
    {"type": "ideal", "n": 2, "generators": [[1, 0, 0]]},
    {"type": "ideal", "n": 2, "generators": ["x3"]},
    {"type": "complex", "n": 2, "facets": [[0, 1]]},
    {"type": "graph", "n": 3, "edges": [[1, 2, 3]]},
    {"type": "graph", "n": 3, "edges": [[1, 2]], "weights": [1]},
    [1, 2],
])
def test_bad_payloads(data):
    with pytest.raises(InputFormatError):
        parse_payload(data)


def test_json_dicts_are_one_indexed(bull):
    assert to_json_dict(bull) == {"type": "graph", "n": 5, "edges": [[1, 2], [1, 3], [2, 3], [2, 4], [3, 5]]}
    assert to_json_dict(minimalize(2, [(1, 1)])) == {"type": "ideal", "n": 2, "generators": [[1, 1]]}
    assert parse_payload(to_json_dict(bull)) == bull


def test_complex_text():
    delta = parse_complex_text("# square\n1 2\n2,3\n\n3 4\n1 4\n")
    assert delta.n == 4
    assert format_complex_text(delta) == "1 2\n1 4\n2 3\n3 4"
    assert parse_complex_text("{}\n", n=2) == SimplicialComplex.irrelevant(2)
    assert parse_complex_text("1 2\n", n=4).n == 4


@pytest.mark.parametrize("text", ["", "# nothing\n", "1 a\n", "1 2\n", "0 1\n"])
def test_complex_text_errors(text):
    with pytest.raises(InputFormatError):
        parse_complex_text(text, n=1 if text == "1 2\n" else None)


def test_ideal_text():
    assert format_ideal_text(minimalize(2, [(2, 0), (1, 1)])) == "(x1^2, x1*x2)"
    assert format_ideal_text(MonomialIdeal.zero(2)) == "(0)"
    assert format_ideal_text(MonomialIdeal.unit(2)) == "(1)"


def test_input_text_dispatch():
    assert isinstance(parse_input_text('{"n": 2, "edges": [[1, 2]]}'), Graph)
    assert isinstance(parse_input_text("1 2\n2 3\n"), SimplicialComplex)
    with pytest.raises(InputFormatError):
        parse_input_text("{bad json")


def test_load_input(tmp_path):
    path = tmp_path / "ideal.json"
    path.write_text('{"type": "ideal", "n": 2, "generators": ["x1^2", "x2"]}')
    assert asyncio.run(load_input(str(path))) == minimalize(2, [(2, 0), (0, 1)])
    with pytest.raises(InputFormatError):
        asyncio.run(load_input(str(tmp_path / "missing.json")))
