"""JSON and text codecs for ideals, complexes and graphs.

External formats are 1-indexed; everything returned to Python is 0-indexed.
"""

import json
import logging
from typing import Any, Dict, List, Literal, Optional, Union

import aiofiles
from pydantic import BaseModel, ConfigDict, ValidationError

from srreg.algebra.complexes import SimplicialComplex
from srreg.algebra.graphs import Graph
from srreg.algebra.monomials import MonomialIdeal, format_monomial, minimalize, parse_monomial
from srreg.errors import InputFormatError

logger = logging.getLogger(__name__)

MonomialSpec = Union[str, List[int]]


class IdealPayload(BaseModel):
    """``{"type": "ideal", "n": 3, "generators": [[1,1,0], "x2*x3"]}``"""

    model_config = ConfigDict(extra="forbid")

    type: Literal["ideal"] = "ideal"
    n: int
    generators: List[MonomialSpec]

    def to_ideal(self) -> MonomialIdeal:
        return minimalize(self.n, (parse_exponent(g, self.n) for g in self.generators))

    @classmethod
    def from_ideal(cls, I: MonomialIdeal) -> "IdealPayload":
        return cls(n=I.n, generators=[list(g) for g in I.gens])


class ComplexPayload(BaseModel):
    """``{"type": "complex", "n": 6, "facets": [[1,2],[2,3]]}``; ``[]`` is the empty facet."""

    model_config = ConfigDict(extra="forbid")

    type: Literal["complex"] = "complex"
    n: int
    facets: List[List[int]]

    def to_complex(self) -> SimplicialComplex:
        for facet in self.facets:
            if any(not 1 <= v <= self.n for v in facet):
                raise InputFormatError(f"facet {facet} has a vertex outside 1..{self.n}")
        return SimplicialComplex.from_facets(self.n, ([v - 1 for v in f] for f in self.facets))

    @classmethod
    def from_complex(cls, delta: SimplicialComplex) -> "ComplexPayload":
        return cls(n=delta.n, facets=[[v + 1 for v in f] for f in delta.facet_sets()])


class GraphPayload(BaseModel):
    """``{"type": "graph", "n": 5, "edges": [[1,2],[1,3]]}``"""

    model_config = ConfigDict(extra="forbid")

    type: Literal["graph"] = "graph"
    n: int
    edges: List[List[int]]

    def to_graph(self) -> Graph:
        for edge in self.edges:
            if len(edge) != 2 or any(not 1 <= v <= self.n for v in edge):
                raise InputFormatError(f"edge {edge} is not a pair of vertices in 1..{self.n}")
        return Graph.from_edges(self.n, ((u - 1, v - 1) for u, v in self.edges))

    @classmethod
    def from_graph(cls, G: Graph) -> "GraphPayload":
        return cls(n=G.n, edges=[[u + 1, v + 1] for u, v in G.sorted_edges()])


Payload = Union[IdealPayload, ComplexPayload, GraphPayload]
InputObject = Union[MonomialIdeal, SimplicialComplex, Graph]


def parse_exponent(spec: MonomialSpec, n: int) -> tuple:
    """A monomial given as ``"x1^2*x3"`` or as an exponent array."""
    if isinstance(spec, str):
        return parse_monomial(spec, n)
    if len(spec) != n or any((not isinstance(v, int)) or v < 0 for v in spec):
        raise InputFormatError(f"exponent {spec} is not a length-{n} vector of nonnegative ints")
    return tuple(spec)


def payload_of(obj: InputObject) -> Payload:
    if isinstance(obj, MonomialIdeal):
        return IdealPayload.from_ideal(obj)
    if isinstance(obj, SimplicialComplex):
        return ComplexPayload.from_complex(obj)
    if isinstance(obj, Graph):
        return GraphPayload.from_graph(obj)
    raise TypeError(f"no payload for {type(obj).__name__}")


def to_json_dict(obj: InputObject) -> Dict[str, Any]:
    return payload_of(obj).model_dump()


def parse_payload(data: Dict[str, Any]) -> InputObject:
    """Decode a JSON object, dispatching on ``type`` or on the keys present."""
    if not isinstance(data, dict):
        raise InputFormatError("expected a JSON object")
    kind = data.get("type")
    if kind is None:
        kind = "ideal" if "generators" in data else "complex" if "facets" in data else "graph" if "edges" in data else None
    models = {"ideal": IdealPayload, "complex": ComplexPayload, "graph": GraphPayload}
    if kind not in models:
        raise InputFormatError(f"cannot tell what {sorted(data)} describes")
    try:
        payload = models[kind].model_validate(data)
    except ValidationError as e:
        raise InputFormatError(f"invalid {kind} payload: {e}") from e
    if isinstance(payload, IdealPayload):
        return payload.to_ideal()
    if isinstance(payload, ComplexPayload):
        return payload.to_complex()
    return payload.to_graph()


def parse_complex_text(text: str, n: Optional[int] = None) -> SimplicialComplex:
    """One facet per line, vertices separated by spaces or commas; ``{}`` is the empty facet.

    Blank lines and ``#`` comments are ignored. ``n`` defaults to the
    largest vertex mentioned.
    """
    facets: List[List[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line == "{}":
            facets.append([])
            continue
        try:
            facets.append([int(tok) for tok in line.replace(",", " ").strip("{}").split()])
        except ValueError as e:
            raise InputFormatError(f"line {lineno}: cannot parse facet {raw!r}") from e
    if not facets:
        raise InputFormatError("no facets given")
    n = n if n is not None else max((v for f in facets for v in f), default=0)
    return ComplexPayload(n=n, facets=facets).to_complex()


def format_complex_text(delta: SimplicialComplex) -> str:
    lines = []
    for facet in delta.facet_sets():
        lines.append(" ".join(str(v + 1) for v in facet) if facet else "{}")
    return "\n".join(lines)


def format_ideal_text(I: MonomialIdeal) -> str:
    if I.is_zero:
        return "(0)"
    return "(" + ", ".join(format_monomial(g) for g in I.gens) + ")"


def parse_input_text(text: str) -> InputObject:
    """JSON object if the text parses as one, otherwise the text complex format."""
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError:
            data = None
        if data:
            return parse_payload(data)
    return parse_complex_text(text)


async def load_input(path: str) -> InputObject:
    """Read an ideal, complex or graph from a JSON file or a text complex file."""
    try:
        async with aiofiles.open(path, "r") as file:
            text = await file.read()
    except OSError as e:
        raise InputFormatError(f"cannot read {path}: {e}") from e
    logger.debug(f"Loaded {len(text)} bytes from {path}")
    return parse_input_text(text)

