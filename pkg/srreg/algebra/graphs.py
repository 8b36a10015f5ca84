"""Simple graphs, edge ideals and the small-graph enumerator."""

import logging
from itertools import combinations, permutations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Literal, Optional, Tuple, Union

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field

from srreg.algebra.complexes import (
    SimplicialComplex,
    cycle_girth,
    faces_by_dimension,
    is_face,
    mask_of,
    sr_complex,
    vertices_of,
)
from srreg.algebra.monomials import MonomialIdeal, minimalize
from srreg.config import ENUMERATION_MAX_N
from srreg.errors import GraphError, GuardLimitError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


class Graph:
    """A simple graph on vertices 0..n-1."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: FrozenSet[Edge]):
        self.n = n
        self.edges = edges

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Graph":
        """Build a graph, rejecting loops and out-of-range vertices."""
        normalized = set()
        for edge in edges:
            u, v = tuple(edge)
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {(u, v)} has a vertex outside [0, {n})")
            normalized.add((min(u, v), max(u, v)))
        return cls(n, frozenset(normalized))

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def adjacency(self) -> Dict[int, List[int]]:
        adj: Dict[int, List[int]] = {v: [] for v in range(self.n)}
        for u, v in self.sorted_edges():
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(self.n))
        G.add_edges_from(self.edges)
        return G

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __getstate__(self):
        return (self.n, self.edges)

    def __setstate__(self, state):
        self.n, self.edges = state

    def __repr__(self) -> str:
        body = ",".join(f"{u + 1}{v + 1}" if self.n < 10 else f"{u + 1}-{v + 1}" for u, v in self.sorted_edges())
        return f"Graph(n={self.n}, [{body}])"


def _check_vertices(G: Graph, U: Iterable[int]) -> FrozenSet[int]:
    U = frozenset(U)
    bad = [u for u in U if not 0 <= u < G.n]
    if bad:
        raise GraphError(f"vertices {sorted(bad)} outside [0, {G.n})")
    return U


def edge_ideal(G: Graph) -> MonomialIdeal:
    """I(G) = (x_i x_j : ij an edge)."""
    if not G.edges:
        raise GraphError("the edgeless graph has the zero edge ideal")
    gens = []
    for u, v in G.sorted_edges():
        e = [0] * G.n
        e[u] = e[v] = 1
        gens.append(tuple(e))
    return minimalize(G.n, gens)


def graph_from_ideal(I: MonomialIdeal) -> Graph:
    """Inverse of ``edge_ideal`` for squarefree quadratic ideals."""
    if not I.gens or any(sum(g) != 2 or max(g) != 1 for g in I.gens):
        raise GraphError(f"{I!r} is not the edge ideal of a graph")
    return Graph.from_edges(I.n, (tuple(i for i, gi in enumerate(g) if gi) for g in I.gens))


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(n), 2)))


def complement(G: Graph) -> Graph:
    return Graph(G.n, frozenset(e for e in combinations(range(G.n), 2) if e not in G.edges))


def neighborhood(G: Graph, U: Iterable[int]) -> FrozenSet[int]:
    """N(U): every vertex adjacent to some vertex of U."""
    U = _check_vertices(G, U)
    out = set()
    for u, v in G.edges:
        if u in U:
            out.add(v)
        if v in U:
            out.add(u)
    return frozenset(out)


def closed_neighborhood(G: Graph, U: Iterable[int]) -> FrozenSet[int]:
    U = _check_vertices(G, U)
    return U | neighborhood(G, U)


def is_independent(G: Graph, F: Iterable[int]) -> bool:
    F = _check_vertices(G, F)
    return not any(u in F and v in F for u, v in G.edges)


def independence_number(G: Graph) -> int:
    """α(G), as the clique number of the complement."""
    if G.n == 0:
        return 0
    return max(len(c) for c in nx.find_cliques(nx.complement(G.to_networkx())))


def induced_matching_number(G: Graph) -> int:
    """μ(G) by backtracking; picking an edge blocks the closed neighbourhood of both ends."""
    edges = G.sorted_edges()
    closed = {v: mask_of(closed_neighborhood(G, [v])) for v in range(G.n)}
    best = 0

    def extend(start: int, blocked: int, size: int) -> None:
        nonlocal best
        best = max(best, size)
        if size + (len(edges) - start) <= best:
            return
        for k in range(start, len(edges)):
            u, v = edges[k]
            if blocked >> u & 1 or blocked >> v & 1:
                continue
            extend(k + 1, blocked | closed[u] | closed[v], size + 1)

    extend(0, 0, 0)
    return best


def graph_girth(G: Graph) -> Union[int, float]:
    return cycle_girth(G.adjacency())


def independence_complex(G: Graph) -> SimplicialComplex:
    """The complex of independent sets; equals sr_complex(edge_ideal(G))."""
    if not G.edges:
        return SimplicialComplex(G.n, ((1 << G.n) - 1,))
    return sr_complex(edge_ideal(G))


def complement_graph_of_complex(delta: SimplicialComplex) -> Graph:
    """The graph whose edges are the vertex pairs that are not faces of Δ."""
    return Graph(delta.n, frozenset(
        (u, v) for u, v in combinations(range(delta.n), 2) if not is_face(delta, (u, v))
    ))


def skeleton_graph(delta: SimplicialComplex) -> Graph:
    """The 1-skeleton of Δ as a graph."""
    edges = faces_by_dimension(delta).get(1, []) if not delta.is_void else []
    return Graph(delta.n, frozenset(vertices_of(e) for e in edges))


GirthClass = Literal["3", "4", "5+", "inf"]


def girth_class_of(value: Union[int, float]) -> str:
    if value == 3:
        return "3"
    if value == 4:
        return "4"
    if value == float("inf"):
        return "inf"
    return "5+"


class GraphFilter(BaseModel):
    """Predicates applied by ``enumerate_graphs``; defaults accept everything."""

    model_config = ConfigDict(frozen=True)

    min_degree: int = Field(default=0, ge=0)
    min_edges: int = Field(default=0, ge=0)
    connected: bool = False
    non_bipartite: bool = False
    min_independence: Optional[int] = None
    max_independence: Optional[int] = None
    girth: Optional[GirthClass] = None

    def accepts(self, G: Graph) -> bool:
        if len(G.edges) < self.min_edges:
            return False
        if self.min_degree and any(G.degree(v) < self.min_degree for v in range(G.n)):
            return False
        if self.connected and (G.n == 0 or not nx.is_connected(G.to_networkx())):
            return False
        if self.non_bipartite and nx.is_bipartite(G.to_networkx()):
            return False
        if self.min_independence is not None or self.max_independence is not None:
            alpha = independence_number(G)
            if self.min_independence is not None and alpha < self.min_independence:
                return False
            if self.max_independence is not None and alpha > self.max_independence:
                return False
        if self.girth is not None and girth_class_of(graph_girth(G)) != self.girth:
            return False
        return True


def canonical_form(G: Graph) -> int:
    """Minimum adjacency bitstring over all vertex permutations."""
    pairs = list(combinations(range(G.n), 2))
    index = {p: k for k, p in enumerate(pairs)}
    best = None
    for perm in permutations(range(G.n)):
        code = 0
        for u, v in G.edges:
            a, b = perm[u], perm[v]
            code |= 1 << index[(min(a, b), max(a, b))]
        if best is None or code < best:
            best = code
    return best


def enumerate_graphs(
    n: int,
    filters: Optional[GraphFilter] = None,
    dedupe: bool = False,
) -> Iterator[Graph]:
    """Stream every labeled graph on n vertices accepted by ``filters``.

    Args:
        n: Vertex count, at most ``ENUMERATION_MAX_N``.
        filters: Predicates to apply; ``None`` accepts all graphs.
        dedupe: Keep only the first graph of each isomorphism class.

    Yields:
        Graphs in increasing order of their edge-subset bitmask.
    """
    if n > ENUMERATION_MAX_N:
        raise GuardLimitError(
            f"graph enumeration is limited to n <= {ENUMERATION_MAX_N}, got {n}",
            estimate=2 ** (n * (n - 1) // 2),
            limit=2 ** (ENUMERATION_MAX_N * (ENUMERATION_MAX_N - 1) // 2),
        )
    filters = filters or GraphFilter()
    pairs = list(combinations(range(n), 2))
    seen = set()
    emitted = 0
    for bits in range(1 << len(pairs)):
        G = Graph(n, frozenset(p for k, p in enumerate(pairs) if bits >> k & 1))
        if not filters.accepts(G):
            continue
        if dedupe:
            code = canonical_form(G)
            if code in seen:
                continue
            seen.add(code)
        emitted += 1
        yield G
    logger.debug(f"Enumerated {emitted} graphs on {n} vertices")


def are_isomorphic(G: Graph, H: Graph) -> bool:
    return G.n == H.n and nx.is_isomorphic(G.to_networkx(), H.to_networkx())
