"""Built-in instances: named complexes, ideals and graphs, plus seeded random ones."""

import logging
from itertools import combinations
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict

from srreg.algebra.complexes import SimplicialComplex, cycle_complex, dim, girth
from srreg.algebra.graphs import Graph, girth_class_of
from srreg.algebra.monomials import MonomialIdeal, minimalize

logger = logging.getLogger(__name__)


def _complex(n: int, facets: str) -> SimplicialComplex:
    """Facets written as 1-indexed digit strings, e.g. ``"12 23 4"``."""
    return SimplicialComplex.from_facets(n, ([int(c) - 1 for c in f] for f in facets.split()))


def _graph(n: int, edges: str) -> Graph:
    return Graph.from_edges(n, ((int(e[0]) - 1, int(e[1]) - 1) for e in edges.split()))


def _ideal(n: int, gens: str) -> MonomialIdeal:
    out = []
    for g in gens.split():
        e = [0] * n
        for c in g:
            e[int(c) - 1] += 1
        out.append(tuple(e))
    return minimalize(n, out)


def intro_complex() -> SimplicialComplex:
    """Six vertices, facets 12 23 34 14 45 56 26; girth 4."""
    return _complex(6, "12 23 34 14 45 56 26")


def intro_extras() -> List[tuple]:
    """f1 = x2x3x4x5x6, f2 = x1x2x3x4x6, f3 = x1x2x3x4x5.

    Three of the sixteen minimal generators of the third symbolic power of
    ``sr_ideal(intro_complex())`` that lie outside its third power; every
    ideal in the chain I^3 + (f1, .., fk) has regularity 7.
    """
    return [(0, 1, 1, 1, 1, 1), (1, 1, 1, 1, 0, 1), (1, 1, 1, 1, 1, 0)]


def remark_ideal() -> MonomialIdeal:
    """(x1x2, x1x3, x2x3, x3x4, x4x5); its third powers separate at a = (1,1,1,1,0)."""
    return _ideal(5, "12 13 23 34 45")


def bull_graph() -> Graph:
    return _graph(5, "12 13 23 24 35")


def small_graph_classes() -> List["GraphEntry"]:
    """The non-bipartite graphs on five vertices with α > 2, one per isomorphism class."""
    return [
        GraphEntry(name="bull", graph=bull_graph()),
        GraphEntry(name="cricket", graph=_graph(5, "12 13 23 14 15")),
        GraphEntry(name="triangle+14,15,25", graph=_graph(5, "12 13 23 14 15 25")),
        GraphEntry(name="triangle+14,24,15,25", graph=_graph(5, "12 13 23 14 24 15 25")),
    ]


class CorpusEntry(BaseModel):
    """A named one-dimensional complex with its girth class."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    complex: SimplicialComplex
    girth_class: str

    @classmethod
    def of(cls, name: str, delta: SimplicialComplex) -> "CorpusEntry":
        return cls(name=name, complex=delta, girth_class=girth_class_of(girth(delta)))


class GraphEntry(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    graph: Graph


def named_complexes(include_isolated: bool = True) -> List[CorpusEntry]:
    entries = [
        CorpusEntry.of("triangle", cycle_complex(3)),
        CorpusEntry.of("triangle+pendants", _complex(5, "12 23 13 34 45")),
        CorpusEntry.of("K4-skeleton", _complex(4, "12 13 14 23 24 34")),
        CorpusEntry.of("intro", intro_complex()),
        CorpusEntry.of("C4", cycle_complex(4)),
        CorpusEntry.of("K23", _complex(5, "14 15 24 25 34 35")),
        CorpusEntry.of("C4+pendant", _complex(5, "12 23 34 14 45")),
        CorpusEntry.of("C5", cycle_complex(5)),
        CorpusEntry.of("C6", cycle_complex(6)),
        CorpusEntry.of("C7", cycle_complex(7)),
        CorpusEntry.of("C5+pendant", _complex(6, "12 23 34 45 15 56")),
        CorpusEntry.of("P4", _complex(4, "12 23 34")),
        CorpusEntry.of("star", _complex(4, "12 13 14")),
        CorpusEntry.of("P3+P2", _complex(5, "12 23 45")),
    ]
    if include_isolated:
        entries.append(CorpusEntry.of("triangle+isolated", _complex(4, "12 23 13 4")))
        entries.append(CorpusEntry.of("C5+isolated", _complex(6, "12 23 34 45 15 6")))
    return entries


def large_cycles() -> List[CorpusEntry]:
    return [CorpusEntry.of("C8", cycle_complex(8))]


def random_complex(n: int, rng: np.random.Generator, edge_probability: float = 0.5,
                   include_isolated: bool = True) -> Optional[SimplicialComplex]:
    """A random complex of dimension exactly one, or None if the draw has no edge."""
    edges = [e for e in combinations(range(n), 2) if rng.random() < edge_probability]
    if not edges:
        return None
    covered = {v for e in edges for v in e}
    isolated = [(v,) for v in range(n) if v not in covered]
    if isolated and not include_isolated:
        return None
    return SimplicialComplex.from_facets(n, edges + isolated)


def random_complexes(per_class: int, seed: int, n_range=(5, 7),
                     include_isolated: bool = True, max_draws: int = 5000) -> List[CorpusEntry]:
    """Seeded random one-dimensional complexes, up to ``per_class`` per girth class."""
    rng = np.random.default_rng(seed)
    wanted = {"3": per_class, "4": per_class, "5+": per_class, "inf": per_class}
    out: List[CorpusEntry] = []
    for draw in range(max_draws):
        if not any(wanted.values()):
            break
        n = int(rng.integers(n_range[0], n_range[1] + 1))
        p = float(rng.uniform(0.2, 0.6))
        delta = random_complex(n, rng, p, include_isolated)
        if delta is None or dim(delta) != 1:
            continue
        entry = CorpusEntry.of(f"random-{seed}-{draw}", delta)
        if wanted[entry.girth_class]:
            wanted[entry.girth_class] -= 1
            out.append(entry)
    logger.debug(f"Drew {len(out)} random complexes with seed {seed}")
    return out


def theorem_corpus(seed: int = 0, random_per_class: int = 1, include_isolated: bool = True) -> List[CorpusEntry]:
    """Named complexes plus seeded random ones, at least three per finite girth class."""
    return named_complexes(include_isolated) + random_complexes(random_per_class, seed, include_isolated=include_isolated)


def random_graph(n: int, rng: np.random.Generator, edge_probability: float = 0.5) -> Graph:
    return Graph.from_edges(n, (e for e in combinations(range(n), 2) if rng.random() < edge_probability))


def random_ideal(n: int, gens: int, max_exponent: int, rng: np.random.Generator) -> MonomialIdeal:
    """A random nonzero proper monomial ideal."""
    while True:
        raw = [tuple(int(x) for x in rng.integers(0, max_exponent + 1, size=n)) for _ in range(gens)]
        I = minimalize(n, raw)
        if I.is_proper_nonzero:
            return I


def random_squarefree_ideal(n: int, gens: int, rng: np.random.Generator) -> MonomialIdeal:
    return random_ideal(n, gens, 1, rng)


def lemma_corpus(max_n: int = 5, include_intro: bool = True) -> List[CorpusEntry]:
    """Named complexes small enough for exhaustive box checks, plus the intro complex."""
    entries = [e for e in named_complexes(include_isolated=True) if e.complex.n <= max_n]
    if include_intro and all(e.name != "intro" for e in entries):
        entries.append(CorpusEntry.of("intro", intro_complex()))
    return entries
