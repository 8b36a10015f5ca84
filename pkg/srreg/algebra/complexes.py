"""Simplicial complexes and the Stanley-Reisner correspondence.

Faces are stored as int bitmasks over 0-indexed vertices; only facets are
kept and faces are enumerated on demand.

The void complex (no faces) and the irrelevant complex {∅} are different
values. Wherever a degree complex is described as "the empty complex"
while x^a is outside the ideal, that means the irrelevant complex: ∅ is a
face as soon as x^a is not in I.
"""

import logging
import math
from collections import deque
from enum import Enum
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from srreg.algebra.monomials import (
    MonomialIdeal,
    minimalize,
    radical_colon,
)
from srreg.errors import ComplexError, DimensionMismatchError, IdealError

logger = logging.getLogger(__name__)

INFINITY = math.inf


class ComplexKind(str, Enum):
    VOID = "void"
    IRRELEVANT = "irrelevant"
    ORDINARY = "ordinary"


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def vertices_of(mask: int) -> Tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def _antichain(masks: Iterable[int]) -> Tuple[int, ...]:
    ordered = sorted(set(masks), key=lambda m: (-popcount(m), m))
    kept: List[int] = []
    for m in ordered:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return tuple(sorted(kept, key=lambda m: (popcount(m), vertices_of(m))))


class SimplicialComplex:
    """A simplicial complex on vertices 0..n-1 stored by its facets."""

    __slots__ = ("n", "facets")

    def __init__(self, n: int, facets: Tuple[int, ...]):
        self.n = n
        self.facets = facets

    @classmethod
    def from_facets(cls, n: int, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        masks = []
        for facet in facets:
            facet = tuple(facet)
            if any(not 0 <= v < n for v in facet):
                raise ComplexError(f"facet {facet} has a vertex outside [0, {n})")
            masks.append(mask_of(facet))
        return cls(n, _antichain(masks))

    @classmethod
    def void(cls, n: int) -> "SimplicialComplex":
        return cls(n, ())

    @classmethod
    def irrelevant(cls, n: int) -> "SimplicialComplex":
        return cls(n, (0,))

    @property
    def kind(self) -> ComplexKind:
        if not self.facets:
            return ComplexKind.VOID
        if self.facets == (0,):
            return ComplexKind.IRRELEVANT
        return ComplexKind.ORDINARY

    @property
    def is_void(self) -> bool:
        return not self.facets

    def facet_sets(self) -> List[Tuple[int, ...]]:
        return [vertices_of(m) for m in self.facets]

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.n == other.n and self.facets == other.facets

    def __hash__(self) -> int:
        return hash((self.n, self.facets))

    def __getstate__(self):
        return (self.n, self.facets)

    def __setstate__(self, state):
        self.n, self.facets = state

    def __repr__(self) -> str:
        if self.is_void:
            return f"SimplicialComplex(n={self.n}, void)"
        body = ", ".join("{" + ",".join(str(v + 1) for v in f) + "}" for f in self.facet_sets())
        return f"SimplicialComplex(n={self.n}, [{body}])"


def complex_from_faces(n: int, faces: Iterable[Iterable[int]]) -> SimplicialComplex:
    return SimplicialComplex.from_facets(n, faces)


def simplex(n: int, vertices: Iterable[int] = None) -> SimplicialComplex:
    vertices = range(n) if vertices is None else vertices
    return SimplicialComplex(n, (mask_of(vertices),))


def cycle_complex(n: int) -> SimplicialComplex:
    """The n-cycle as a one-dimensional complex (n >= 3)."""
    if n < 3:
        raise ComplexError(f"a cycle needs at least 3 vertices, got {n}")
    return SimplicialComplex.from_facets(n, [(i, (i + 1) % n) for i in range(n)])


def faces(delta: SimplicialComplex) -> List[int]:
    """All faces as masks, sorted by size then vertex tuple."""
    seen = set()
    for facet in delta.facets:
        sub = facet
        while True:
            seen.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & facet
    return sorted(seen, key=lambda m: (popcount(m), vertices_of(m)))


def faces_by_dimension(delta: SimplicialComplex) -> Dict[int, List[int]]:
    out: Dict[int, List[int]] = {}
    for face in faces(delta):
        out.setdefault(popcount(face) - 1, []).append(face)
    return out


def f_vector(delta: SimplicialComplex) -> Dict[int, int]:
    return {d: len(fs) for d, fs in faces_by_dimension(delta).items()}


def vertices(delta: SimplicialComplex) -> Tuple[int, ...]:
    union = 0
    for facet in delta.facets:
        union |= facet
    return vertices_of(union)


def dim(delta: SimplicialComplex) -> int:
    """Dimension; -1 for {∅}. The void complex has no dimension."""
    if delta.is_void:
        raise ComplexError("the void complex has no dimension")
    return max(popcount(f) for f in delta.facets) - 1


def is_face(delta: SimplicialComplex, face: Union[int, Iterable[int]]) -> bool:
    mask = face if isinstance(face, int) else mask_of(face)
    return any(f & mask == mask for f in delta.facets)


def link(delta: SimplicialComplex, face: Union[int, Iterable[int]]) -> SimplicialComplex:
    """lk F = {G in Δ : F ∪ G in Δ, F ∩ G = ∅}."""
    mask = face if isinstance(face, int) else mask_of(face)
    if not is_face(delta, mask):
        raise ComplexError(f"{vertices_of(mask)} is not a face of {delta!r}")
    # facets containing F stay an antichain after removing F
    return SimplicialComplex(
        delta.n,
        tuple(sorted((f & ~mask for f in delta.facets if f & mask == mask),
                     key=lambda m: (popcount(m), vertices_of(m)))),
    )


def is_cone(delta: SimplicialComplex, v: int) -> bool:
    if delta.is_void:
        return False
    bit = 1 << v
    return all(f & bit for f in delta.facets)


def restrict(delta: SimplicialComplex, vertex_set: Iterable[int]) -> SimplicialComplex:
    """Δ_V = {F in Δ : F ⊆ V}."""
    if delta.is_void:
        return delta
    mask = mask_of(vertex_set)
    return SimplicialComplex(delta.n, _antichain(f & mask for f in delta.facets))


def skeleton(delta: SimplicialComplex, k: int) -> SimplicialComplex:
    if delta.is_void:
        return delta
    masks = []
    for f in delta.facets:
        verts = vertices_of(f)
        if len(verts) <= k + 1:
            masks.append(f)
        else:
            masks.extend(mask_of(c) for c in combinations(verts, k + 1))
    return SimplicialComplex(delta.n, _antichain(masks))


def is_subcomplex(delta: SimplicialComplex, gamma: SimplicialComplex) -> bool:
    """Δ ⊆ Γ."""
    return all(is_face(gamma, f) for f in delta.facets)


def sr_ideal(delta: SimplicialComplex) -> MonomialIdeal:
    """Stanley-Reisner ideal: generated by the minimal non-faces."""
    if delta.is_void:
        raise ComplexError("the void complex has no Stanley-Reisner ideal")
    n = delta.n
    present = 0
    for f in delta.facets:
        present |= f
    nonfaces = [1 << v for v in range(n) if not present & (1 << v)]
    level = [1 << v for v in range(n) if present & (1 << v)]
    face_set = set(level)
    while level:
        nxt = []
        for face in level:
            top = face.bit_length()
            for v in range(top, n):
                if not present & (1 << v):
                    continue
                cand = face | (1 << v)
                # every codimension-one subset must already be a face
                if not all((cand & ~(1 << u)) in face_set for u in vertices_of(cand) if u != v):
                    continue
                if is_face(delta, cand):
                    nxt.append(cand)
                else:
                    nonfaces.append(cand)
        face_set.update(nxt)
        level = nxt
    gens = [tuple(1 if m >> i & 1 else 0 for i in range(n)) for m in nonfaces]
    return minimalize(n, gens)


def _generator_masks(I: MonomialIdeal) -> Tuple[int, ...]:
    return tuple(mask_of(i for i, gi in enumerate(g) if gi) for g in I.gens)


@lru_cache(maxsize=65536)
def _facets_avoiding(n: int, gen_masks: Tuple[int, ...]) -> Tuple[int, ...]:
    """Maximal subsets of [n] containing no generator mask."""
    if not gen_masks:
        return ((1 << n) - 1,)
    if 0 in gen_masks:
        return ()
    facets: List[int] = []

    def admissible(face: int) -> bool:
        return not any(g & face == g for g in gen_masks)

    def extend(face: int, start: int) -> None:
        grew = False
        for v in range(start, n):
            cand = face | (1 << v)
            if admissible(cand):
                grew = True
                extend(cand, v + 1)
        if not grew:
            # a face that no later vertex extends is maximal unless an earlier one does
            if all(face >> v & 1 or not admissible(face | (1 << v)) for v in range(n)):
                facets.append(face)

    extend(0, 0)
    return _antichain(facets)


def sr_complex(I: MonomialIdeal) -> SimplicialComplex:
    """Δ(I) = {F : x_F not in I} for a squarefree ideal; the unit ideal gives the void complex."""
    if not I.is_squarefree:
        raise IdealError(f"Stanley-Reisner complex needs a squarefree ideal, got {I!r}")
    return SimplicialComplex(I.n, _facets_avoiding(I.n, _generator_masks(I)))


def degree_complex(I: MonomialIdeal, a: Sequence[int]) -> SimplicialComplex:
    """Δ_a(I), computed as the complex whose Stanley-Reisner ideal is sqrt(I : x^a)."""
    if len(a) != I.n:
        raise DimensionMismatchError(f"exponent length {len(a)} does not match n={I.n}")
    return sr_complex(radical_colon(I, a))


def degree_complex_direct(I: MonomialIdeal, a: Sequence[int]) -> SimplicialComplex:
    """Δ_a(I) from the definition: F is a face iff every generator b has some i ∉ F with a_i < b_i."""
    n = I.n
    if len(a) != n:
        raise DimensionMismatchError(f"exponent length {len(a)} does not match n={n}")
    found = []
    for mask in range(1 << n):
        if all(any(not mask >> i & 1 and a[i] < b[i] for i in range(n)) for b in I.gens):
            found.append(mask)
    return SimplicialComplex(n, _antichain(found))


def cycle_girth(adjacency: Dict[int, Iterable[int]]) -> Union[int, float]:
    """Length of a shortest cycle by BFS from every vertex; INFINITY if acyclic."""
    best = INFINITY
    for root in adjacency:
        dist = {root: 0}
        parent = {root: None}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def girth(delta: SimplicialComplex) -> Union[int, float]:
    """Girth of the 1-skeleton of a complex of dimension at most one."""
    if not delta.is_void and dim(delta) >= 2:
        raise ComplexError(f"girth is defined here for dim <= 1, got dim {dim(delta)}")
    adjacency: Dict[int, List[int]] = {}
    for f in delta.facets:
        verts = vertices_of(f)
        if len(verts) == 2:
            u, v = verts
            adjacency.setdefault(u, []).append(v)
            adjacency.setdefault(v, []).append(u)
    return cycle_girth(adjacency)
