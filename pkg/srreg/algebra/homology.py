"""Reduced simplicial homology dimensions over GF(p) or the rationals.

Chain groups include the empty face as the unique (-1)-face, so the
irrelevant complex {∅} has H̃_{-1} = 1. Orientation follows ascending vertex
order: removing the j-th vertex of a face contributes the sign (-1)^j.
"""

import logging
import re
from functools import lru_cache
from typing import Dict, List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator
from sympy import isprime
from sympy.polys.domains import GF, QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from srreg.algebra.complexes import (
    SimplicialComplex,
    faces_by_dimension,
    popcount,
    vertices_of,
)
from srreg.errors import ComplexError, InputFormatError, SrregError

logger = logging.getLogger(__name__)

_FIELD_TEXT = re.compile(r"^gf(\d+)$")

# Flips the sign of the last-vertex term in every boundary column; used by
# the self-test to prove that the harness notices a broken boundary map.
_FAULT_INJECTION = False


class FieldSpec(BaseModel):
    """Coefficient field: GF(p) for a prime p, or the rationals."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["prime", "rational"] = "prime"
    p: Optional[int] = 2

    @model_validator(mode="after")
    def _check_prime(self) -> "FieldSpec":
        if self.kind == "prime" and (self.p is None or not isprime(self.p)):
            raise ValueError(f"GF(p) needs a prime p, got {self.p}")
        if self.kind == "rational" and self.p is not None:
            raise ValueError("the rational field takes no characteristic")
        return self

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(kind="prime", p=p)

    @classmethod
    def rational(cls) -> "FieldSpec":
        return cls(kind="rational", p=None)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse the CLI spelling ``gf2``, ``gf<p>`` or ``q``."""
        text = text.strip().lower()
        if text in ("q", "qq", "rational"):
            return cls.rational()
        match = _FIELD_TEXT.match(text)
        if match is None:
            raise InputFormatError(f"unknown field {text!r}; expected gf2, gf<p> or q")
        try:
            return cls.prime(int(match.group(1)))
        except ValueError as e:
            raise InputFormatError(str(e)) from e

    @property
    def label(self) -> str:
        return "q" if self.kind == "rational" else f"gf{self.p}"

    def domain(self):
        return QQ if self.kind == "rational" else GF(self.p)


GF2 = FieldSpec.prime(2)


class HomologyProfile(BaseModel):
    """dim H̃_i for every degree i from -1 up to dim Δ; other degrees are 0."""

    model_config = ConfigDict(frozen=True)

    dims: Dict[int, int] = {}

    def get(self, i: int) -> int:
        return self.dims.get(i, 0)

    def nonzero_degrees(self) -> List[int]:
        return sorted(i for i, d in self.dims.items() if d > 0)

    @property
    def is_acyclic(self) -> bool:
        return not self.nonzero_degrees()


def set_fault_injection(enabled: bool) -> None:
    """Toggle the deliberate sign fault in boundary matrices."""
    global _FAULT_INJECTION
    _FAULT_INJECTION = enabled
    _reduced_homology_cached.cache_clear()
    logger.debug(f"Boundary fault injection {'enabled' if enabled else 'disabled'}")


def fault_injection_enabled() -> bool:
    return _FAULT_INJECTION


def boundary_rows(lower: List[int], upper: List[int]) -> List[List[int]]:
    """Integer boundary matrix from faces ``upper`` (columns) to ``lower`` (rows)."""
    index = {face: r for r, face in enumerate(lower)}
    rows = [[0] * len(upper) for _ in lower]
    for c, face in enumerate(upper):
        verts = vertices_of(face)
        last = len(verts) - 1
        for j, v in enumerate(verts):
            sign = -1 if j % 2 else 1
            if _FAULT_INJECTION and j == last and last > 0:
                sign = -sign
            rows[index[face & ~(1 << v)]][c] = sign
    return rows


def _chain_faces(delta: SimplicialComplex) -> Dict[int, List[int]]:
    if delta.is_void:
        raise ComplexError("the void complex has no chain complex")
    return faces_by_dimension(delta)


def boundary_matrix(delta: SimplicialComplex, i: int, field: FieldSpec = GF2) -> DomainMatrix:
    """∂_i : C_i -> C_{i-1} over ``field``; rows are (i-1)-faces, columns i-faces.

    Args:
        delta: An ordinary or irrelevant complex.
        i: Homological degree, at least 0 (∂_0 maps vertices onto ∅).
        field: Coefficient field.

    Returns:
        The matrix as a sympy DomainMatrix over the field.
    """
    if i < 0:
        raise ComplexError(f"boundary degree must be >= 0, got {i}")
    by_dim = _chain_faces(delta)
    lower, upper = by_dim.get(i - 1, []), by_dim.get(i, [])
    rows = boundary_rows(lower, upper)
    return DomainMatrix([[ZZ(x) for x in row] for row in rows], (len(lower), len(upper)), ZZ).convert_to(field.domain())


def _gf2_rank(rows: List[List[int]]) -> int:
    R = (np.asarray(rows, dtype=np.int64) % 2).astype(np.uint8)
    m, n = R.shape
    rank = 0
    for col in range(n):
        pivot = None
        for row in range(rank, m):
            if R[row, col]:
                pivot = row
                break
        if pivot is None:
            continue
        if pivot != rank:
            R[[rank, pivot]] = R[[pivot, rank]]
        for row in range(rank + 1, m):
            if R[row, col]:
                R[row] ^= R[rank]
        rank += 1
        if rank == m:
            break
    return rank


def matrix_rank(rows: List[List[int]], field: FieldSpec) -> int:
    """Exact rank of an integer matrix read over ``field``."""
    if not rows or not rows[0]:
        return 0
    if field.kind == "prime" and field.p == 2:
        return _gf2_rank(rows)
    m, n = len(rows), len(rows[0])
    dm = DomainMatrix([[ZZ(x) for x in row] for row in rows], (m, n), ZZ)
    return dm.convert_to(field.domain()).rank()


@lru_cache(maxsize=200000)
def _reduced_homology_cached(facets: Tuple[int, ...], field: FieldSpec) -> Tuple[Tuple[int, int], ...]:
    delta = SimplicialComplex(max((f.bit_length() for f in facets), default=0), facets)
    by_dim = faces_by_dimension(delta)
    top = max(by_dim)
    ranks = {-1: 0, top + 1: 0}
    for i in range(0, top + 1):
        ranks[i] = matrix_rank(boundary_rows(by_dim.get(i - 1, []), by_dim[i]), field)
    dims = []
    for i in range(-1, top + 1):
        dims.append((i, len(by_dim.get(i, [])) - ranks[i] - ranks[i + 1]))
    _check_euler(by_dim, dims)
    return tuple(dims)


def _check_euler(by_dim: Dict[int, List[int]], dims: List[Tuple[int, int]]) -> None:
    if any(d < 0 for _, d in dims):
        raise SrregError(f"negative homology dimension in {dims}")
    chi_faces = sum((-1) ** i * len(fs) for i, fs in by_dim.items())
    chi_homology = sum((-1) ** i * d for i, d in dims)
    if chi_faces != chi_homology:
        raise SrregError(f"Euler characteristic mismatch: faces {chi_faces} vs homology {chi_homology}")


def reduced_homology(delta: SimplicialComplex, field: FieldSpec = GF2) -> HomologyProfile:
    """dim H̃_i(Δ; K) = nullity(∂_i) - rank(∂_{i+1}) for every i.

    The void complex has no chains and an all-zero profile.
    """
    if delta.is_void:
        return HomologyProfile(dims={})
    return HomologyProfile(dims=dict(_reduced_homology_cached(delta.facets, field)))


def euler_characteristic(delta: SimplicialComplex) -> int:
    """Reduced Euler characteristic, counting ∅ in degree -1."""
    if delta.is_void:
        return 0
    return sum((-1) ** i * len(fs) for i, fs in faces_by_dimension(delta).items())


def has_homology_in(delta: SimplicialComplex, i: int, field: FieldSpec = GF2) -> bool:
    return reduced_homology(delta, field).get(i) > 0


def is_acyclic(delta: SimplicialComplex, field: FieldSpec = GF2) -> bool:
    return reduced_homology(delta, field).is_acyclic


def top_dimension(delta: SimplicialComplex) -> int:
    return max(popcount(f) for f in delta.facets) - 1
