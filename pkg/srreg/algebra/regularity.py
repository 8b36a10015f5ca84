"""Castelnuovo-Mumford regularity from degree complexes.

reg(S/I) is the largest |a| + i such that some face F of Δ_a(I) with
F ∩ supp(a) = ∅ has H̃_{i-1}(lk F) ≠ 0. Only the box a_j < ρ_j is scanned:
once a_j >= ρ_j the degree complex is void or a cone over j, and since j
lies in supp(a) every admissible link is again a cone, hence acyclic.
Variables with ρ_j = 0 are pinned to a_j = 0. ``box_stability`` checks this
pruning against a box one step larger.
"""

import logging
import math
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from srreg.algebra.complexes import (
    SimplicialComplex,
    degree_complex,
    degree_complex_direct,
    faces,
    is_cone,
    is_face,
    link,
    mask_of,
    restrict,
    sr_complex,
    vertices_of,
)
from srreg.algebra.homology import GF2, FieldSpec, fault_injection_enabled, reduced_homology
from srreg.algebra.monomials import (
    Exponent,
    MonomialIdeal,
    add_variable,
    contains,
    minimalize,
    polarize,
    radical_colon,
    rho,
    support_mask,
)
from srreg.config import BOX_LIMIT, POLAR_VERTEX_LIMIT
from srreg.errors import ComplexError, GuardLimitError, IdealError
from srreg.utils import ParallelRunner

logger = logging.getLogger(__name__)


class Witness(BaseModel):
    """An extremal exponent (a, i) together with the face F that carries it."""

    model_config = ConfigDict(frozen=True)

    a: Tuple[int, ...]
    i: int
    face: Tuple[int, ...]

    def to_payload(self) -> Dict[str, object]:
        return {"a": list(self.a), "i": self.i, "F": [v + 1 for v in self.face]}


class RegularityCertificate(BaseModel):
    """reg(S/I), reg(I) and every witness reaching the maximum."""

    model_config = ConfigDict(frozen=True)

    reg_module: int
    reg_ideal: int
    field: FieldSpec
    witnesses: List[Witness] = []
    gamma_box: Tuple[int, ...] = ()
    cells_scanned: int = 0

    def to_payload(self) -> Dict[str, object]:
        return {
            "reg_ideal": self.reg_ideal,
            "reg_module": self.reg_module,
            "field": self.field.label,
            "gamma_box": list(self.gamma_box),
            "witnesses": [w.to_payload() for w in self.witnesses],
        }


def _require_proper_nonzero(I: MonomialIdeal) -> None:
    if I.is_zero:
        raise IdealError("the zero ideal has no generator box")
    if I.is_unit:
        raise IdealError("regularity is defined here for proper ideals only")


def gamma_bound(I: MonomialIdeal) -> Exponent:
    """ρ_j = max_j-degree over the minimal generators."""
    _require_proper_nonzero(I)
    return rho(I)


def _box_limits(rho_vec: Sequence[int], pad: int) -> Tuple[int, ...]:
    return tuple(max(r, 1) + pad for r in rho_vec)


def _decode(index: int, limits: Sequence[int]) -> Exponent:
    a = [0] * len(limits)
    for j in range(len(limits) - 1, -1, -1):
        index, a[j] = divmod(index, limits[j])
    return tuple(a)


@lru_cache(maxsize=100000)
def _admissible_homology(delta: SimplicialComplex, avoid: int, field: FieldSpec, faulty: bool = False) -> Tuple[Tuple[int, int], ...]:
    """All (i, F) with F ∈ Δ, F ∩ avoid = ∅ and H̃_{i-1}(lk F) ≠ 0.

    ``faulty`` only keys the cache on the boundary fault toggle.
    """
    out = []
    allowed = restrict(delta, vertices_of(((1 << delta.n) - 1) & ~avoid))
    for F in faces(allowed):
        profile = reduced_homology(link(delta, F), field)
        for degree in profile.nonzero_degrees():
            out.append((degree + 1, F))
    return tuple(out)


def _scan_range(args) -> Tuple[int, List[Tuple[Exponent, int, int]], int]:
    I, field, limits, start, stop = args
    best = -1
    found: List[Tuple[Exponent, int, int]] = []
    scanned = 0
    for index in range(start, stop):
        a = _decode(index, limits)
        if contains(I, a):
            continue
        scanned += 1
        delta = degree_complex(I, a)
        size = sum(a)
        for i, F in _admissible_homology(delta, support_mask(a), field, fault_injection_enabled()):
            value = size + i
            if value > best:
                best, found = value, [(a, i, F)]
            elif value == best:
                found.append((a, i, F))
    return best, found, scanned


def _witness_key(w: Tuple[Exponent, int, int]):
    return (w[0], vertices_of(w[2]), w[1])


def reg_takayama(
    I: MonomialIdeal,
    field: FieldSpec = GF2,
    jobs: int = 1,
    box_pad: int = 0,
    box_limit: int = BOX_LIMIT,
) -> RegularityCertificate:
    """Regularity by scanning degree complexes over the Γ(I) box.

    Args:
        I: A nonzero proper monomial ideal; the zero ideal returns reg S/I = 0.
        field: Coefficient field for the link homology.
        jobs: Worker processes for the box scan.
        box_pad: Extra cells per coordinate beyond ρ (``box_stability`` uses 1).
        box_limit: Refuse boxes with more cells than this.

    Returns:
        A certificate whose witnesses are sorted by a, then F; the result is
        identical for every ``jobs`` value.
    """
    if I.is_zero:
        return RegularityCertificate(reg_module=0, reg_ideal=1, field=field)
    _require_proper_nonzero(I)
    rho_vec = gamma_bound(I)
    limits = _box_limits(rho_vec, box_pad)
    cells = math.prod(limits)
    if cells > box_limit:
        raise GuardLimitError(
            f"Γ box has {cells} cells (limit {box_limit})", estimate=cells, limit=box_limit
        )
    chunks = max(1, min(cells, jobs * 4))
    bounds = [cells * k // chunks for k in range(chunks + 1)]
    tasks = [(I, field, limits, bounds[k], bounds[k + 1]) for k in range(chunks)]
    results = ParallelRunner(jobs).map(_scan_range, tasks)

    best = max(r[0] for r in results)
    witnesses = sorted((w for r in results if r[0] == best for w in r[1]), key=_witness_key)
    scanned = sum(r[2] for r in results)
    logger.debug(f"Scanned {scanned}/{cells} cells of the Γ box for {I!r}: reg S/I = {best}")
    return RegularityCertificate(
        reg_module=best,
        reg_ideal=best + 1,
        field=field,
        witnesses=[Witness(a=a, i=i, face=vertices_of(F)) for a, i, F in witnesses],
        gamma_box=rho_vec,
        cells_scanned=scanned,
    )


def regularity(I: MonomialIdeal, field: FieldSpec = GF2, jobs: int = 1) -> int:
    """reg(I) = reg(S/I) + 1."""
    return reg_takayama(I, field, jobs=jobs).reg_ideal


def reg_squarefree_links(delta: SimplicialComplex, field: FieldSpec = GF2) -> int:
    """reg(K[Δ]) = max i with H̃_{i-1}(lk F) ≠ 0 for some face F."""
    if delta.is_void:
        raise ComplexError("the void complex has no Stanley-Reisner ring")
    return max(i for i, _ in _admissible_homology(delta, 0, field, fault_injection_enabled()))


def reg_polarization_oracle(
    I: MonomialIdeal,
    field: FieldSpec = GF2,
    vertex_limit: int = POLAR_VERTEX_LIMIT,
) -> int:
    """reg(S/I) via polarization and the squarefree links formula."""
    _require_proper_nonzero(I)
    polarized = polarize(I)
    if polarized.ideal.n > vertex_limit:
        raise GuardLimitError(
            f"polarization has {polarized.ideal.n} variables (limit {vertex_limit})",
            estimate=polarized.ideal.n,
            limit=vertex_limit,
        )
    return reg_squarefree_links(sr_complex(polarized.ideal), field)


def restrict_ideal(I: MonomialIdeal, V: Iterable[int]) -> MonomialIdeal:
    """I_V: the generators supported inside V."""
    mask = mask_of(V)
    return minimalize(I.n, (g for g in I.gens if support_mask(g) & ~mask == 0))


def reg_restriction_in(I: MonomialIdeal, j: int, field: FieldSpec = GF2) -> Tuple[int, int]:
    """(reg(I + x_j), reg I); the first never exceeds the second."""
    return regularity(add_variable(I, j), field), regularity(I, field)


def box_stability(I: MonomialIdeal, field: FieldSpec = GF2) -> Tuple[int, int]:
    """reg(S/I) over the Γ box and over the box enlarged by one in every coordinate."""
    return reg_takayama(I, field).reg_module, reg_takayama(I, field, box_pad=1).reg_module


def verify_witness(
    I: MonomialIdeal,
    witness: Witness,
    reg_module: int,
    field: FieldSpec = GF2,
) -> bool:
    """Re-check a witness against the definition of the degree complex."""
    a = witness.a
    F = mask_of(witness.face)
    if contains(I, a) or F & support_mask(a):
        return False
    delta = degree_complex_direct(I, a)
    if not is_face(delta, F):
        return False
    if reduced_homology(link(delta, F), field).get(witness.i - 1) <= 0:
        return False
    return sum(a) + witness.i == reg_module


def witness_support_property(I: MonomialIdeal, witness: Witness) -> Optional[str]:
    """For t in supp(a), x_t divides a generator of sqrt(I : x^a) and Δ_a is no cone over t.

    Returns:
        ``None`` when both hold, otherwise a short description of the failure.
    """
    a = witness.a
    root = radical_colon(I, a)
    delta = degree_complex(I, a)
    for t, at in enumerate(a):
        if not at:
            continue
        if not any(g[t] for g in root.gens):
            return f"x{t + 1} divides no generator of sqrt(I : x^a)"
        if is_cone(delta, t):
            return f"degree complex is a cone over {t + 1}"
    return None
