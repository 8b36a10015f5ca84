"""Symbolic powers of squarefree monomial ideals and their intermediate ideals.

Membership in I^(s) is decided three independent ways:

* covering: Σ_{i ∉ F} a_i >= s for every facet F of Δ(I);
* differential: every coefficient-free derivative of order s-1 stays in I;
* intersection: membership in the intersection of the s-th powers of the
  minimal primes.
"""

import logging
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Iterator, List, Literal, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from srreg.algebra.complexes import mask_of, sr_complex, vertices_of
from srreg.algebra.graphs import Graph, closed_neighborhood, edge_ideal, is_independent, neighborhood
from srreg.algebra.monomials import (
    Exponent,
    MonomialIdeal,
    contains,
    intersect,
    minimalize,
    order,
    power,
    radical_colon,
    star_derivative,
    total_degree,
)
from srreg.config import MAX_INTERMEDIATES, SAMPLE_COUNT, SYMBOLIC_BOX_LIMIT
from srreg.errors import ComplexError, DimensionMismatchError, GraphError, GuardLimitError, IdealError
from srreg.utils import power_cache

logger = logging.getLogger(__name__)


def _require_squarefree_proper(I: MonomialIdeal) -> None:
    if I.is_zero:
        raise IdealError("symbolic powers need a nonzero ideal")
    if I.is_unit:
        raise IdealError("symbolic powers need a proper ideal")
    if not I.is_squarefree:
        raise IdealError(f"symbolic powers are supported for squarefree ideals only, got {I!r}")


def _require_s(s: int) -> None:
    if s < 1:
        raise IdealError(f"symbolic power exponent must be >= 1, got {s}")


def _prime_masks(I: MonomialIdeal) -> Tuple[int, ...]:
    full = (1 << I.n) - 1
    return tuple(full & ~facet for facet in sr_complex(I).facets)


def minimal_primes(I: MonomialIdeal) -> List[Tuple[int, ...]]:
    """Vertex sets S of the minimal primes (x_i : i in S), one per facet of Δ(I)."""
    _require_squarefree_proper(I)
    return sorted((vertices_of(m) for m in _prime_masks(I)), key=lambda S: (len(S), S))


def _covered(a: Sequence[int], s: int, prime_masks: Tuple[int, ...]) -> bool:
    for mask in prime_masks:
        total = 0
        for i, ai in enumerate(a):
            if ai and mask >> i & 1:
                total += ai
        if total < s:
            return False
    return True


def symbolic_membership(I: MonomialIdeal, s: int, a: Sequence[int]) -> bool:
    """x^a in I^(s) by the facet covering inequalities."""
    _require_squarefree_proper(I)
    _require_s(s)
    if len(a) != I.n:
        raise DimensionMismatchError(f"exponent length {len(a)} does not match n={I.n}")
    return _covered(a, s, _prime_masks(I))


def _bounded_compositions(bound: Sequence[int], total: int, start: int = 0) -> Iterator[List[int]]:
    """Every b with 0 <= b_i <= bound_i (i >= start) and |b| = total."""
    if start == len(bound):
        if total == 0:
            yield [0] * len(bound)
        return
    rest = sum(bound[start + 1:])
    for bi in range(min(bound[start], total), -1, -1):
        if total - bi > rest:
            break
        for tail in _bounded_compositions(bound, total - bi, start + 1):
            tail[start] = bi
            yield tail


def differential_membership(I: MonomialIdeal, s: int, a: Sequence[int]) -> bool:
    """x^a in I^[s]: ∂*(x^a)/∂*(x^b) in I for every b with |b| = s - 1.

    Derivatives clamp at zero, so only b <= a matter once |a| >= s; for
    |a| <= s - 1 some b swallows x^a entirely and the derivative is 1.
    """
    _require_squarefree_proper(I)
    _require_s(s)
    if len(a) != I.n:
        raise DimensionMismatchError(f"exponent length {len(a)} does not match n={I.n}")
    a = tuple(a)
    if total_degree(a) <= s - 1:
        return False
    for b in _bounded_compositions(a, s - 1):
        if not contains(I, star_derivative(a, tuple(b))):
            return False
    return True


def _prime_power(n: int, prime: Tuple[int, ...], s: int) -> MonomialIdeal:
    gens = []
    for combo in combinations_with_replacement(prime, s):
        e = [0] * n
        for v in combo:
            e[v] += 1
        gens.append(tuple(e))
    return minimalize(n, gens)


def symbolic_power_by_intersection(I: MonomialIdeal, s: int) -> MonomialIdeal:
    """I^(s) as the intersection of P^s over the minimal primes P."""
    _require_squarefree_proper(I)
    _require_s(s)
    cached = power_cache.get("symbolic-intersection", I.key(), s)
    if cached is not None:
        return cached
    result: Optional[MonomialIdeal] = None
    for prime in minimal_primes(I):
        Ps = _prime_power(I.n, prime, s)
        result = Ps if result is None else intersect(result, Ps)
    power_cache.store("symbolic-intersection", I.key(), s, result)
    return result


def intersection_membership(I: MonomialIdeal, s: int, a: Sequence[int]) -> bool:
    return contains(symbolic_power_by_intersection(I, s), a)


def symbolic_power(I: MonomialIdeal, s: int, box_limit: int = SYMBOLIC_BOX_LIMIT) -> MonomialIdeal:
    """I^(s) by scanning the box {0..s}^n.

    Every minimal generator has each partial degree at most s, so the box
    holds all of them. A box member a is a minimal generator iff no a - e_i
    is a member.

    Args:
        I: A squarefree, nonzero, proper ideal.
        s: The exponent, at least 1.
        box_limit: Refuse scans whose estimated cost n * (s+1)^n exceeds this.

    Returns:
        The symbolic power, cached per (I, s).
    """
    _require_squarefree_proper(I)
    _require_s(s)
    if s == 1:
        return I
    cached = power_cache.get("symbolic", I.key(), s)
    if cached is not None:
        return cached
    n = I.n
    estimate = n * (s + 1) ** n
    if estimate > box_limit:
        raise GuardLimitError(
            f"symbolic power box for n={n}, s={s} needs ~{estimate} checks (limit {box_limit})",
            estimate=estimate,
            limit=box_limit,
        )
    masks = _prime_masks(I)
    found = []
    for a in _box(n, s):
        if not _covered(a, s, masks):
            continue
        minimal = True
        for i in range(n):
            if a[i]:
                lowered = a[:i] + (a[i] - 1,) + a[i + 1:]
                if _covered(lowered, s, masks):
                    minimal = False
                    break
        if minimal:
            found.append(a)
    result = minimalize(n, found)
    if any(not contains(result, g) for g in power(I, s).gens):
        raise IdealError(f"I^{s} is not contained in the computed I^({s}) of {I!r}")
    power_cache.store("symbolic", I.key(), s, result)
    logger.debug(f"Symbolic power s={s} of {I!r} has {len(result.gens)} generators")
    return result


def _box(n: int, s: int) -> Iterator[Exponent]:
    a = [0] * n
    while True:
        yield tuple(a)
        i = n - 1
        while i >= 0 and a[i] == s:
            a[i] = 0
            i -= 1
        if i < 0:
            return
        a[i] += 1


class Selection(BaseModel):
    """How much of an intermediate family to walk."""

    model_config = ConfigDict(frozen=True)

    mode: Literal["all", "sample"] = "all"
    count: int = Field(default=SAMPLE_COUNT, ge=2)
    seed: int = 0

    @classmethod
    def all(cls) -> "Selection":
        return cls(mode="all")

    @classmethod
    def sample(cls, count: int = SAMPLE_COUNT, seed: int = 0) -> "Selection":
        return cls(mode="sample", count=count, seed=seed)


class IntermediateFamily(BaseModel):
    """The ideals I^s + (subset of extras) between I^s and I^(s)."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    base: MonomialIdeal
    top: MonomialIdeal
    extras: Tuple[Exponent, ...]
    selection: Selection = Selection()

    @model_validator(mode="after")
    def _check_nested(self) -> "IntermediateFamily":
        if any(not contains(self.top, g) for g in self.base.gens):
            raise IdealError("base ideal is not contained in the top ideal")
        if any(contains(self.base, f) for f in self.extras):
            raise IdealError("an extra generator already lies in the base ideal")
        return self

    def subsets(self) -> List[Tuple[int, ...]]:
        """Index subsets of ``extras`` selected by the family's mode."""
        k = len(self.extras)
        full = tuple(range(k))
        if self.selection.mode == "all" or 2 ** k <= self.selection.count:
            return [c for size in range(k + 1) for c in combinations(full, size)]
        rng = np.random.default_rng(self.selection.seed)
        chosen = {(): None, full: None}
        attempts = 0
        while len(chosen) < self.selection.count and attempts < 50 * self.selection.count:
            picks = rng.integers(0, 2, size=k)
            chosen.setdefault(tuple(i for i in range(k) if picks[i]), None)
            attempts += 1
        return list(chosen)

    def member(self, subset: Iterable[int]) -> MonomialIdeal:
        return minimalize(self.base.n, self.base.gens + tuple(self.extras[i] for i in subset))

    def members(self) -> Iterator[Tuple[Tuple[int, ...], MonomialIdeal]]:
        """Yield (subset, ideal) pairs, skipping subsets whose ideal was already emitted."""
        seen = set()
        for subset in self.subsets():
            J = self.member(subset)
            if J.key() in seen:
                continue
            seen.add(J.key())
            yield subset, J


def intermediate_family(
    I: MonomialIdeal,
    s: int,
    selection: Optional[Selection] = None,
    max_intermediates: int = MAX_INTERMEDIATES,
    box_limit: int = SYMBOLIC_BOX_LIMIT,
) -> IntermediateFamily:
    """Build Inter(I^s, I^(s)).

    Raises:
        GuardLimitError: ALL mode with more than ``max_intermediates`` extras.
    """
    selection = selection or Selection.all()
    base = power(I, s)
    top = symbolic_power(I, s, box_limit=box_limit)
    extras = tuple(g for g in top.gens if not contains(base, g))
    if selection.mode == "all" and len(extras) > max_intermediates:
        raise GuardLimitError(
            f"{len(extras)} extra generators give 2^{len(extras)} intermediates; "
            f"use sample mode or raise the cap ({max_intermediates})",
            estimate=len(extras),
            limit=max_intermediates,
        )
    logger.debug(f"Intermediate family for s={s}: {len(extras)} extras, mode {selection.mode}")
    return IntermediateFamily(base=base, top=top, extras=extras, selection=selection)


def intermediate_ideals(
    I: MonomialIdeal,
    s: int,
    selection: Optional[Selection] = None,
    max_intermediates: int = MAX_INTERMEDIATES,
) -> Iterator[MonomialIdeal]:
    for _, J in intermediate_family(I, s, selection, max_intermediates).members():
        yield J


def criterion_in_power_predict(G: Graph, s: int, a: Sequence[int], F: Iterable[int]) -> bool:
    """Σ_{j in N(F)} a_j + ord_I(x^a restricted off N[F]) >= s, with I = I(G).

    True means x_F lies in sqrt(I^s : x^a); for a minimal generator x_F of
    that radical the inequality also holds.
    """
    F = frozenset(F)
    if len(a) != G.n:
        raise DimensionMismatchError(f"exponent length {len(a)} does not match n={G.n}")
    if not is_independent(G, F):
        raise GraphError(f"{sorted(F)} is not an independent set")
    I = edge_ideal(G)
    N = neighborhood(G, F)
    closed = closed_neighborhood(G, F)
    h = tuple(0 if u in closed else a[u] for u in range(G.n))
    return sum(a[j] for j in N) + order(I, h) >= s


def criterion_in_sym_check(
    I: MonomialIdeal,
    J: MonomialIdeal,
    s: int,
    a: Sequence[int],
    f: Sequence[int],
    F: Iterable[int],
    check_preconditions: bool = True,
) -> bool:
    """Return whether Σ_{i ∉ F} a_i >= s for an instance of the covering bound.

    Whenever x^a is outside J, f lies in sqrt(J : x^a) but not in I, and F is
    a facet of Δ(I) containing supp f, the bound must hold; a False return
    is therefore a counterexample. ``check_preconditions=False`` skips the
    hypothesis checks so a harness can feed deliberately mutated exponents.
    """
    if len(a) != I.n or len(f) != I.n:
        raise DimensionMismatchError("exponent lengths do not match the ring")
    mask = mask_of(F)
    if check_preconditions:
        if any(fi > 1 for fi in f):
            raise IdealError(f"{tuple(f)} is not squarefree")
        if contains(J, a):
            raise IdealError(f"x^{tuple(a)} lies in J")
        if not contains(radical_colon(J, a), f):
            raise IdealError(f"{tuple(f)} is not in sqrt(J : x^a)")
        if contains(I, f):
            raise IdealError(f"{tuple(f)} lies in I")
        if mask not in sr_complex(I).facets:
            raise ComplexError(f"{sorted(F)} is not a facet of the Stanley-Reisner complex")
        if any(fi and not mask >> i & 1 for i, fi in enumerate(f)):
            raise ComplexError(f"facet {sorted(F)} does not contain supp f")
    return sum(ai for i, ai in enumerate(a) if not mask >> i & 1) >= s
