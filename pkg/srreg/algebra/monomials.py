"""Exact monomial and monomial-ideal arithmetic.

Exponents are plain tuples of nonnegative ints. Variables are 0-indexed in
the Python API; the text syntax (``"x1^2*x3"``) is 1-indexed.
"""

import logging
import re
from itertools import product
from typing import Iterable, List, NamedTuple, Sequence, Tuple

from srreg.errors import DimensionMismatchError, IdealError, InputFormatError
from srreg.utils import power_cache

logger = logging.getLogger(__name__)

Exponent = Tuple[int, ...]

_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def divides(b: Exponent, a: Exponent) -> bool:
    """x^b | x^a."""
    for bi, ai in zip(b, a):
        if bi > ai:
            return False
    return True


def total_degree(a: Exponent) -> int:
    return sum(a)


def support(a: Exponent) -> frozenset:
    return frozenset(i for i, ai in enumerate(a) if ai > 0)


def support_mask(a: Exponent) -> int:
    mask = 0
    for i, ai in enumerate(a):
        if ai > 0:
            mask |= 1 << i
    return mask


def sqrt_exponent(a: Exponent) -> Exponent:
    return tuple(min(ai, 1) for ai in a)


def lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(ai, bi) for ai, bi in zip(a, b))


def star_derivative(f: Exponent, b: Exponent) -> Exponent:
    """Coefficient-free partial derivative of x^f by x^b.

    Args:
        f: The monomial being differentiated.
        b: The differentiation exponent.

    Returns:
        The exponent max(f_i - b_i, 0) componentwise.
    """
    if len(f) != len(b):
        raise DimensionMismatchError(f"exponent lengths differ: {len(f)} vs {len(b)}")
    return tuple(max(fi - bi, 0) for fi, bi in zip(f, b))


def _check_exponent(n: int, a: Sequence[int]) -> Exponent:
    if len(a) != n:
        raise DimensionMismatchError(f"exponent {tuple(a)} has length {len(a)}, expected {n}")
    if any(ai < 0 for ai in a):
        raise DimensionMismatchError(f"exponent {tuple(a)} has a negative coordinate")
    return tuple(int(ai) for ai in a)


class MonomialIdeal:
    """A monomial ideal given by its unique minimal generating set.

    Instances are immutable and compare by (n, generators). Build them with
    ``minimalize`` (or the ``zero``/``unit`` constructors); the plain
    constructor trusts that ``gens`` is already an antichain.
    """

    __slots__ = ("n", "gens")

    def __init__(self, n: int, gens: Tuple[Exponent, ...]):
        self.n = n
        self.gens = gens

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, ((0,) * n,))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    @property
    def is_proper_nonzero(self) -> bool:
        return not self.is_zero and not self.is_unit

    @property
    def is_squarefree(self) -> bool:
        return all(ai <= 1 for g in self.gens for ai in g)

    @property
    def degree(self) -> int:
        """Maximal total degree of a minimal generator (0 for the zero ideal)."""
        return max((sum(g) for g in self.gens), default=0)

    def key(self) -> Tuple[int, Tuple[Exponent, ...]]:
        return (self.n, self.gens)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.n == other.n and self.gens == other.gens

    def __hash__(self) -> int:
        return hash((self.n, self.gens))

    def __contains__(self, f: Exponent) -> bool:
        return contains(self, f)

    def __len__(self) -> int:
        return len(self.gens)

    def __getstate__(self):
        return (self.n, self.gens)

    def __setstate__(self, state):
        self.n, self.gens = state

    def __repr__(self) -> str:
        if self.is_zero:
            return f"MonomialIdeal(n={self.n}, zero)"
        body = ", ".join(format_monomial(g) for g in self.gens)
        return f"MonomialIdeal(n={self.n}, ({body}))"


def _sort_key(a: Exponent):
    return (sum(a), tuple(-ai for ai in a))


def minimalize(n: int, raw: Iterable[Sequence[int]]) -> MonomialIdeal:
    """Reduce a set of exponents to its divisibility antichain.

    Args:
        n: Ambient variable count.
        raw: Any iterable of exponents of length ``n``.

    Returns:
        The ideal they generate, with generators sorted by degree then
        reverse-lex so equal ideals have equal generator tuples.
    """
    candidates = sorted({_check_exponent(n, a) for a in raw}, key=_sort_key)
    kept: List[Exponent] = []
    for a in candidates:
        if not any(divides(g, a) for g in kept):
            kept.append(a)
    return MonomialIdeal(n, tuple(kept))


def ideal_from_generators(n: int, gens: Iterable[Sequence[int]]) -> MonomialIdeal:
    return minimalize(n, gens)


def contains(I: MonomialIdeal, f: Sequence[int]) -> bool:
    """x^f in I, i.e. some generator divides f."""
    if len(f) != I.n:
        raise DimensionMismatchError(f"exponent length {len(f)} does not match n={I.n}")
    for g in I.gens:
        if divides(g, f):
            return True
    return False


def _same_ring(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.n != J.n:
        raise DimensionMismatchError(f"ideals live in different rings: n={I.n} vs n={J.n}")


def add(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return minimalize(I.n, I.gens + J.gens)


def multiply(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return minimalize(I.n, (tuple(a + b for a, b in zip(g, h)) for g in I.gens for h in J.gens))


def power(I: MonomialIdeal, s: int) -> MonomialIdeal:
    """I^s by incremental multiplication with a shared cache.

    ``s = 0`` yields the unit ideal by convention.
    """
    if s < 0:
        raise IdealError(f"power exponent must be nonnegative, got {s}")
    if s == 0:
        return MonomialIdeal.unit(I.n)
    if s == 1:
        return I
    cached = power_cache.get("power", I.key(), s)
    if cached is not None:
        return cached
    t, current = power_cache.highest("power", I.key(), s)
    if current is None:
        t, current = 1, I
    while t < s:
        current = multiply(current, I)
        t += 1
        power_cache.store("power", I.key(), t, current)
    return current


def add_variable(I: MonomialIdeal, j: int) -> MonomialIdeal:
    """I + (x_j)."""
    if not 0 <= j < I.n:
        raise DimensionMismatchError(f"variable index {j} outside [0, {I.n})")
    e = tuple(1 if i == j else 0 for i in range(I.n))
    return minimalize(I.n, I.gens + (e,))


def colon(I: MonomialIdeal, a: Sequence[int]) -> MonomialIdeal:
    """I : x^a."""
    a = _check_exponent(I.n, a)
    return minimalize(I.n, (tuple(gi - min(gi, ai) for gi, ai in zip(g, a)) for g in I.gens))


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return minimalize(I.n, (sqrt_exponent(g) for g in I.gens))


def radical_colon(I: MonomialIdeal, a: Sequence[int]) -> MonomialIdeal:
    """sqrt(I : x^a)."""
    return radical(colon(I, a))


def radical_colon_generators(I: MonomialIdeal, a: Sequence[int]) -> List[Exponent]:
    """The generators sqrt(f / gcd(f, x^a)) for every generator f, before minimalization."""
    a = _check_exponent(I.n, a)
    return [tuple(1 if gi > ai else 0 for gi, ai in zip(g, a)) for g in I.gens]


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return minimalize(I.n, (lcm(g, h) for g in I.gens for h in J.gens))


def _require_proper_nonzero(I: MonomialIdeal, what: str) -> None:
    if I.is_zero:
        raise IdealError(f"{what} needs a nonzero ideal")
    if I.is_unit:
        raise IdealError(f"{what} needs a proper ideal")


def order(I: MonomialIdeal, f: Sequence[int]) -> int:
    """ord_I(f) = max t with f in I^t.

    Every generator of a proper ideal has degree at least 1, so t never
    exceeds deg f.
    """
    _require_proper_nonzero(I, "ord")
    f = _check_exponent(I.n, f)
    t = 0
    bound = sum(f)
    while t < bound and contains(power(I, t + 1), f):
        t += 1
    return t


def clique_order(a: Sequence[int]) -> int:
    """Order of a monomial supported on a clique of the graph.

    Returns:
        min(|a| - max a_i, floor(|a| / 2)).
    """
    if not a:
        return 0
    total = sum(a)
    return min(total - max(a), total // 2)


def rho(I: MonomialIdeal) -> Exponent:
    """Per-variable maximal degree over the minimal generators."""
    return tuple(max((g[j] for g in I.gens), default=0) for j in range(I.n))


class Polarization(NamedTuple):
    """Squarefree image of an ideal with the variable bookkeeping.

    ``variables[k] = (j, c)`` means new variable k is the c-th copy
    (1-based) of original variable j.
    """

    ideal: MonomialIdeal
    variables: Tuple[Tuple[int, int], ...]

    def depolarize(self) -> MonomialIdeal:
        return minimalize(self.original_n, (self._collapse(g) for g in self.ideal.gens))

    @property
    def original_n(self) -> int:
        return 1 + max((j for j, _ in self.variables), default=-1)

    def _collapse(self, g: Exponent) -> Exponent:
        out = [0] * self.original_n
        for k, gk in enumerate(g):
            if gk:
                out[self.variables[k][0]] += 1
        return tuple(out)


def polarize(I: MonomialIdeal) -> Polarization:
    """Polarize a monomial ideal into a squarefree ideal in sum(rho) variables."""
    _require_proper_nonzero(I, "polarization")
    widths = rho(I)
    offsets = []
    variables: List[Tuple[int, int]] = []
    for j, width in enumerate(widths):
        offsets.append(len(variables))
        variables.extend((j, c) for c in range(1, width + 1))
    N = len(variables)
    polarized = []
    for g in I.gens:
        e = [0] * N
        for j, gj in enumerate(g):
            for c in range(gj):
                e[offsets[j] + c] = 1
        polarized.append(tuple(e))
    logger.debug(f"Polarized {len(I.gens)} generators into {N} variables")
    return Polarization(minimalize(N, polarized), tuple(variables))


def box(limits: Sequence[int]) -> Iterable[Exponent]:
    """All exponents with 0 <= a_j < limits[j], in lex order."""
    return product(*(range(m) for m in limits))


def parse_monomial(text: str, n: int) -> Exponent:
    """Parse ``"x1^2*x3"`` (1-indexed) or ``"1"`` into an exponent of length n."""
    text = text.strip().replace(" ", "")
    exps = [0] * n
    if text in ("", "1"):
        return tuple(exps)
    for factor in text.split("*"):
        match = _FACTOR.match(factor)
        if match is None:
            raise InputFormatError(f"cannot parse monomial factor {factor!r} in {text!r}")
        index = int(match.group(1))
        if not 1 <= index <= n:
            raise InputFormatError(f"variable x{index} outside x1..x{n}")
        exps[index - 1] += int(match.group(2) or 1)
    return tuple(exps)


def format_monomial(a: Sequence[int]) -> str:
    parts = []
    for i, ai in enumerate(a):
        if ai == 1:
            parts.append(f"x{i + 1}")
        elif ai > 1:
            parts.append(f"x{i + 1}^{ai}")
    return "*".join(parts) if parts else "1"
