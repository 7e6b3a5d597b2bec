"""Square-free monomials and monomial ideals over a fixed variable set.

A square-free monomial in variables x1..xn is encoded as an int bitmask:
variable i occupies bit i-1, so x1 is the least significant bit.  The
canonical order used everywhere is ascending degree, then ascending mask
value.  Ideals are stored by their unique minimal generating antichain.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

# Bitmask sweeps (2**n) cap the practical ambient size.
MAX_VARIABLES = 20


class AmbientMismatchError(ValueError):
    """Operands live over different variable sets."""


class ZeroIdealError(ValueError):
    """The zero ideal has no generators, hence no extremes, primes or facets."""


class UnitIdealError(ValueError):
    """The unit ideal was passed where a proper ideal is required."""


class InternalCheckError(RuntimeError):
    """Two internally equivalent computations disagreed; indicates a bug."""


def full_mask(n: int) -> int:
    return (1 << n) - 1


def mask_of(indices: Iterable[int], n: int) -> int:
    """Bitmask of 1-based variable indices, validated against the ambient."""
    m = 0
    for i in indices:
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} outside 1..{n}")
        m |= 1 << (i - 1)
    return m


def mask_indices(mask: int) -> tuple[int, ...]:
    """Ascending 1-based variable indices set in the mask."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _check_ambient(n: int) -> None:
    if not 1 <= n <= MAX_VARIABLES:
        raise ValueError(f"ambient variable count must be in 1..{MAX_VARIABLES}, got {n}")


@dataclass(frozen=True, slots=True)
class SquareFreeMonomial:
    """A square-free monomial with an explicit ambient variable count."""

    n: int
    mask: int

    def __post_init__(self) -> None:
        _check_ambient(self.n)
        if not 0 <= self.mask <= full_mask(self.n):
            raise ValueError(f"mask {self.mask:#x} out of range for n={self.n}")

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> "SquareFreeMonomial":
        return cls(n, mask_of(indices, n))

    @property
    def degree(self) -> int:
        return self.mask.bit_count()

    @property
    def is_unit(self) -> bool:
        return self.mask == 0

    def indices(self) -> tuple[int, ...]:
        return mask_indices(self.mask)

    def divides(self, other: "SquareFreeMonomial") -> bool:
        if self.n != other.n:
            raise AmbientMismatchError(f"ambients differ: {self.n} vs {other.n}")
        return self.mask & ~other.mask == 0

    def complement(self) -> "SquareFreeMonomial":
        """Quotient of the full monomial x1*..*xn by this monomial."""
        return SquareFreeMonomial(self.n, full_mask(self.n) ^ self.mask)

    def sort_key(self) -> tuple[int, int]:
        return (self.degree, self.mask)

    def __str__(self) -> str:
        if self.mask == 0:
            return "1"
        return "*".join(f"x{i}" for i in self.indices())


@dataclass(frozen=True, slots=True)
class ExponentMonomial:
    """A monomial with arbitrary non-negative exponents, one per variable."""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.exponents:
            raise ValueError("exponent vector must name at least one variable")
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"negative exponent in {self.exponents}")

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def is_unit(self) -> bool:
        return all(e == 0 for e in self.exponents)

    def divides(self, other: "ExponentMonomial") -> bool:
        if self.n != other.n:
            raise AmbientMismatchError(f"ambients differ: {self.n} vs {other.n}")
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __str__(self) -> str:
        parts = []
        for i, e in enumerate(self.exponents, start=1):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts) if parts else "1"


def minimalize_masks(masks: Iterable[int]) -> list[int]:
    """Divisibility-minimal members of a mask collection, canonically ordered."""
    unique = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    kept: list[int] = []
    for m in unique:
        # any previously kept mask has degree <= deg(m); subset test suffices
        if not any(k & ~m == 0 for k in kept):
            kept.append(m)
    return kept


def minimalize(monomials: Iterable[SquareFreeMonomial]) -> list[SquareFreeMonomial]:
    """Remove duplicates and non-minimal members; result is the canonical antichain."""
    mons = list(monomials)
    if not mons:
        return []
    n = mons[0].n
    for m in mons:
        if m.n != n:
            raise AmbientMismatchError("monomials span different ambients")
    return [SquareFreeMonomial(n, m) for m in minimalize_masks(m.mask for m in mons)]


@lru_cache(maxsize=None)
def degree_masks(n: int, d: int) -> tuple[int, ...]:
    """All masks of the given popcount over n variables, ascending."""
    _check_ambient(n)
    if not 0 <= d <= n:
        raise ValueError(f"degree {d} outside 0..{n}")
    masks = [sum(1 << i for i in bits) for bits in combinations(range(n), d)]
    return tuple(sorted(masks))


def monomials_of_degree(n: int, d: int) -> list[SquareFreeMonomial]:
    """All C(n, d) square-free monomials of degree d, in canonical order."""
    return [SquareFreeMonomial(n, m) for m in degree_masks(n, d)]


@dataclass(frozen=True, slots=True)
class MonomialIdeal:
    """A square-free monomial ideal, stored as its minimal generating antichain.

    generators must already be minimal and canonically ordered; use
    generated_by or from_masks to build from arbitrary input.  The zero
    ideal has no generators; the unit ideal has the single generator 1.
    """

    n: int
    generators: tuple[SquareFreeMonomial, ...]

    def __post_init__(self) -> None:
        _check_ambient(self.n)
        masks = []
        for g in self.generators:
            if g.n != self.n:
                raise AmbientMismatchError(f"generator {g} has ambient {g.n}, ideal has {self.n}")
            masks.append(g.mask)
        if 0 in masks and len(masks) > 1:
            raise ValueError("unit generator must be the only generator")
        if masks != minimalize_masks(masks):
            raise ValueError("generators must form a canonically ordered antichain")

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int], *, allow_unit: bool = False) -> "MonomialIdeal":
        mins = minimalize_masks(masks)
        if mins and mins[0] == 0 and not allow_unit:
            raise UnitIdealError("unit generator rejected; pass allow_unit=True to accept")
        return cls(n, tuple(SquareFreeMonomial(n, m) for m in mins))

    @classmethod
    def generated_by(
        cls,
        n: int,
        generators: Iterable[Iterable[int] | SquareFreeMonomial],
        *,
        allow_unit: bool = False,
    ) -> "MonomialIdeal":
        """Build from index tuples or monomials; minimalizes automatically."""
        masks = []
        for g in generators:
            if isinstance(g, SquareFreeMonomial):
                if g.n != n:
                    raise AmbientMismatchError(f"generator {g} has ambient {g.n}, expected {n}")
                masks.append(g.mask)
            else:
                masks.append(mask_of(g, n))
        return cls.from_masks(n, masks, allow_unit=allow_unit)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].mask == 0

    @property
    def generator_masks(self) -> tuple[int, ...]:
        return tuple(g.mask for g in self.generators)

    def contains_mask(self, mask: int) -> bool:
        return any(g.mask & ~mask == 0 for g in self.generators)

    def __contains__(self, m: SquareFreeMonomial) -> bool:
        if m.n != self.n:
            raise AmbientMismatchError(f"monomial ambient {m.n} differs from ideal ambient {self.n}")
        return self.contains_mask(m.mask)

    def degree_extremes(self) -> tuple[int, int]:
        """(alpha, omega): least and greatest generator degree."""
        if self.is_zero:
            raise ZeroIdealError("the zero ideal has no generator degrees")
        degs = [g.degree for g in self.generators]
        return (min(degs), max(degs))

    @property
    def alpha(self) -> int:
        return self.degree_extremes()[0]

    @property
    def omega(self) -> int:
        return self.degree_extremes()[1]

    @property
    def is_equigenerated(self) -> bool:
        a, w = self.degree_extremes()
        return a == w

    def __str__(self) -> str:
        if self.is_zero:
            return "<0>"
        return "<" + ", ".join(str(g) for g in self.generators) + ">"


def contains(ideal: MonomialIdeal, m: SquareFreeMonomial) -> bool:
    """Membership test: some minimal generator divides m."""
    return m in ideal


def minimal_transversal_masks(n: int, supports: Iterable[int]) -> list[int]:
    """Minimal vertex sets meeting every support mask, canonically ordered.

    The empty family is met by the empty set; a family containing the empty
    support has no transversal at all.
    """
    sups = list(supports)
    if not sups:
        return [0]
    if 0 in sups:
        return []
    kept: list[int] = []
    order = sorted(range(1, 1 << n), key=lambda m: (m.bit_count(), m))
    for m in order:
        if any(k & ~m == 0 for k in kept):
            continue
        if all(m & s for s in sups):
            kept.append(m)
    return kept


@dataclass(frozen=True, slots=True)
class MinimalPrimes:
    """Minimal primes of a square-free ideal, each a set of variable indices."""

    primes: tuple[tuple[int, ...], ...]
    height: int
    unmixed: bool


def minimal_primes(ideal: MonomialIdeal) -> MinimalPrimes:
    """Minimal primes, computed as minimal transversals of the generator supports."""
    if ideal.is_zero:
        raise ZeroIdealError("the zero ideal has no minimal primes")
    if ideal.is_unit:
        raise UnitIdealError("the unit ideal has no minimal primes")
    masks = minimal_transversal_masks(ideal.n, ideal.generator_masks)
    sizes = {m.bit_count() for m in masks}
    return MinimalPrimes(
        primes=tuple(mask_indices(m) for m in masks),
        height=min(sizes),
        unmixed=len(sizes) == 1,
    )


def iter_antichain_masks(n: int) -> Iterator[tuple[int, ...]]:
    """All non-empty antichains of non-empty subsets of {1..n}, DFS order.

    Each antichain is emitted as a tuple of masks in canonical order, so the
    sequence is deterministic; used for exhaustive sweeps at small n.
    """
    masks = sorted(range(1, 1 << n), key=lambda m: (m.bit_count(), m))

    def extend(start: int, chosen: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        for i in range(start, len(masks)):
            m = masks[i]
            ok = True
            for c in chosen:
                if c & ~m == 0 or m & ~c == 0:
                    ok = False
                    break
            if ok:
                nxt = chosen + (m,)
                yield nxt
                yield from extend(i + 1, nxt)

    yield from extend(0, ())


def iter_antichain_ideals(n: int) -> Iterator[MonomialIdeal]:
    """All non-zero, non-unit square-free ideals over n variables."""
    for masks in iter_antichain_masks(n):
        yield MonomialIdeal(n, tuple(SquareFreeMonomial(n, m) for m in masks))
