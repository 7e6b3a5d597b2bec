"""Complementary duals of monomial ideals.

The square-free dual replaces each minimal generator by its complement in
the full monomial x1*..*xn.  The generalized dual subtracts exponent
vectors from a dominating bound vector.  Both are involutions on their
natural domains and flip generator degrees d to n-d (bound minus d).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .ideals import (
    ExponentMonomial,
    MonomialIdeal,
    ZeroIdealError,
    degree_masks,
    full_mask,
)


class InvalidBetaError(ValueError):
    """The bound vector fails to dominate some generator exponent."""


def newton_dual(ideal: MonomialIdeal, *, allow_unit: bool = False) -> MonomialIdeal:
    """Ideal generated by the complements of the minimal generators.

    Complements of distinct equal-ambient square-free monomials are distinct,
    and complements of an antichain form an antichain, so the generator count
    is preserved.  A full-monomial generator complements to 1; that output is
    the unit ideal and is rejected unless allow_unit is set.
    """
    if ideal.is_zero:
        raise ZeroIdealError("the zero ideal has no complementary dual")
    amb = full_mask(ideal.n)
    masks = [amb ^ g for g in ideal.generator_masks]
    return MonomialIdeal.from_masks(ideal.n, masks, allow_unit=allow_unit)


def _minimalize_exponents(exps: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    unique = sorted(set(exps), key=lambda e: (sum(e), e))
    kept: list[tuple[int, ...]] = []
    for e in unique:
        if not any(all(k[i] <= e[i] for i in range(len(e))) for k in kept):
            kept.append(e)
    return kept


@dataclass(frozen=True, slots=True)
class ExponentIdeal:
    """A monomial ideal with arbitrary exponents, stored as a minimal antichain."""

    n: int
    generators: tuple[ExponentMonomial, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("ambient variable count must be positive")
        exps = []
        for g in self.generators:
            if g.n != self.n:
                raise ValueError(f"generator {g} has {g.n} variables, ideal has {self.n}")
            exps.append(g.exponents)
        if exps != _minimalize_exponents(exps):
            raise ValueError("generators must form a canonically ordered antichain")

    @classmethod
    def generated_by(cls, n: int, exponents: Iterable[Sequence[int]]) -> "ExponentIdeal":
        exps = _minimalize_exponents(tuple(e) for e in exponents)
        for e in exps:
            if len(e) != n:
                raise ValueError(f"exponent vector {e} does not have {n} entries")
        return cls(n, tuple(ExponentMonomial(e) for e in exps))

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_unit


def exponent_ideal_of(ideal: MonomialIdeal) -> ExponentIdeal:
    """Re-encode a square-free ideal with explicit 0/1 exponent vectors."""
    exps = []
    for g in ideal.generators:
        exps.append(tuple(1 if g.mask >> i & 1 else 0 for i in range(ideal.n)))
    return ExponentIdeal.generated_by(ideal.n, exps)


def generalized_newton_dual(ideal: ExponentIdeal, beta: Sequence[int]) -> ExponentIdeal:
    """Dual with respect to a dominating exponent bound: x^beta / m per generator.

    beta must dominate every generator entrywise; the offending coordinate is
    named otherwise.  When some quotient is 1 the result is the unit ideal,
    which is representable here (is_unit flags it).
    """
    if ideal.is_zero:
        raise ZeroIdealError("the zero ideal has no complementary dual")
    beta = tuple(beta)
    if len(beta) != ideal.n:
        raise InvalidBetaError(f"beta has {len(beta)} entries, ideal ambient is {ideal.n}")
    if any(b < 0 for b in beta):
        raise InvalidBetaError(f"beta must be non-negative, got {beta}")
    for g in ideal.generators:
        for i, (b, e) in enumerate(zip(beta, g.exponents), start=1):
            if e > b:
                raise InvalidBetaError(
                    f"beta[{i}] = {b} does not dominate exponent {e} of generator {g}"
                )
    duals = [tuple(b - e for b, e in zip(beta, g.exponents)) for g in ideal.generators]
    return ExponentIdeal.generated_by(ideal.n, duals)


def dual_divisor_count(ideal: MonomialIdeal, j: int) -> tuple[int, int]:
    """Both sides of the divisor bijection at dimension j.

    Left: degree j+1 square-free monomials dividing some minimal generator.
    Right: degree n-j-1 square-free monomials lying in the dual ideal.
    The two counts agree for every -1 <= j <= n-1.
    """
    if ideal.is_zero:
        raise ZeroIdealError("the zero ideal has no complementary dual")
    n = ideal.n
    if not -1 <= j <= n - 1:
        raise ValueError(f"dimension j must satisfy -1 <= j <= {n - 1}, got {j}")
    gens = ideal.generator_masks
    lhs = sum(1 for m in degree_masks(n, j + 1) if any(m & ~g == 0 for g in gens))
    dual = newton_dual(ideal, allow_unit=True)
    rhs = sum(1 for m in degree_masks(n, n - j - 1) if dual.contains_mask(m))
    return (lhs, rhs)
