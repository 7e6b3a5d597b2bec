"""f-ideal recognition and certification.

A square-free ideal is an f-ideal when its facet complex and its non-face
complex share the same f-vector.  Two independent routes are implemented:
comparing the two f-vectors directly, and the per-degree partition count.
Every degree-d square-free monomial falls in exactly one of four classes
relative to the ideal:

  free        outside the ideal and dividing no minimal generator
  divisors    outside the ideal but dividing some minimal generator
  generators  minimal generators of that degree
  multiples   inside the ideal but not minimal generators

The ideal is an f-ideal exactly when the free and generator classes have
equal size in every degree, because the non-face complex counts free plus
divisors in each dimension while the facet complex counts divisors plus
generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .complexes import dimension, f_vector, facet_complex, nonface_complex
from .duality import newton_dual
from .ideals import (
    InternalCheckError,
    MonomialIdeal,
    SquareFreeMonomial,
    UnitIdealError,
    ZeroIdealError,
    degree_masks,
    full_mask,
    minimal_primes,
)


def _require_proper(ideal: MonomialIdeal) -> None:
    if ideal.is_zero:
        raise ZeroIdealError("the zero ideal is not eligible")
    if ideal.is_unit:
        raise UnitIdealError("the unit ideal is not eligible")


@dataclass(frozen=True, slots=True)
class DegreePartition:
    """The four-way split of all degree d square-free monomials for one ideal."""

    degree: int
    free: tuple[SquareFreeMonomial, ...]
    divisors: tuple[SquareFreeMonomial, ...]
    generators: tuple[SquareFreeMonomial, ...]
    multiples: tuple[SquareFreeMonomial, ...]

    @property
    def sizes(self) -> tuple[int, int, int, int]:
        return (len(self.free), len(self.divisors), len(self.generators), len(self.multiples))

    def total(self) -> int:
        return sum(self.sizes)


def degree_partition(ideal: MonomialIdeal, d: int) -> DegreePartition:
    """Classify every degree d monomial as free / divisor / generator / multiple."""
    _require_proper(ideal)
    if not 0 <= d <= ideal.n:
        raise ValueError(f"degree {d} outside 0..{ideal.n}")
    gens = ideal.generator_masks
    genset = set(gens)
    free, divisors, generators, multiples = [], [], [], []
    for m in degree_masks(ideal.n, d):
        mon = SquareFreeMonomial(ideal.n, m)
        if m in genset:
            generators.append(mon)
        elif any(g & ~m == 0 for g in gens):
            multiples.append(mon)
        elif any(m & ~g == 0 for g in gens):
            divisors.append(mon)
        else:
            free.append(mon)
    return DegreePartition(d, tuple(free), tuple(divisors), tuple(generators), tuple(multiples))


def _partition_counts(n: int, gens: tuple[int, ...]) -> list[tuple[int, int, int, int]]:
    """Per-degree sizes (free, divisors, generators, multiples) for d = 0..n."""
    genset = set(gens)
    counts = [[0, 0, 0, 0] for _ in range(n + 1)]
    for m in range(1 << n):
        d = m.bit_count()
        if m in genset:
            counts[d][2] += 1
        elif any(g & ~m == 0 for g in gens):
            counts[d][3] += 1
        elif any(m & ~g == 0 for g in gens):
            counts[d][1] += 1
        else:
            counts[d][0] += 1
    return [tuple(c) for c in counts]


def _is_f_ideal_masks(n: int, gens: tuple[int, ...]) -> bool:
    """Partition criterion with early exit: free count equals generator count per degree."""
    genset = set(gens)
    for d in range(n + 1):
        a = c = 0
        for m in degree_masks(n, d):
            if m in genset:
                c += 1
            elif not any(g & ~m == 0 for g in gens) and not any(m & ~g == 0 for g in gens):
                a += 1
        if a != c:
            return False
    return True


def is_f_ideal(ideal: MonomialIdeal, method: str = "partition") -> bool:
    """Decide the f-ideal property.

    method is one of "partition" (per-degree counts, the fast route),
    "fvector" (compare the two complex f-vectors), or "both" (run both and
    insist they agree).
    """
    _require_proper(ideal)
    if method not in ("partition", "fvector", "both"):
        raise ValueError(f"unknown method {method!r}")
    by_partition = by_fvector = None
    if method in ("partition", "both"):
        by_partition = _is_f_ideal_masks(ideal.n, ideal.generator_masks)
    if method in ("fvector", "both"):
        by_fvector = f_vector(facet_complex(ideal)) == f_vector(nonface_complex(ideal))
    if method == "partition":
        return by_partition
    if method == "fvector":
        return by_fvector
    if by_partition != by_fvector:
        raise InternalCheckError(
            f"partition criterion says {by_partition}, f-vector comparison says {by_fvector}"
        )
    return by_partition


WARN_FULL_MONOMIAL = "a generator equals the full monomial x1*..*xn"
WARN_VERTEX_SETS = "facet and non-face complexes have different vertex sets"


@dataclass(frozen=True, slots=True)
class FIdealCertificate:
    """Checkable evidence for or against the f-ideal property."""

    is_f_ideal: bool
    f_facet: tuple[int, ...]
    f_nonface: tuple[int, ...]
    partition_sizes: tuple[tuple[int, int, int, int], ...]
    first_failure: tuple[int, int, int] | None
    warnings: tuple[str, ...]


def certify(ideal: MonomialIdeal) -> FIdealCertificate:
    """Full certificate: both f-vectors, all partition sizes, first failing degree.

    The f-vector comparison and the partition criterion are computed
    independently and must agree; disagreement raises InternalCheckError.
    """
    _require_proper(ideal)
    n = ideal.n
    fF = f_vector(facet_complex(ideal))
    fN = f_vector(nonface_complex(ideal))
    sizes = _partition_counts(n, ideal.generator_masks)
    first_failure = None
    for d, (a, _, c, _) in enumerate(sizes):
        if a != c:
            first_failure = (d, a, c)
            break
    answer = fF == fN
    if answer != (first_failure is None):
        raise InternalCheckError("f-vector comparison and partition counts disagree")
    warns = []
    if full_mask(n) in ideal.generator_masks:
        warns.append(WARN_FULL_MONOMIAL)
    if facet_complex(ideal).vertex_mask != nonface_complex(ideal).vertex_mask:
        warns.append(WARN_VERTEX_SETS)
    return FIdealCertificate(
        is_f_ideal=answer,
        f_facet=fF,
        f_nonface=fN,
        partition_sizes=tuple(sizes),
        first_failure=first_failure,
        warnings=tuple(warns),
    )


@dataclass(frozen=True, slots=True)
class NecessaryConditionsReport:
    """Outcome of the five face-count conditions every f-ideal satisfies.

    Inapplicable reports (not an f-ideal) carry None items.  The
    equigenerated_half item is None when the generator degrees differ.
    """

    applicable: bool
    skeleton_complete: bool | None
    min_degree_lower_bound: bool | None
    max_degree_upper_bound: bool | None
    equigenerated_half: bool | None
    dimension_bound: bool | None

    def as_items(self) -> tuple[tuple[str, bool | None], ...]:
        return (
            ("skeleton-complete", self.skeleton_complete),
            ("min-degree-lower-bound", self.min_degree_lower_bound),
            ("max-degree-upper-bound", self.max_degree_upper_bound),
            ("equigenerated-half", self.equigenerated_half),
            ("dimension-bound", self.dimension_bound),
        )

    @property
    def all_pass(self) -> bool:
        return self.applicable and all(v is not False for _, v in self.as_items())


def necessary_conditions(ideal: MonomialIdeal) -> NecessaryConditionsReport:
    """Evaluate the face-count constraints that hold for every f-ideal.

    With f the common f-vector, alpha/omega the least/greatest generator
    degree and n the ambient size: the facet complex contains the complete
    (alpha-2)-skeleton; 2*f_{alpha-1} >= C(n, alpha); 2*f_{omega-1} <=
    C(n, omega), with equality of the two bounds in the equigenerated case;
    and both complexes have dimension omega-1 <= n-2.
    """
    _require_proper(ideal)
    if not is_f_ideal(ideal):
        return NecessaryConditionsReport(False, None, None, None, None, None)
    n = ideal.n
    alpha, omega = ideal.degree_extremes()
    f = f_vector(facet_complex(ideal))
    skeleton = all(f[i + 1] == comb(n, i + 1) for i in range(alpha - 1))
    lower = 2 * f[alpha] >= comb(n, alpha)
    upper = 2 * f[omega] <= comb(n, omega)
    half = (2 * f[alpha] == comb(n, alpha)) if alpha == omega else None
    dims = (
        dimension(facet_complex(ideal)) == omega - 1
        and dimension(nonface_complex(ideal)) == omega - 1
        and omega - 1 <= n - 2
    )
    return NecessaryConditionsReport(True, skeleton, lower, upper, half, dims)


@dataclass(frozen=True, slots=True)
class ImplicationCheck:
    """One hypothesis-conclusion pair; the conclusion is vacuously true when untriggered."""

    hypothesis_held: bool
    conclusion_verified: bool


@dataclass(frozen=True, slots=True)
class GeneratorDegreeReport:
    """Forced generator degrees for mixed-degree f-ideals."""

    applicable: bool
    above_min: ImplicationCheck | None
    below_max: ImplicationCheck | None


def generator_degree_implications(ideal: MonomialIdeal) -> GeneratorDegreeReport:
    """For a mixed-degree f-ideal, test the two forced-generator-degree implications.

    If f_{alpha-1} > C(n, alpha) - n + alpha there must be a generator of
    degree alpha+1; if f_{omega-1} < omega there must be one of degree
    omega-1.  Reports are vacuous when the hypotheses fail.
    """
    _require_proper(ideal)
    alpha, omega = ideal.degree_extremes()
    if alpha == omega or not is_f_ideal(ideal):
        return GeneratorDegreeReport(False, None, None)
    n = ideal.n
    f = f_vector(facet_complex(ideal))
    degrees = {g.degree for g in ideal.generators}
    hyp_low = f[alpha] > comb(n, alpha) - n + alpha
    low = ImplicationCheck(hyp_low, (alpha + 1 in degrees) if hyp_low else True)
    hyp_high = f[omega] < omega
    high = ImplicationCheck(hyp_high, (omega - 1 in degrees) if hyp_high else True)
    return GeneratorDegreeReport(True, low, high)


@dataclass(frozen=True, slots=True)
class DegreeNMinus2Report:
    """Three equivalent views of an ideal equigenerated in degree n-2."""

    applicable: bool
    f_ideal: bool | None
    dual_f_ideal: bool | None
    dual_unmixed_half: bool | None

    @property
    def agree(self) -> bool:
        return self.applicable and self.f_ideal == self.dual_f_ideal == self.dual_unmixed_half


def degree_n_minus_2_equivalence(ideal: MonomialIdeal) -> DegreeNMinus2Report:
    """For an ideal equigenerated in degree n-2, evaluate three equivalent tests.

    (a) the ideal is an f-ideal; (b) its dual is an f-ideal; (c) the dual
    (equigenerated in degree 2) uses every variable and is unmixed of height
    n-2 with exactly C(n, 2)/2 generators.  The three booleans always agree;
    the report keeps them separate so the equivalence itself stays observable.
    """
    _require_proper(ideal)
    n = ideal.n
    alpha, omega = ideal.degree_extremes()
    if not (alpha == omega == n - 2) or n < 3:
        return DegreeNMinus2Report(False, None, None, None)
    a = is_f_ideal(ideal)
    dual = newton_dual(ideal)
    b = is_f_ideal(dual)
    mp = minimal_primes(dual)
    # full support is forced for degree-2 f-ideals: the non-face complex always
    # has all n vertices, so the facet complex must too
    support = 0
    for g in dual.generator_masks:
        support |= g
    c = (
        support == full_mask(n)
        and mp.unmixed
        and mp.height == n - 2
        and 2 * len(dual.generators) == comb(n, 2)
    )
    return DegreeNMinus2Report(True, a, b, c)
