"""Simplicial complexes on subsets of {1..n}, stored by their facet masks.

Two degenerate complexes are kept distinct: the void complex (no faces at
all, empty facet list) and the irrelevant complex (only the empty face,
facet list (0,)).  The vertex set is always the union of the facets.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable

from .ideals import (
    AmbientMismatchError,
    MonomialIdeal,
    ZeroIdealError,
    full_mask,
    mask_indices,
)


class UnitIdealWarning(UserWarning):
    """The unit ideal was handed to a complex constructor."""


def _maximal_masks(masks: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-maximal masks, canonically ordered."""
    unique = sorted(set(masks), key=lambda m: (m.bit_count(), m), reverse=True)
    kept: list[int] = []
    for m in unique:
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return tuple(sorted(kept, key=lambda m: (m.bit_count(), m)))


@dataclass(frozen=True, slots=True)
class SimplicialComplex:
    """An abstract simplicial complex given by its facets (maximal faces)."""

    facets: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.facets != _maximal_masks(self.facets):
            raise ValueError("facets must be a canonically ordered antichain")

    @classmethod
    def from_faces(cls, faces: Iterable[Iterable[int] | int]) -> "SimplicialComplex":
        """Build from any face collection (index iterables or masks); keeps maximal ones."""
        masks = []
        for f in faces:
            if isinstance(f, int):
                masks.append(f)
            else:
                m = 0
                for i in f:
                    if i < 1:
                        raise ValueError(f"vertex index {i} must be positive")
                    m |= 1 << (i - 1)
                masks.append(m)
        return cls(_maximal_masks(masks))

    @classmethod
    def void(cls) -> "SimplicialComplex":
        return cls(())

    @classmethod
    def irrelevant(cls) -> "SimplicialComplex":
        return cls((0,))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_irrelevant(self) -> bool:
        return self.facets == (0,)

    @property
    def vertex_mask(self) -> int:
        m = 0
        for f in self.facets:
            m |= f
        return m

    def vertices(self) -> tuple[int, ...]:
        return mask_indices(self.vertex_mask)

    @property
    def dim(self) -> int:
        """Dimension: largest face size minus one.  Undefined for the void complex."""
        if self.is_void:
            raise ValueError("the void complex has no dimension")
        return max(f.bit_count() for f in self.facets) - 1

    def has_face_mask(self, mask: int) -> bool:
        return any(mask & ~f == 0 for f in self.facets)

    def has_face(self, face: Iterable[int]) -> bool:
        m = 0
        for i in face:
            if i < 1:
                return False
            m |= 1 << (i - 1)
        return self.has_face_mask(m)

    def face_masks(self) -> set[int]:
        """Every face of the complex, as a set of masks."""
        faces: set[int] = set()
        for f in self.facets:
            s = f
            while True:
                faces.add(s)
                if s == 0:
                    break
                s = (s - 1) & f
        return faces

    def facet_sets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(mask_indices(f) for f in self.facets)

    def f_vector(self) -> tuple[int, ...]:
        """(f_-1, f_0, ..., f_dim); empty tuple for the void complex."""
        if self.is_void:
            return ()
        counts = [0] * (self.dim + 2)
        for m in self.face_masks():
            counts[m.bit_count()] += 1
        return tuple(counts)

    def __str__(self) -> str:
        if self.is_void:
            return "{}"
        return "{" + ", ".join("{" + ",".join(map(str, mask_indices(f))) + "}" for f in self.facets) + "}"


def f_vector(complex_: SimplicialComplex) -> tuple[int, ...]:
    return complex_.f_vector()


def dimension(complex_: SimplicialComplex) -> int:
    return complex_.dim


def facet_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    """Complex whose facets are the supports of the minimal generators."""
    if ideal.is_zero:
        raise ZeroIdealError("the facet complex of the zero ideal is void")
    if ideal.is_unit:
        warnings.warn("facet complex of the unit ideal is the irrelevant complex", UnitIdealWarning)
        return SimplicialComplex.irrelevant()
    # minimal generators form an antichain, hence are exactly the facets
    return SimplicialComplex(ideal.generator_masks)


def nonface_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    """Complex whose faces are the supports of the square-free monomials outside the ideal.

    Facets are found by an exhaustive sweep over subsets from large to small,
    keeping maximal non-members; fine for the supported ambient sizes.
    """
    if ideal.is_zero:
        return SimplicialComplex((full_mask(ideal.n),))
    if ideal.is_unit:
        warnings.warn("every monomial lies in the unit ideal; returning the irrelevant complex", UnitIdealWarning)
        return SimplicialComplex.irrelevant()
    gens = ideal.generator_masks
    kept: list[int] = []
    order = sorted(range(1 << ideal.n), key=lambda m: m.bit_count(), reverse=True)
    for m in order:
        if any(g & ~m == 0 for g in gens):
            continue
        if any(m & ~k == 0 for k in kept):
            continue
        kept.append(m)
    return SimplicialComplex(_maximal_masks(kept))


def _ambient_mask(ambient_n: int, complex_: SimplicialComplex) -> int:
    if ambient_n < 1:
        raise ValueError("ambient vertex count must be positive")
    amb = full_mask(ambient_n)
    if complex_.vertex_mask & ~amb:
        raise AmbientMismatchError(
            f"complex vertices {complex_.vertices()} exceed ambient {{1..{ambient_n}}}"
        )
    return amb


def minimal_nonface_masks(complex_: SimplicialComplex, ambient_n: int) -> list[int]:
    """Minimal subsets of {1..ambient_n} that are not faces, canonically ordered.

    A subset is a minimal non-face when it is not a face but every proper
    subset is; downward closure reduces the test to the maximal proper subsets.
    """
    amb = _ambient_mask(ambient_n, complex_)
    out = []
    for m in sorted(range(amb + 1), key=lambda m: (m.bit_count(), m)):
        if complex_.has_face_mask(m):
            continue
        drop_ok = True
        mm = m
        while mm:
            low = mm & -mm
            if not complex_.has_face_mask(m ^ low):
                drop_ok = False
                break
            mm ^= low
        if drop_ok:
            out.append(m)
    return out


def alexander_dual(complex_: SimplicialComplex, ambient_n: int) -> SimplicialComplex:
    """Dual complex within {1..ambient_n}: faces are complements of non-faces.

    Facets of the dual are the ambient complements of the minimal non-faces.
    """
    amb = _ambient_mask(ambient_n, complex_)
    return SimplicialComplex(_maximal_masks(amb ^ m for m in minimal_nonface_masks(complex_, ambient_n)))


def nonface_ideal(complex_: SimplicialComplex, ambient_n: int) -> MonomialIdeal:
    """Ideal generated by the minimal non-faces within {1..ambient_n}.

    The full simplex yields the zero ideal; the void complex yields the unit
    ideal (the empty set is already a non-face).
    """
    _ambient_mask(ambient_n, complex_)
    masks = minimal_nonface_masks(complex_, ambient_n)
    return MonomialIdeal.from_masks(ambient_n, masks, allow_unit=True)
