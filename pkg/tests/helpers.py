"""Brute-force oracles and shared fixtures for the test suite.

Everything here recomputes answers from first principles, by exhaustive
sweeps over subsets of {1..n}, deliberately sharing no algorithm with the
library.  Frozen expected values in the tests were produced by these
oracles; property tests compare the two sides directly.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb

import hypothesis.strategies as st

from fideals import MonomialIdeal


def popcount(m: int) -> int:
    return bin(m).count("1")


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def mask_from(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << (i - 1)
    return m


def indices_of(mask: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def canon(masks) -> tuple[int, ...]:
    return tuple(sorted(set(masks), key=lambda m: (popcount(m), m)))


def brute_minimal(masks) -> tuple[int, ...]:
    """Divisibility-minimal members, canonically ordered."""
    ms = set(masks)
    return canon(m for m in ms if not any(o != m and is_subset(o, m) for o in ms))


def brute_maximal(masks) -> tuple[int, ...]:
    ms = set(masks)
    return canon(m for m in ms if not any(o != m and is_subset(m, o) for o in ms))


def member(mask: int, gens) -> bool:
    """The monomial of mask lies in the ideal generated by gens."""
    return any(is_subset(g, mask) for g in gens)


def nonmember_masks(n: int, gens) -> list[int]:
    return [m for m in range(1 << n) if not member(m, gens)]


def downward_closure(facets) -> set[int]:
    faces: set[int] = set()
    for f in facets:
        s = f
        while True:
            faces.add(s)
            if s == 0:
                break
            s = (s - 1) & f
    return faces


def fvec_of_faces(faces) -> tuple[int, ...]:
    """f-vector of an explicit face list; () when the list is empty."""
    faces = set(faces)
    if not faces:
        return ()
    counts = [0] * (max(popcount(f) for f in faces) + 1)
    for f in faces:
        counts[popcount(f)] += 1
    return tuple(counts)


def brute_facet_fvector(gens) -> tuple[int, ...]:
    """f-vector of the complex whose facets are the generator supports."""
    return fvec_of_faces(downward_closure(gens))


def brute_nonface_fvector(n: int, gens) -> tuple[int, ...]:
    """f-vector of the complex whose faces are the non-member supports."""
    return fvec_of_faces(nonmember_masks(n, gens))


def brute_is_f_ideal(n: int, gens) -> bool:
    return brute_facet_fvector(gens) == brute_nonface_fvector(n, gens)


def brute_partition(n: int, gens, d: int):
    """(free, divisors, generators, multiples) masks of degree d, ascending."""
    genset = set(gens)
    free, div, gen, mult = [], [], [], []
    for m in range(1 << n):
        if popcount(m) != d:
            continue
        if m in genset:
            gen.append(m)
        elif member(m, gens):
            mult.append(m)
        elif any(is_subset(m, g) for g in gens):
            div.append(m)
        else:
            free.append(m)
    return free, div, gen, mult


def brute_transversals(n: int, supports) -> tuple[int, ...]:
    """Minimal hitting sets, filtered out of every subset of {1..n}."""
    sups = list(supports)
    hitting = [m for m in range(1 << n) if all(m & s for s in sups)]
    return brute_minimal(hitting)


@lru_cache(maxsize=None)
def brute_antichains(n: int) -> tuple[tuple[int, ...], ...]:
    """Every non-empty antichain of non-empty subsets of {1..n}; n <= 4 only.

    Built the slow way (filter all 2^(2^n - 1) subsets of the mask pool) so
    the library's recursive walk has a genuinely independent mirror.
    """
    assert n <= 4, "oracle is exponential in 2^n"
    pool = list(range(1, 1 << n))
    out = []
    for bits in range(1, 1 << len(pool)):
        chosen = [pool[i] for i in range(len(pool)) if bits >> i & 1]
        if all(
            not is_subset(a, b) and not is_subset(b, a)
            for a, b in combinations(chosen, 2)
        ):
            out.append(canon(chosen))
    return tuple(out)


def brute_binomial_expansions(a: int, j: int):
    """All representations a = C(t_j, j) + C(t_{j-1}, j-1) + ... + C(t_k, k)
    with consecutive indices down from j and strictly decreasing t_i >= i."""
    out = []

    def rec(rem: int, i: int, prev_top: int, acc: list) -> None:
        if rem == 0:
            if acc:
                out.append(tuple(acc))
            return
        if i < 1:
            return
        top = i
        while top < prev_top and comb(top, i) <= rem:
            rec(rem - comb(top, i), i - 1, top, acc + [(top, i)])
            top += 1

    rec(a, j, 1 << 30, [])
    return out


@lru_cache(maxsize=None)
def brute_realized_fvectors(n: int) -> frozenset[tuple[int, ...]]:
    """f-vectors of every complex on at most n labeled vertices (n <= 4)."""
    found = {(), (1,)}
    for facets in brute_antichains(n):
        found.add(fvec_of_faces(downward_closure(facets)))
    return frozenset(found)


def brute_census_equigenerated(n: int, d: int) -> list[tuple[int, ...]]:
    """Unpruned census: every subset of the degree-d monomials whose ideal
    passes the brute-force f-ideal test.  Exponential in C(n,d)."""
    dsets = [m for m in range(1 << n) if popcount(m) == d]
    found = []
    for bits in range(1, 1 << len(dsets)):
        gens = tuple(dsets[i] for i in range(len(dsets)) if bits >> i & 1)
        if brute_is_f_ideal(n, gens):
            found.append(gens)
    return found


# -- sample ideals used across files ----------------------------------------

def golden_ideal() -> MonomialIdeal:
    """The running five-variable example with generator degrees 2 and 3."""
    return MonomialIdeal.generated_by(5, [(1, 4), (2, 5), (1, 2, 3), (3, 4, 5)])


def uneven_vertices_ideal() -> MonomialIdeal:
    """f-ideal in five variables whose two complexes use different vertices."""
    return MonomialIdeal.generated_by(5, [(1,), (2, 3), (2, 4), (3, 4)])


def path_ideal() -> MonomialIdeal:
    """Edge ideal of the path 1-2-3-4; equigenerated degree 2 f-ideal."""
    return MonomialIdeal.generated_by(4, [(1, 2), (2, 3), (3, 4)])


def pentagon_ideal() -> MonomialIdeal:
    """Edge ideal of the 5-cycle; an f-ideal whose dual has mixed prime heights."""
    return MonomialIdeal.generated_by(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])


# -- hypothesis strategies ---------------------------------------------------

@st.composite
def mask_families(draw, min_n: int = 2, max_n: int = 6, max_size: int = 7):
    """(n, masks): a non-empty list of non-empty masks over n variables."""
    n = draw(st.integers(min_n, max_n))
    top = (1 << n) - 1
    masks = draw(st.lists(st.integers(1, top), min_size=1, max_size=max_size))
    return n, tuple(masks)


@st.composite
def ideals(draw, min_n: int = 2, max_n: int = 6, allow_full: bool = True, max_size: int = 7):
    """A random proper square-free ideal (never zero, never unit)."""
    n = draw(st.integers(min_n, max_n))
    top = (1 << n) - 1
    upper = top if allow_full else top - 1
    masks = draw(st.lists(st.integers(1, upper), min_size=1, max_size=max_size))
    return MonomialIdeal.from_masks(n, brute_minimal(masks))


@st.composite
def exponent_vectors(draw, min_n: int = 1, max_n: int = 4, max_gens: int = 5):
    """(n, vectors): non-zero exponent tuples for ExponentIdeal tests."""
    n = draw(st.integers(min_n, max_n))
    vec = st.tuples(*[st.integers(0, 3)] * n).filter(lambda e: any(e))
    vecs = draw(st.lists(vec, min_size=1, max_size=max_gens))
    return n, vecs
