"""Face-count realizability: Macaulay expansions and the Kruskal-Katona tests.

A candidate vector (1, f_0, ..., f_d) is the f-vector of some simplicial
complex on f_0 labeled vertices exactly when each entry respects the
Macaulay bound of its predecessor.  Besides that arithmetic test this
module carries an explicit witness check (build the colex-compressed
complex and verify downward closure), the complementary vector within a
chosen ambient, and the complement-form inequality test.  All four are
equivalent and the test suite sweeps them against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Sequence

from .ideals import InternalCheckError, degree_masks, iter_antichain_masks


class NotComplementableError(ValueError):
    """Some entry exceeds its binomial ceiling, so the complement has a negative entry."""


class OracleUnavailableError(ValueError):
    """The witness oracle only runs on small vertex counts."""


@dataclass(frozen=True, slots=True)
class MacaulayExpansion:
    """The unique greedy binomial expansion of a positive integer at an index.

    terms is ((a_j, j), (a_{j-1}, j-1), ..., (a_k, k)) with strictly
    decreasing tops a_j > ... > a_k >= k >= 1 and value = sum C(a_i, i).
    """

    value: int
    index: int
    terms: tuple[tuple[int, int], ...]

    def bound(self) -> int:
        """Raise every lower index by one: sum C(a_i, i+1)."""
        return sum(comb(top, low + 1) for top, low in self.terms)


def macaulay_expansion(a: int, j: int) -> MacaulayExpansion:
    """Greedy expansion of a >= 1 as C(a_j, j) + ... + C(a_k, k)."""
    if a < 1:
        raise ValueError(f"expansion needs a >= 1, got {a}")
    if j < 1:
        raise ValueError(f"expansion needs index j >= 1, got {j}")
    terms: list[tuple[int, int]] = []
    rem = a
    i = j
    while rem > 0:
        # i >= 1 always terminates: at i = 1, C(rem, 1) = rem
        t = i
        while comb(t + 1, i) <= rem:
            t += 1
        terms.append((t, i))
        rem -= comb(t, i)
        i -= 1
    tops = [t for t, _ in terms]
    if any(x <= y for x, y in zip(tops, tops[1:])) or terms[-1][0] < terms[-1][1]:
        raise InternalCheckError(f"greedy expansion of {a} at {j} is malformed: {terms}")
    return MacaulayExpansion(a, j, tuple(terms))


@lru_cache(maxsize=None)
def macaulay_bound(a: int, j: int) -> int:
    """The j-th Macaulay bound a^(j); by convention 0 at a = 0."""
    if a == 0:
        return 0
    return macaulay_expansion(a, j).bound()


def _is_candidate(f: Sequence[int]) -> bool:
    """Shape test: () and (1,) are the void and irrelevant vectors; otherwise
    the leading entry is 1 and every entry is positive."""
    if len(f) == 0:
        return True
    if f[0] != 1:
        return False
    return all(x >= 1 for x in f[1:])


def _check_entries(f: Sequence[int]) -> tuple[int, ...]:
    f = tuple(f)
    for x in f:
        if not isinstance(x, int) or isinstance(x, bool):
            raise ValueError(f"f-vector entries must be ints, got {x!r}")
        if x < 0:
            raise ValueError(f"f-vector entries must be non-negative, got {x}")
    return f


def kk_valid(f: Sequence[int]) -> bool:
    """Arithmetic realizability: f_t <= f_{t-1}^(t) for 1 <= t <= d.

    Returns False for tuples that cannot be any complex's f-vector at all
    (leading entry not 1, or an internal zero).
    """
    f = _check_entries(f)
    if not _is_candidate(f):
        return False
    d = len(f) - 2
    for t in range(1, d + 1):
        if f[t + 1] > macaulay_bound(f[t], t):
            return False
    return True


def complement_fvector_raw(f: Sequence[int], n: int) -> tuple[int, ...]:
    """Untrimmed complement within ambient n: entry i is C(n, i) - f_{n-i-1}.

    Entries of f beyond its dimension count as zero.  Any negative result
    raises NotComplementableError.
    """
    f = _check_entries(f)
    if n < 1:
        raise ValueError("ambient n must be positive")

    def fdim(t: int) -> int:
        return f[t + 1] if 0 <= t + 1 < len(f) else 0

    out = []
    for i in range(n + 1):
        v = comb(n, i) - fdim(n - i - 1)
        if v < 0:
            raise NotComplementableError(
                f"entry f_{n - i - 1} = {fdim(n - i - 1)} exceeds C({n}, {n - i}) = {comb(n, n - i)}"
            )
        out.append(v)
    return tuple(out)


def complement_fvector(f: Sequence[int], n: int) -> tuple[int, ...]:
    """Complement vector with trailing zeros trimmed; () when everything cancels."""
    raw = list(complement_fvector_raw(f, n))
    while raw and raw[-1] == 0:
        raw.pop()
    return tuple(raw)


def kk_valid_dual(f: Sequence[int], n: int) -> bool:
    """Complement-form realizability within ambient n.

    Tests C(n, t+1) - [C(n, t+2) - f_{t+1}]^(n-t-2) <= f_t for 0 <= t <= d-1.
    A negative bracket means f_{t+1} exceeds its binomial ceiling, which no
    complex on n vertices allows, so the answer is False.
    """
    f = _check_entries(f)
    if n < 1:
        raise ValueError("ambient n must be positive")
    if not _is_candidate(f):
        return False
    d = len(f) - 2
    for t in range(d):
        bracket = comb(n, t + 2) - f[t + 2]
        if bracket < 0:
            return False
        bound = macaulay_bound(bracket, n - t - 2) if bracket else 0
        if comb(n, t + 1) - bound > f[t + 1]:
            return False
    return True


@lru_cache(maxsize=None)
def _closure_requirement(n: int, k: int) -> tuple[int, ...]:
    """entry m: how many colex (k-1)-subsets the first m colex k-subsets need.

    Computed by explicit construction: walk the k-subsets of {1..n} in colex
    order (ascending mask), take each one's (k-1)-subsets, and track the
    largest colex rank seen so far.  Feeds the compressed-complex witness.
    """
    ksets = degree_masks(n, k)
    rank = {m: r for r, m in enumerate(degree_masks(n, k - 1))}
    req = [0]
    worst = 0
    for m in ksets:
        mm = m
        while mm:
            low = mm & -mm
            worst = max(worst, rank[m ^ low] + 1)
            mm ^= low
        req.append(worst)
    return tuple(req)


def exists_complex(f: Sequence[int]) -> bool:
    """Witness-based realizability on n = f_0 labeled vertices, for f_0 <= 7.

    Builds the colex-compressed face selection (first f_t of the (t+1)-subsets
    in colex order, per dimension) and checks it is downward closed.  By the
    compression theorem this succeeds exactly when some complex realizes f.
    """
    f = _check_entries(f)
    if len(f) <= 1:
        return _is_candidate(f)
    if not _is_candidate(f):
        return False
    n = f[1]
    if n > 7:
        raise OracleUnavailableError(f"witness oracle supports f_0 <= 7, got {n}")
    d = len(f) - 2
    for t in range(d + 1):
        if f[t + 1] > comb(n, t + 1):
            return False
    for t in range(1, d + 1):
        if _closure_requirement(n, t + 1)[f[t + 1]] > f[t]:
            return False
    return True


@lru_cache(maxsize=None)
def _realized_small() -> frozenset[tuple[int, ...]]:
    """f-vectors of every complex on at most 5 labeled vertices, the hard way."""
    from .complexes import SimplicialComplex

    found = {(), (1,)}
    for facets in iter_antichain_masks(5):
        found.add(SimplicialComplex(facets).f_vector())
    return frozenset(found)


def exists_complex_brute(f: Sequence[int]) -> bool:
    """Exhaustive realizability over all complexes with f_0 <= 5 vertices."""
    f = _check_entries(f)
    if len(f) > 1 and f[1] > 5:
        raise OracleUnavailableError(f"exhaustive check supports f_0 <= 5, got {f[1]}")
    return f in _realized_small()
