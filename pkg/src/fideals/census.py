"""Census machinery: exhaustive and sampled searches for f-ideals.

The equigenerated census fixes an ambient n and a degree d and walks every
half-sized subset of the degree-d monomials (any other size is pruned: the
generator and free classes could never balance in degree d).  A candidate
passes exactly when every (d-1)-subset of the variables lies under some
generator and every (d+1)-subset lies over one; that is the per-degree
partition criterion specialized to equigenerated antichains, and the test
suite checks it against the general decision procedure.

Budgets cap the number of candidates examined; an exhausted budget marks
the record and its count is then only a lower bound.  Witness lists are
capped separately.  All walks are deterministic, including under workers.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations, islice
from math import comb
from typing import Iterator

from .duality import newton_dual
from .fideal import _is_f_ideal_masks
from .ideals import (
    MonomialIdeal,
    SquareFreeMonomial,
    degree_masks,
    full_mask,
    iter_antichain_masks,
    minimalize_masks,
)

DEFAULT_WITNESS_CAP = 100
EXHAUSTIVE_LIMIT = 5  # antichain walks get infeasible past this many variables


@dataclass(frozen=True, slots=True)
class CensusRecord:
    """Outcome of one census run.  degree is an int or "mixed"."""

    n: int
    degree: int | str
    count: int
    witnesses: tuple[MonomialIdeal, ...]
    examined: int
    elapsed: float
    budget_exhausted: bool


def _cover_masks(n: int, d: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Constraint bitmasks over the index space of the degree-d monomials.

    lower[i]: which degree-d monomials contain the i-th degree-(d-1) monomial.
    upper[i]: which degree-d monomials lie inside the i-th degree-(d+1) one.
    """
    dsets = degree_masks(n, d)
    pos = {m: i for i, m in enumerate(dsets)}
    lower = []
    if d >= 1:
        for s in degree_masks(n, d - 1):
            bits = 0
            for j in range(n):
                t = s | (1 << j)
                if t != s and t in pos:
                    bits |= 1 << pos[t]
            lower.append(bits)
    upper = []
    if d + 1 <= n:
        for s in degree_masks(n, d + 1):
            bits = 0
            ss = s
            while ss:
                low = ss & -ss
                bits |= 1 << pos[s ^ low]
                ss ^= low
            upper.append(bits)
    return tuple(lower), tuple(upper)


def _scan_equigenerated(
    n: int, d: int, start: int, stop: int, witness_cap: int
) -> tuple[int, list[tuple[int, ...]]]:
    """Test candidates with global index in [start, stop); returns (count, capped witnesses)."""
    dsets = degree_masks(n, d)
    k = len(dsets) // 2
    lower, upper = _cover_masks(n, d)
    count = 0
    witnesses: list[tuple[int, ...]] = []
    for combo in islice(combinations(range(len(dsets)), k), start, stop):
        s_bits = 0
        for i in combo:
            s_bits |= 1 << i
        if all(b & s_bits for b in lower) and all(b & s_bits for b in upper):
            count += 1
            if len(witnesses) < witness_cap:
                witnesses.append(tuple(dsets[i] for i in combo))
    return count, witnesses


def _scan_chunk(args: tuple[int, int, int, int, int]) -> tuple[int, list[tuple[int, ...]]]:
    return _scan_equigenerated(*args)


def enumerate_equigenerated(
    n: int,
    d: int,
    budget: int | None = None,
    *,
    witness_cap: int = DEFAULT_WITNESS_CAP,
    workers: int = 1,
) -> CensusRecord:
    """Census of f-ideals generated by exactly C(n, d)/2 degree-d monomials.

    An odd C(n, d) makes the census empty immediately.  budget caps the
    candidates examined; workers > 1 splits the index range, with output
    identical to the serial walk.
    """
    if not 1 <= n <= 8:
        raise ValueError(f"equigenerated census supports 1 <= n <= 8, got {n}")
    if not 1 <= d <= n - 1:
        raise ValueError(f"degree must satisfy 1 <= d <= n-1, got {d}")
    if budget is not None and budget < 0:
        raise ValueError("budget must be non-negative")
    start_time = time.perf_counter()
    total = comb(n, d)
    if total % 2:
        return CensusRecord(n, d, 0, (), 0, time.perf_counter() - start_time, False)
    n_candidates = comb(total, total // 2)
    examined = n_candidates if budget is None else min(budget, n_candidates)
    exhausted = examined < n_candidates

    if workers > 1 and examined > 0:
        chunk = -(-examined // workers)
        specs = [
            (n, d, lo, min(lo + chunk, examined), witness_cap)
            for lo in range(0, examined, chunk)
        ]
        results = None
        try:
            from multiprocessing import Pool

            with Pool(len(specs)) as pool:
                results = pool.map(_scan_chunk, specs)
        except OSError:
            results = None  # fall back to the serial walk below
        if results is not None:
            count = sum(c for c, _ in results)
            masks: list[tuple[int, ...]] = []
            for _, w in results:
                masks.extend(w)
        else:
            count, masks = _scan_equigenerated(n, d, 0, examined, witness_cap)
    else:
        count, masks = _scan_equigenerated(n, d, 0, examined, witness_cap)

    witnesses = tuple(
        MonomialIdeal(n, tuple(SquareFreeMonomial(n, m) for m in ms))
        for ms in masks[:witness_cap]
    )
    return CensusRecord(n, d, count, witnesses, examined, time.perf_counter() - start_time, exhausted)


def random_ideal(n: int, rng: random.Random, *, max_generators: int | None = None) -> MonomialIdeal:
    """A random non-zero square-free ideal: a few uniform masks, minimalized."""
    top = full_mask(n)
    k = rng.randint(1, max_generators or min(top, n + 3))
    masks = [rng.randint(1, top) for _ in range(k)]
    return MonomialIdeal.from_masks(n, masks)


def random_ideals(n: int, count: int, seed: int = 0) -> Iterator[MonomialIdeal]:
    rng = random.Random(seed)
    for _ in range(count):
        yield random_ideal(n, rng)


def _census_mixed(
    n: int,
    keep,
    budget: int | None,
    witness_cap: int,
    seed: int,
) -> CensusRecord:
    """Walk all antichains (exhaustive n <= 5, sampled beyond) keeping f-ideals."""
    start_time = time.perf_counter()
    count = 0
    examined = 0
    witnesses: list[MonomialIdeal] = []
    exhausted = False
    if n <= EXHAUSTIVE_LIMIT:
        for masks in iter_antichain_masks(n):
            if budget is not None and examined >= budget:
                exhausted = True
                break
            examined += 1
            if _is_f_ideal_masks(n, masks) and keep(masks):
                count += 1
                if len(witnesses) < witness_cap:
                    witnesses.append(
                        MonomialIdeal(n, tuple(SquareFreeMonomial(n, m) for m in masks))
                    )
    else:
        if budget is None:
            raise ValueError(f"exhaustive walk only runs for n <= {EXHAUSTIVE_LIMIT}; pass a budget to sample")
        rng = random.Random(seed)
        seen: set[tuple[int, ...]] = set()
        found: set[tuple[int, ...]] = set()
        for _ in range(budget):
            examined += 1
            masks = tuple(minimalize_masks(rng.randint(1, full_mask(n)) for _ in range(rng.randint(1, n + 3))))
            if masks in seen:
                continue
            seen.add(masks)
            if _is_f_ideal_masks(n, masks) and keep(masks):
                found.add(masks)
                if len(witnesses) < witness_cap:
                    witnesses.append(
                        MonomialIdeal(n, tuple(SquareFreeMonomial(n, m) for m in masks))
                    )
        count = len(found)
        exhausted = True  # sampling never certifies completeness
    return CensusRecord(n, "mixed", count, tuple(witnesses), examined, time.perf_counter() - start_time, exhausted)


def enumerate_all_fideals(
    n: int,
    budget: int | None = None,
    *,
    witness_cap: int = DEFAULT_WITNESS_CAP,
    seed: int = 0,
) -> CensusRecord:
    """All f-ideals over n variables, any generator degrees."""
    return _census_mixed(n, lambda masks: True, budget, witness_cap, seed)


def search_degree_gap(
    n: int,
    gap: int,
    budget: int | None = None,
    *,
    witness_cap: int = DEFAULT_WITNESS_CAP,
    seed: int = 0,
) -> CensusRecord:
    """f-ideals whose generator degrees span exactly the given gap (omega - alpha)."""
    if gap < 0:
        raise ValueError("gap must be non-negative")

    def keep(masks: tuple[int, ...]) -> bool:
        degs = [m.bit_count() for m in masks]
        return max(degs) - min(degs) == gap

    return _census_mixed(n, keep, budget, witness_cap, seed)


@dataclass(frozen=True, slots=True)
class PairingReport:
    """Count comparison between the degree d and degree n-d censuses."""

    n: int
    d: int
    count: int
    dual_count: int
    equal: bool
    bijection_checked: bool
    conclusive: bool


def verify_duality_pairing(
    n: int,
    d: int,
    budget: int | None = None,
    *,
    witness_cap: int = DEFAULT_WITNESS_CAP,
    workers: int = 1,
) -> PairingReport:
    """Check |census(n, d)| = |census(n, n-d)| and push witnesses through the dual.

    Every stored witness is dualized and re-tested for membership on the
    other side (complementary degree plus the f-ideal property).  Budget
    exhaustion on either side makes the comparison inconclusive.
    """
    a = enumerate_equigenerated(n, d, budget, witness_cap=witness_cap, workers=workers)
    b = enumerate_equigenerated(n, n - d, budget, witness_cap=witness_cap, workers=workers)
    conclusive = not (a.budget_exhausted or b.budget_exhausted)
    mapped = True
    for rec, other_degree in ((a, n - d), (b, d)):
        for w in rec.witnesses:
            dual = newton_dual(w)
            if not (
                dual.is_equigenerated
                and dual.alpha == other_degree
                and _is_f_ideal_masks(n, dual.generator_masks)
                and newton_dual(dual) == w
            ):
                mapped = False
    equal = a.count == b.count
    return PairingReport(n, d, a.count, b.count, equal, conclusive and mapped and equal, conclusive)
