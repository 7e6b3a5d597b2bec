"""Degree partitions, the f-ideal decision, certificates, and the report family."""

from math import comb

import pytest
from hypothesis import given

import helpers
from fideals import (
    MonomialIdeal,
    UnitIdealError,
    ZeroIdealError,
    certify,
    degree_n_minus_2_equivalence,
    degree_partition,
    f_vector,
    facet_complex,
    generator_degree_implications,
    is_f_ideal,
    necessary_conditions,
    newton_dual,
    nonface_complex,
)
from fideals.fideal import WARN_FULL_MONOMIAL, WARN_VERTEX_SETS
from fideals.ideals import degree_masks, iter_antichain_masks

GOLDEN_PARTITION_TABLE = (
    (0, 1, 0, 0),
    (0, 5, 0, 0),
    (2, 6, 2, 0),
    (2, 0, 2, 6),
    (0, 0, 0, 5),
    (0, 0, 0, 1),
)


def fdim(f: tuple, t: int) -> int:
    return f[t + 1] if 0 <= t + 1 < len(f) else 0


def proper_antichain_ideals(n):
    for masks in iter_antichain_masks(n):
        if masks and masks != (0,):
            yield MonomialIdeal.from_masks(n, masks)


class TestDegreePartition:
    def test_golden_degree_two(self):
        part = degree_partition(helpers.golden_ideal(), 2)
        assert part.sizes == (2, 6, 2, 0)
        assert tuple(m.mask for m in part.free) == (0b01010, 0b10001)
        assert tuple(str(m) for m in part.free) == ("x2*x4", "x1*x5")
        assert tuple(m.mask for m in part.generators) == (0b01001, 0b10010)
        assert part.total() == comb(5, 2)

    def test_golden_full_table(self):
        ideal = helpers.golden_ideal()
        table = tuple(degree_partition(ideal, d).sizes for d in range(6))
        assert table == GOLDEN_PARTITION_TABLE

    def test_degree_range(self):
        ideal = helpers.golden_ideal()
        with pytest.raises(ValueError):
            degree_partition(ideal, -1)
        with pytest.raises(ValueError):
            degree_partition(ideal, 6)

    def test_rejects_zero_and_unit(self):
        with pytest.raises(ZeroIdealError):
            degree_partition(MonomialIdeal.from_masks(3, []), 1)
        unit = MonomialIdeal.from_masks(3, [0], allow_unit=True)
        with pytest.raises(UnitIdealError):
            degree_partition(unit, 1)

    @given(helpers.ideals())
    def test_matches_brute_oracle(self, ideal):
        for d in range(ideal.n + 1):
            part = degree_partition(ideal, d)
            free, div, gen, mult = helpers.brute_partition(
                ideal.n, ideal.generator_masks, d
            )
            assert [m.mask for m in part.free] == free
            assert [m.mask for m in part.divisors] == div
            assert [m.mask for m in part.generators] == gen
            assert [m.mask for m in part.multiples] == mult

    @given(helpers.ideals())
    def test_partitions_whole_degree_slice(self, ideal):
        for d in range(ideal.n + 1):
            part = degree_partition(ideal, d)
            groups = (part.free, part.divisors, part.generators, part.multiples)
            masks = [m.mask for grp in groups for m in grp]
            assert sorted(masks) == list(degree_masks(ideal.n, d))
            assert len(set(masks)) == len(masks)

    @given(helpers.ideals())
    def test_counts_glue_to_face_counts(self, ideal):
        # non-members of degree d are the free and divisor monomials; faces of
        # the facet complex of that size are the divisors and generators
        fN = f_vector(nonface_complex(ideal))
        fF = f_vector(facet_complex(ideal))
        for d in range(ideal.n + 1):
            free, div, gen, _ = degree_partition(ideal, d).sizes
            assert fdim(fN, d - 1) == free + div
            assert fdim(fF, d - 1) == div + gen


class TestIsFIdeal:
    def test_known_answers(self):
        assert is_f_ideal(helpers.golden_ideal())
        assert is_f_ideal(helpers.uneven_vertices_ideal())
        assert is_f_ideal(helpers.pentagon_ideal())
        assert is_f_ideal(helpers.path_ideal())
        assert not is_f_ideal(MonomialIdeal.generated_by(3, [(1, 2)]))

    def test_methods_agree_on_samples(self):
        for ideal in (
            helpers.golden_ideal(),
            helpers.path_ideal(),
            MonomialIdeal.generated_by(3, [(1, 2)]),
            MonomialIdeal.generated_by(3, [(1, 2, 3)]),
        ):
            results = {is_f_ideal(ideal, method=m) for m in ("partition", "fvector", "both")}
            assert len(results) == 1

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            is_f_ideal(helpers.golden_ideal(), method="guess")

    def test_rejects_zero_and_unit(self):
        with pytest.raises(ZeroIdealError):
            is_f_ideal(MonomialIdeal.from_masks(2, []))
        with pytest.raises(UnitIdealError):
            is_f_ideal(MonomialIdeal.from_masks(2, [0], allow_unit=True))

    def test_exhaustive_vs_brute(self):
        for n in (1, 2, 3):
            for ideal in proper_antichain_ideals(n):
                expected = helpers.brute_is_f_ideal(ideal.n, ideal.generator_masks)
                assert is_f_ideal(ideal, method="both") == expected

    @given(helpers.ideals(max_n=5))
    def test_random_vs_brute(self, ideal):
        expected = helpers.brute_is_f_ideal(ideal.n, ideal.generator_masks)
        assert is_f_ideal(ideal, method="both") == expected


class TestCertify:
    def test_golden(self):
        cert = certify(helpers.golden_ideal())
        assert cert.is_f_ideal
        assert cert.f_facet == (1, 5, 8, 2)
        assert cert.f_nonface == (1, 5, 8, 2)
        assert cert.partition_sizes == GOLDEN_PARTITION_TABLE
        assert cert.first_failure is None
        assert cert.warnings == ()

    def test_single_edge_failure(self):
        cert = certify(MonomialIdeal.generated_by(3, [(1, 2)]))
        assert not cert.is_f_ideal
        assert cert.f_facet == (1, 2, 1)
        assert cert.f_nonface == (1, 3, 2)
        assert cert.partition_sizes == (
            (0, 1, 0, 0),
            (1, 2, 0, 0),
            (2, 0, 1, 0),
            (0, 0, 0, 1),
        )
        assert cert.first_failure == (1, 1, 0)

    def test_full_monomial_warning(self):
        cert = certify(MonomialIdeal.generated_by(3, [(1, 2, 3)]))
        assert WARN_FULL_MONOMIAL in cert.warnings
        assert cert.f_facet == (1, 3, 3, 1)
        assert cert.f_nonface == (1, 3, 3)
        assert not cert.is_f_ideal

    def test_vertex_set_warning(self):
        assert WARN_VERTEX_SETS in certify(MonomialIdeal.generated_by(2, [(1,)])).warnings
        assert WARN_VERTEX_SETS in certify(helpers.uneven_vertices_ideal()).warnings
        assert certify(helpers.path_ideal()).warnings == ()

    @given(helpers.ideals())
    def test_consistent_with_decision(self, ideal):
        cert = certify(ideal)
        assert cert.is_f_ideal == is_f_ideal(ideal, method="both")
        assert cert.is_f_ideal == (cert.first_failure is None)
        if cert.first_failure is not None:
            d, a, c = cert.first_failure
            assert cert.partition_sizes[d][0] == a
            assert cert.partition_sizes[d][2] == c
            assert a != c
            for row in cert.partition_sizes[:d]:
                assert row[0] == row[2]


class TestNecessaryConditions:
    def test_golden_passes_all(self):
        rep = necessary_conditions(helpers.golden_ideal())
        assert rep.applicable
        assert rep.skeleton_complete
        assert rep.min_degree_lower_bound  # 2*8 = 16 >= C(5,2) = 10
        assert rep.max_degree_upper_bound  # 2*2 = 4 <= C(5,3) = 10
        assert rep.equigenerated_half is None
        assert rep.dimension_bound
        assert rep.all_pass
        assert [name for name, _ in rep.as_items()] == [
            "skeleton-complete",
            "min-degree-lower-bound",
            "max-degree-upper-bound",
            "equigenerated-half",
            "dimension-bound",
        ]

    def test_uneven_passes(self):
        rep = necessary_conditions(helpers.uneven_vertices_ideal())
        assert rep.applicable and rep.all_pass
        assert rep.equigenerated_half is None

    def test_equigenerated_half_exact(self):
        rep = necessary_conditions(helpers.path_ideal())
        assert rep.equigenerated_half is True  # 2*3 == C(4,2)
        assert rep.all_pass

    def test_not_applicable(self):
        rep = necessary_conditions(MonomialIdeal.generated_by(3, [(1, 2)]))
        assert not rep.applicable
        assert all(v is None for _, v in rep.as_items())
        assert not rep.all_pass

    @given(helpers.ideals(allow_full=False))
    def test_every_f_ideal_passes(self, ideal):
        rep = necessary_conditions(ideal)
        if rep.applicable:
            assert rep.all_pass


class TestGeneratorDegreeImplications:
    def test_golden_both_triggered(self):
        rep = generator_degree_implications(helpers.golden_ideal())
        assert rep.applicable
        assert rep.above_min.hypothesis_held  # 8 > C(5,2) - 5 + 2 = 7
        assert rep.above_min.conclusion_verified
        assert rep.below_max.hypothesis_held  # 2 < 3
        assert rep.below_max.conclusion_verified

    def test_uneven_low_side_only(self):
        rep = generator_degree_implications(helpers.uneven_vertices_ideal())
        assert rep.applicable
        assert rep.above_min.hypothesis_held  # 4 > C(5,1) - 5 + 1 = 1
        assert rep.above_min.conclusion_verified
        assert not rep.below_max.hypothesis_held  # 3 >= omega = 2
        assert rep.below_max.conclusion_verified

    def test_inapplicable_cases(self):
        for ideal in (helpers.path_ideal(), MonomialIdeal.generated_by(3, [(1, 2)])):
            rep = generator_degree_implications(ideal)
            assert not rep.applicable
            assert rep.above_min is None and rep.below_max is None

    @given(helpers.ideals(allow_full=False))
    def test_conclusions_always_verified(self, ideal):
        rep = generator_degree_implications(ideal)
        if rep.applicable:
            assert rep.above_min.conclusion_verified
            assert rep.below_max.conclusion_verified


class TestDegreeNMinus2Equivalence:
    def test_path_ideal_all_true(self):
        rep = degree_n_minus_2_equivalence(helpers.path_ideal())
        assert rep.applicable
        assert (rep.f_ideal, rep.dual_f_ideal, rep.dual_unmixed_half) == (True, True, True)
        assert rep.agree

    def test_single_edge_all_false(self):
        rep = degree_n_minus_2_equivalence(MonomialIdeal.generated_by(4, [(1, 2)]))
        assert rep.applicable
        assert (rep.f_ideal, rep.dual_f_ideal, rep.dual_unmixed_half) == (False, False, False)
        assert rep.agree

    def test_single_vertex_all_false(self):
        # the dual is unmixed of the right height but has too few generators
        rep = degree_n_minus_2_equivalence(MonomialIdeal.generated_by(3, [(1,)]))
        assert rep.applicable
        assert (rep.f_ideal, rep.dual_f_ideal, rep.dual_unmixed_half) == (False, False, False)

    def test_star_all_false(self):
        # dual is the triangle on {2,3,4}: unmixed of height 2 with 3 = C(4,2)/2
        # generators, but it misses vertex 1, so no clause may report true
        rep = degree_n_minus_2_equivalence(MonomialIdeal.generated_by(4, [(1, 2), (1, 3), (1, 4)]))
        assert rep.applicable
        assert (rep.f_ideal, rep.dual_f_ideal, rep.dual_unmixed_half) == (False, False, False)
        assert rep.agree

    def test_pentagon_dual_all_true(self):
        rep = degree_n_minus_2_equivalence(newton_dual(helpers.pentagon_ideal()))
        assert rep.applicable
        assert (rep.f_ideal, rep.dual_f_ideal, rep.dual_unmixed_half) == (True, True, True)

    def test_wrong_degree_not_applicable(self):
        for ideal in (
            helpers.golden_ideal(),
            helpers.pentagon_ideal(),
            MonomialIdeal.generated_by(3, [(1, 2)]),
        ):
            rep = degree_n_minus_2_equivalence(ideal)
            assert not rep.applicable
            assert rep.f_ideal is None
            assert not rep.agree

    @pytest.mark.parametrize("n", [3, 4])
    def test_exhaustive_agreement(self, n):
        from itertools import combinations

        tier = degree_masks(n, n - 2)
        for size in range(1, len(tier) + 1):
            for subset in combinations(tier, size):
                rep = degree_n_minus_2_equivalence(MonomialIdeal.from_masks(n, subset))
                assert rep.applicable and rep.agree
