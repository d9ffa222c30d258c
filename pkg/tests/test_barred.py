"""Filtered complexes: validation, reduction, the rank oracle, tensors."""

import random

import pytest

from knotprime.barred import (
    Bar,
    BarComplex,
    BarCounts,
    ComplexError,
    FilteredComplex,
    Generator,
    INCONCLUSIVE,
    PRIME,
    barcode_via_ranks,
    corollary_test,
    counts,
    graded_ranks,
    mirror,
    predict_sum_counts,
    reduce,
    reduce_to_bars,
    split_bars,
    tensor,
    validate,
)
from knotprime.laurent import BivariateLaurent

from helpers import (
    OMEGA_TERMS,
    bar_complex,
    fig8_complex,
    random_knotlike_complex,
    t23_complex,
    torus_complex,
    unknot_complex,
)


def fixture_complexes():
    return {
        "T(2,3)": t23_complex(),
        "-T(2,3)": mirror(t23_complex()),
        "T(2,5)": torus_complex(5),
        "-T(2,5)": mirror(torus_complex(5)),
        "4_1": fig8_complex(),
    }


# frozen by hand reduction of the staircase / figure-eight models
EXPECTED_REDUCTIONS = {
    "T(2,3)": BarComplex(1, (Bar(0, -1, -2),)),
    "-T(2,3)": BarComplex(-1, (Bar(1, 0, 1),)),
    "T(2,5)": BarComplex(2, (Bar(1, 0, -2), Bar(-1, -2, -4))),
    "-T(2,5)": BarComplex(-2, (Bar(0, -1, 1), Bar(2, 1, 3))),
    "4_1": BarComplex(0, (Bar(1, 0, 0), Bar(0, -1, -1))),
}

EXPECTED_COUNTS = {
    "T(2,3)": BarCounts(3, 1, 0),
    "-T(2,3)": BarCounts(3, 0, 1),
    "T(2,5)": BarCounts(5, 2, 0),
    "-T(2,5)": BarCounts(5, 0, 2),
    "4_1": BarCounts(5, 1, 1),
}


class TestConstruction:
    def test_generators_sorted_deterministically(self):
        c = FilteredComplex(
            [Generator("b", 0, 1), Generator("a", 0, 1), Generator("c", -1, 0)],
            {})
        assert [g.id for g in c.generators] == ["c", "a", "b"]

    def test_duplicate_ids_rejected(self):
        with pytest.raises(ComplexError):
            FilteredComplex([Generator("a", 0, 0), Generator("a", 1, 1)], {})

    def test_unknown_boundary_source_rejected(self):
        with pytest.raises(ComplexError):
            FilteredComplex([Generator("a", 0, 0)], {"b": {"a"}})

    def test_unknown_boundary_target_rejected(self):
        with pytest.raises(ComplexError):
            FilteredComplex([Generator("a", 0, 0)], {"a": {"b"}})

    def test_empty_target_sets_dropped(self):
        c = FilteredComplex([Generator("a", 0, 0)], {"a": set()})
        assert c.boundary == {}

    def test_immutable(self):
        c = unknot_complex()
        with pytest.raises(AttributeError):
            c.generators = ()

    def test_bar_complex_sorts_bars(self):
        b = BarComplex(0, (Bar(3, 1, 0), Bar(1, -1, 2), Bar(2, -1, 0)))
        assert b.bars == (Bar(1, -1, 2), Bar(2, -1, 0), Bar(3, 1, 0))

    def test_degenerate_bar_rejected(self):
        with pytest.raises(ComplexError):
            BarComplex(0, (Bar(1, 1, 0),))


class TestValidate:
    def test_fixtures_are_valid(self):
        for name, c in fixture_complexes().items():
            assert validate(c) == [], name
        assert validate(unknot_complex()) == []
        assert validate(torus_complex(7)) == []

    def test_composable_arrows_break_d_squared(self):
        c = FilteredComplex(
            [Generator("x", 0, 1), Generator("y", -1, 0), Generator("z", -2, -1)],
            {"x": {"y"}, "y": {"z"}})
        assert any("boundary squared" in v for v in validate(c))

    def test_filtration_increase_reported(self):
        c = FilteredComplex(
            [Generator("a", 0, 0), Generator("b", -1, 1)],
            {"a": {"b"}})
        assert any("filtration increases" in v for v in validate(c))

    def test_bad_grading_step_reported(self):
        c = FilteredComplex(
            [Generator("a", 0, 1), Generator("b", -2, 0)],
            {"a": {"b"}})
        assert any("grading step" in v for v in validate(c))

    def test_two_dimensional_homology_is_not_knot_like(self):
        c = FilteredComplex(
            [Generator("a", 0, 0), Generator("b", 0, 2)], {})
        assert any("homology" in v for v in validate(c))

    def test_free_generator_off_grading_zero(self):
        c = FilteredComplex([Generator("a", 1, 0)], {})
        assert any("homology" in v for v in validate(c))


class TestReduce:
    def test_frozen_bar_complexes(self):
        for name, c in fixture_complexes().items():
            assert reduce_to_bars(c) == EXPECTED_REDUCTIONS[name], name

    def test_frozen_counts(self):
        for name, c in fixture_complexes().items():
            assert counts(reduce_to_bars(c)) == EXPECTED_COUNTS[name], name

    def test_torus_seven(self):
        b = reduce_to_bars(torus_complex(7))
        assert b.tau_filtration == 3
        assert counts(b) == BarCounts(7, 3, 0)

    def test_unknot(self):
        assert reduce_to_bars(unknot_complex()) == BarComplex(0, ())

    def test_equal_filtration_pair_cancels_silently(self):
        c = FilteredComplex(
            [Generator("f", 0, 0), Generator("a", 1, 2), Generator("b", 0, 2)],
            {"a": {"b"}})
        assert reduce_to_bars(c) == BarComplex(0, ())

    def test_invalid_complex_rejected(self):
        c = FilteredComplex(
            [Generator("x", 0, 1), Generator("y", -1, 0), Generator("z", -2, -1)],
            {"x": {"y"}, "y": {"z"}})
        with pytest.raises(ComplexError):
            reduce_to_bars(c)

    def test_non_knot_like_rejected(self):
        c = FilteredComplex(
            [Generator("a", 0, 0), Generator("b", 0, 2)], {})
        with pytest.raises(ComplexError):
            reduce_to_bars(c)

    def test_reduce_alias(self):
        assert reduce(t23_complex()) == reduce_to_bars(t23_complex())


class TestRankOracle:
    def test_fixtures_match(self):
        for name, c in fixture_complexes().items():
            assert barcode_via_ranks(c) == reduce_to_bars(c), name
        assert barcode_via_ranks(unknot_complex()) == BarComplex(0, ())

    def test_random_complexes_match_reduction_and_plant(self):
        rng = random.Random(20260814)
        for _ in range(120):
            c, tau, planted = random_knotlike_complex(rng)
            expected = BarComplex(tau, tuple(planted))
            assert reduce_to_bars(c) == expected
            assert barcode_via_ranks(c) == expected


class TestBasisChange:
    # fig8 with g3 := g3 + g4 applied by hand; same filtered homotopy type
    def scrambled_fig8(self):
        return FilteredComplex(
            [Generator("g1", 0, 0), Generator("g2", 1, 1),
             Generator("g3", 0, 0), Generator("g4", 0, 0),
             Generator("g5", -1, -1)],
            {"g2": {"g3", "g4"}, "g3": {"g5"}, "g4": {"g5"}})

    def test_reduction_invariant(self):
        assert reduce_to_bars(self.scrambled_fig8()) == \
            reduce_to_bars(fig8_complex())

    def test_graded_ranks_invariant(self):
        assert graded_ranks(self.scrambled_fig8()) == \
            graded_ranks(fig8_complex())

    def test_oracle_agrees_on_scramble(self):
        assert barcode_via_ranks(self.scrambled_fig8()) == \
            reduce_to_bars(fig8_complex())


class TestTensor:
    def test_unknot_is_identity(self):
        for name, c in fixture_complexes().items():
            t = tensor(unknot_complex(), c)
            assert len(t) == len(c)
            assert reduce_to_bars(t) == reduce_to_bars(c), name

    def test_granny(self):
        t = tensor(t23_complex(), t23_complex())
        assert len(t) == 9
        b = reduce_to_bars(t)
        assert b.tau_filtration == 2
        assert counts(b) == BarCounts(9, 3, 1)

    def test_trefoil_with_its_mirror(self):
        t = tensor(t23_complex(), mirror(t23_complex()))
        b = reduce_to_bars(t)
        assert b.tau_filtration == 0
        assert counts(b) == BarCounts(9, 2, 2)

    def test_tensor_of_random_complexes_is_valid(self):
        rng = random.Random(99)
        for _ in range(20):
            c1, _, _ = random_knotlike_complex(rng, max_pairs=2)
            c2, _, _ = random_knotlike_complex(rng, max_pairs=2)
            assert validate(tensor(c1, c2)) == []

    def test_id_collision_detected(self):
        c1 = FilteredComplex(
            [Generator("a", 0, 0), Generator("a|b", 0, 0)], {})
        c2 = FilteredComplex(
            [Generator("b|c", 0, 0), Generator("c", 0, 0)], {})
        with pytest.raises(ComplexError):
            tensor(c1, c2)

    def test_mirror_swaps_bar_parity_and_negates_tau(self):
        for name, c in fixture_complexes().items():
            b = reduce_to_bars(c)
            mb = reduce_to_bars(mirror(c))
            assert mb.tau_filtration == -b.tau_filtration, name
            assert counts(mb) == BarCounts(
                counts(b).delta, counts(b).b_odd, counts(b).b_even), name


class TestGradedRanks:
    def test_fixture_ranks_match_known_polynomials(self):
        for name, c in fixture_complexes().items():
            assert graded_ranks(c) == OMEGA_TERMS[name], name

    def test_unknot(self):
        assert graded_ranks(unknot_complex()) == {(0, 0): 1}

    def test_level_preserving_arrow_cancels_in_graded_object(self):
        c = FilteredComplex(
            [Generator("f", 0, 0), Generator("a", 1, 2), Generator("b", 0, 2)],
            {"a": {"b"}})
        assert graded_ranks(c) == {(0, 0): 1}

    def test_tensor_ranks_are_polynomial_products(self):
        cs = fixture_complexes()
        for n1, n2 in [("T(2,3)", "T(2,3)"), ("T(2,3)", "4_1"),
                       ("T(2,5)", "-T(2,3)")]:
            product = BivariateLaurent(graded_ranks(tensor(cs[n1], cs[n2])))
            assert product == (BivariateLaurent(OMEGA_TERMS[n1])
                               * BivariateLaurent(OMEGA_TERMS[n2]))


class TestCounts:
    def test_unknot_counts(self):
        assert counts(BarComplex(0, ())) == BarCounts(1, 0, 0)

    def test_consistency_predicate(self):
        assert BarCounts(3, 1, 0).is_consistent()
        assert BarCounts(9, 3, 1).is_consistent()
        assert not BarCounts(49, 2, 10).is_consistent()
        assert not BarCounts(3, -1, 2).is_consistent()

    def test_predict_examples(self):
        assert predict_sum_counts(BarCounts(3, 1, 0), BarCounts(3, 1, 0)) \
            == BarCounts(9, 3, 1)
        assert predict_sum_counts(BarCounts(5, 1, 1), BarCounts(3, 1, 0)) \
            == BarCounts(15, 4, 3)

    def test_predict_identity(self):
        for x in (BarCounts(3, 1, 0), BarCounts(5, 1, 1), BarCounts(7, 3, 0)):
            assert predict_sum_counts(BarCounts(1, 0, 0), x) == x
            assert predict_sum_counts(x, BarCounts(1, 0, 0)) == x

    def test_predict_rejects_inconsistent_input(self):
        with pytest.raises(ComplexError):
            predict_sum_counts(BarCounts(49, 2, 10), BarCounts(3, 1, 0))

    def test_predict_matches_tensor_reduction_on_random_pairs(self):
        rng = random.Random(3301)
        for _ in range(60):
            c1, _, _ = random_knotlike_complex(rng)
            c2, _, _ = random_knotlike_complex(rng)
            got = counts(reduce_to_bars(tensor(c1, c2)))
            want = predict_sum_counts(
                counts(reduce_to_bars(c1)), counts(reduce_to_bars(c2)))
            assert got == want

    def test_predict_output_is_consistent(self):
        rng = random.Random(7)
        for _ in range(50):
            ne, no = rng.randint(0, 5), rng.randint(0, 5)
            a = BarCounts(1 + 2 * (ne + no), ne, no)
            ne2, no2 = rng.randint(0, 5), rng.randint(0, 5)
            b = BarCounts(1 + 2 * (ne2 + no2), ne2, no2)
            assert predict_sum_counts(a, b).is_consistent()


class TestCorollaryTest:
    def test_prime_delta_certifies(self):
        assert corollary_test(BarCounts(3, 1, 0)) == PRIME
        assert corollary_test(BarCounts(7, 1, 2)) == PRIME

    def test_granny_counts_are_inconclusive(self):
        assert corollary_test(BarCounts(9, 3, 1)) == INCONCLUSIVE

    def test_zero_odd_bars_certifies(self):
        assert corollary_test(BarCounts(9, 4, 0)) == PRIME
        assert corollary_test(BarCounts(25, 12, 0)) == PRIME
        assert corollary_test(BarCounts(9, 0, 4)) == PRIME

    def test_large_delta_with_small_budget(self):
        assert corollary_test(BarCounts(49, 2, 10)) == PRIME

    def test_composite_with_big_budget_is_inconclusive(self):
        assert corollary_test(BarCounts(15, 4, 3)) == INCONCLUSIVE

    def test_unknot_counts(self):
        assert corollary_test(BarCounts(1, 0, 0)) == PRIME


def expected_bar_pair_reduction(t1, b1, g1, t2, b2, g2):
    even = Bar(min(t1 + b2, b1 + t2), b1 + b2, g1 + g2)
    odd = Bar(t1 + t2, max(t1 + b2, b1 + t2), g1 + g2 + 1)
    return {even, odd}


class TestTwoBarProducts:
    def test_spec_shaped_case(self):
        free, bars = split_bars(tensor(
            bar_complex(1, 0, 0, "1"), bar_complex(2, 0, 0, "2")))
        assert free == ()
        assert set(bars) == {Bar(1, 0, 0), Bar(3, 2, 1)}

    def test_sampled_pairs_match_closed_form(self):
        rng = random.Random(41)
        for _ in range(50):
            b1, b2 = rng.randint(-3, 2), rng.randint(-3, 2)
            t1, t2 = rng.randint(b1 + 1, 3), rng.randint(b2 + 1, 3)
            g1, g2 = rng.randint(-3, 3), rng.randint(-3, 3)
            free, bars = split_bars(tensor(
                bar_complex(t1, b1, g1, "1"), bar_complex(t2, b2, g2, "2")))
            assert free == ()
            assert len(bars) == 2
            assert set(bars) == expected_bar_pair_reduction(
                t1, b1, g1, t2, b2, g2)
            parities = sorted(bar.bottom_grading % 2 for bar in bars)
            assert parities == [0, 1]
