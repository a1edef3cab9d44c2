"""Canonical-basis construction, its self-checks, and cell extraction."""

import functools

import pytest

from bncells.errors import BudgetError, InvalidInputError
from bncells.group import (
    SignedPerm,
    WeightFunction,
    canonical_word,
    group_elements,
    group_index,
    inverse,
    right_descents,
)
from bncells.hecke import (
    bar_t_elements,
    c_gen_mul,
    group_tables,
    h_add_scaled,
    h_bar_via,
    h_equal,
    kl_basis,
    kl_to_lines,
    left_cells,
    parse_kl_lines,
    right_cells,
    t_basis,
    t_mul_gen,
    two_sided_cells,
    verify_bar_invariance,
    verify_degenerate_products,
)
from bncells.laurent import LaurentPoly


@functools.lru_cache(maxsize=None)
def cached_kl(n, a, b):
    return kl_basis(n, WeightFunction(a, b))


def cells_as_windows(kl, partition):
    return {
        frozenset(kl.tables.elements[i] for i in cls) for cls in partition.classes()
    }


class TestGenerators:
    def test_identity_element(self):
        kl = cached_kl(1, 1, 1)
        assert kl.cw[0] == {0: {0: 1}}

    def test_generator_elements(self):
        # C_g = T_g + v^-weight(g) T_e
        kl = cached_kl(2, 1, 2)
        idx = group_index(2)
        i_t = idx[(-1, 2)]
        i_s = idx[(2, 1)]
        assert kl.cw[i_t] == {i_t: {0: 1}, 0: {-2: 1}}
        assert kl.cw[i_s] == {i_s: {0: 1}, 0: {-1: 1}}

    def test_quadratic_relation(self):
        # T_g^2 = T_e + (v^c - v^-c) T_g
        tables = group_tables(2)
        weight = WeightFunction(1, 3)
        idx = group_index(2)
        for g, c in [(0, 3), (1, 1)]:
            sq = t_mul_gen(tables, weight, t_basis(idx[(-1, 2) if g == 0 else (2, 1)]), g)
            i_g = idx[(-1, 2) if g == 0 else (2, 1)]
            assert sq == {0: {0: 1}, i_g: {c: 1, -c: -1}}

    def test_word_products_match_group(self):
        # folding generator multiplications reproduces T_w on both sides
        tables = group_tables(3)
        weight = WeightFunction(2, 3)
        idx = group_index(3)
        for w in group_elements(3):
            word = canonical_word(w)
            right = t_basis(0)
            for g in word:
                right = t_mul_gen(tables, weight, right, g, side="right")
            left = t_basis(0)
            for g in reversed(word):
                left = t_mul_gen(tables, weight, left, g, side="left")
            assert right == {idx[w]: {0: 1}}
            assert left == {idx[w]: {0: 1}}

    def test_left_right_multiplications_commute(self):
        tables = group_tables(3)
        weight = WeightFunction(1, 2)
        h = {5: {0: 1, -2: 3}, 17: {1: -1}, 40: {0: 2}}
        for g in range(3):
            for k in range(3):
                a = t_mul_gen(tables, weight, t_mul_gen(tables, weight, h, g, "left"), k, "right")
                b = t_mul_gen(tables, weight, t_mul_gen(tables, weight, h, k, "right"), g, "left")
                assert a == b

    def test_bad_side_rejected(self):
        with pytest.raises(InvalidInputError):
            t_mul_gen(group_tables(2), WeightFunction(1, 1), t_basis(0), 0, side="up")


class TestBasisInvariants:
    @pytest.mark.parametrize("a,b", [(1, 1), (1, 2), (2, 1), (2, 3), (5, 1)])
    def test_all_weights_rank2_pass_self_checks(self, a, b):
        kl = cached_kl(2, a, b)  # bar + degenerate checks run internally
        verify_bar_invariance(kl)
        verify_degenerate_products(kl)

    def test_unitriangular_with_negative_tail(self):
        kl = cached_kl(3, 1, 2)
        for iw, elt in enumerate(kl.cw):
            assert elt[iw] == {0: 1}
            for iy, coeff in elt.items():
                if iy != iw:
                    assert max(coeff) < 0

    def test_support_within_bruhat_length(self):
        kl = cached_kl(3, 1, 3)
        for iw, elt in enumerate(kl.cw):
            for iy in elt:
                assert kl.tables.length[iy] <= kl.tables.length[iw]

    def test_bar_transform_is_involution(self):
        tables = group_tables(2)
        weight = WeightFunction(1, 2)
        bar_t = bar_t_elements(tables, weight)
        for i in range(tables.order):
            assert h_equal(h_bar_via(bar_t, bar_t[i]), t_basis(i))

    def test_inverse_symmetry_of_polynomials(self):
        # the T_w -> T_{w^-1} anti-automorphism preserves the canonical basis
        for n in (2, 3):
            kl = cached_kl(n, 1, n)
            for w in group_elements(n):
                for y in kl.support(w):
                    assert kl.polynomial(y, w) == kl.polynomial(
                        inverse(tuple(y)), inverse(w)
                    )

    def test_mu_covers_every_ascent_pair(self):
        kl = cached_kl(3, 1, 2)
        tables = kl.tables
        for g in range(3):
            for i in range(tables.order):
                if tables.length[tables.lmul[g][i]] > tables.length[i]:
                    assert (g, i) in kl.mu
                else:
                    assert (g, i) not in kl.mu

    def test_mu_matches_product_expansion(self):
        # C_g * C_w == C_{gw} + sum of stored coefficients times C_y
        kl = cached_kl(2, 1, 2)
        tables = kl.tables
        for (g, i), interference in kl.mu.items():
            got = c_gen_mul(tables, kl.weight, g, kl.cw[i])
            expected = {}
            h_add_scaled(expected, kl.cw[tables.lmul[g][i]], {0: 1})
            for j, m in interference.items():
                h_add_scaled(expected, kl.cw[j], m)
            assert h_equal(got, expected)

    def test_budget_guards(self):
        with pytest.raises(BudgetError):
            kl_basis(6, WeightFunction(1, 5))
        with pytest.raises(BudgetError):
            kl_basis(5, WeightFunction(1, 4))


class TestCells:
    def test_rank1_cells(self):
        kl = cached_kl(1, 1, 1)
        assert left_cells(kl).num_classes == 2

    def test_rank2_cells_above_threshold_frozen(self):
        kl = cached_kl(2, 1, 2)
        expected = {
            frozenset({(1, 2)}),
            frozenset({(2, 1)}),
            frozenset({(-1, 2), (-2, 1)}),
            frozenset({(2, -1), (1, -2)}),
            frozenset({(-2, -1)}),
            frozenset({(-1, -2)}),
        }
        assert cells_as_windows(kl, left_cells(kl)) == expected

    def test_rank2_cells_at_threshold_frozen(self):
        kl = cached_kl(2, 1, 1)
        expected = {
            frozenset({(1, 2)}),
            frozenset({(-1, -2)}),
            frozenset({(-1, 2), (-2, 1), (-2, -1)}),
            frozenset({(2, 1), (2, -1), (1, -2)}),
        }
        assert cells_as_windows(kl, left_cells(kl)) == expected

    def test_rank2_weight_only_matters_through_regime(self):
        assert left_cells(cached_kl(2, 1, 2)).same_blocks(
            left_cells(cached_kl(2, 2, 5))
        )
        assert left_cells(cached_kl(2, 1, 1)).same_blocks(
            left_cells(cached_kl(2, 3, 3))
        )

    def test_rank3_cell_counts(self):
        assert left_cells(cached_kl(3, 1, 3)).num_classes == 20
        assert left_cells(cached_kl(3, 1, 2)).num_classes == 16
        assert two_sided_cells(cached_kl(3, 1, 3)).num_classes == 10

    def test_right_cells_are_inverted_left_cells(self):
        kl = cached_kl(3, 1, 2)
        left = cells_as_windows(kl, left_cells(kl))
        right = cells_as_windows(kl, right_cells(kl))
        assert {frozenset(inverse(w) for w in cls) for cls in left} == right

    def test_two_sided_coarsens_both(self):
        for n, a, b in [(2, 1, 1), (3, 1, 3)]:
            kl = cached_kl(n, a, b)
            two = two_sided_cells(kl)
            assert left_cells(kl).refines(two)
            assert right_cells(kl).refines(two)

    @pytest.mark.parametrize("n,a,b", [(2, 1, 2), (2, 2, 1), (3, 1, 2), (3, 1, 3), (3, 2, 1)])
    def test_identity_and_longest_are_singletons(self, n, a, b):
        kl = cached_kl(n, a, b)
        part = left_cells(kl)
        idx = group_index(n)
        w0 = idx[tuple(range(-1, -n - 1, -1))]
        sizes = dict(zip(range(part.num_classes), map(len, part.classes())))
        assert sizes[part.class_of(0)] == 1
        assert sizes[part.class_of(w0)] == 1

    @pytest.mark.parametrize("n,a,b", [(2, 1, 1), (2, 1, 2), (3, 1, 2), (3, 1, 3)])
    def test_right_descents_constant_on_left_cells(self, n, a, b):
        kl = cached_kl(n, a, b)
        for cls in left_cells(kl).classes():
            descents = {right_descents(kl.tables.elements[i]) for i in cls}
            assert len(descents) == 1


class TestExport:
    def test_frozen_lines(self):
        kl = cached_kl(2, 1, 2)
        lines = list(kl_to_lines(kl))
        assert "1,2 1,2 : 1" in lines
        assert "1,2 -1,2 : v^-2" in lines
        assert "1,2 -2,1 : v^-3" in lines
        assert "2,1 -2,1 : v^-2" in lines

    def test_roundtrip(self):
        kl = cached_kl(2, 2, 3)
        table = parse_kl_lines(kl_to_lines(kl))
        assert len(table) == sum(len(elt) for elt in kl.cw)
        for (y, w), poly in table.items():
            assert poly == kl.polynomial(y, w)

    def test_parse_rejects_garbage(self):
        with pytest.raises(InvalidInputError):
            parse_kl_lines(["1,2 : v"])
        with pytest.raises(InvalidInputError):
            parse_kl_lines(["1,2 2,1 1,2 : v"])

    def test_parse_skips_comments_and_blanks(self):
        table = parse_kl_lines(["# header", "", "1,2 -1,2 : v^-2"])
        assert table[(SignedPerm((1, 2)), SignedPerm((-1, 2)))] == LaurentPoly({-2: 1})
