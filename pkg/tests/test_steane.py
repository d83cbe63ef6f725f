"""Enlargement construction, permutation/mixing maps, self-dual search."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qsteane.distances import min_distance, quantum_distance_exact, second_gdw
from qsteane.gf2 import (
    CodeConstructionError,
    LinearCode,
    dual,
    even_weight_code,
    extend_parity,
    is_subcode,
)
from qsteane.steane import (
    Permutation,
    certified_enlarge,
    default_permutation,
    find_self_dual_subcode,
    find_supporting_permutation,
    is_stabilizer_code,
    mix_completion_rows,
    permutation_candidates,
    rref_subspaces,
    steane_enlarge,
    supports_distance_bound,
    symplectic_dual,
)

from conftest import EXT_HAMMING_8_4


def gaussian_binomial(q: int, r: int) -> int:
    num = den = 1
    for i in range(r):
        num *= (1 << (q - i)) - 1
        den *= (1 << (r - i)) - 1
    return num // den


class TestPermutation:
    def test_rejects_fixed_points(self):
        with pytest.raises(ValueError):
            Permutation(3, (0, 2, 1))

    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            Permutation(3, (1, 1, 0))

    def test_apply_bits(self):
        p = Permutation(3, (1, 2, 0))
        assert p.apply_bits(0b001) == 0b010
        assert p.apply_bits(0b110) == 0b101

    @settings(max_examples=30, deadline=None)
    @given(st.integers(2, 40))
    def test_default_permutation_is_fix_point_free_cycle(self, n):
        p = default_permutation(n)
        assert all(p.image[i] != i for i in range(n))
        assert sorted(p.image) == list(range(n))

    def test_candidates_are_deterministic(self):
        a = [p.image for p in _take(permutation_candidates(8), 20)]
        b = [p.image for p in _take(permutation_candidates(8), 20)]
        assert a == b


def _take(it, count):
    out = []
    for x in it:
        out.append(x)
        if len(out) == count:
            break
    return out


class TestMixCompletionRows:
    @pytest.mark.parametrize("r", [2, 3, 5, 8])
    def test_invertible_and_fix_point_free(self, r):
        # Apply the mixing to unit vectors to expose the matrix itself.
        units = [1 << i for i in range(r)]
        mixed = mix_completion_rows(units)
        images = {}
        for u in range(1, 1 << r):
            img = 0
            for i in range(r):
                if (u >> i) & 1:
                    img ^= mixed[i]
            images[u] = img
            assert img != u  # no nonzero fixed vector
            assert img != 0  # invertible on the span
        assert len(set(images.values())) == (1 << r) - 1

    def test_requires_two_rows(self):
        with pytest.raises(CodeConstructionError):
            mix_completion_rows([0b1])

    def test_span_preserved(self):
        rows = [0b1100, 0b0011]
        mixed = mix_completion_rows(rows)
        span = LinearCode(rows, 4)
        assert LinearCode(mixed, 4) == span


class TestSteaneEnlarge:
    def test_dimensions_and_bound(self):
        Q = steane_enlarge(EXT_HAMMING_8_4, even_weight_code(8))
        assert (Q.n, Q.K) == (8, 3)
        assert Q.d_lower == min(4, 3) == 3
        assert Q.num_generators == 11
        assert Q.bound_proven

    def test_bound_proven_holds_exactly(self):
        Q = steane_enlarge(EXT_HAMMING_8_4, even_weight_code(8))
        assert quantum_distance_exact(Q).value >= Q.d_lower

    def test_explicit_permutation_is_not_proven(self):
        Q = steane_enlarge(
            EXT_HAMMING_8_4, even_weight_code(8), default_permutation(8)
        )
        assert not Q.bound_proven

    def test_rejects_non_dual_containing(self):
        C = LinearCode([0b11110000, 0b00001111], 8)  # C-perp not inside C
        with pytest.raises(CodeConstructionError, match="dual"):
            steane_enlarge(C, even_weight_code(8))

    def test_rejects_non_nested(self):
        C = EXT_HAMMING_8_4
        Cp = LinearCode([0b10000001, 0b01000001, 0b00100001], 8)
        with pytest.raises(CodeConstructionError, match="subcode"):
            steane_enlarge(C, Cp)

    def test_rejects_equal_codes(self):
        with pytest.raises(CodeConstructionError, match="k'"):
            steane_enlarge(EXT_HAMMING_8_4, EXT_HAMMING_8_4)

    def test_is_stabilizer_code(self):
        Q = steane_enlarge(EXT_HAMMING_8_4, even_weight_code(8))
        assert is_stabilizer_code(Q)

    def test_symplectic_dual_dimension(self):
        Q = steane_enlarge(EXT_HAMMING_8_4, even_weight_code(8))
        assert symplectic_dual(Q).rows == 2 * Q.n - Q.num_generators


class TestSupportingPermutations:
    def test_supporting_permutation_certifies(self):
        C, Cp = EXT_HAMMING_8_4, even_weight_code(8)
        P = find_supporting_permutation(C, Cp)
        assert P is not None
        assert supports_distance_bound(P, C, Cp)
        Q = steane_enlarge(C, Cp, P)
        bound = min(min_distance(C).value, second_gdw(Cp).value)
        assert quantum_distance_exact(Q).value >= bound

    def test_cyclic_shift_fails_condition_here(self):
        # The naive coordinate shift does not support the bound on this
        # instance (its exact distance drops below min(d1, d2')).
        C, Cp = EXT_HAMMING_8_4, even_weight_code(8)
        assert not supports_distance_bound(default_permutation(8), C, Cp)
        Q = steane_enlarge(C, Cp, default_permutation(8), d_lower=3)
        assert quantum_distance_exact(Q).value < 3


class TestCertifiedEnlarge:
    def test_wide_completion_uses_proven_mixing(self):
        Q = certified_enlarge(EXT_HAMMING_8_4, even_weight_code(8))
        assert Q.bound_proven
        assert quantum_distance_exact(Q).value >= Q.d_lower

    def test_single_row_completion_is_scanned(self):
        # k' = k + 1: no fix-point-free linear map exists, so the result
        # must carry an exhaustively computed exact distance.
        C = EXT_HAMMING_8_4
        Cp = LinearCode(C.basis_ints() + [0b00000011], 8)
        assert Cp.k == C.k + 1
        Q = certified_enlarge(C, Cp)
        assert not Q.bound_proven
        assert Q.d_exact is not None
        assert Q.d_exact == quantum_distance_exact(Q).value


class TestRrefSubspaces:
    @pytest.mark.parametrize(
        "q,r,count",
        [(4, 2, 35), (5, 1, 31), (5, 5, 1), (6, 3, 1395), (3, 0, 1)],
    )
    def test_counts_match_gaussian_binomials(self, q, r, count):
        seen = [tuple(rows) for rows in rref_subspaces(q, r)]
        assert len(seen) == len(set(seen)) == count == gaussian_binomial(q, r)

    def test_each_basis_is_rref_of_rank_r(self):
        from qsteane.gf2 import rref_ints

        for rows in rref_subspaces(4, 2):
            red, rank, _ = rref_ints(rows, 4)
            assert rank == 2 and red[:2] == rows

    def test_bad_range(self):
        with pytest.raises(ValueError):
            list(rref_subspaces(3, 4))


class TestFindSelfDualSubcode:
    def test_recovers_extended_hamming(self):
        C = find_self_dual_subcode(even_weight_code(8))
        assert (C.n, C.k) == (8, 4)
        assert C == dual(C)
        assert min_distance(C).value == 4  # the best self-dual [8,4]

    def test_small_even_length(self):
        C = find_self_dual_subcode(even_weight_code(6))
        assert C == dual(C)
        assert min_distance(C).value == 2  # no [6,3,4] self-dual code exists

    def test_deterministic(self):
        a = find_self_dual_subcode(even_weight_code(8))
        b = find_self_dual_subcode(even_weight_code(8))
        assert a == b

    def test_already_self_dual_returned_as_is(self):
        assert find_self_dual_subcode(EXT_HAMMING_8_4) == EXT_HAMMING_8_4

    def test_rejects_odd_length(self):
        with pytest.raises(CodeConstructionError):
            find_self_dual_subcode(even_weight_code(7))

    def test_rejects_non_dual_containing(self):
        Cp = LinearCode([0b111100, 0b001111], 6)
        with pytest.raises(CodeConstructionError):
            find_self_dual_subcode(Cp)

    def test_result_sits_between_dual_and_code(self):
        Cp = even_weight_code(10)
        C = find_self_dual_subcode(Cp)
        assert is_subcode(dual(Cp), C) and is_subcode(C, Cp)
