import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isrlab.errors import IdentityInput, RangeTooLarge, SingularMatrix
from isrlab.f2 import (
    F2Matrix,
    F2Vector,
    mat_inverse,
    mat_mul,
    range_subgroup,
    rank_defect,
    transvection_factorize,
)

I = F2Matrix.identity()
S = F2Matrix.from_lists([[0, 1], [1, 0]])
T = F2Matrix.from_lists([[0, 1], [1, 1]])


def all_gl(n):
    """Every invertible n x n matrix over GF(2), brute-force filtered."""
    out = []
    for rows in itertools.product(range(1, 1 << n), repeat=n):
        m = F2Matrix(rows)
        try:
            mat_inverse(F2Matrix(list(rows)))
        except SingularMatrix:
            continue
        out.append(m)
    return out


def matrices(n):
    return st.lists(
        st.integers(min_value=0, max_value=(1 << n) - 1), min_size=n, max_size=n
    ).map(F2Matrix)


class TestVector:
    def test_canonical_dim(self):
        assert F2Vector.basis(3).dim == 3
        assert F2Vector(0).dim == 0
        assert F2Vector.from_bitstring("0100") == F2Vector.basis(2)

    def test_add_is_xor(self):
        v = F2Vector.basis(1) + F2Vector.basis(2)
        assert v.support() == [1, 2]
        assert v + v == F2Vector(0)

    def test_dot(self):
        v = F2Vector.from_bitstring("110")
        w = F2Vector.from_bitstring("011")
        assert v.dot(w) == 1
        assert v.dot(v) == 0


class TestMatMul:
    def test_identity_neutral(self):
        assert mat_mul(I, T) == T
        assert mat_mul(T, I) == T

    def test_involution(self):
        assert mat_mul(S, S) == I

    def test_hand_product(self):
        b = F2Matrix.from_lists([[1, 1], [0, 1]])
        assert mat_mul(S, b) == F2Matrix.from_lists([[0, 1], [1, 1]])

    @given(matrices(3), matrices(3), matrices(3))
    @settings(max_examples=60)
    def test_associative(self, a, b, c):
        assert mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c))

    def test_embedding_coherence(self):
        # same product whether computed at n=2 or padded to n=4
        a4 = F2Matrix([0b10, 0b01, 0b0100, 0b1000])
        assert a4 == S
        assert mat_mul(a4, T) == mat_mul(S, T)


class TestInverse:
    def test_identity(self):
        assert mat_inverse(I) == I

    def test_involution(self):
        assert mat_inverse(S) == S

    def test_elimination(self):
        assert mat_inverse(T) == F2Matrix.from_lists([[1, 1], [1, 0]])

    def test_singular(self):
        with pytest.raises(SingularMatrix):
            mat_inverse(F2Matrix([0b11, 0b11]))

    def test_all_gl3(self):
        for g in all_gl(3):
            assert mat_mul(g, mat_inverse(g)) == I


class TestRankDefect:
    def test_examples(self):
        assert rank_defect(I) == 0
        assert rank_defect(S) == 1
        assert rank_defect(T) == 2

    def test_embedding_invariant(self):
        s4 = F2Matrix([0b10, 0b01, 0b100, 0b1000])
        assert rank_defect(s4) == 1

    def test_subadditive_dim3(self):
        gl3 = all_gl(3)
        for g in gl3[:40]:
            for h in gl3[:40]:
                assert rank_defect(mat_mul(g, h)) <= rank_defect(g) + rank_defect(h)


class TestRangeSubgroup:
    def test_identity(self):
        assert range_subgroup(I) == {F2Vector(0)}

    def test_swap(self):
        assert range_subgroup(S) == {F2Vector(0b00), F2Vector(0b11)}

    def test_full_range(self):
        assert range_subgroup(T) == {F2Vector(b) for b in range(4)}

    def test_size_matches_rank(self):
        for g in all_gl(3):
            assert len(range_subgroup(g)) == 1 << rank_defect(g)

    def test_cap(self):
        with pytest.raises(RangeTooLarge):
            range_subgroup(T, cap=2)

    def test_containment_under_product(self):
        gl3 = all_gl(3)
        for g in gl3[:25]:
            for h in gl3[:25]:
                rg = range_subgroup(g)
                rh = range_subgroup(h)
                sums = {a + b for a in rg for b in rh}
                assert range_subgroup(mat_mul(g, h)) <= sums


def range_sum(factors):
    acc = {F2Vector(0)}
    for s in factors:
        acc = {a + b for a in acc for b in range_subgroup(s)}
    return frozenset(acc)


class TestFactorize:
    def test_identity_rejected(self):
        with pytest.raises(IdentityInput):
            transvection_factorize(I)

    def test_swap_is_own_factor(self):
        assert transvection_factorize(S) == [S]

    def test_transvection(self):
        e12 = F2Matrix.transvection(1, 2)
        assert transvection_factorize(e12) == [e12]

    def test_t_example(self):
        factors = transvection_factorize(T)
        prod = I
        for s in factors:
            prod = mat_mul(prod, s)
        assert prod == T
        assert range_sum(factors) == range_subgroup(T)

    def test_exhaustive_gl3(self):
        gl3 = all_gl(3)
        assert len(gl3) == 168
        for g in gl3:
            if g == I:
                continue
            factors = transvection_factorize(g)
            prod = I
            for s in factors:
                assert rank_defect(s) == 1
                assert mat_mul(s, s) == I
                prod = mat_mul(prod, s)
            assert prod == g
            assert range_sum(factors) == range_subgroup(g)

    def test_dim4_samples(self):
        import random

        rng = random.Random(7)
        done = 0
        while done < 20:
            rows = [rng.randrange(1, 16) for _ in range(4)]
            g = F2Matrix(rows)
            try:
                mat_inverse(g)
            except SingularMatrix:
                continue
            if g == I:
                continue
            factors = transvection_factorize(g)
            prod = I
            for s in factors:
                prod = mat_mul(prod, s)
            assert prod == g
            assert range_sum(factors) == range_subgroup(g)
            done += 1
