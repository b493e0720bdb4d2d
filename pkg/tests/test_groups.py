import random

import pytest

from isrlab.errors import FamilyMismatch, GroupTooLarge, NotSymmetric
from isrlab.f2 import F2Matrix, F2Vector
from isrlab.groups import (
    Affine,
    Cantor,
    Lamplighter,
    Wreath,
    centralizer,
    conjugate,
    cylinder_points,
    enumerate_group,
    group_order,
    identity_like,
    inverse,
    multiply,
    normal_closure,
    orbit_under,
    transposition,
)

S = F2Matrix.from_lists([[0, 1], [1, 0]])


def random_elements(family, n, count, seed=0):
    rng = random.Random(seed)
    pool = enumerate_group(family, n)
    return [pool[rng.randrange(len(pool))] for _ in range(count)]


class TestGroupAxioms:
    """Exhaustive axiom checks at the smallest truncations."""

    @pytest.mark.parametrize(
        "family,n,order",
        [("affine", 2, 24), ("wreath", 3, 48), ("lamplighter", 4, 64), ("cantor", 2, 192)],
    )
    def test_orders(self, family, n, order):
        elems = enumerate_group(family, n)
        assert len(elems) == order == group_order(family, n)
        assert len(set(elems)) == order

    @pytest.mark.parametrize(
        "family,n", [("affine", 2), ("wreath", 3), ("lamplighter", 4), ("cantor", 2)]
    )
    def test_closure_identity_inverse(self, family, n):
        elems = enumerate_group(family, n)
        eset = set(elems)
        ident = identity_like(elems[0])
        for a in elems:
            assert multiply(a, inverse(a)) == ident
            assert multiply(ident, a) == a
            assert multiply(a, ident) == a
        for a in elems:
            for b in elems:
                assert multiply(a, b) in eset

    @pytest.mark.parametrize(
        "family,n", [("affine", 2), ("wreath", 3), ("lamplighter", 4), ("cantor", 2)]
    )
    def test_associativity_sampled(self, family, n):
        rng = random.Random(3)
        elems = enumerate_group(family, n)
        for _ in range(300):
            a, b, c = (elems[rng.randrange(len(elems))] for _ in range(3))
            assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


class TestProductRule:
    def test_identity_neutral(self):
        g = Affine(S, F2Vector.basis(1))
        assert multiply(Affine.identity(), g) == g

    def test_affine_example(self):
        a = Affine(S, F2Vector.basis(1))
        b = Affine(S, F2Vector.basis(2))
        # s^{-1}(e1) + e2 = e2 + e2 = 0
        assert multiply(a, b) == Affine.identity()

    def test_wreath_example(self):
        a = Wreath(transposition(0, 1), F2Vector.from_bitstring("10"))
        b = Wreath(transposition(0, 1), F2Vector.from_bitstring("01"))
        assert multiply(a, b) == Wreath.identity()

    def test_family_mismatch(self):
        with pytest.raises(FamilyMismatch):
            multiply(Affine.identity(), Wreath.identity())
        with pytest.raises(FamilyMismatch):
            multiply(Lamplighter.identity(3), Lamplighter.identity(4))

    def test_lamplighter_inverse_roundtrip(self):
        g = multiply(Lamplighter.lamp(5, 0), Lamplighter.shift(5, 2))
        assert multiply(g, inverse(g)) == Lamplighter.identity(5)

    def test_affine_inverse_formula(self):
        g = Affine(S, F2Vector.basis(1))
        assert inverse(g) == Affine(S, F2Vector.basis(2))


class TestConjugation:
    def test_by_identity(self):
        h = Affine(S, F2Vector.basis(2))
        assert conjugate(Affine.identity(), h) == h

    def test_affine_vector_rule(self):
        # s · e1 · s^{-1} = s(e1) = e2
        got = conjugate(Affine.matrix(S), Affine.vector(F2Vector.basis(1)))
        assert got == Affine.vector(F2Vector.basis(2))

    def test_cantor_indicator_rule(self):
        # σ f̃_A σ^{-1} = f̃_{σ(A)}, exhaustive at m=2
        for g in enumerate_group("cantor", 2):
            if g.a:
                continue
            for abits in range(1, 8):
                a = {p for p in range(1, 4) if (abits >> (p - 1)) & 1}
                fa = Cantor.indicator(2, a)
                sigma2, _ = g.at_level(2)
                image = frozenset(sigma2[p] for p in Cantor.indicator(2, a).at_level(2)[1])
                assert conjugate(g, fa) == Cantor.indicator(2, image)

    def test_homomorphism_in_second_slot(self):
        rng = random.Random(9)
        for family, n in [("affine", 2), ("wreath", 3), ("cantor", 2)]:
            elems = enumerate_group(family, n)
            for _ in range(100):
                g, a, b = (elems[rng.randrange(len(elems))] for _ in range(3))
                assert conjugate(g, multiply(a, b)) == multiply(
                    conjugate(g, a), conjugate(g, b)
                )


class TestEmbedding:
    def test_affine_wreath_embed(self):
        # products agree whether or not elements are padded with identity
        a = Affine(S, F2Vector.basis(1))
        a_pad = Affine(
            F2Matrix([0b10, 0b01, 0b100]), F2Vector.basis(1)
        )
        assert a == a_pad

    def test_cantor_level_reduction(self):
        # (s, s) embedding of the point swap at m=1 is canonical at m=1
        swap1 = Cantor.perm(1, (1, 0))
        swap2 = Cantor.perm(2, (1, 0, 3, 2))
        assert swap1 == swap2

    def test_cantor_product_across_levels(self):
        swap1 = Cantor.perm(1, (1, 0))
        f = Cantor.indicator(2, {1})
        prod = multiply(swap1, f)
        assert prod.m == 2
        s2, _ = swap1.at_level(2)
        assert prod.sigma == s2

    def test_cantor_subset_mod_complement(self):
        assert Cantor.indicator(2, {0, 2}) == Cantor.indicator(2, {1, 3})
        assert Cantor.indicator(2, {0, 1, 2, 3}) == Cantor.identity()

    def test_cylinder_points(self):
        assert cylinder_points("11", 3) == frozenset({3, 7})
        assert cylinder_points("000", 3) == frozenset({0})


class TestCentralizer:
    def test_of_identity(self):
        assert len(centralizer(Wreath.identity(), 3)) == 48

    def test_wreath_lamp(self):
        z1 = Wreath.vector(F2Vector.basis(1))
        c = centralizer(z1, 3)
        assert len(c) == 16  # |S_{2,3}| * |Z2^3|

    def test_affine_swap_brute(self):
        c = centralizer(Affine.matrix(S), 2)
        brute = [
            x
            for x in enumerate_group("affine", 2)
            if multiply(x, Affine.matrix(S)) == multiply(Affine.matrix(S), x)
        ]
        assert c == set(brute)


class TestOrbit:
    def test_identity_orbit(self):
        c = centralizer(Wreath.identity(), 3)
        assert orbit_under(Wreath.identity(), c) == {Wreath.identity()}

    def test_vector_fixed_by_own_centralizer(self):
        e1 = Affine.vector(F2Vector.basis(1))
        c = centralizer(e1, 2)
        assert orbit_under(e1, c) == {e1}

    def test_not_symmetric(self):
        # a coordinate 3-cycle is not its own inverse
        three = Affine.matrix(F2Matrix([0b010, 0b100, 0b001]))
        assert inverse(three) != three
        with pytest.raises(NotSymmetric):
            orbit_under(Affine.matrix(S), {three})


class TestNormalClosure:
    def test_identity(self):
        assert normal_closure([Affine.identity()], 3) == {Affine.identity()}

    def test_pure_vector_closure(self):
        got = normal_closure([Affine.vector(F2Vector.basis(1))], 3)
        assert len(got) == 8
        assert all(x.g.is_identity() for x in got)

    def test_gl_part_closure(self):
        got = normal_closure([Affine.matrix(S)], 3)
        assert len(got) == 1344  # the whole truncated group

    def test_every_nonidentity_vector(self):
        for bits in range(1, 8):
            got = normal_closure([Affine.vector(F2Vector(bits))], 3)
            assert len(got) == 8


class TestCaps:
    def test_group_too_large(self):
        with pytest.raises(GroupTooLarge):
            enumerate_group("cantor", 3, cap=1000)
