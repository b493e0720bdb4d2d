"""Element arithmetic for the four group families, at finite truncation.

All four families share the normal form g·v with the product rule

    (g1, v1)(g2, v2) = (g1 g2, g2^{-1}(v1) + v2),

where g acts on the vector part: by matrix-vector product (Affine),
coordinate permutation (Wreath), cyclic shift (Lamplighter), or image
of a point set (Cantor, with "+" the symmetric difference taken modulo
complement).

Elements are immutable and canonical: minimal truncation level, so
equality across truncations is plain equality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import FamilyMismatch, GroupTooLarge, NotSymmetric, Overflow
from .f2 import F2Matrix, F2Vector, mat_inverse, mat_mul, _rank_of_rows

DEFAULT_CAP = 10**6


_mat_inverse_cached = lru_cache(maxsize=4096)(mat_inverse)


# ---------------------------------------------------------------------------
# permutations as tuples of 0-indexed images, trailing fixed points stripped

def perm_canonical(p) -> tuple[int, ...]:
    p = list(p)
    while p and p[-1] == len(p) - 1:
        p.pop()
    return tuple(p)


def perm_image(p, i: int) -> int:
    return p[i] if i < len(p) else i


def perm_mul(p, q) -> tuple[int, ...]:
    """(p∘q)(i) = p(q(i))."""
    n = max(len(p), len(q))
    return perm_canonical(perm_image(p, perm_image(q, i)) for i in range(n))


def perm_inv(p) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return perm_canonical(out)


def perm_apply_vec(p, v: F2Vector) -> F2Vector:
    """Permute coordinates: (p·v)_{p(i)} = v_i."""
    bits = 0
    b = v.bits
    i = 0
    while b:
        if b & 1:
            bits |= 1 << perm_image(p, i)
        b >>= 1
        i += 1
    return F2Vector(bits)


def transposition(i: int, j: int) -> tuple[int, ...]:
    """Transposition of 0-indexed points i and j."""
    n = max(i, j) + 1
    p = list(range(n))
    p[i], p[j] = p[j], p[i]
    return perm_canonical(p)


def cycle(n: int) -> tuple[int, ...]:
    """The n-cycle (0 1 … n-1)."""
    return perm_canonical([(i + 1) % n for i in range(n)])


# ---------------------------------------------------------------------------
# the four element types


@dataclass(frozen=True)
class Affine:
    """Element (g, v) of GL(n,F2) ⋉ F2^n."""

    g: F2Matrix
    v: F2Vector

    family = "affine"

    @staticmethod
    def identity() -> "Affine":
        return Affine(F2Matrix.identity(), F2Vector(0))

    @staticmethod
    def vector(v: F2Vector) -> "Affine":
        return Affine(F2Matrix.identity(), v)

    @staticmethod
    def matrix(g: F2Matrix) -> "Affine":
        return Affine(g, F2Vector(0))

    def is_identity(self) -> bool:
        return self.g.is_identity() and self.v.is_zero()

    def sort_key(self):
        return (self.g.rows, self.v.bits)


@dataclass(frozen=True)
class Wreath:
    """Element (σ, v) of S_n ⋉ Z2^n; σ permutes the n lamp coordinates."""

    sigma: tuple[int, ...]
    v: F2Vector

    family = "wreath"

    def __post_init__(self):
        object.__setattr__(self, "sigma", perm_canonical(self.sigma))

    @staticmethod
    def identity() -> "Wreath":
        return Wreath((), F2Vector(0))

    @staticmethod
    def vector(v: F2Vector) -> "Wreath":
        return Wreath((), v)

    @staticmethod
    def perm(p) -> "Wreath":
        return Wreath(tuple(p), F2Vector(0))

    def is_identity(self) -> bool:
        return not self.sigma and self.v.is_zero()

    def sort_key(self):
        return (self.sigma, self.v.bits)


@dataclass(frozen=True)
class Lamplighter:
    """Element (v, t) of Z2 ≀ (Z/m): lamps v indexed by Z/m, shift t."""

    m: int
    v: int  # bitmask over Z/m
    t: int

    family = "lamplighter"

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "v", self.v & ((1 << self.m) - 1))
        object.__setattr__(self, "t", self.t % self.m)

    @staticmethod
    def identity(m: int) -> "Lamplighter":
        return Lamplighter(m, 0, 0)

    @staticmethod
    def lamp(m: int, i: int) -> "Lamplighter":
        """δ at position i (0-indexed mod m)."""
        return Lamplighter(m, 1 << (i % m), 0)

    @staticmethod
    def shift(m: int, t: int = 1) -> "Lamplighter":
        return Lamplighter(m, 0, t)

    def is_identity(self) -> bool:
        return self.v == 0 and self.t == 0

    def support_size(self) -> int:
        return bin(self.v).count("1")

    def sort_key(self):
        return (self.m, self.t, self.v)


def _shift_bits(v: int, t: int, m: int) -> int:
    """Cyclically shift the lamp mask by t positions (bit i -> bit i+t)."""
    t %= m
    mask = (1 << m) - 1
    return ((v << t) | (v >> (m - t))) & mask if t else v


@dataclass(frozen=True)
class Cantor:
    """Element (σ, A) of S(2^m) ⋉ C̃_m.

    Points of the level-m Cantor truncation are ints in [0, 2^m); bit
    j-1 of a point is its j-th letter.  A is a point set taken modulo
    complement; the stored representative omits the all-zeros point.
    The level is minimal under the duplicating embedding s -> (s, s).
    """

    m: int
    sigma: tuple[int, ...]
    a: frozenset[int]

    family = "cantor"

    def __post_init__(self):
        m, sigma, a = self.m, tuple(self.sigma), frozenset(self.a)
        if len(sigma) != 1 << m:
            raise ValueError("permutation size must be 2^m")
        if 0 in a:
            a = frozenset(range(1 << m)) - a
        # reduce to the minimal level: both halves must act identically
        # and A must be a union of {w, w + 2^(m-1)} pairs
        while m > 0:
            half = 1 << (m - 1)
            ok = all(
                sigma[w] < half and sigma[w + half] == sigma[w] + half
                for w in range(half)
            )
            if ok:
                ok = all((w in a) == ((w ^ half) in a) for w in a)
            if not ok:
                break
            m -= 1
            sigma = sigma[:half]
            a = frozenset(w for w in a if w < half)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "a", a)

    @staticmethod
    def identity() -> "Cantor":
        return Cantor(0, (0,), frozenset())

    @staticmethod
    def perm(m: int, sigma) -> "Cantor":
        return Cantor(m, tuple(sigma), frozenset())

    @staticmethod
    def indicator(m: int, a) -> "Cantor":
        """The projection-like involution f̃_A for a point set A."""
        return Cantor(m, tuple(range(1 << m)), frozenset(a))

    def is_identity(self) -> bool:
        return self.m == 0

    def at_level(self, m: int) -> tuple[tuple[int, ...], frozenset[int]]:
        """The (σ, A) payload embedded to level m ≥ self.m."""
        sigma, a = self.sigma, self.a
        for lvl in range(self.m, m):
            half = 1 << lvl
            sigma = sigma + tuple(x + half for x in sigma)
            a = frozenset(a) | {w + half for w in a}
        return sigma, a

    def sort_key(self):
        return (self.m, self.sigma, tuple(sorted(self.a)))


GroupElement = Affine | Wreath | Lamplighter | Cantor


def cylinder_points(word: str, m: int) -> frozenset[int]:
    """Points of {0,1}^m whose first len(word) letters spell word."""
    k = len(word)
    if k > m:
        raise ValueError("word longer than level")
    base = 0
    for j, c in enumerate(word):
        if c == "1":
            base |= 1 << j
    return frozenset(base | (rest << k) for rest in range(1 << (m - k)))


# ---------------------------------------------------------------------------
# group operations


def _check_family(a: GroupElement, b: GroupElement):
    if a.family != b.family:
        raise FamilyMismatch(f"{a.family} vs {b.family}")
    if isinstance(a, Lamplighter) and a.m != b.m:
        raise FamilyMismatch(f"lamplighter moduli differ: {a.m} vs {b.m}")


def multiply(a: GroupElement, b: GroupElement) -> GroupElement:
    """(g1,v1)(g2,v2) = (g1 g2, g2^{-1}(v1) + v2)."""
    _check_family(a, b)
    if isinstance(a, Affine):
        if b.g.is_identity():  # vector factors are the common hot path
            return Affine(a.g, a.v + b.v)
        g2i = _mat_inverse_cached(b.g)
        return Affine(mat_mul(a.g, b.g), g2i.apply(a.v) + b.v)
    if isinstance(a, Wreath):
        return Wreath(
            perm_mul(a.sigma, b.sigma),
            perm_apply_vec(perm_inv(b.sigma), a.v) + b.v,
        )
    if isinstance(a, Lamplighter):
        return Lamplighter(
            a.m, _shift_bits(a.v, -b.t, a.m) ^ b.v, a.t + b.t
        )
    m = max(a.m, b.m)
    s1, a1 = a.at_level(m)
    s2, a2 = b.at_level(m)
    s2_inv = [0] * (1 << m)
    for i, j in enumerate(s2):
        s2_inv[j] = i
    prod = tuple(s1[s2[i]] for i in range(1 << m))
    moved = frozenset(s2_inv[x] for x in a1)
    return Cantor(m, prod, moved ^ a2)


def inverse(a: GroupElement) -> GroupElement:
    """(g, v)^{-1} = (g^{-1}, g(v))."""
    if isinstance(a, Affine):
        if a.g.is_identity():
            return Affine(a.g, a.v)
        return Affine(_mat_inverse_cached(a.g), a.g.apply(a.v))
    if isinstance(a, Wreath):
        return Wreath(perm_inv(a.sigma), perm_apply_vec(a.sigma, a.v))
    if isinstance(a, Lamplighter):
        return Lamplighter(a.m, _shift_bits(a.v, a.t, a.m), -a.t)
    if isinstance(a, Cantor):
        sigma, sub = a.sigma, a.a
        inv = [0] * len(sigma)
        for i, j in enumerate(sigma):
            inv[j] = i
        return Cantor(a.m, tuple(inv), frozenset(sigma[x] for x in sub))
    raise FamilyMismatch(f"not a group element: {a!r}")


def identity_like(a: GroupElement) -> GroupElement:
    if isinstance(a, Lamplighter):
        return Lamplighter.identity(a.m)
    return type(a).identity()


def conjugate(g: GroupElement, h: GroupElement) -> GroupElement:
    """g · h · g^{-1}."""
    return multiply(multiply(g, h), inverse(g))


# ---------------------------------------------------------------------------
# enumeration


@lru_cache(maxsize=None)
def gl_elements(n: int) -> tuple[F2Matrix, ...]:
    """All of GL(n, F2), in a fixed deterministic order."""
    out = []
    for rows in itertools.product(range(1 << n), repeat=n):
        if _rank_of_rows(rows) == n:
            out.append(F2Matrix(rows))
    return tuple(out)


def group_order(family: str, n: int) -> int:
    if family == "affine":
        order = 1
        for k in range(n):
            order *= (1 << n) - (1 << k)
        return order << n
    if family == "wreath":
        order = 1
        for k in range(2, n + 1):
            order *= k
        return order << n
    if family == "lamplighter":
        return n << n
    if family == "cantor":
        npts = 1 << n
        order = 1
        for k in range(2, npts + 1):
            order *= k
        return order << (npts - 1)
    raise FamilyMismatch(f"unknown family {family!r}")


def enumerate_group(family: str, n: int, cap: int = DEFAULT_CAP) -> list[GroupElement]:
    """All elements of the truncated group, deterministically ordered."""
    order = group_order(family, n)
    if order > cap:
        raise GroupTooLarge(f"{family} truncation {n} has {order} elements")
    out: list[GroupElement] = []
    if family == "affine":
        for g in gl_elements(n):
            for bits in range(1 << n):
                out.append(Affine(g, F2Vector(bits)))
    elif family == "wreath":
        for p in itertools.permutations(range(n)):
            for bits in range(1 << n):
                out.append(Wreath(p, F2Vector(bits)))
    elif family == "lamplighter":
        for t in range(n):
            for bits in range(1 << n):
                out.append(Lamplighter(n, bits, t))
    elif family == "cantor":
        npts = 1 << n
        subsets = [frozenset(s) for s in _subset_reps(npts)]
        for p in itertools.permutations(range(npts)):
            for s in subsets:
                out.append(Cantor(n, p, s))
    else:
        raise FamilyMismatch(f"unknown family {family!r}")
    return out


def _subset_reps(npts: int):
    """Subsets of [0, npts) not containing 0: representatives mod complement."""
    rest = list(range(1, npts))
    for r in range(npts):
        for combo in itertools.combinations(rest, r):
            yield combo


def centralizer(g: GroupElement, n: int, cap: int = DEFAULT_CAP) -> set[GroupElement]:
    """Exact centralizer of g inside the truncated group."""
    return {
        x
        for x in enumerate_group(g.family, n, cap)
        if multiply(x, g) == multiply(g, x)
    }


def orbit_under(
    h: GroupElement, conjugators, cap: int = DEFAULT_CAP
) -> set[GroupElement]:
    """Conjugation orbit of h under the group generated by the conjugators.

    When the conjugator set is a subgroup this is exactly
    {t^{-1} h t : t in C}.  The set must be closed under inverse.
    """
    conjugators = list(conjugators)
    cset = set(conjugators)
    for c in conjugators:
        if inverse(c) not in cset:
            raise NotSymmetric(f"conjugator set lacks the inverse of {c!r}")
    orbit = {h}
    frontier = [h]
    while frontier:
        nxt = []
        for x in frontier:
            for c in conjugators:
                y = conjugate(c, x)
                if y not in orbit:
                    if len(orbit) >= cap:
                        raise Overflow(f"conjugation orbit exceeds cap {cap}")
                    orbit.add(y)
                    nxt.append(y)
        frontier = nxt
    return orbit


def group_generators(family: str, n: int) -> list[GroupElement]:
    """A small symmetric-closure-friendly generating set of the truncation."""
    if family == "affine":
        gens = [Affine.vector(F2Vector.basis(1))]
        if n >= 2:
            gens.append(Affine.matrix(F2Matrix.transvection(1, 2)))
            perm_rows = [1 << ((i + 1) % n) for i in range(n)]
            gens.append(Affine.matrix(F2Matrix(perm_rows)))
        return gens
    if family == "wreath":
        gens = [Wreath.vector(F2Vector.basis(1))]
        if n >= 2:
            gens.append(Wreath.perm(transposition(0, 1)))
            gens.append(Wreath.perm(cycle(n)))
        return gens
    if family == "lamplighter":
        return [Lamplighter.lamp(n, 0), Lamplighter.shift(n, 1)]
    if family == "cantor":
        npts = 1 << n
        gens = [Cantor.indicator(n, {1})] if n >= 1 else []
        if npts >= 2:
            gens.append(Cantor.perm(n, transposition(0, 1) + tuple(range(2, npts))))
            gens.append(Cantor.perm(n, cycle(npts)))
        return gens
    raise FamilyMismatch(f"unknown family {family!r}")


def subgroup_closure(gens, cap: int = DEFAULT_CAP) -> set[GroupElement]:
    """The subgroup generated by gens, by BFS over products."""
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    sym = gens + [inverse(g) for g in gens]
    ident = identity_like(gens[0])
    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for s in sym:
                y = multiply(x, s)
                if y not in elems:
                    if len(elems) >= cap:
                        raise Overflow(f"subgroup closure exceeds cap {cap}")
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return elems


def normal_closure(
    gens, n: int, cap: int = DEFAULT_CAP
) -> set[GroupElement]:
    """Smallest subgroup of the level-n truncation containing gens and
    closed under conjugation by the whole truncated group."""
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    ggens = group_generators(gens[0].family, n)
    ggens = ggens + [inverse(g) for g in ggens]
    seed = set(gens)
    while True:
        closure = subgroup_closure(seed, cap)
        extra = set()
        for x in closure:
            for t in ggens:
                y = conjugate(t, x)
                if y not in closure:
                    extra.add(y)
        if not extra:
            return closure
        seed = closure | extra


# ---------------------------------------------------------------------------
# structure-aware centralizer generating sets (for orbit growth at
# truncations too large to enumerate)


def affine_vector_centralizer_gens(n: int) -> list[GroupElement]:
    """Generators of the centralizer of the pure vector e1 in the level-n
    affine truncation: the e1-stabilizer in GL times all of F2^n."""
    gens: list[GroupElement] = [
        Affine.vector(F2Vector.basis(k)) for k in range(1, n + 1)
    ]
    # transvections I + E_ij fix e1 exactly when j != 1
    for i in range(1, n + 1):
        for j in range(2, n + 1):
            if i != j:
                gens.append(Affine.matrix(F2Matrix.transvection(i, j)))
    return gens


def wreath_vector_centralizer_gens(n: int) -> list[GroupElement]:
    """Generators of the centralizer of the lamp z^(1) in S_n ⋉ Z2^n."""
    gens: list[GroupElement] = [
        Wreath.vector(F2Vector.basis(k)) for k in range(1, n + 1)
    ]
    for i in range(1, n - 1):
        gens.append(Wreath.perm(transposition(i, i + 1)))
    return gens


def cantor_indicator_centralizer_gens(m: int, a) -> list[GroupElement]:
    """Generators of the centralizer of f̃_A at level m: permutations
    preserving {A, complement(A)} times the whole abelian part."""
    a = set(Cantor.indicator(m, a).at_level(m)[1])
    npts = 1 << m
    comp = sorted(set(range(npts)) - a)
    a_sorted = sorted(a)
    gens: list[GroupElement] = [Cantor.indicator(m, {p}) for p in range(1, npts)]
    for block in (a_sorted, comp):
        for i in range(len(block) - 1):
            gens.append(
                Cantor.perm(m, transposition(block[i], block[i + 1]) + tuple(
                    range(max(block[i], block[i + 1]) + 1, npts)
                ))
            )
    if len(a_sorted) == len(comp) and a_sorted:
        swap = list(range(npts))
        for x, y in zip(a_sorted, comp):
            swap[x], swap[y] = swap[y], swap[x]
        gens.append(Cantor.perm(m, swap))
    return gens


def cantor_involution_centralizer_gens(m: int, s: Cantor) -> list[GroupElement]:
    """Generators of the centralizer of a point involution at level m.

    The involution is a product of disjoint transpositions with support
    strictly smaller than the whole point set; its centralizer is the
    pair-preserving wreath-type group times the permutations of the
    fixed points, with the s-invariant point sets as the abelian part.
    """
    sigma, a = s.at_level(m)
    if a:
        raise FamilyMismatch("centralizer helper needs a pure permutation")
    npts = 1 << m
    pairs = sorted(
        (x, sigma[x]) for x in range(npts) if sigma[x] > x
    )
    fixed = sorted(x for x in range(npts) if sigma[x] == x)
    if any(sigma[sigma[x]] != x for x in range(npts)):
        raise FamilyMismatch("element is not an involution")
    if not fixed:
        raise FamilyMismatch("involution must have a fixed point")

    def full_perm(mapping):
        p = list(range(npts))
        for src, dst in mapping.items():
            p[src] = dst
        return Cantor.perm(m, tuple(p))

    gens: list[GroupElement] = []
    for a0, b0 in pairs:
        gens.append(full_perm({a0: b0, b0: a0}))
    for (a0, b0), (a1, b1) in zip(pairs, pairs[1:]):
        gens.append(full_perm({a0: a1, a1: a0, b0: b1, b1: b0}))
    for x, y in zip(fixed, fixed[1:]):
        gens.append(full_perm({x: y, y: x}))
    for a0, b0 in pairs:
        gens.append(Cantor.indicator(m, {a0, b0}))
    for x in fixed:
        gens.append(Cantor.indicator(m, {x}))
    return gens
