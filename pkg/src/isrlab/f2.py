"""Exact GF(2) vectors and matrices, bit-packed into Python ints.

Vectors and matrices model the finitary objects of the direct-limit
groups: a vector is zero beyond some index, a matrix is the identity
beyond some index.  Every value is stored in canonical (minimal
dimension) form, so equality across truncation levels is plain
equality and identity-embedding is a no-op.

Coordinates are 1-indexed in the math and 0-indexed in the bit layout:
bit ``i`` of ``F2Vector.bits`` is coordinate ``i+1``.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import IdentityInput, RangeTooLarge, SingularMatrix

DEFAULT_RANGE_CAP = 1 << 16


def _parity(x: int) -> int:
    return bin(x).count("1") & 1


class F2Vector:
    """A finitely supported column vector over GF(2)."""

    __slots__ = ("bits",)

    def __init__(self, bits: int = 0):
        if bits < 0:
            raise ValueError("bits must be a nonnegative int")
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, *a):
        raise AttributeError("F2Vector is immutable")

    @classmethod
    def basis(cls, i: int) -> "F2Vector":
        """Standard basis vector e_i (1-indexed)."""
        return cls(1 << (i - 1))

    @classmethod
    def from_bits(cls, coords) -> "F2Vector":
        bits = 0
        for k, c in enumerate(coords):
            if c & 1:
                bits |= 1 << k
        return cls(bits)

    @property
    def dim(self) -> int:
        """Minimal n with all later coordinates zero."""
        return self.bits.bit_length()

    def get(self, i: int) -> int:
        """Coordinate i (1-indexed)."""
        return (self.bits >> (i - 1)) & 1

    def support(self):
        """Sorted 1-indexed coordinates equal to 1."""
        return [i + 1 for i in range(self.dim) if (self.bits >> i) & 1]

    def is_zero(self) -> bool:
        return self.bits == 0

    def __add__(self, other: "F2Vector") -> "F2Vector":
        return F2Vector(self.bits ^ other.bits)

    __xor__ = __add__
    __sub__ = __add__

    def dot(self, other: "F2Vector") -> int:
        return _parity(self.bits & other.bits)

    def __eq__(self, other) -> bool:
        return isinstance(other, F2Vector) and self.bits == other.bits

    def __hash__(self):
        return hash(("F2Vector", self.bits))

    def to_bitstring(self, width: int | None = None) -> str:
        n = self.dim if width is None else width
        return "".join(str((self.bits >> i) & 1) for i in range(n))

    @classmethod
    def from_bitstring(cls, s: str) -> "F2Vector":
        return cls.from_bits(int(c) for c in s)

    def __repr__(self):
        return f"F2Vector({self.to_bitstring() or '0'})"


def _canonical_rows(rows) -> tuple[int, ...]:
    rows = list(rows)
    n = len(rows)
    while n > 0:
        last = 1 << (n - 1)
        if rows[n - 1] != last:
            break
        if any(rows[i] & last for i in range(n - 1)):
            break
        n -= 1
    return tuple(rows[:n])


class F2Matrix:
    """A matrix over GF(2) equal to the identity beyond its stored block.

    Row ``i`` (0-indexed) is an int bitmask whose bit ``j`` is entry
    (i+1, j+1).  The stored block is minimal: the last stored row/column
    pair is not an identity row/column.
    """

    __slots__ = ("rows",)

    def __init__(self, rows):
        object.__setattr__(self, "rows", _canonical_rows(rows))

    def __setattr__(self, *a):
        raise AttributeError("F2Matrix is immutable")

    @classmethod
    def identity(cls) -> "F2Matrix":
        return cls(())

    @classmethod
    def from_lists(cls, entries) -> "F2Matrix":
        rows = []
        for r in entries:
            bits = 0
            for j, c in enumerate(r):
                if c & 1:
                    bits |= 1 << j
            rows.append(bits)
        return cls(rows)

    @classmethod
    def transvection(cls, i: int, j: int) -> "F2Matrix":
        """I + E_ij, 1-indexed, i != j."""
        if i == j:
            raise ValueError("transvection requires i != j")
        n = max(i, j)
        rows = [(1 << k) for k in range(n)]
        rows[i - 1] |= 1 << (j - 1)
        return cls(rows)

    @classmethod
    def swap(cls, i: int, j: int) -> "F2Matrix":
        """Permutation matrix exchanging coordinates i and j (1-indexed)."""
        n = max(i, j)
        rows = [(1 << k) for k in range(n)]
        rows[i - 1], rows[j - 1] = rows[j - 1], rows[i - 1]
        return cls(rows)

    @property
    def n(self) -> int:
        """Dimension of the minimal non-identity block."""
        return len(self.rows)

    def row(self, i: int) -> int:
        """Row i (0-indexed) of the matrix viewed in any dimension > i."""
        return self.rows[i] if i < len(self.rows) else 1 << i

    def entry(self, i: int, j: int) -> int:
        """Entry at (i, j), 1-indexed."""
        return (self.row(i - 1) >> (j - 1)) & 1

    def is_identity(self) -> bool:
        return not self.rows

    def __eq__(self, other) -> bool:
        return isinstance(other, F2Matrix) and self.rows == other.rows

    def __hash__(self):
        return hash(("F2Matrix", self.rows))

    def __mul__(self, other: "F2Matrix") -> "F2Matrix":
        return mat_mul(self, other)

    def apply(self, v: F2Vector) -> F2Vector:
        """Matrix-vector product g(v)."""
        n = max(self.n, v.dim)
        bits = 0
        for i in range(n):
            if _parity(self.row(i) & v.bits):
                bits |= 1 << i
        return F2Vector(bits)

    def to_bitstring(self, width: int | None = None) -> str:
        """Row-major bitstring of the width x width upper-left block."""
        n = self.n if width is None else width
        mask = (1 << n) - 1
        return "".join(
            format(self.row(i) & mask, f"0{n}b")[::-1] for i in range(n)
        )

    @classmethod
    def from_bitstring(cls, s: str) -> "F2Matrix":
        n = round(len(s) ** 0.5)
        if n * n != len(s):
            raise ValueError("bitstring length is not a perfect square")
        return cls.from_lists(
            [[int(s[i * n + j]) for j in range(n)] for i in range(n)]
        )

    def __repr__(self):
        n = self.n
        if n == 0:
            return "F2Matrix(I)"
        return "F2Matrix(" + self.to_bitstring() + f", n={n})"


def mat_mul(a: F2Matrix, b: F2Matrix) -> F2Matrix:
    """Exact GF(2) matrix product, auto-embedding to a common dimension."""
    n = max(a.n, b.n)
    out = []
    for i in range(n):
        r = a.row(i)
        acc = 0
        while r:
            j = (r & -r).bit_length() - 1
            acc ^= b.row(j)
            r &= r - 1
        out.append(acc)
    return F2Matrix(out)


def mat_inverse(a: F2Matrix) -> F2Matrix:
    """Inverse over GF(2); raises SingularMatrix on rank deficiency."""
    n = a.n
    if n == 0:
        return F2Matrix.identity()
    # Gauss-Jordan on [A | I] packed into single ints.
    aug = [a.row(i) | (1 << (n + i)) for i in range(n)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if (aug[r] >> col) & 1:
                piv = r
                break
        if piv is None:
            raise SingularMatrix(f"matrix of dimension {n} is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        for r in range(n):
            if r != col and (aug[r] >> col) & 1:
                aug[r] ^= aug[col]
    return F2Matrix([aug[i] >> n for i in range(n)])


def _rank_of_rows(rows) -> int:
    basis: list[int] = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
            basis.sort(reverse=True)
    return len(basis)


def _difference_rows(g: F2Matrix) -> list[int]:
    """Rows of g - I within the canonical block."""
    return [g.rows[i] ^ (1 << i) for i in range(g.n)]


def rank_defect(g: F2Matrix) -> int:
    """rank(g - I) over GF(2); invariant under identity-embedding."""
    return _rank_of_rows(_difference_rows(g))


def _range_basis(g: F2Matrix) -> list[int]:
    """Independent columns of g - I, as vector bitmasks."""
    n = g.n
    diff = _difference_rows(g)
    cols = []
    for j in range(n):
        c = 0
        for i in range(n):
            if (diff[i] >> j) & 1:
                c |= 1 << i
        cols.append(c)
    basis: list[int] = []
    for c in cols:
        red = c
        for b in basis:
            red = min(red, red ^ b)
        if red:
            basis.append(red)
            basis.sort(reverse=True)
    return basis


def range_subgroup(g: F2Matrix, cap: int = DEFAULT_RANGE_CAP) -> frozenset[F2Vector]:
    """The enumerated subspace R(g - I), of size 2**rank_defect(g)."""
    basis = _range_basis(g)
    if 1 << len(basis) > cap:
        raise RangeTooLarge(
            f"range subgroup has 2^{len(basis)} elements, cap is {cap}"
        )
    span = [0]
    for b in basis:
        span += [x ^ b for x in span]
    return frozenset(F2Vector(x) for x in span)


@lru_cache(maxsize=8)
def _rank1_involutions(r: int) -> tuple[F2Matrix, ...]:
    """All involutions t in GL(r, F2) with rank(t - I) = 1.

    These are exactly I + v*phi with phi(v) = 0, v, phi nonzero.
    """
    out = []
    for v in range(1, 1 << r):
        for phi in range(1, 1 << r):
            if _parity(v & phi):
                continue
            rows = []
            for i in range(r):
                row = 1 << i
                if (v >> i) & 1:
                    row ^= phi
                rows.append(row)
            out.append(F2Matrix(rows))
    return tuple(out)


@lru_cache(maxsize=8)
def _gl_factor_table(r: int) -> dict[tuple[int, ...], tuple[F2Matrix, ...]]:
    """Shortest factorization of each element of GL(r, F2) into rank-1
    involutions, found by BFS over the Cayley graph."""
    gens = _rank1_involutions(r)
    ident = F2Matrix.identity()
    table: dict[tuple[int, ...], tuple[F2Matrix, ...]] = {ident.rows: ()}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            word = table[m.rows]
            for t in gens:
                p = mat_mul(m, t)
                if p.rows not in table:
                    table[p.rows] = word + (t,)
                    nxt.append(p)
        frontier = nxt
    return table


def _extend_to_basis(basis: list[int], n: int) -> list[int]:
    """Extend an independent list of vector bitmasks to a basis of F2^n."""
    full = list(basis)
    red_basis = list(basis)
    for j in range(n):
        c = 1 << j
        red = c
        for b in red_basis:
            red = min(red, red ^ b)
        if red:
            full.append(c)
            red_basis.append(red)
            red_basis.sort(reverse=True)
    return full


def transvection_factorize(g: F2Matrix) -> list[F2Matrix]:
    """Write g as an ordered product of rank-1 involutions whose ranges
    sum to R(g - I).

    The construction conjugates R(g - I) onto a leading coordinate
    block, peels off the off-diagonal column block as commuting
    transvections, and decomposes the top-left invertible block by
    shortest-word search over rank-1 involutions.
    """
    if g.is_identity():
        raise IdentityInput("cannot factorize the identity")
    n = g.n
    rbasis = _range_basis(g)
    r = len(rbasis)
    cols = _extend_to_basis(rbasis, n)
    # M has the chosen basis as columns; h = M^{-1} maps R(g-I) onto F2^r.
    m_rows = []
    for i in range(n):
        row = 0
        for j, c in enumerate(cols):
            if (c >> i) & 1:
                row |= 1 << j
        m_rows.append(row)
    m_mat = F2Matrix(m_rows)
    h = mat_inverse(m_mat)
    gp = mat_mul(mat_mul(h, g), m_mat)
    low_mask = (1 << r) - 1
    factors_p: list[F2Matrix] = []
    # Column block: entries (i, j) with i < r <= j give commuting
    # transvections I + E_{i+1, j+1}.
    for i in range(r):
        hi = gp.row(i) & ~low_mask
        while hi:
            j = (hi & -hi).bit_length() - 1
            factors_p.append(F2Matrix.transvection(i + 1, j + 1))
            hi &= hi - 1
    # Top-left block in GL(r, F2).
    g1_rows = [gp.row(i) & low_mask for i in range(r)]
    g1 = F2Matrix(g1_rows)
    if not g1.is_identity():
        word = _gl_factor_table(r).get(g1.rows)
        if word is None:
            raise SingularMatrix("top-left block is not invertible")
        factors_p.extend(word)
    hinv = m_mat
    return [mat_mul(mat_mul(hinv, s), h) for s in factors_p]
