"""Exact integer and rational linear algebra.

Matrices are row-major tuples/lists of Python ``int`` or
``fractions.Fraction``; nothing here ever touches floating point.  This
module supplies the normal forms (Hermite, Smith), determinants,
characteristic polynomials and the row-lattice arithmetic that the rest of
the package is built on.

Convention used package-wide: vectors are rows, and an endomorphism given
by a matrix ``U`` acts on *coordinate columns*, so a row vector ``x``
transforms as ``x @ U^T``.
"""

from __future__ import annotations

from fractions import Fraction as Q
from math import gcd, lcm
from typing import Iterable, Sequence

IntRow = tuple[int, ...]
IntMat = tuple[IntRow, ...]


# ---------------------------------------------------------------------------
# basic matrix helpers


def freeze(rows: Iterable[Sequence]) -> tuple:
    return tuple(tuple(r) for r in rows)


def identity(n: int) -> IntMat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zeros(m: int, n: int) -> IntMat:
    return tuple((0,) * n for _ in range(m))


def transpose(a) -> tuple:
    return tuple(zip(*a)) if a else ()


def mat_mul(a, b) -> tuple:
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_add(a, b) -> tuple:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a, b) -> tuple:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_neg(a) -> tuple:
    return tuple(tuple(-x for x in row) for row in a)


def mat_scale(c, a) -> tuple:
    return tuple(tuple(c * x for x in row) for row in a)


def mat_eq(a, b) -> bool:
    return freeze(a) == freeze(b)


def is_square(a) -> bool:
    return all(len(row) == len(a) for row in a)


def is_symmetric(a) -> bool:
    n = len(a)
    return all(a[i][j] == a[j][i] for i in range(n) for j in range(i + 1, n))


def row_vec_mul(x: Sequence, a) -> tuple:
    """x @ a for a row vector x."""
    return tuple(sum(x[i] * a[i][j] for i in range(len(x))) for j in range(len(a[0])))


def apply_coords(u, x: Sequence) -> tuple:
    """Image of the coordinate row ``x`` under the column-convention matrix ``u``."""
    return tuple(sum(u[i][j] * x[j] for j in range(len(x))) for i in range(len(u)))


def dot(x: Sequence, y: Sequence):
    return sum(a * b for a, b in zip(x, y))


def gram_pairing(gram, x: Sequence, y: Sequence):
    """(x|y) = x G y^T for coordinate rows x, y."""
    return sum(x[i] * sum(gram[i][j] * y[j] for j in range(len(y))) for i in range(len(x)))


# ---------------------------------------------------------------------------
# determinants and minors (fraction-free Bareiss)


def leading_principal_minors(a) -> list[int]:
    """The n leading principal minors of an integer matrix, exactly.

    Fraction-free Bareiss while the pivots stay nonzero; any block hit by a
    zero pivot falls back to a rational determinant (only happens on input
    that is about to be rejected as non positive definite).
    """
    n = len(a)
    m = [list(map(int, row)) for row in a]
    minors: list[int] = []
    prev = 1
    for k in range(n):
        if m[k][k] == 0:
            minors.extend(
                _det_fraction([row[: j + 1] for row in a[: j + 1]]) for j in range(k, n)
            )
            return minors
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        minors.append(m[k][k])
        prev = m[k][k]
    return minors


def _det_fraction(a) -> int:
    n = len(a)
    m = [[Q(x) for x in row] for row in a]
    det = Q(1)
    for k in range(n):
        piv = None
        for i in range(k, n):
            if m[i][k] != 0:
                piv = i
                break
        if piv is None:
            return 0
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        det *= m[k][k]
        inv = m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / inv
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[k])]
    assert det.denominator == 1
    return int(det)


def det(a) -> int:
    """Exact determinant of a square integer matrix."""
    if not a:
        return 1
    return _det_fraction(a)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (x, y, g) with x*a + y*b == g == gcd(a, b), g >= 0.

    When a divides b the result is (sign(a), 0, |a|), so the combination
    row x*r1 + y*r2 leaves r1 untouched up to sign; normal-form loops rely
    on this to make progress.
    """
    if a != 0 and b % a == 0:
        return (1 if a > 0 else -1), 0, abs(a)
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return x0, y0, a


# ---------------------------------------------------------------------------
# Hermite normal form


def hnf(rows, transform: bool = False):
    """Row Hermite normal form.

    Returns ``(h, rank)`` or ``(h, rank, u)`` with ``u`` unimodular and
    ``u @ rows == h``.  ``h`` keeps the original number of rows; the last
    ``m - rank`` rows are zero.  Pivots are positive and entries above a
    pivot are reduced into ``[0, pivot)``.
    """
    a = [list(map(int, row)) for row in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    u = [list(row) for row in identity(m)] if transform else None
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if a[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
            if u is not None:
                u[r], u[piv] = u[piv], u[r]
        for i in range(r + 1, m):
            if a[i][c] == 0:
                continue
            p, q = a[r][c], a[i][c]
            x, y, g = xgcd(p, q)
            p_, q_ = p // g, q // g
            a[r], a[i] = (
                [x * s + y * t for s, t in zip(a[r], a[i])],
                [-q_ * s + p_ * t for s, t in zip(a[r], a[i])],
            )
            if u is not None:
                u[r], u[i] = (
                    [x * s + y * t for s, t in zip(u[r], u[i])],
                    [-q_ * s + p_ * t for s, t in zip(u[r], u[i])],
                )
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
            if u is not None:
                u[r] = [-x for x in u[r]]
        for i in range(r):
            q = a[i][c] // a[r][c]
            if q:
                a[i] = [s - q * t for s, t in zip(a[i], a[r])]
                if u is not None:
                    u[i] = [s - q * t for s, t in zip(u[i], u[r])]
        r += 1
        if r == m:
            break
    if transform:
        return freeze(a), r, freeze(u)
    return freeze(a), r


def int_rank(rows) -> int:
    return hnf(rows)[1]


def left_kernel(rows) -> IntMat:
    """Basis (rows) of {x integer : x @ rows == 0}; saturated in Z^m."""
    h, rank, u = hnf(rows, transform=True)
    return u[rank:]


def charpoly(a) -> tuple[int, ...]:
    """Coefficients (c_0, ..., c_n) of det(xI - A) = sum c_k x^k, exact.

    Faddeev-LeVerrier; divisions are exact for integer input.
    """
    n = len(a)
    aq = tuple(tuple(Q(x) for x in row) for row in a)
    coeffs = [Q(0)] * (n + 1)
    coeffs[n] = Q(1)
    m = tuple(tuple(Q(0) for _ in range(n)) for _ in range(n))
    for k in range(1, n + 1):
        m = mat_mul(aq, mat_add(m, mat_scale(coeffs[n - k + 1], identity(n))))
        coeffs[n - k] = -sum(m[i][i] for i in range(n)) / k
    assert all(c.denominator == 1 for c in coeffs)
    return tuple(int(c) for c in coeffs)


# ---------------------------------------------------------------------------
# Smith normal form (invariant factors)


def snf_diagonal(mat) -> list[int]:
    """Diagonal of the Smith normal form (nonnegative, divisibility chain).

    Returns min(m, n) entries; zeros indicate rank deficiency.
    """
    a = [list(map(int, row)) for row in mat]
    m = len(a)
    n = len(a[0]) if m else 0
    k = 0
    diag = []
    while k < min(m, n):
        # find a nonzero pivot
        piv = None
        for i in range(k, m):
            for j in range(k, n):
                if a[i][j]:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        i0, j0 = piv
        a[k], a[i0] = a[i0], a[k]
        for row in a:
            row[k], row[j0] = row[j0], row[k]
        while True:
            # clear column k
            for i in range(k + 1, m):
                if a[i][k]:
                    p, q = a[k][k], a[i][k]
                    x, y, g = xgcd(p, q)
                    p_, q_ = p // g, q // g
                    a[k], a[i] = (
                        [x * s + y * t for s, t in zip(a[k], a[i])],
                        [-q_ * s + p_ * t for s, t in zip(a[k], a[i])],
                    )
            # clear row k
            for j in range(k + 1, n):
                if a[k][j]:
                    p, q = a[k][k], a[k][j]
                    x, y, g = xgcd(p, q)
                    p_, q_ = p // g, q // g
                    for row in a:
                        s, t = row[k], row[j]
                        row[k], row[j] = x * s + y * t, -q_ * s + p_ * t
            if all(a[i][k] == 0 for i in range(k + 1, m)):
                # ensure pivot divides the rest of the block
                bad = None
                for i in range(k + 1, m):
                    for j in range(k + 1, n):
                        if a[i][j] % a[k][k]:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                a[k] = [s + t for s, t in zip(a[k], a[bad])]
        diag.append(abs(a[k][k]))
        k += 1
    while len(diag) < min(m, n):
        diag.append(0)
    return diag


def invariant_factors(mat) -> tuple[int, ...]:
    """Nontrivial invariant factors (> 1) of coker(mat) for full-rank mat."""
    return tuple(d for d in snf_diagonal(mat) if d > 1)


# ---------------------------------------------------------------------------
# rational matrices


def rat_mat(a) -> tuple:
    return tuple(tuple(Q(x) for x in row) for row in a)


def rat_inverse(a) -> tuple:
    """Inverse of a square rational matrix by Gauss-Jordan elimination."""
    n = len(a)
    m = [[Q(x) for x in row] + [Q(1) if i == j else Q(0) for j in range(n)] for i, row in enumerate(a)]
    for k in range(n):
        piv = None
        for i in range(k, n):
            if m[i][k] != 0:
                piv = i
                break
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        m[k], m[piv] = m[piv], m[k]
        inv = m[k][k]
        m[k] = [x / inv for x in m[k]]
        for i in range(n):
            if i != k and m[i][k]:
                f = m[i][k]
                m[i] = [x - f * y for x, y in zip(m[i], m[k])]
    return tuple(tuple(row[n:]) for row in m)


def rat_rank(a) -> int:
    rows = [list(map(Q, row)) for row in a]
    n = len(rows[0]) if rows else 0
    rank = 0
    col = 0
    while rank < len(rows) and col < n:
        piv = None
        for i in range(rank, len(rows)):
            if rows[i][col] != 0:
                piv = i
                break
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = rows[rank][col]
        rows[rank] = [x / inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


def common_denominator(rows) -> int:
    d = 1
    for row in rows:
        for x in row:
            d = lcm(d, Q(x).denominator)
    return d


# ---------------------------------------------------------------------------
# row lattices: finitely generated subgroups of Q^n


class RowLattice:
    """A finitely generated subgroup of Q^n in canonical form.

    Stored as ``(1/den) * span_Z(basis rows)`` with ``basis`` in Hermite
    normal form and ``gcd(den, content(basis)) == 1``, so equality is
    literal tuple equality.
    """

    __slots__ = ("den", "basis", "ambient")

    def __init__(self, den: int, basis: IntMat, ambient: int):
        self.den = den
        self.basis = basis
        self.ambient = ambient

    @classmethod
    def from_rows(cls, rows, ambient: int | None = None) -> "RowLattice":
        rows = [tuple(Q(x) for x in row) for row in rows]
        if ambient is None:
            ambient = len(rows[0]) if rows else 0
        den = common_denominator(rows)
        int_rows = [tuple(int(x * den) for x in row) for row in rows]
        h, rank = hnf(int_rows)
        basis = h[:rank]
        content = 0
        for row in basis:
            for x in row:
                content = gcd(content, x)
        g = gcd(den, content)
        if g > 1:
            den //= g
            basis = tuple(tuple(x // g for x in row) for row in basis)
        return cls(den, basis, ambient)

    @classmethod
    def standard(cls, n: int) -> "RowLattice":
        return cls(1, identity(n), n)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def rational_basis(self) -> tuple:
        d = Q(1, self.den)
        return tuple(tuple(d * x for x in row) for row in self.basis)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RowLattice)
            and self.den == other.den
            and self.basis == other.basis
            and self.ambient == other.ambient
        )

    def __hash__(self):
        return hash((self.den, self.basis, self.ambient))

    def coords_of(self, vec) -> tuple | None:
        """Integer coordinates of ``vec`` in ``basis``/den, or None."""
        target = [Q(x) * self.den for x in vec]
        coords = []
        rows = self.basis
        pivots = []
        for row in rows:
            j = next(k for k, x in enumerate(row) if x)
            pivots.append(j)
        for i, row in enumerate(rows):
            j = pivots[i]
            c = target[j] / row[j]
            if c.denominator != 1:
                return None
            c = int(c)
            coords.append(c)
            if c:
                target = [t - c * x for t, x in zip(target, row)]
        if any(t != 0 for t in target):
            return None
        return tuple(coords)

    def contains_vector(self, vec) -> bool:
        return self.coords_of(vec) is not None

    def contains(self, other: "RowLattice") -> bool:
        return all(self.contains_vector(row) for row in other.rational_basis())

    def index_of_sublattice(self, sub: "RowLattice") -> int:
        """[self : sub] for full-rank sub of the same rank; exact."""
        if sub.rank != self.rank:
            raise ValueError("ranks differ")
        w = []
        for row in sub.rational_basis():
            c = self.coords_of(row)
            if c is None:
                raise ValueError("not a sublattice")
            w.append(c)
        d = det(w)
        if d == 0:
            raise ValueError("not finite index")
        return abs(d)

    def quotient_invariants(self, sub: "RowLattice") -> tuple[int, ...]:
        """Invariant factors of self/sub (sub of finite index)."""
        w = []
        for row in sub.rational_basis():
            c = self.coords_of(row)
            if c is None:
                raise ValueError("not a sublattice")
            w.append(c)
        return invariant_factors(w)

    def sum(self, other: "RowLattice") -> "RowLattice":
        return RowLattice.from_rows(
            list(self.rational_basis()) + list(other.rational_basis()), self.ambient
        )
