"""Even positive-definite lattices given by exact integer Gram matrices.

A lattice is its Gram matrix; an optional *frame* (rational basis rows in
an ambient orthonormal coordinate system, together with a rational scale)
is carried along when a construction provides one, but no operation needs
it for correctness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q

from . import intlinalg as la
from .enumeration import enumerate_by_norm
from .errors import (
    NotFiniteIndexError,
    NotPositiveDefiniteError,
    NotSymmetricError,
    OddDiagonalError,
    OlabError,
)


@dataclass(frozen=True)
class Frame:
    """Rational basis rows in ambient coordinates with a global scale.

    The true (possibly irrational) basis vectors are sqrt(scale) * rows, so
    gram == rows @ rows^T * scale holds exactly.
    """

    rows: tuple
    scale: Q


@dataclass(frozen=True)
class Lattice:
    gram: la.IntMat
    name: str | None = None
    frame: Frame | None = None
    det: int = field(default=0, compare=False)

    @property
    def rank(self) -> int:
        return len(self.gram)

    def pairing(self, x, y):
        """(x|y) for coordinate rows x, y (rational allowed)."""
        return la.gram_pairing(self.gram, x, y)

    def norm(self, x):
        return self.pairing(x, x)

    def dual_basis_rows(self):
        """Coordinates of the dual basis w.r.t. the lattice basis (rows of G^-1)."""
        return la.rat_inverse(la.rat_mat(self.gram))


@dataclass(frozen=True)
class Coset:
    """lambda + L given by a rational representative in lattice coordinates."""

    lattice: Lattice
    rep: tuple

    def norm(self):
        return self.lattice.norm(self.rep)


@dataclass(frozen=True)
class AbelianInvariants:
    """Invariant factors d_1 | d_2 | ... | d_k (> 1) of a finite abelian group."""

    factors: tuple[int, ...]

    @property
    def order(self) -> int:
        n = 1
        for d in self.factors:
            n *= d
        return n

    @property
    def exponent(self) -> int:
        return self.factors[-1] if self.factors else 1

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " x ".join(f"Z/{d}" for d in self.factors)


def build_lattice(gram, name: str | None = None, frame: Frame | None = None) -> Lattice:
    """Validate a Gram matrix and build a Lattice.

    Rejects non-square/non-symmetric input, odd diagonal entries (the
    lattice would not be even) and non-positive-definite forms, each with
    its own error code.
    """
    g = la.freeze(gram)
    n = len(g)
    if any(len(row) != n for row in g):
        raise NotSymmetricError("gram matrix is not square")
    if any(not isinstance(x, int) for row in g for x in row):
        raise NotSymmetricError("gram entries must be integers")
    if not la.is_symmetric(g):
        i, j = next(
            (i, j) for i in range(n) for j in range(n) if g[i][j] != g[j][i]
        )
        raise NotSymmetricError(f"gram[{i}][{j}] != gram[{j}][{i}]", entry=(i, j))
    if any(g[i][i] % 2 for i in range(n)):
        i = next(i for i in range(n) if g[i][i] % 2)
        raise OddDiagonalError(f"diagonal entry gram[{i}][{i}] = {g[i][i]} is odd", entry=i)
    minors = la.leading_principal_minors(g)
    if any(m <= 0 for m in minors):
        k = next(k for k, m in enumerate(minors) if m <= 0)
        raise NotPositiveDefiniteError(
            f"leading principal minor #{k + 1} is {minors[k]}", minor=k + 1
        )
    if frame is not None:
        prod = la.mat_mul(frame.rows, la.transpose(frame.rows))
        scaled = tuple(tuple(frame.scale * x for x in row) for row in prod)
        if not la.mat_eq(scaled, g):
            raise OlabError("frame rows do not reproduce the gram matrix")
    detval = minors[-1] if n else 1
    return Lattice(gram=g, name=name, frame=frame, det=detval)


def make_coset(lattice: Lattice, rep) -> Coset:
    """Validate a coset representative (denominators must divide the
    exponent of the discriminant group)."""
    rep = tuple(Q(x) for x in rep)
    if len(rep) != lattice.rank:
        raise OlabError("coset representative has wrong length")
    exponent = discriminant_group(lattice).exponent
    for x in rep:
        if exponent % x.denominator:
            raise OlabError(
                f"denominator {x.denominator} does not divide the discriminant exponent {exponent}"
            )
    return Coset(lattice=lattice, rep=rep)


def discriminant_group(lattice: Lattice) -> AbelianInvariants:
    """L*/L as invariant factors, via the Smith normal form of the Gram matrix."""
    return AbelianInvariants(la.invariant_factors(lattice.gram))


def shell_counts(
    lattice: Lattice,
    max_norm: int,
    *,
    budget: int | None = None,
    workers: int = 1,
) -> dict:
    """Exact counts of lattice vectors of each norm 2, 4, ..., max_norm.

    Even norms up to the bound are always present in the result (possibly
    zero); for an even lattice no odd norm can occur.
    """
    if max_norm < 2:
        raise OlabError("max_norm must be >= 2")
    counts, _ = enumerate_by_norm(lattice.gram, max_norm, budget=budget, workers=workers)
    out = {m: 0 for m in range(2, max_norm + 1, 2)}
    for norm, c in counts.items():
        out[norm] = c
    return out


def coset_shell_counts(
    coset: Coset,
    max_norm,
    *,
    budget: int | None = None,
    workers: int = 1,
) -> dict:
    """Exact counts of vectors of lambda + L per norm, up to max_norm.

    Keys are exact rationals (ints when integral).  The even-integer grid
    up to the bound is present with zero counts so that the zero coset
    agrees with :func:`shell_counts` literally.
    """
    counts, _ = enumerate_by_norm(
        coset.lattice.gram, max_norm, shift=coset.rep, budget=budget, workers=workers
    )
    out = {m: 0 for m in range(2, int(max_norm) + 1, 2)}
    for norm, c in sorted(counts.items(), key=lambda kv: Q(kv[0])):
        out[norm] = c
    return out


def shell_vectors(
    lattice: Lattice,
    max_norm,
    *,
    shift=None,
    budget: int | None = None,
) -> list:
    """Lex-sorted coordinate rows of all nonzero vectors of norm <= max_norm."""
    _, vecs = enumerate_by_norm(
        lattice.gram, max_norm, shift=shift, budget=budget, collect=True
    )
    return vecs


def sublattice_index(lattice: Lattice, gens) -> int:
    """[L : span(gens)] for integer generator rows spanning finite index."""
    gens = la.freeze(gens)
    if any(len(row) != lattice.rank for row in gens):
        raise OlabError("generator length does not match rank")
    h, rank = la.hnf(gens)
    if rank < lattice.rank:
        raise NotFiniteIndexError(
            f"generators span rank {rank} < {lattice.rank}", rank=rank
        )
    idx = 1
    for i in range(rank):
        piv = next(x for x in h[i] if x)
        idx *= piv
    return idx
