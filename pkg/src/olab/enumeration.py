"""Exact short-vector enumeration (Fincke-Pohst with rational Cholesky).

The quadratic form is decomposed as Q(z) = sum_i d_i (z_i + sum_{j>i}
u_ij z_j)^2 with exact rationals, then everything is rescaled by a common
denominator so the tree walk itself runs on plain integers.  Accept/reject
decisions are therefore exact; there is no floating point anywhere.

The search tree may be partitioned on the outermost coordinate and the
pieces processed by a thread pool.  Counts are merged by addition, so the
result is identical for any worker count and any scheduling order.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction as Q
from math import isqrt, lcm

from .errors import EnumerationBudgetError, NotPositiveDefiniteError

DEFAULT_NODE_BUDGET = 10**9


def ldl(gram):
    """G = L^T D L as (d, u): Q(z) = sum d[i] * (z_i + sum_{j>i} u[i][j] z_j)^2."""
    n = len(gram)
    q = [[Q(x) for x in row] for row in gram]
    d = [Q(0)] * n
    u = [[Q(0)] * n for _ in range(n)]
    for i in range(n):
        d[i] = q[i][i]
        if d[i] <= 0:
            raise NotPositiveDefiniteError("gram matrix is not positive definite")
        for j in range(i + 1, n):
            u[i][j] = q[i][j] / d[i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= d[i] * u[i][k] * u[i][l]
    return d, u


class _ScaledForm:
    """Integer-rescaled data for one enumeration run."""

    __slots__ = ("n", "p", "u_scaled", "t_scaled", "delta", "rho", "w_bound", "shift_is_zero")

    def __init__(self, gram, max_norm, shift=None):
        n = len(gram)
        d, u = ldl(gram)
        t = [Q(0)] * n if shift is None else [Q(x) for x in shift]
        delta = 1
        for i in range(n):
            delta = lcm(delta, t[i].denominator)
            for j in range(i + 1, n):
                delta = lcm(delta, u[i][j].denominator)
        rho = 1
        for x in d:
            rho = lcm(rho, x.denominator)
        self.n = n
        self.delta = delta
        self.rho = rho
        self.p = [int(x * rho) for x in d]
        self.u_scaled = [[int(u[i][j] * delta) for j in range(n)] for i in range(n)]
        self.t_scaled = [int(x * delta) for x in t]
        self.w_bound = int(Q(max_norm) * rho * delta**4)
        self.shift_is_zero = all(x == 0 for x in t)

    def top_range(self):
        """Integer range (lo, hi) of the outermost coordinate y_{n-1}."""
        i = self.n - 1
        if self.w_bound < 0:
            return 0, -1
        m = isqrt(self.w_bound // self.p[i])
        d2 = self.delta**2
        base = self.delta * self.t_scaled[i]
        lo = -((m + base) // d2)
        hi = (m - base) // d2
        return lo, hi


def _walk(form: _ScaledForm, top_lo: int, top_hi: int, budget: int, collect: bool):
    """Enumerate the subtree with y_{n-1} in [top_lo, top_hi].

    Returns (counts, vectors, nodes).  counts maps the scaled norm
    W = norm * rho * delta^4 to the number of nonzero vectors attaining it.
    """
    n = form.n
    p = form.p
    u = form.u_scaled
    t = form.t_scaled
    delta = form.delta
    d2 = delta * delta
    w_total = form.w_bound
    counts: dict[int, int] = {}
    vectors: list[tuple[int, ...]] | None = [] if collect else None
    y = [0] * n
    zs = [0] * n  # delta * z_j = delta * y_j + t_scaled[j]
    nodes = 0

    def rec(level: int, rem: int) -> None:
        # rem >= 0 is invariant; the y-range below keeps p*a^2 <= rem.
        nonlocal nodes
        b = delta * t[level]
        row = u[level]
        for j in range(level + 1, n):
            if row[j]:
                b += row[j] * zs[j]
        m = isqrt(rem // p[level])
        lo = -((m + b) // d2)
        hi = (m - b) // d2
        if level == n - 1:
            lo = max(lo, top_lo)
            hi = min(hi, top_hi)
        for yv in range(lo, hi + 1):
            nodes += 1
            if nodes > budget:
                raise EnumerationBudgetError(
                    "enumeration exceeded node budget", nodes=nodes, budget=budget
                )
            a = d2 * yv + b
            r2 = rem - p[level] * a * a
            y[level] = yv
            zs[level] = delta * yv + t[level]
            if level == 0:
                w = w_total - r2
                if w > 0 or any(zs):
                    counts[w] = counts.get(w, 0) + 1
                    if collect:
                        vectors.append(tuple(y))
            else:
                rec(level - 1, r2)
        zs[level] = 0

    rec(n - 1, w_total)
    return counts, vectors, nodes


def enumerate_by_norm(
    gram,
    max_norm,
    *,
    shift=None,
    budget: int | None = None,
    workers: int = 1,
    collect: bool = False,
):
    """All nonzero vectors v = y + shift (y integral) with 0 < Q(v) <= max_norm.

    Returns ``(counts, vectors)`` where counts maps the exact norm (int or
    Fraction) to the number of vectors, and vectors is a lex-sorted list of
    coordinate rows (Fractions) when ``collect`` is set, else None.
    """
    if budget is None:
        budget = DEFAULT_NODE_BUDGET
    n = len(gram)
    if n == 0:
        return {}, ([] if collect else None)
    form = _ScaledForm(gram, max_norm, shift)
    lo, hi = form.top_range()
    if lo > hi:
        return {}, ([] if collect else None)

    if workers <= 1 or hi - lo < 1:
        chunks = [(lo, hi)]
    else:
        k = min(workers, hi - lo + 1)
        size, extra = divmod(hi - lo + 1, k)
        chunks = []
        start = lo
        for i in range(k):
            stop = start + size + (1 if i < extra else 0) - 1
            chunks.append((start, stop))
            start = stop + 1

    if len(chunks) == 1:
        results = [_walk(form, lo, hi, budget, collect)]
    else:
        with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
            futures = [pool.submit(_walk, form, a, b, budget, collect) for a, b in chunks]
            results = [f.result() for f in futures]

    scaled_counts: dict[int, int] = {}
    vectors = [] if collect else None
    total_nodes = 0
    for counts, vecs, nodes in results:
        total_nodes += nodes
        for w, c in counts.items():
            scaled_counts[w] = scaled_counts.get(w, 0) + c
        if collect:
            vectors.extend(vecs)
    if total_nodes > budget:
        raise EnumerationBudgetError(
            "enumeration exceeded node budget", nodes=total_nodes, budget=budget
        )

    scale = form.rho * form.delta**4
    norm_counts = {}
    for w, c in sorted(scaled_counts.items()):
        norm = Q(w, scale)
        key = int(norm) if norm.denominator == 1 else norm
        norm_counts[key] = c

    out_vectors = None
    if collect:
        t = [Q(0)] * n if shift is None else [Q(x) for x in shift]
        out_vectors = sorted(tuple(Q(yv) + t[i] for i, yv in enumerate(v)) for v in vectors)
    return norm_counts, out_vectors
