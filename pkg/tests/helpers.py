"""Shared test oracles and seeded generators.

Every oracle here is deliberately implemented by a different route than
the library path it checks: brute-force evaluation kernels instead of
Krylov chains, conjugate-partition partial sums instead of rank formulas,
naive field elimination instead of fraction-free elimination.
"""

from __future__ import annotations

import random
from fractions import Fraction

from azumaya.linalg import Matrix, kernel_basis, rref
from azumaya.poly import MultiPoly, UniPoly, monomials_up_to
from azumaya.scalars import GaussianRational, ONE, ZERO, gr

SMALL_POOL = [gr(0), gr(1), gr(-1), gr(2), gr(0, 1), gr(0, -1), gr(Fraction(1, 2))]


def rand_scalar(rng: random.Random, pool=SMALL_POOL) -> GaussianRational:
    return pool[rng.randrange(len(pool))]


def rand_matrix(rng: random.Random, r: int, pool=SMALL_POOL) -> Matrix:
    return Matrix([[rand_scalar(rng, pool) for _ in range(r)] for _ in range(r)])


def rand_upper_triangular(rng: random.Random, r: int, pool=SMALL_POOL) -> Matrix:
    rows = []
    for i in range(r):
        row = [ZERO] * i + [rand_scalar(rng, pool) for _ in range(r - i)]
        rows.append(row)
    return Matrix(rows)


def rand_invertible(rng: random.Random, r: int) -> Matrix:
    from azumaya.linalg import rank

    while True:
        m = rand_matrix(rng, r)
        if rank(m) == r:
            return m


# ---------------------------------------------------------------------------
# brute-force minimal polynomial: kernel of evaluation on 1, z, ..., z^d


def brute_min_poly(m: Matrix, var: str = "z") -> UniPoly:
    r = m.nrows
    powers = [Matrix.identity(r)]
    for _ in range(r):
        powers.append(powers[-1] * m)
    for d in range(0, r + 1):
        cols = [p.vec() for p in powers[: d + 1]]
        ker = kernel_basis(Matrix.from_columns(cols))
        if ker:
            coeffs = list(ker[0])
            p = UniPoly(var, coeffs)
            return p.monic()
    raise AssertionError("no vanishing polynomial of degree <= r")


# ---------------------------------------------------------------------------
# brute-force vanishing ideal at explicit points


def brute_vanishing_at_points(points, nvars: int, degree: int, variables):
    monos = monomials_up_to(nvars, degree)
    rows = []
    for pt in points:
        row = []
        for e in monos:
            val = ONE
            for x, k in zip(pt, e):
                val = val * x**k
            row.append(val)
        rows.append(row)
    ker = kernel_basis(Matrix(rows))
    reduced, _ = rref([list(v) for v in ker], len(monos))
    out = []
    for row in reduced:
        if all(c.is_zero() for c in row):
            continue
        out.append(MultiPoly(variables, dict(zip(monos, row))))
    return tuple(out)


def span_signature(polys, nvars: int, degree: int):
    """Canonical signature of the span of polynomials of degree <= degree."""
    monos = monomials_up_to(nvars, degree)
    rows = []
    for f in polys:
        rows.append([f.terms.get(e, ZERO) for e in monos])
    if not rows:
        return ()
    reduced, _ = rref(rows, len(monos))
    out = []
    for row in reduced:
        if any(not c.is_zero() for c in row):
            out.append(tuple((c.re, c.im) for c in row))
    return tuple(out)


# ---------------------------------------------------------------------------
# dominance order by conjugate-partition partial sums


def conjugate_partition(parts):
    if not parts:
        return ()
    out = []
    for j in range(1, parts[0] + 1):
        out.append(sum(1 for x in parts if x >= j))
    return tuple(out)


def dominates(lam, mu) -> bool:
    """lam <= mu in the dominance order, decided through conjugates:
    partial sums of conj(mu) never exceed those of conj(lam)."""
    if sum(lam) != sum(mu):
        return False
    cl, cm = conjugate_partition(lam), conjugate_partition(mu)
    n = max(len(cl), len(cm))
    sl = sm = 0
    for k in range(n):
        sl += cl[k] if k < len(cl) else 0
        sm += cm[k] if k < len(cm) else 0
        if sm > sl:
            return False
    return True


def jordan_nilpotent(parts) -> Matrix:
    """Block-diagonal nilpotent Jordan matrix with the given block sizes."""
    n = sum(parts)
    rows = [[ZERO] * n for _ in range(n)]
    base = 0
    for size in parts:
        for i in range(size - 1):
            rows[base + i][base + i + 1] = ONE
        base += size
    return Matrix(rows)


# ---------------------------------------------------------------------------
# naive (non-fraction-free) rank over the field


def naive_rank(m: Matrix) -> int:
    a = [list(r) for r in m.rows]
    nr, nc = m.nrows, m.ncols
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if not a[i][c].is_zero()), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][c].inverse()
        a[r] = [x * inv for x in a[r]]
        for i in range(r + 1, nr):
            f = a[i][c]
            if not f.is_zero():
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == nr:
            break
    return r
