"""Exact dense linear algebra over Q(i).

Rank uses one-step Bareiss (fraction-free) elimination; kernels and solves
use reduced row echelon form over the field.  The characteristic
polynomial is the Bareiss determinant of x*I - m computed over the
polynomial ring, so no rational-function entries ever appear.
"""

from __future__ import annotations

from .poly import UniPoly
from .scalars import GaussianRational, ONE, ZERO


class Matrix:
    """Immutable dense matrix with GaussianRational entries."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(GaussianRational.coerce(x) for x in r) for r in rows)
        if rows:
            w = len(rows[0])
            if any(len(r) != w for r in rows):
                raise ValueError("ragged matrix")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = len(rows[0]) if rows else 0

    # -- constructors -----------------------------------------------------

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "Matrix":
        m = n if m is None else m
        return cls([[ZERO] * m for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, entries) -> "Matrix":
        entries = [GaussianRational.coerce(x) for x in entries]
        n = len(entries)
        return cls([[entries[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, cols) -> "Matrix":
        return cls(list(zip(*cols))) if cols else cls([])

    @classmethod
    def jordan_block(cls, eigenvalue, size: int) -> "Matrix":
        ev = GaussianRational.coerce(eigenvalue)
        rows = [[ZERO] * size for _ in range(size)]
        for i in range(size):
            rows[i][i] = ev
            if i + 1 < size:
                rows[i][i + 1] = ONE
        return cls(rows)

    # -- queries ------------------------------------------------------------

    def entry(self, i: int, j: int) -> GaussianRational:
        return self.rows[i][j]

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.rows for x in r)

    def column(self, j: int):
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def vec(self):
        """Row-major flattening."""
        return tuple(x for r in self.rows for x in r)

    def trace(self) -> GaussianRational:
        if not self.is_square():
            raise ValueError("trace of a non-square matrix")
        acc = ZERO
        for i in range(self.nrows):
            acc = acc + self.rows[i][i]
        return acc

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.rows))) if self.rows else self

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError(
                    f"dimension mismatch: {self.nrows}x{self.ncols} times "
                    f"{other.nrows}x{other.ncols}"
                )
            cols = other.transpose().rows
            out = []
            for r in self.rows:
                out.append(
                    [_dot(r, c) for c in cols]
                )
            return Matrix(out)
        c = GaussianRational.coerce(other)
        return Matrix([[a * c for a in r] for r in self.rows])

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k: int) -> "Matrix":
        if not self.is_square():
            raise ValueError("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative matrix power")
        out = Matrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def apply_vector(self, v):
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(_dot(r, v) for r in self.rows)

    def _same_shape(self, other: "Matrix"):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise ValueError(
                f"dimension mismatch: {self.nrows}x{self.ncols} vs "
                f"{other.nrows}x{other.ncols}"
            )

    # -- comparison / display ---------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"[{body}]"


def _dot(u, v) -> GaussianRational:
    acc = ZERO
    for a, b in zip(u, v):
        acc = acc + a * b
    return acc


def commutator(a: Matrix, b: Matrix) -> Matrix:
    """ab - ba for square matrices of the same size."""
    if not (a.is_square() and b.is_square() and a.nrows == b.nrows):
        raise ValueError("commutator needs square matrices of equal size")
    return a * b - b * a


# ---------------------------------------------------------------------------
# elimination


def rank(m: Matrix) -> int:
    """Rank by one-step Bareiss fraction-free elimination."""
    a = [list(r) for r in m.rows]
    nr, nc = m.nrows, m.ncols
    prev = ONE
    r = 0
    for c in range(nc):
        if r == nr:
            break
        piv = next((i for i in range(r, nr) if not a[i][c].is_zero()), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, nr):
            for j in range(c + 1, nc):
                a[i][j] = (a[i][j] * p - a[i][c] * a[r][j]) / prev
            a[i][c] = ZERO
        prev = p
        r += 1
    return r


def rref(rows, ncols: int):
    """Reduced row echelon over the field; returns (rows, pivot columns)."""
    a = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(a):
            break
        piv = next((i for i in range(r, len(a)) if not a[i][c].is_zero()), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][c].inverse()
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and not a[i][c].is_zero():
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def kernel_basis(m: Matrix):
    """Canonical exact basis of the right null space (possibly empty)."""
    a, pivots = rref(m.rows, m.ncols)
    pivot_set = set(pivots)
    free = [c for c in range(m.ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [ZERO] * m.ncols
        v[fc] = ONE
        for r_idx, pc in enumerate(pivots):
            v[pc] = -a[r_idx][fc]
        basis.append(tuple(v))
    return tuple(basis)


def solve_exact(a: Matrix, b: Matrix) -> Matrix:
    """Solve a * x = b for a with full column rank; raises on inconsistency."""
    if a.nrows != b.nrows:
        raise ValueError("dimension mismatch in solve")
    aug = [list(ra) + list(rb) for ra, rb in zip(a.rows, b.rows)]
    rows, pivots = rref(aug, a.ncols + b.ncols)
    if any(p >= a.ncols for p in pivots):
        raise ValueError("inconsistent linear system")
    if len(pivots) != a.ncols:
        raise ValueError("coefficient matrix does not have full column rank")
    x = [[ZERO] * b.ncols for _ in range(a.ncols)]
    for r_idx, pc in enumerate(pivots):
        x[pc] = rows[r_idx][a.ncols:]
    return Matrix(x)


# ---------------------------------------------------------------------------
# characteristic and minimal polynomials


def char_poly(m: Matrix, var: str = "lambda") -> UniPoly:
    """det(x*I - m), via Bareiss elimination over Q(i)[x].

    All intermediate divisions are exact polynomial divisions, which the
    Bareiss identity guarantees over an integral domain.
    """
    if not m.is_square():
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = m.nrows
    if n == 0:
        return UniPoly.one(var)
    x = UniPoly.x(var)
    a = [
        [
            (x if i == j else UniPoly.zero(var)) - UniPoly.constant(m.rows[i][j], var)
            for j in range(n)
        ]
        for i in range(n)
    ]
    prev = UniPoly.one(var)
    sign = 1
    for c in range(n - 1):
        piv = next((i for i in range(c, n) if not a[i][c].is_zero()), None)
        if piv is None:
            return UniPoly.zero(var)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        p = a[c][c]
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                a[i][j] = (a[i][j] * p - a[i][c] * a[c][j]).exact_div(prev)
            a[i][c] = UniPoly.zero(var)
        prev = p
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


def _krylov_min_poly(m: Matrix, v, var: str) -> UniPoly:
    """Monic minimal polynomial of m relative to the vector v."""
    n = m.nrows
    cols = [tuple(v)]
    cur = tuple(v)
    for k in range(1, n + 1):
        cur = m.apply_vector(cur)
        stack = Matrix.from_columns(cols)
        if rank(Matrix.from_columns(cols + [cur])) == len(cols):
            target = Matrix.from_columns([cur])
            coeffs = solve_exact(stack, target).column(0)
            return UniPoly(var, [-c for c in coeffs] + [ONE])
        cols.append(cur)
    raise AssertionError("Krylov chain exceeded matrix size")  # pragma: no cover


def min_poly(m: Matrix, var: str = "z") -> UniPoly:
    """Monic generator of the vanishing ideal {f : f(m) = 0}.

    Computed as the lcm of the Krylov-local minimal polynomials of the
    standard basis vectors; stops early once the degree reaches the size.
    """
    if not m.is_square():
        raise ValueError("minimal polynomial of a non-square matrix")
    n = m.nrows
    if n == 0:
        return UniPoly.one(var)
    out = UniPoly.one(var)
    for i in range(n):
        e = tuple(ONE if j == i else ZERO for j in range(n))
        out = out.lcm(_krylov_min_poly(m, e, var))
        if out.degree == n:
            break
    return out.monic()


# ---------------------------------------------------------------------------
# generic determinant (used for symbolic matrices over other rings)


def ring_det(rows, zero, one):
    """Determinant by expansion along columns, memoized over column masks.

    Division-free, so it works over any commutative ring whose elements
    support +, * and unary -.  Intended for small sizes.
    """
    n = len(rows)
    if n == 0:
        return one
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square grid")
    memo = {}

    def minor(r, mask):
        if r == n:
            return one
        key = mask
        if key in memo:
            return memo[key]
        acc = zero
        sign = 1
        for c in range(n):
            bit = 1 << c
            if mask & bit:
                continue
            entry = rows[r][c]
            sub = minor(r + 1, mask | bit)
            term = entry * sub
            acc = acc + term if sign == 1 else acc - term
            sign = -sign
        memo[key] = acc
        return acc

    return minor(0, 0)
