"""Polynomials over Q(i): dense univariate and sparse multivariate.

``UniPoly`` keeps a dense coefficient tuple, lowest degree first, with the
leading coefficient nonzero (the zero polynomial is the empty tuple).
``MultiPoly`` keeps a map from exponent tuples to nonzero coefficients;
the canonical term order is graded lexicographic on the declared variable
order (serialization lists terms by ascending (total degree, exponents)).
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import GaussianRational, ONE, ZERO


def _coerce_scalar(c) -> GaussianRational:
    return GaussianRational.coerce(c)


class UniPoly:
    """Univariate polynomial with GaussianRational coefficients."""

    __slots__ = ("var", "coeffs")

    def __init__(self, var: str, coeffs=()):
        cs = [_coerce_scalar(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.var = var
        self.coeffs = tuple(cs)

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, var: str = "z") -> "UniPoly":
        return cls(var, ())

    @classmethod
    def one(cls, var: str = "z") -> "UniPoly":
        return cls(var, (ONE,))

    @classmethod
    def constant(cls, c, var: str = "z") -> "UniPoly":
        return cls(var, (c,))

    @classmethod
    def x(cls, var: str = "z") -> "UniPoly":
        return cls(var, (ZERO, ONE))

    @classmethod
    def from_roots(cls, roots, var: str = "z") -> "UniPoly":
        p = cls.one(var)
        for r in roots:
            p = p * cls(var, (-_coerce_scalar(r), ONE))
        return p

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def leading(self) -> GaussianRational:
        if not self.coeffs:
            return ZERO
        return self.coeffs[-1]

    def constant_term(self) -> GaussianRational:
        return self.coeffs[0] if self.coeffs else ZERO

    def coeff(self, k: int) -> GaussianRational:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic ---------------------------------------------------------

    def _same_var(self, other: "UniPoly"):
        if self.var != other.var and not (self.is_constant() or other.is_constant()):
            raise ValueError(f"variable mismatch: {self.var} vs {other.var}")

    def _result_var(self, other: "UniPoly") -> str:
        # constants adopt the other operand's variable
        if self.is_constant() and not other.is_constant():
            return other.var
        return self.var

    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = UniPoly.constant(other, self.var)
        self._same_var(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self._result_var(other),
                       [self.coeff(k) + other.coeff(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(self.var, [-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = UniPoly.constant(other, self.var)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            c = _coerce_scalar(other)
            return UniPoly(self.var, [a * c for a in self.coeffs])
        self._same_var(other)
        var = self._result_var(other)
        if self.is_zero() or other.is_zero():
            return UniPoly.zero(var)
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(var, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = UniPoly.one(self.var)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divmod(self, other: "UniPoly"):
        """Exact field-coefficient long division: (quotient, remainder)."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        self._same_var(other)
        rem = list(self.coeffs)
        q = [ZERO] * max(len(rem) - len(other.coeffs) + 1, 0)
        d = other.degree
        lead = other.leading()
        while len(rem) - 1 >= d and rem:
            k = len(rem) - 1 - d
            f = rem[-1] / lead
            q[k] = f
            for j in range(len(other.coeffs)):
                rem[k + j] = rem[k + j] - f * other.coeffs[j]
            while rem and rem[-1].is_zero():
                rem.pop()
        return UniPoly(self.var, q), UniPoly(self.var, rem)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def divides(self, other: "UniPoly") -> bool:
        if self.is_zero():
            return other.is_zero()
        return other.divmod(self)[1].is_zero()

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        lead = self.leading()
        return UniPoly(self.var, [c / lead for c in self.coeffs])

    def gcd(self, other: "UniPoly") -> "UniPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def lcm(self, other: "UniPoly") -> "UniPoly":
        if self.is_zero() or other.is_zero():
            return UniPoly.zero(self.var)
        g = self.gcd(other)
        return (self * other).exact_div(g).monic()

    def deriv(self) -> "UniPoly":
        return UniPoly(self.var, [self.coeffs[k] * k for k in range(1, len(self.coeffs))])

    # -- evaluation ---------------------------------------------------------

    def __call__(self, x):
        x = _coerce_scalar(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_matrix(self, m):
        """Horner evaluation on a square exact matrix."""
        from .linalg import Matrix

        acc = Matrix.zeros(m.nrows, m.ncols)
        ident = Matrix.identity(m.nrows)
        for c in reversed(self.coeffs):
            acc = acc * m + ident * c
        return acc

    def rename(self, var: str) -> "UniPoly":
        return UniPoly(var, self.coeffs)

    def as_multi(self, variables, index: int) -> "MultiPoly":
        """Lift into a multivariate ring, mapping the variable to slot `index`."""
        n = len(variables)
        terms = {}
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            e = [0] * n
            e[index] = k
            terms[tuple(e)] = c
        return MultiPoly(tuple(variables), terms)

    # -- comparison / display -------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = UniPoly.constant(other, self.var)
        if not isinstance(other, UniPoly):
            return NotImplemented
        if self.is_constant() and other.is_constant():
            return self.coeffs == other.coeffs
        return self.var == other.var and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.var if not self.is_constant() else "", self.coeffs))

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            if k == 0:
                parts.append(str(c))
            else:
                head = "" if c == ONE else f"({c})*"
                parts.append(f"{head}{self.var}" + (f"^{k}" if k > 1 else ""))
        return " + ".join(parts)

    __repr__ = __str__


class MultiPoly:
    """Sparse multivariate polynomial over Q(i) in named variables."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables, terms=None):
        self.vars = tuple(variables)
        clean = {}
        for exps, c in (terms or {}).items():
            c = _coerce_scalar(c)
            if c.is_zero():
                continue
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(self.vars):
                raise ValueError("exponent tuple length does not match variables")
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent")
            clean[exps] = c
        self.terms = clean

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, variables) -> "MultiPoly":
        return cls(variables, {})

    @classmethod
    def constant(cls, variables, c) -> "MultiPoly":
        v = tuple(variables)
        return cls(v, {(0,) * len(v): c})

    @classmethod
    def variable(cls, variables, name) -> "MultiPoly":
        v = tuple(variables)
        i = v.index(name)
        e = [0] * len(v)
        e[i] = 1
        return cls(v, {tuple(e): ONE})

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def total_degree(self) -> int:
        """-1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def sorted_terms(self):
        """Terms in the canonical order: ascending (total degree, exponents)."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def __bool__(self):
        return bool(self.terms)

    # -- arithmetic -----------------------------------------------------------

    def _same_vars(self, other: "MultiPoly"):
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = MultiPoly.constant(self.vars, other)
        self._same_vars(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, ZERO) + c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        return MultiPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = MultiPoly.constant(self.vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            c = _coerce_scalar(other)
            if c.is_zero():
                return MultiPoly.zero(self.vars)
            return MultiPoly(self.vars, {e: a * c for e, a in self.terms.items()})
        self._same_vars(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, ZERO) + c1 * c2
                if s.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = s
        return MultiPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = MultiPoly.constant(self.vars, ONE)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def partial(self, index: int) -> "MultiPoly":
        """Formal partial derivative with respect to the index-th variable."""
        out = {}
        for e, c in self.terms.items():
            k = e[index]
            if k == 0:
                continue
            e2 = list(e)
            e2[index] = k - 1
            out[tuple(e2)] = c * k
        return MultiPoly(self.vars, out)

    # -- evaluation -------------------------------------------------------------

    def eval_scalars(self, values) -> GaussianRational:
        values = [_coerce_scalar(v) for v in values]
        if len(values) != len(self.vars):
            raise ValueError("wrong number of values")
        acc = ZERO
        for e, c in self.terms.items():
            t = c
            for v, k in zip(values, e):
                if k:
                    t = t * v**k
            acc = acc + t
        return acc

    def eval_generic(self, values, one):
        """Evaluate on any commuting family supporting * and +.

        `one` is the multiplicative identity of the target (used for the
        empty monomial and to embed scalar coefficients).
        """
        if len(values) != len(self.vars):
            raise ValueError("wrong number of values")
        acc = None
        for e, c in self.sorted_terms():
            t = one * c
            for v, k in zip(values, e):
                for _ in range(k):
                    t = t * v
            acc = t if acc is None else acc + t
        if acc is None:
            return one * ZERO
        return acc

    # -- comparison / display -------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = MultiPoly.constant(self.vars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, tuple(self.sorted_terms())))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"{v}^{k}" if k > 1 else v for v, k in zip(self.vars, e) if k
            )
            if mono:
                parts.append(f"({c})*{mono}" if c != ONE else mono)
            else:
                parts.append(str(c))
        return " + ".join(parts)

    __repr__ = __str__


def monomials_up_to(nvars: int, degree: int):
    """All exponent tuples of total degree <= degree, in canonical order."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 0:
            out.append(tuple(prefix))
            return
        for k in range(remaining + 1):
            rec(prefix + [k], remaining - k, slots - 1)

    rec([], degree, nvars)
    out.sort(key=lambda e: (sum(e), e))
    return out
