"""Complete linear factorization of univariate polynomials over Q(i).

The method is elementary and complete for split polynomials at desk scale:
clear denominators to Z[i], enumerate candidate roots a/b with a dividing
the constant term and b dividing the leading term (rational root theorem
in the UFD Z[i], up to units), deflate on every root found, and repeat.
If the remaining factor has positive degree and no candidate root, the
polynomial does not split over Q(i) and SpectrumNotSplit is raised.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .errors import SpectrumNotSplit
from .poly import UniPoly
from .scalars import GaussianRational, ZERO

# Gaussian integers are plain (a, b) int pairs meaning a + b*i.

_UNITS = ((1, 0), (0, 1), (-1, 0), (0, -1))


def _gi_mul(x, y):
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _gi_norm(x) -> int:
    return x[0] * x[0] + x[1] * x[1]


def _gi_exact_div(x, y):
    """x / y if y divides x in Z[i], else None."""
    n = _gi_norm(y)
    if n == 0:
        return None
    xr = x[0] * y[0] + x[1] * y[1]
    xi = x[1] * y[0] - x[0] * y[1]
    if xr % n or xi % n:
        return None
    return (xr // n, xi // n)


def _factor_int(n: int) -> dict:
    """Trial-division factorization; inputs here are desk scale."""
    out = {}
    n = abs(n)
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _two_squares(p: int):
    """x, y > 0 with x^2 + y^2 = p, for a prime p = 1 mod 4."""
    for x in range(1, isqrt(p) + 1):
        y2 = p - x * x
        y = isqrt(y2)
        if y * y == y2:
            return (x, y)
    raise AssertionError(f"{p} is not a sum of two squares")  # pragma: no cover


def _gaussian_prime_divisors(g):
    """Gaussian primes dividing g (one per associate class), with multiplicity."""
    out = []
    for p, _ in _factor_int(_gi_norm(g)).items():
        if p == 2:
            cands = [(1, 1)]
        elif p % 4 == 3:
            cands = [(p, 0)]
        else:
            x, y = _two_squares(p)
            cands = [(x, y), (x, -y)]
        for pi in cands:
            h = g
            e = 0
            while True:
                q = _gi_exact_div(h, pi)
                if q is None:
                    break
                h = q
                e += 1
            if e:
                out.append((pi, e))
    return out


def _divisors(g):
    """All divisors of a nonzero Gaussian integer, up to unit multiples."""
    divs = [(1, 0)]
    for pi, e in _gaussian_prime_divisors(g):
        grown = []
        for d in divs:
            cur = d
            grown.append(cur)
            for _ in range(e):
                cur = _gi_mul(cur, pi)
                grown.append(cur)
        divs = grown
    return divs


def _clear_denominators(p: UniPoly):
    """Scale to Gaussian-integer coefficients; returns the (a, b) list."""
    lcm = 1
    for c in p.coeffs:
        for f in (c.re, c.im):
            lcm = lcm * f.denominator // _gcd(lcm, f.denominator)
    out = []
    for c in p.coeffs:
        out.append((int(c.re * lcm), int(c.im * lcm)))
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _candidate_roots(p: UniPoly):
    coeffs = _clear_denominators(p)
    c0, cn = coeffs[0], coeffs[-1]
    seen = set()
    out = []
    for a in _divisors(c0):
        num = GaussianRational(Fraction(a[0]), Fraction(a[1]))
        for b in _divisors(cn):
            den = GaussianRational(Fraction(b[0]), Fraction(b[1]))
            base = num / den
            for u in _UNITS:
                cand = base * GaussianRational(u[0], u[1])
                key = (cand.re, cand.im)
                if key not in seen:
                    seen.add(key)
                    out.append(cand)
    out.sort(key=GaussianRational.sort_key)
    return out


def _deflate(p: UniPoly, root: GaussianRational) -> UniPoly:
    """Synthetic division of p by (x - root); caller guarantees p(root) = 0."""
    n = p.degree
    out = [ZERO] * n
    acc = ZERO
    for k in range(n, 0, -1):
        acc = acc * root + p.coeffs[k]
        out[k - 1] = acc
    return UniPoly(p.var, out)


def split_roots(p: UniPoly):
    """Root multiset of p over Q(i), as ((root, multiplicity), ...) sorted
    by (re, im).  Raises SpectrumNotSplit if p has an irreducible factor of
    degree >= 2 over Q(i), and ValueError on the zero polynomial."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no root multiset")
    roots = {}
    # strip roots at 0 first so constant terms below are nonzero
    k0 = 0
    while k0 <= p.degree and p.coeffs[k0].is_zero():
        k0 += 1
    if k0:
        roots[ZERO] = k0
        p = UniPoly(p.var, p.coeffs[k0:])
    while p.degree >= 1:
        if p.degree == 1:
            r = -p.coeffs[0] / p.coeffs[1]
            roots[r] = roots.get(r, 0) + 1
            break
        found = None
        for cand in _candidate_roots(p):
            if p(cand).is_zero():
                found = cand
                break
        if found is None:
            raise SpectrumNotSplit(f"no linear factorization over Q(i): {p}")
        while p.degree >= 1 and p(found).is_zero():
            p = _deflate(p, found)
            roots[found] = roots.get(found, 0) + 1
    return tuple(sorted(roots.items(), key=lambda kv: kv[0].sort_key()))
