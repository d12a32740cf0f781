"""Characteristic polynomials and exact root search over Q(i).

Polynomials are lists of GaussianRational coefficients in ascending order:
``[c0, c1, ..., cd]`` is ``c0 + c1 x + ... + cd x^d``.
"""

from itertools import product
from math import isqrt

from sympy import factorint
from sympy.ntheory import sqrt_mod

from .errors import DefectiveHint
from .matrices import Matrix
from .scalars import GaussianRational

_ZERO = GaussianRational(0)
_ONE = GaussianRational(1)


def charpoly(A):
    """det(x I - A) by the Faddeev-LeVerrier recursion (exact over Q(i))."""
    A = A.to_field("C")
    n = A.nrows
    coeffs = [_ZERO] * (n + 1)
    coeffs[n] = _ONE
    M = Matrix.zeros(n)
    ident = Matrix.identity(n)
    for k in range(1, n + 1):
        M = A @ M + ident.rscale(coeffs[n - k + 1])
        coeffs[n - k] = -(A @ M).trace() / k
    return coeffs


def trim(p):
    p = list(p)
    while len(p) > 1 and not p[-1]:
        p.pop()
    return p


def degree(p):
    p = trim(p)
    return -1 if len(p) == 1 and not p[0] else len(p) - 1


def evaluate(p, x):
    acc = _ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


def deflate(p, r):
    """Quotient of p by (x - r); r must be a root."""
    p = trim(p)
    d = len(p) - 1
    q = [_ZERO] * d
    acc = _ZERO
    for k in range(d, 0, -1):
        acc = acc * r + p[k]
        q[k - 1] = acc
    if acc * r + p[0]:
        raise ValueError(f"{r} is not a root")
    return q


# Gaussian integers are (a, b) pairs of ints here.

def _gi_divmod_exact(x, y):
    a, b = x
    c, d = y
    n = c * c + d * d
    re, im = a * c + b * d, b * c - a * d
    if re % n or im % n:
        return None
    return re // n, im // n


def _gi_mul(x, y):
    return x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0]


def _two_squares(p):
    """a, b with a^2 + b^2 = p for a prime p = 1 mod 4 (Hermite-Serret)."""
    x = sqrt_mod(-1, p)
    r0, r1 = p, x
    while r1 * r1 > p:
        r0, r1 = r1, r0 % r1
    a = r1
    b = isqrt(p - a * a)
    assert a * a + b * b == p
    return a, b


def _gaussian_primes_over(p):
    if p == 2:
        return [(1, 1)]
    if p % 4 == 3:
        return [(p, 0)]
    a, b = _two_squares(p)
    return [(a, b), (a, -b)]


def gaussian_divisors(z):
    """All divisors of a nonzero Gaussian integer, up to units."""
    a, b = z
    norm = a * a + b * b
    if norm == 0:
        raise ValueError("zero has no finite divisor set")
    factors = []
    for p in factorint(norm):
        for pi in _gaussian_primes_over(p):
            e, rest = 0, z
            while True:
                q = _gi_divmod_exact(rest, pi)
                if q is None:
                    break
                rest, e = q, e + 1
            if e:
                factors.append((pi, e))
    divisors = []
    for exps in product(*[range(e + 1) for _, e in factors]):
        d = (1, 0)
        for (pi, _), k in zip(factors, exps):
            for _ in range(k):
                d = _gi_mul(d, pi)
        divisors.append(d)
    return divisors


def _to_gaussian_integers(p):
    lcm = 1
    for c in p:
        lcm = lcm * c._d // _gcd(lcm, c._d)
    return [((c * lcm)._a, (c * lcm)._b) for c in p]


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def candidate_roots(p):
    """Every possible root in Q(i) of p (p(0) != 0): u/w with u | p(0), w | lead."""
    ints = _to_gaussian_integers(trim(p))
    units = [(1, 0), (0, 1), (-1, 0), (0, -1)]
    nums = [_gi_mul(u, d) for d in gaussian_divisors(ints[0]) for u in units]
    dens = gaussian_divisors(ints[-1])
    out = set()
    for (a, b), (c, d) in product(nums, dens):
        out.add(GaussianRational(a, b) / GaussianRational(c, d))
    return sorted(out, key=lambda z: (z.norm(), z.re, z.im))


def gaussian_roots(p, hints=()):
    """Split off every root of ``p`` lying in Q(i).

    Returns ``(roots, residual)`` where ``roots`` maps each root to its
    multiplicity and ``residual`` is the cofactor with no roots in Q(i).
    Hints are tried first and must be roots.
    """
    p = trim(p)
    roots = {}

    def take(r):
        nonlocal p
        while degree(p) > 0 and not evaluate(p, r):
            p = deflate(p, r)
            roots[r] = roots.get(r, 0) + 1

    take(_ZERO)
    for h in hints:
        h = GaussianRational(h)
        if h in roots:
            continue
        if degree(p) <= 0 or evaluate(p, h):
            raise DefectiveHint(f"hint {h} is not an eigenvalue")
        take(h)
    if degree(p) > 0:
        for r in candidate_roots(p):
            take(r)
            if degree(p) == 0:
                break
    return roots, p
