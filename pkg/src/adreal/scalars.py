"""Exact scalars: rationals, Gaussian rationals Q(i), and rational quaternions.

Rationals are plain :class:`fractions.Fraction`.  The two extension types store
integer numerators over one shared positive denominator, which keeps the inner
loops of matrix elimination cheap.

Canonical strings::

    Rational            "p/q"  (or "p" when q == 1)
    GaussianRational    "p/q+r/s*i"
    RationalQuaternion  "a+b*i+c*j+d*k"

Zero terms are omitted on output and optional on input.
"""

import re
from fractions import Fraction
from math import gcd

from .errors import ParseError

Rational = Fraction

__all__ = [
    "Rational",
    "GaussianRational",
    "RationalQuaternion",
    "rational",
    "quat_mul",
    "quat_conjugate",
    "complex_split",
    "complex_join",
    "parse_scalar",
    "I",
    "J",
    "K",
]


def _normalize(nums, d):
    if d < 0:
        nums = [-x for x in nums]
        d = -d
    g = d
    for x in nums:
        g = gcd(g, x)
        if g == 1:
            return nums, d
    return [x // g for x in nums], d // g


def rational(x):
    """Coerce an int, Fraction or "p/q" string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational: {x!r}") from exc
    raise TypeError(f"cannot make a rational from {type(x).__name__}")


class GaussianRational:
    """An element (a + b i) / d of Q(i)."""

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re=0, im=0):
        if isinstance(re, str) and im == 0:
            z = parse_scalar(re, "C")
            self._a, self._b, self._d = z._a, z._b, z._d
            return
        if isinstance(re, GaussianRational) and im == 0:
            self._a, self._b, self._d = re._a, re._b, re._d
            return
        r, s = rational(re), rational(im)
        d = r.denominator * s.denominator // gcd(r.denominator, s.denominator)
        (a, b), d = _normalize([r.numerator * (d // r.denominator),
                                s.numerator * (d // s.denominator)], d)
        self._a, self._b, self._d = a, b, d

    @classmethod
    def _raw(cls, a, b, d):
        (a, b), d = _normalize([a, b], d)
        z = object.__new__(cls)
        z._a, z._b, z._d = a, b, d
        return z

    @property
    def re(self):
        return Fraction(self._a, self._d)

    @property
    def im(self):
        return Fraction(self._b, self._d)

    def is_zero(self):
        return self._a == 0 and self._b == 0

    def is_real(self):
        return self._b == 0

    def conjugate(self):
        return GaussianRational._raw(self._a, -self._b, self._d)

    def norm(self):
        """|z|^2 as a Fraction."""
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    def inverse(self):
        n = self._a * self._a + self._b * self._b
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return GaussianRational._raw(self._a * self._d, -self._b * self._d, n)

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return GaussianRational._raw(f.numerator, 0, f.denominator)
        return None

    def __add__(self, other):
        o = GaussianRational._coerce(other)
        if o is None:
            return NotImplemented
        if self._d == o._d:
            return GaussianRational._raw(self._a + o._a, self._b + o._b, self._d)
        return GaussianRational._raw(self._a * o._d + o._a * self._d,
                                     self._b * o._d + o._b * self._d,
                                     self._d * o._d)

    __radd__ = __add__

    def __neg__(self):
        z = object.__new__(GaussianRational)
        z._a, z._b, z._d = -self._a, -self._b, self._d
        return z

    def __sub__(self, other):
        o = GaussianRational._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = GaussianRational._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = GaussianRational._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational._raw(self._a * o._a - self._b * o._b,
                                     self._a * o._b + self._b * o._a,
                                     self._d * o._d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = GaussianRational._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = GaussianRational._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out, base = GaussianRational(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        o = GaussianRational._coerce(other)
        if o is None:
            if isinstance(other, RationalQuaternion):
                return other == self
            return NotImplemented
        return self._a == o._a and self._b == o._b and self._d == o._d

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        return _format_terms([self.re, self.im], ["", "i"])

    def __repr__(self):
        return f"GaussianRational('{self}')"


class RationalQuaternion:
    """A quaternion (a0 + a1 i + a2 j + a3 k) / d with rational coefficients."""

    __slots__ = ("_c", "_d")

    def __init__(self, a0=0, a1=0, a2=0, a3=0):
        if isinstance(a0, str) and not (a1 or a2 or a3):
            q = parse_scalar(a0, "H")
            self._c, self._d = q._c, q._d
            return
        if isinstance(a0, RationalQuaternion) and not (a1 or a2 or a3):
            self._c, self._d = a0._c, a0._d
            return
        if isinstance(a0, GaussianRational) and not (a1 or a2 or a3):
            self._c, self._d = (a0._a, a0._b, 0, 0), a0._d
            return
        fs = [rational(x) for x in (a0, a1, a2, a3)]
        d = 1
        for f in fs:
            d = d * f.denominator // gcd(d, f.denominator)
        nums, d = _normalize([f.numerator * (d // f.denominator) for f in fs], d)
        self._c, self._d = tuple(nums), d

    @classmethod
    def _raw(cls, c, d):
        nums, d = _normalize(list(c), d)
        q = object.__new__(cls)
        q._c, q._d = tuple(nums), d
        return q

    @property
    def coefficients(self):
        """(a0, a1, a2, a3) as Fractions."""
        return tuple(Fraction(x, self._d) for x in self._c)

    def is_zero(self):
        return not any(self._c)

    def is_complex(self):
        return self._c[2] == 0 and self._c[3] == 0

    def conjugate(self):
        a, b, c, d = self._c
        return RationalQuaternion._raw((a, -b, -c, -d), self._d)

    def norm(self):
        """q * conj(q) = |q|^2, a nonnegative Fraction."""
        return Fraction(sum(x * x for x in self._c), self._d * self._d)

    def inverse(self):
        n = sum(x * x for x in self._c)
        if n == 0:
            raise ZeroDivisionError("inverse of zero quaternion")
        a, b, c, d = self._c
        return RationalQuaternion._raw((a * self._d, -b * self._d, -c * self._d, -d * self._d), n)

    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalQuaternion):
            return other
        if isinstance(other, GaussianRational):
            return RationalQuaternion._raw((other._a, other._b, 0, 0), other._d)
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return RationalQuaternion._raw((f.numerator, 0, 0, 0), f.denominator)
        return None

    def __add__(self, other):
        o = RationalQuaternion._coerce(other)
        if o is None:
            return NotImplemented
        d1, d2 = self._d, o._d
        if d1 == d2:
            return RationalQuaternion._raw([x + y for x, y in zip(self._c, o._c)], d1)
        return RationalQuaternion._raw([x * d2 + y * d1 for x, y in zip(self._c, o._c)], d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        q = object.__new__(RationalQuaternion)
        q._c, q._d = tuple(-x for x in self._c), self._d
        return q

    def __sub__(self, other):
        o = RationalQuaternion._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = RationalQuaternion._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = RationalQuaternion._coerce(other)
        if o is None:
            return NotImplemented
        p0, p1, p2, p3 = self._c
        q0, q1, q2, q3 = o._c
        return RationalQuaternion._raw((
            p0 * q0 - p1 * q1 - p2 * q2 - p3 * q3,
            p0 * q1 + p1 * q0 + p2 * q3 - p3 * q2,
            p0 * q2 - p1 * q3 + p2 * q0 + p3 * q1,
            p0 * q3 + p1 * q2 - p2 * q1 + p3 * q0,
        ), self._d * o._d)

    def __rmul__(self, other):
        o = RationalQuaternion._coerce(other)
        if o is None:
            return NotImplemented
        return o * self

    def __truediv__(self, other):
        # right division: self * other^-1
        o = RationalQuaternion._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __eq__(self, other):
        o = RationalQuaternion._coerce(other)
        if o is None:
            return NotImplemented
        return self._c == o._c and self._d == o._d

    def __hash__(self):
        if self.is_complex():
            return hash(GaussianRational._raw(self._c[0], self._c[1], self._d))
        return hash((self._c, self._d))

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        return _format_terms(self.coefficients, ["", "i", "j", "k"])

    def __repr__(self):
        return f"RationalQuaternion('{self}')"


I = RationalQuaternion(0, 1, 0, 0)
J = RationalQuaternion(0, 0, 1, 0)
K = RationalQuaternion(0, 0, 0, 1)


def quat_mul(p, q):
    return RationalQuaternion(p) * RationalQuaternion(q)


def quat_conjugate(q):
    return RationalQuaternion(q).conjugate()


def complex_split(q):
    """Return (z1, z2) with q = z1 + z2 j."""
    q = RationalQuaternion(q)
    a, b, c, d = q._c
    return GaussianRational._raw(a, b, q._d), GaussianRational._raw(c, d, q._d)


def complex_join(z1, z2):
    """Inverse of :func:`complex_split`: z1 + z2 j."""
    z1, z2 = GaussianRational(z1), GaussianRational(z2)
    d = z1._d * z2._d // gcd(z1._d, z2._d)
    m1, m2 = d // z1._d, d // z2._d
    return RationalQuaternion._raw((z1._a * m1, z1._b * m1, z2._a * m2, z2._b * m2), d)


def _format_terms(coeffs, units):
    parts = []
    for c, u in zip(coeffs, units):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if u == "":
            body = str(mag)
        elif mag == 1:
            body = u
        else:
            body = f"{mag}*{u}"
        parts.append((sign, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += sign + body
    return out


_TERM = re.compile(r"([+-])?\s*(\d+(?:/\d+)?)?\s*(\*)?\s*([ijk])?\s*")


def parse_scalar(text, field="H"):
    """Parse a canonical scalar string.

    ``field`` is "C" (result is a GaussianRational, j and k rejected) or "H"
    (result is a RationalQuaternion).
    """
    if isinstance(text, (int, Fraction)):
        return GaussianRational(text) if field == "C" else RationalQuaternion(text)
    if not isinstance(text, str):
        raise ParseError(f"scalar must be a string, got {type(text).__name__}")
    s = text.strip()
    if not s:
        raise ParseError("empty scalar string")
    coeffs = {"": Fraction(0), "i": Fraction(0), "j": Fraction(0), "k": Fraction(0)}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, num, star, unit = m.groups()
        if m.end() == pos or (num is None and unit is None):
            raise ParseError(f"cannot parse scalar {text!r}")
        if sign is None and not first:
            raise ParseError(f"missing sign between terms in {text!r}")
        if star and (num is None or unit is None):
            raise ParseError(f"dangling '*' in {text!r}")
        try:
            val = Fraction(num) if num is not None else Fraction(1)
        except ZeroDivisionError as exc:
            raise ParseError(f"zero denominator in {text!r}") from exc
        if sign == "-":
            val = -val
        coeffs[unit or ""] += val
        pos = m.end()
        first = False
    if field == "C":
        if coeffs["j"] or coeffs["k"]:
            raise ParseError(f"{text!r} is not a complex scalar")
        return GaussianRational(coeffs[""], coeffs["i"])
    return RationalQuaternion(coeffs[""], coeffs["i"], coeffs["j"], coeffs["k"])
