"""Exact scalar arithmetic over QQ and the cyclotomic field QQ(zeta_8).

All coefficients in the workbench are either `fractions.Fraction` (the field
QQ) or `Zeta8` (the field QQ(zeta_8), a degree-4 extension with defining
relation zeta^4 = -1).  Mixed arithmetic promotes QQ into QQ(zeta_8), never
the other way.  There is no floating point anywhere: equality is decidable.
"""

from __future__ import annotations

import math
from fractions import Fraction

_ZERO4 = (Fraction(0), Fraction(0), Fraction(0), Fraction(0))


class Zeta8:
    """An element c0 + c1*z + c2*z^2 + c3*z^3 of QQ(zeta_8), with z^4 = -1.

    The coefficient vector is always fully reduced, so each field element has
    exactly one representation and ``==`` / ``hash`` are structural.
    """

    __slots__ = ("coeffs",)

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        self.coeffs = (Fraction(c0), Fraction(c1), Fraction(c2), Fraction(c3))

    @staticmethod
    def _raw(coeffs):
        v = Zeta8.__new__(Zeta8)
        v.coeffs = coeffs
        return v

    @staticmethod
    def coerce(x):
        if isinstance(x, Zeta8):
            return x
        q = Fraction(x)
        return Zeta8._raw((q, Fraction(0), Fraction(0), Fraction(0)))

    def is_rational(self):
        c = self.coeffs
        return not (c[1] or c[2] or c[3])

    def rational_part(self):
        """The QQ-value, if this element lies in QQ (raises otherwise)."""
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def __bool__(self):
        return self.coeffs != _ZERO4

    def __eq__(self, other):
        if isinstance(other, Zeta8):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash(self.coeffs)

    def __neg__(self):
        a = self.coeffs
        return Zeta8._raw((-a[0], -a[1], -a[2], -a[3]))

    def __add__(self, other):
        if not isinstance(other, Zeta8):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = Zeta8.coerce(other)
        a, b = self.coeffs, other.coeffs
        return Zeta8._raw((a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Zeta8):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = Zeta8.coerce(other)
        a, b = self.coeffs, other.coeffs
        return Zeta8._raw((a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]))

    def __rsub__(self, other):
        return Zeta8.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Zeta8):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            q = Fraction(other)
            a = self.coeffs
            return Zeta8._raw((a[0] * q, a[1] * q, a[2] * q, a[3] * q))
        a, b = self.coeffs, other.coeffs
        # convolution reduced by z^4 = -1
        c0 = a[0] * b[0] - a[1] * b[3] - a[2] * b[2] - a[3] * b[1]
        c1 = a[0] * b[1] + a[1] * b[0] - a[2] * b[3] - a[3] * b[2]
        c2 = a[0] * b[2] + a[1] * b[1] + a[2] * b[0] - a[3] * b[3]
        c3 = a[0] * b[3] + a[1] * b[2] + a[2] * b[1] + a[3] * b[0]
        return Zeta8._raw((c0, c1, c2, c3))

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        base = self if e >= 0 else self.inverse()
        out = Zeta8(1)
        for _ in range(abs(e)):
            out = out * base
        return out

    def inverse(self):
        """Multiplicative inverse, via the norm down the tower QQ(z) / QQ(i) / QQ."""
        if not self:
            raise ZeroDivisionError("division by zero in QQ(zeta_8)")
        # write self = A + B*z with A, B in QQ(i) = QQ(z^2); then
        # (A + Bz)(A - Bz) = A^2 - i B^2 lies in QQ(i), and the QQ(i)-norm
        # finishes the job.
        a = self.coeffs
        conj = Zeta8._raw((a[0], -a[1], a[2], -a[3]))          # z -> -z
        n1 = self * conj                                        # in QQ(i)
        b = n1.coeffs
        conj2 = Zeta8._raw((b[0], Fraction(0), -b[2], Fraction(0)))  # i -> -i
        n2 = n1 * conj2                                         # in QQ
        q = n2.coeffs[0]
        return conj * conj2 * Fraction(q.denominator, q.numerator)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        if not isinstance(other, Zeta8):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Zeta8.coerce(other) / self

    def __repr__(self):
        return f"Zeta8{self.coeffs}"

    def __str__(self):
        return format_scalar(self)


ZETA = Zeta8(0, 1, 0, 0)
IMAG = Zeta8(0, 0, 1, 0)   # i = zeta^2


class FieldDescriptor:
    """One of the two supported coefficient fields."""

    __slots__ = ("name",)

    def __init__(self, name):
        self.name = name

    @property
    def zero(self):
        return Fraction(0) if self.name == "QQ" else Zeta8()

    @property
    def one(self):
        return Fraction(1) if self.name == "QQ" else Zeta8(1)

    def coerce(self, x):
        if self.name == "QQ":
            if isinstance(x, Zeta8):
                return x.rational_part()
            return Fraction(x)
        return Zeta8.coerce(x)

    def __eq__(self, other):
        return isinstance(other, FieldDescriptor) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return self.name


QQ = FieldDescriptor("QQ")
QQ_ZETA8 = FieldDescriptor("QQ_ZETA8")


def join_fields(f1, f2):
    """Smallest supported field containing both arguments."""
    return QQ if f1 == QQ and f2 == QQ else QQ_ZETA8


def field_of_value(x):
    if isinstance(x, Zeta8) and not x.is_rational():
        return QQ_ZETA8
    return QQ


def field_arith(op, a, b):
    """Apply one of {add, sub, mul, div} to two field values."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if is_zero(b):
            raise ZeroDivisionError("division by zero")
        if isinstance(a, Zeta8) or isinstance(b, Zeta8):
            return Zeta8.coerce(a) / Zeta8.coerce(b)
        return Fraction(a) / Fraction(b)
    raise ValueError(f"unknown op {op!r}")


def is_zero(a):
    """Exact zero test for a field value."""
    if isinstance(a, Zeta8):
        return not a
    return a == 0


def as_fraction(x):
    """Collapse a field value known to be rational down to a Fraction."""
    if isinstance(x, Zeta8):
        return x.rational_part()
    return Fraction(x)


def _format_fraction(q, need_sign):
    s = str(q)
    if need_sign and not s.startswith("-"):
        s = "+" + s
    return s


def format_scalar(x):
    """Canonical text form, parseable by the presentation grammar."""
    if not isinstance(x, Zeta8):
        return str(Fraction(x))
    if x.is_rational():
        return str(x.coeffs[0])
    parts = []
    for k, c in enumerate(x.coeffs):
        if c == 0:
            continue
        if k == 0:
            parts.append(str(c))
            continue
        var = "zeta8" if k == 1 else f"zeta8^{k}"
        if c == 1:
            term = var
        elif c == -1:
            term = "-" + var
        else:
            term = f"{c}*{var}"
        if parts and not term.startswith("-"):
            term = "+" + term
        parts.append(term)
    return "".join(parts)


def frac_sqrt(q):
    """Exact square root of a Fraction, or None if q is not a square in QQ."""
    q = Fraction(q)
    if q < 0:
        return None
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn != q.numerator or rd * rd != q.denominator:
        return None
    return Fraction(rn, rd)


def gauss_sqrt(x):
    """Square root of an element of QQ(i) inside QQ(i), or None.

    x is given as a Zeta8 supported on {1, zeta^2}.
    """
    x = Zeta8.coerce(x)
    if x.coeffs[1] or x.coeffs[3]:
        raise ValueError("gauss_sqrt expects an element of QQ(i)")
    a, b = x.coeffs[0], x.coeffs[2]
    if b == 0:
        r = frac_sqrt(a)
        if r is not None:
            return Zeta8(r)
        r = frac_sqrt(-a)
        if r is not None:
            return Zeta8(0, 0, r, 0)
        return None
    n = frac_sqrt(a * a + b * b)
    if n is None:
        return None
    # (u + vi)^2 = x with u^2 = (a + n)/2 (or (a - n)/2), v = b / (2u)
    for sign in (1, -1):
        u2 = (a + sign * n) / 2
        u = frac_sqrt(u2)
        if u is not None and u != 0:
            v = b / (2 * u)
            return Zeta8(u, 0, v, 0)
    return None


def zeta8_sqrt(x):
    """Square root of x in QQ(zeta_8), or None if x is not a square there.

    Splits x = d0 + d1*zeta over QQ(i) (zeta^2 = i) and solves
    (A + B*zeta)^2 = (A^2 + i B^2) + 2AB*zeta exactly.
    """
    x = Zeta8.coerce(x)
    if not x:
        return Zeta8()
    c = x.coeffs
    d0 = Zeta8(c[0], 0, c[2], 0)
    d1 = Zeta8(c[1], 0, c[3], 0)
    if not d1:
        a = gauss_sqrt(d0)
        if a is not None:
            return a
        b = gauss_sqrt(d0 * IMAG.inverse())
        if b is not None:
            return b * ZETA
        return None
    disc = d0 * d0 - IMAG * d1 * d1
    s = gauss_sqrt(disc)
    if s is None:
        return None
    for sign in (1, -1):
        b2 = (d0 + sign * s) / (2 * IMAG)
        b = gauss_sqrt(b2)
        if b is not None and b:
            a = d1 / (2 * b)
            y = a + b * ZETA
            if y * y == x:
                return y
    return None
