"""Exact polynomials in q over the integers and their reduced fractions.

``QPolynomial`` stores coefficients densely, lowest degree first.
``QRational`` is always kept in lowest terms: numerator and denominator share
no non-unit factor, the integer content is cancelled and the denominator's
leading coefficient is positive, so equality is structural.

Both types are immutable and support the usual arithmetic operators; the
``poly_*`` and ``rat_*`` functions are the same operations in functional form.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

from .errors import BothZero, DivisionByZero, NotDivisible

__all__ = [
    "NEG_INF",
    "QPolynomial",
    "QRational",
    "poly_add",
    "poly_sub",
    "poly_mul",
    "poly_exact_div",
    "poly_eval",
    "poly_gcd",
    "poly_content",
    "rat_normalize",
    "rat_add",
    "rat_sub",
    "rat_mul",
    "rat_div",
    "rat_eval",
]

#: Degree of the zero polynomial.
NEG_INF = -math.inf


def _strip(coeffs: list[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class QPolynomial:
    """Polynomial in q with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs", "_hash")

    coeffs: tuple[int, ...]

    def __init__(self, coeffs=()):
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        object.__setattr__(self, "coeffs", _strip([int(c) for c in coeffs]))
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _trusted(cls, coeffs: tuple[int, ...]) -> QPolynomial:
        # caller guarantees a stripped tuple of ints
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", coeffs)
        object.__setattr__(p, "_hash", None)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("QPolynomial is immutable")

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> QPolynomial:
        if degree < 0:
            raise ValueError("negative degree")
        if not coeff:
            return ZERO_POLY
        return cls._trusted((0,) * degree + (int(coeff),))

    @classmethod
    def coerce(cls, value) -> QPolynomial:
        if isinstance(value, QPolynomial):
            return value
        if isinstance(value, int):
            return cls._trusted((value,)) if value else ZERO_POLY
        raise TypeError(f"cannot convert {type(value).__name__} to QPolynomial")

    # -- structure -----------------------------------------------------------

    def degree(self):
        """Degree, or ``NEG_INF`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def nonzero_terms(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def content(self) -> int:
        return poly_content(self)

    def primitive(self) -> QPolynomial:
        """Divide out the content and make the leading coefficient positive."""
        if not self.coeffs:
            return self
        g = math.gcd(*self.coeffs)
        if self.coeffs[-1] < 0:
            g = -g
        if g == 1:
            return self
        return QPolynomial._trusted(tuple(c // g for c in self.coeffs))

    def shift(self, k: int) -> QPolynomial:
        """Multiply by q**k."""
        if k == 0 or not self.coeffs:
            return self
        return QPolynomial._trusted((0,) * k + self.coeffs)

    def scale(self, c: int) -> QPolynomial:
        if c == 1:
            return self
        if not c:
            return ZERO_POLY
        return QPolynomial._trusted(tuple(c * a for a in self.coeffs))

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    # -- protocol --------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, QPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(("QPolynomial", self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __repr__(self):
        return f"QPolynomial({list(self.coeffs)!r})"

    def __str__(self):
        return poly_to_text(self)

    def __neg__(self):
        return QPolynomial._trusted(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        try:
            return poly_add(self, QPolynomial.coerce(other))
        except TypeError:
            return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        try:
            return poly_sub(self, QPolynomial.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        try:
            return poly_sub(QPolynomial.coerce(other), self)
        except TypeError:
            return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, QPolynomial):
            return poly_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = ONE_POLY
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __call__(self, r):
        return poly_eval(self, r)


ZERO_POLY = QPolynomial._trusted(())
ONE_POLY = QPolynomial._trusted((1,))
Q_POLY = QPolynomial._trusted((0, 1))


def poly_to_text(p: QPolynomial) -> str:
    """Canonical text: ascending degree, ``1 + q + 2*q^2``; ``0`` for zero."""
    parts: list[str] = []
    for i, c in enumerate(p.coeffs):
        if not c:
            continue
        a = abs(c)
        if i == 0:
            body = str(a)
        else:
            power = "q" if i == 1 else f"q^{i}"
            body = power if a == 1 else f"{a}*{power}"
        if not parts:
            parts.append("-" + body if c < 0 else body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts) if parts else "0"


def poly_add(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    ac, bc = a.coeffs, b.coeffs
    if not ac:
        return b
    if not bc:
        return a
    if len(ac) < len(bc):
        ac, bc = bc, ac
    out = [x + y for x, y in zip(ac, bc)]
    out.extend(ac[len(bc):])
    return QPolynomial._trusted(_strip(out))


def poly_sub(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    return poly_add(a, -b)


def poly_mul(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    ac, bc = a.coeffs, b.coeffs
    if not ac or not bc:
        return ZERO_POLY
    if len(ac) < len(bc):
        ac, bc = bc, ac
    if len(bc) == 1:
        c = bc[0]
        return QPolynomial._trusted(tuple(c * x for x in ac))
    out = [0] * (len(ac) + len(bc) - 1)
    n = len(ac)
    # one slice update per coefficient of the shorter factor
    for j, c in enumerate(bc):
        if c:
            out[j:j + n] = [o + c * x for o, x in zip(out[j:j + n], ac)]
    # leading coefficient is a product of nonzero integers, so nothing to strip
    return QPolynomial._trusted(tuple(out))


def poly_exact_div(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    """Return c with b*c == a, or raise ``NotDivisible``."""
    bc = b.coeffs
    if not bc:
        raise DivisionByZero("polynomial division by zero")
    ac = a.coeffs
    if not ac:
        return ZERO_POLY
    m = len(bc) - 1
    if m == 0:
        d = bc[0]
        if d == 1:
            return a
        out = []
        for c in ac:
            qc, rem = divmod(c, d)
            if rem:
                raise NotDivisible(f"{a} is not divisible by {b} over the integers")
            out.append(qc)
        return QPolynomial._trusted(tuple(out))
    if len(ac) <= m:
        raise NotDivisible(f"{a} is not divisible by {b}")
    r = list(ac)
    lead = bc[-1]
    quot = [0] * (len(ac) - m)
    for i in range(len(ac) - 1 - m, -1, -1):
        c = r[i + m]
        if not c:
            continue
        qc, rem = divmod(c, lead)
        if rem:
            raise NotDivisible(
                f"{a} is not divisible by {b}: non-integer quotient coefficient at q^{i}"
            )
        quot[i] = qc
        r[i:i + m + 1] = [x - qc * y for x, y in zip(r[i:i + m + 1], bc)]
    if any(r[:m]):
        raise NotDivisible(
            f"{a} is not divisible by {b}: remainder {QPolynomial(r[:m])}"
        )
    return QPolynomial._trusted(tuple(quot))


def poly_eval(a: QPolynomial, r) -> Fraction | int:
    """Evaluate at an exact rational ``r``; an int argument gives an int."""
    if isinstance(r, int):
        acc = 0
        for c in reversed(a.coeffs):
            acc = acc * r + c
        return acc
    r = Fraction(r)
    p, s = r.numerator, r.denominator
    if s == 1:
        return Fraction(poly_eval(a, p))
    # homogenised Horner: sum c_i p^i s^(d-i), then divide by s^d
    acc = 0
    spow = 1
    for c in reversed(a.coeffs):
        acc = acc * p + c * spow
        spow *= s
    d = len(a.coeffs) - 1
    return Fraction(acc, s ** d) if d > 0 else Fraction(acc)


def poly_content(a: QPolynomial) -> int:
    """Nonnegative gcd of the coefficients (0 for the zero polynomial)."""
    return math.gcd(*a.coeffs) if a.coeffs else 0


def _pseudo_remainder(a: tuple[int, ...], b: tuple[int, ...]) -> list[int]:
    r = list(a)
    m = len(b) - 1
    lead = b[-1]
    while len(r) - 1 >= m:
        c = r[-1]
        g = math.gcd(lead, c)
        lb, cg = lead // g, c // g
        d = len(r) - 1 - m
        top = [lb * x - cg * y for x, y in zip(r[d:], b)]
        r = [lb * x for x in r[:d]] + top
        n = len(r)
        while n and not r[n - 1]:
            n -= 1
        del r[n:]
    return r


def poly_gcd(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    """Primitive gcd with positive leading coefficient.

    Uses the primitive Euclidean remainder sequence; integer content is the
    caller's business (see ``poly_content``).
    """
    if not a.coeffs and not b.coeffs:
        raise BothZero("gcd(0, 0) is undefined")
    if not a.coeffs:
        return b.primitive()
    if not b.coeffs:
        return a.primitive()
    a, b = a.primitive(), b.primitive()
    if a.is_constant() or b.is_constant():
        return ONE_POLY
    if a == b:
        return a
    if len(a.coeffs) < len(b.coeffs):
        a, b = b, a
    x, y = a.coeffs, b.coeffs
    while y:
        if len(y) == 1:
            return ONE_POLY
        r = _pseudo_remainder(x, y)
        if r:
            g = math.gcd(*r)
            if r[-1] < 0:
                g = -g
            if g != 1:
                r = [c // g for c in r]
        x, y = y, tuple(r)
    return QPolynomial._trusted(x)


# -- fractions -------------------------------------------------------------------


def _finish(num: QPolynomial, den: QPolynomial) -> QRational:
    """Cancel integer content and fix the sign; polynomial parts already coprime."""
    if not num.coeffs:
        return ZERO
    g = math.gcd(poly_content(num), poly_content(den))
    if den.coeffs[-1] < 0:
        g = -g
    if g != 1:
        num = QPolynomial._trusted(tuple(c // g for c in num.coeffs))
        den = QPolynomial._trusted(tuple(c // g for c in den.coeffs))
    return QRational._trusted(num, den)


def rat_normalize(num: QPolynomial, den: QPolynomial) -> QRational:
    """Reduce num/den to the canonical fraction; idempotent."""
    if not den.coeffs:
        raise DivisionByZero("zero denominator")
    if not num.coeffs:
        return ZERO
    if den.is_one():
        return QRational._trusted(num, ONE_POLY)
    g = poly_gcd(num, den)
    if not g.is_one():
        num = poly_exact_div(num, g)
        den = poly_exact_div(den, g)
    return _finish(num, den)


class QRational:
    """Reduced fraction of two ``QPolynomial``s."""

    __slots__ = ("num", "den", "_hash")

    num: QPolynomial
    den: QPolynomial

    def __init__(self, num=0, den=1):
        r = rat_normalize(QPolynomial.coerce(num), QPolynomial.coerce(den))
        object.__setattr__(self, "num", r.num)
        object.__setattr__(self, "den", r.den)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _trusted(cls, num: QPolynomial, den: QPolynomial) -> QRational:
        r = object.__new__(cls)
        object.__setattr__(r, "num", num)
        object.__setattr__(r, "den", den)
        object.__setattr__(r, "_hash", None)
        return r

    def __setattr__(self, name, value):
        raise AttributeError("QRational is immutable")

    @classmethod
    def coerce(cls, value) -> QRational:
        if isinstance(value, QRational):
            return value
        if isinstance(value, QPolynomial):
            return cls._trusted(value, ONE_POLY) if value else ZERO
        if isinstance(value, int):
            return cls._trusted(QPolynomial.coerce(value), ONE_POLY) if value else ZERO
        if isinstance(value, Rational):
            f = Fraction(value)
            return _finish(QPolynomial.coerce(f.numerator), QPolynomial.coerce(f.denominator))
        raise TypeError(f"cannot convert {type(value).__name__} to QRational")

    def is_zero(self) -> bool:
        return not self.num.coeffs

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def __eq__(self, other):
        if isinstance(other, QRational):
            return self.num == other.num and self.den == other.den
        try:
            return self == QRational.coerce(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(("QRational", self.num.coeffs, self.den.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self):
        return bool(self.num.coeffs)

    def __repr__(self):
        return f"QRational({self.num!r}, {self.den!r})"

    def __str__(self):
        return rat_to_text(self)

    def __neg__(self):
        return QRational._trusted(-self.num, self.den)

    def _binary(self, other, op, swap=False):
        try:
            other = QRational.coerce(other)
        except TypeError:
            return NotImplemented
        return op(other, self) if swap else op(self, other)

    def __add__(self, other):
        return self._binary(other, rat_add)

    def __radd__(self, other):
        return self._binary(other, rat_add, swap=True)

    def __sub__(self, other):
        return self._binary(other, rat_sub)

    def __rsub__(self, other):
        return self._binary(other, rat_sub, swap=True)

    def __mul__(self, other):
        return self._binary(other, rat_mul)

    def __rmul__(self, other):
        return self._binary(other, rat_mul, swap=True)

    def __truediv__(self, other):
        return self._binary(other, rat_div)

    def __rtruediv__(self, other):
        return self._binary(other, rat_div, swap=True)

    def __pow__(self, n: int):
        if n < 0:
            return rat_div(ONE, self) ** (-n)
        return _finish(self.num ** n, self.den ** n) if n else ONE

    def reciprocal(self) -> QRational:
        if not self.num.coeffs:
            raise DivisionByZero("reciprocal of zero")
        return _finish(self.den, self.num)

    def __call__(self, r):
        return rat_eval(self, r)


ZERO = QRational._trusted(ZERO_POLY, ONE_POLY)
ONE = QRational._trusted(ONE_POLY, ONE_POLY)


def rat_to_text(r: QRational) -> str:
    """``num / (den)``; the denominator is omitted when it is 1.

    A numerator with more than one term is parenthesised so the text reads
    back unambiguously.
    """
    num = poly_to_text(r.num)
    if r.den.is_one():
        return num
    if r.num.nonzero_terms() > 1:
        num = f"({num})"
    return f"{num} / ({poly_to_text(r.den)})"


def rat_add(a: QRational, b: QRational) -> QRational:
    if not a.num.coeffs:
        return b
    if not b.num.coeffs:
        return a
    if a.den == b.den:
        if a.den.is_one():
            s = a.num + b.num
            return QRational._trusted(s, ONE_POLY) if s else ZERO
        return rat_normalize(a.num + b.num, a.den)
    g = poly_gcd(a.den, b.den)
    if g.is_one():
        return rat_normalize(a.num * b.den + b.num * a.den, a.den * b.den)
    da = poly_exact_div(a.den, g)
    db = poly_exact_div(b.den, g)
    return rat_normalize(a.num * db + b.num * da, a.den * db)


def rat_sub(a: QRational, b: QRational) -> QRational:
    return rat_add(a, -b)


def rat_mul(a: QRational, b: QRational) -> QRational:
    if not a.num.coeffs or not b.num.coeffs:
        return ZERO
    if a.den.is_one() and b.den.is_one():
        return QRational._trusted(a.num * b.num, ONE_POLY)
    # cross-cancel; the inputs are reduced so no further gcd is needed
    an, ad, bn, bd = a.num, a.den, b.num, b.den
    g1 = poly_gcd(an, bd)
    if not g1.is_one():
        an, bd = poly_exact_div(an, g1), poly_exact_div(bd, g1)
    g2 = poly_gcd(bn, ad)
    if not g2.is_one():
        bn, ad = poly_exact_div(bn, g2), poly_exact_div(ad, g2)
    return _finish(an * bn, ad * bd)


def rat_div(a: QRational, b: QRational) -> QRational:
    return rat_mul(a, b.reciprocal())


def rat_eval(a: QRational, r) -> Fraction:
    """Evaluate at an exact rational; raises ``DivisionByZero`` at a pole."""
    d = poly_eval(a.den, Fraction(r))
    if d == 0:
        raise DivisionByZero(f"denominator {a.den} vanishes at q = {r}")
    return Fraction(poly_eval(a.num, Fraction(r))) / d
