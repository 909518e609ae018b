"""Canonical-form arithmetic on the quantum plane ``y*x = q*x*y``.

Every element is a finite sum of normal monomials ``x^k * y^l`` (all x's to
the left) with ``QRational`` coefficients. Moving ``y^l`` past ``x^k`` costs a
factor ``q^(l*k)``, which is all ``monomial_mul`` needs to know.

Three independent routes to ``(x + y)^n`` live here: repeated multiplication
(``elem_pow``), the Gaussian-binomial closed form
(``expand_binomial_theorem``), and brute-force enumeration of all ``2^n``
words (``word_oracle_expand``).
"""

from __future__ import annotations

import itertools
import os
import time
from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple

from .coeffring import (
    ONE,
    ZERO,
    ONE_POLY,
    QPolynomial,
    QRational,
    rat_add,
    rat_eval,
    rat_mul,
)
from .errors import DivisionByZero, OracleBoundExceeded, PoleAtSpecialization
from .qcombinatorics import QBinomialTable, q_binomial_recurrence
from .report import VerificationReport

__all__ = [
    "NormalMonomial",
    "PlaneElement",
    "Word",
    "monomial_mul",
    "elem_add",
    "elem_sub",
    "elem_mul",
    "elem_pow",
    "elem_scale",
    "expand_binomial_theorem",
    "word_normalize",
    "word_oracle_expand",
    "oracle_bound",
    "specialize",
    "verify_theorem1",
    "X",
    "Y",
    "ONE_ELEMENT",
    "ZERO_ELEMENT",
    "DEFAULT_ORACLE_BOUND",
]

DEFAULT_ORACLE_BOUND = 14
ORACLE_ENV = "QPLANE_ORACLE_MAX"


class NormalMonomial(NamedTuple):
    """``x^xexp * y^yexp`` in that order."""

    xexp: int
    yexp: int

    @property
    def degree(self) -> int:
        return self.xexp + self.yexp

    def __str__(self):
        return monomial_to_text(self)


#: A word over the letters ``X`` and ``Y``, e.g. ``"YXY"``.
Word = str


def _display_key(m: NormalMonomial):
    return (-m.xexp, -m.yexp)


def _shift(c: QRational, k: int) -> QRational:
    # c * q^k; stays reduced whenever q does not divide the denominator
    if k == 0:
        return c
    if c.den.coeffs[0]:
        return QRational._trusted(c.num.shift(k), c.den)
    return rat_mul(c, QRational._trusted(ONE_POLY.shift(k), ONE_POLY))


class PlaneElement:
    """Immutable element of the quantum plane in normal form."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[NormalMonomial, QRational] = {}
        for m, c in items:
            m = NormalMonomial(*m)
            if m.xexp < 0 or m.yexp < 0:
                raise ValueError(f"negative exponent in {m}")
            c = QRational.coerce(c)
            acc[m] = rat_add(acc[m], c) if m in acc else c
        object.__setattr__(self, "_terms", {m: c for m, c in acc.items() if c})
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _trusted(cls, terms: dict) -> PlaneElement:
        e = object.__new__(cls)
        object.__setattr__(e, "_terms", terms)
        object.__setattr__(e, "_hash", None)
        return e

    def __setattr__(self, name, value):
        raise AttributeError("PlaneElement is immutable")

    @classmethod
    def scalar(cls, c) -> PlaneElement:
        c = QRational.coerce(c)
        return cls._trusted({NormalMonomial(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, xexp: int, yexp: int, c=ONE) -> PlaneElement:
        return cls({NormalMonomial(xexp, yexp): c})

    @classmethod
    def coerce(cls, value) -> PlaneElement:
        if isinstance(value, PlaneElement):
            return value
        return cls.scalar(value)

    # -- inspection ----------------------------------------------------------

    def terms(self) -> list[tuple[NormalMonomial, QRational]]:
        """Terms in display order: descending x-exponent, then descending y-exponent."""
        return sorted(self._terms.items(), key=lambda item: _display_key(item[0]))

    def as_dict(self) -> dict[NormalMonomial, QRational]:
        return dict(self._terms)

    def coefficient(self, xexp: int, yexp: int) -> QRational:
        return self._terms.get(NormalMonomial(xexp, yexp), ZERO)

    def __getitem__(self, m) -> QRational:
        return self._terms.get(NormalMonomial(*m), ZERO)

    def __contains__(self, m) -> bool:
        return NormalMonomial(*m) in self._terms

    def __iter__(self) -> Iterator[NormalMonomial]:
        return iter(sorted(self._terms, key=_display_key))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_scalar(self) -> bool:
        return all(m == (0, 0) for m in self._terms)

    def constant_term(self) -> QRational:
        return self._terms.get(NormalMonomial(0, 0), ZERO)

    def degrees(self) -> set[int]:
        return {m.degree for m in self._terms}

    def max_degree(self) -> int:
        return max((m.degree for m in self._terms), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        ds = self.degrees()
        if degree is None:
            return len(ds) <= 1
        return ds <= {degree}

    def truncate(self, order: int) -> PlaneElement:
        """Drop every term of total degree above ``order``."""
        return PlaneElement._trusted({m: c for m, c in self._terms.items() if m.degree <= order})

    def homogeneous_part(self, degree: int) -> PlaneElement:
        return PlaneElement._trusted({m: c for m, c in self._terms.items() if m.degree == degree})

    # -- protocol ------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, PlaneElement):
            return self._terms == other._terms
        try:
            return self == PlaneElement.coerce(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(frozenset(self._terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"PlaneElement({element_to_text(self)!r})"

    def __str__(self):
        return element_to_text(self)

    def __neg__(self):
        return PlaneElement._trusted({m: -c for m, c in self._terms.items()})

    def _other(self, other):
        try:
            return PlaneElement.coerce(other)
        except TypeError:
            return None

    def __add__(self, other):
        other = self._other(other)
        return NotImplemented if other is None else elem_add(self, other)

    def __radd__(self, other):
        other = self._other(other)
        return NotImplemented if other is None else elem_add(other, self)

    def __sub__(self, other):
        other = self._other(other)
        return NotImplemented if other is None else elem_sub(self, other)

    def __rsub__(self, other):
        other = self._other(other)
        return NotImplemented if other is None else elem_sub(other, self)

    def __mul__(self, other):
        other = self._other(other)
        return NotImplemented if other is None else elem_mul(self, other)

    def __rmul__(self, other):
        other = self._other(other)
        return NotImplemented if other is None else elem_mul(other, self)

    def __pow__(self, n: int):
        return elem_pow(self, n)


ZERO_ELEMENT = PlaneElement._trusted({})
ONE_ELEMENT = PlaneElement._trusted({NormalMonomial(0, 0): ONE})
X = PlaneElement._trusted({NormalMonomial(1, 0): ONE})
Y = PlaneElement._trusted({NormalMonomial(0, 1): ONE})


def monomial_mul(a: NormalMonomial, b: NormalMonomial) -> tuple[QPolynomial, NormalMonomial]:
    """``(x^i y^j)(x^k y^l) = q^(j*k) x^(i+k) y^(j+l)``."""
    return (
        QPolynomial.monomial(a.yexp * b.xexp),
        NormalMonomial(a.xexp + b.xexp, a.yexp + b.yexp),
    )


def elem_add(a: PlaneElement, b: PlaneElement) -> PlaneElement:
    if not a._terms:
        return b
    if not b._terms:
        return a
    out = dict(a._terms)
    for m, c in b._terms.items():
        if m in out:
            s = rat_add(out[m], c)
            if s:
                out[m] = s
            else:
                del out[m]
        else:
            out[m] = c
    return PlaneElement._trusted(out)


def elem_sub(a: PlaneElement, b: PlaneElement) -> PlaneElement:
    return elem_add(a, -b)


def elem_scale(a: PlaneElement, c) -> PlaneElement:
    """Multiply every coefficient by the central scalar ``c``."""
    c = QRational.coerce(c)
    if not c:
        return ZERO_ELEMENT
    return PlaneElement._trusted({m: rat_mul(v, c) for m, v in a._terms.items()})


def elem_mul(a: PlaneElement, b: PlaneElement, max_degree: int | None = None) -> PlaneElement:
    """Product in normal form; the order of the factors matters.

    With ``max_degree`` set, term pairs whose product would exceed that total
    degree are skipped, which equals truncating the full product.
    """
    if not a._terms or not b._terms:
        return ZERO_ELEMENT
    acc: dict[NormalMonomial, QRational] = {}
    for (ax, ay), ca in a._terms.items():
        for (bx, by), cb in b._terms.items():
            if max_degree is not None and ax + ay + bx + by > max_degree:
                continue
            m = NormalMonomial(ax + bx, ay + by)
            c = _shift(rat_mul(ca, cb), ay * bx)
            prev = acc.get(m)
            acc[m] = c if prev is None else rat_add(prev, c)
    return PlaneElement._trusted({m: c for m, c in acc.items() if c})


def elem_pow(a: PlaneElement, n: int) -> PlaneElement:
    """``a^n`` by left-associated repeated multiplication; ``a^0 = 1``."""
    if n < 0:
        raise ValueError("negative exponent")
    result = ONE_ELEMENT
    for _ in range(n):
        result = elem_mul(result, a)
    return result


def expand_binomial_theorem(n: int, table: QBinomialTable | None = None) -> PlaneElement:
    """``sum_k [n, k]_q x^k y^(n-k)`` built straight from the binomial table."""
    return PlaneElement._trusted(
        {
            NormalMonomial(k, n - k): QRational._trusted(q_binomial_recurrence(n, k, table), ONE_POLY)
            for k in range(n + 1)
        }
    )


def oracle_bound() -> int:
    """Largest n the word oracle accepts; ``QPLANE_ORACLE_MAX`` overrides the default."""
    raw = os.environ.get(ORACLE_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_ORACLE_BOUND
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ORACLE_ENV} must be a natural number, got {raw!r}") from None
    if value < 0:
        raise ValueError(f"{ORACLE_ENV} must be a natural number, got {raw!r}")
    return value


def word_normalize(word: Word) -> tuple[int, NormalMonomial]:
    """Return ``(inv, x^#X y^#Y)`` where ``inv`` counts Y-before-X pairs."""
    ys = 0
    inv = 0
    xs = 0
    for letter in word:
        if letter == "Y":
            ys += 1
        elif letter == "X":
            xs += 1
            inv += ys
        else:
            raise ValueError(f"letter {letter!r} is not X or Y")
    return inv, NormalMonomial(xs, ys)


def word_oracle_expand(n: int, bound: int | None = None) -> PlaneElement:
    """``(x + y)^n`` by normal-ordering each of the ``2^n`` words separately."""
    bound = oracle_bound() if bound is None else bound
    if n > bound:
        raise OracleBoundExceeded(f"word oracle limited to n <= {bound}, got n={n}")
    counts: dict[NormalMonomial, list[int]] = defaultdict(lambda: [0] * (n * n // 4 + 1))
    for letters in itertools.product("XY", repeat=n):
        inv, m = word_normalize(letters)
        counts[m][inv] += 1
    return PlaneElement._trusted(
        {m: QRational._trusted(QPolynomial(c), ONE_POLY) for m, c in counts.items()}
    )


def specialize(e: PlaneElement, r) -> dict[NormalMonomial, Fraction]:
    """Substitute the rational number ``r`` for q in every coefficient."""
    r = Fraction(r)
    out = {}
    for m, c in e.terms():
        try:
            v = rat_eval(c, r)
        except DivisionByZero:
            raise PoleAtSpecialization(m, c.den, r) from None
        if v:
            out[m] = v
    return out


def _diff_records(check: str, left: PlaneElement, right: PlaneElement, **extra) -> list[dict]:
    records = []
    for m in sorted(set(left._terms) | set(right._terms), key=_display_key):
        lc, rc = left[m], right[m]
        if lc != rc:
            records.append(
                {"check": check, **extra, "xexp": m.xexp, "yexp": m.yexp, "left": str(lc), "right": str(rc)}
            )
    return records


def verify_theorem1(
    n_max: int,
    oracle_max: int,
    table: QBinomialTable | None = None,
    bound: int | None = None,
) -> VerificationReport:
    """Check ``(x+y)^n`` three ways for every ``n <= n_max``.

    The word oracle joins in for ``n <= oracle_max``. Mismatches become
    report entries rather than exceptions.
    """
    bound = oracle_bound() if bound is None else bound
    if oracle_max > bound:
        raise OracleBoundExceeded(f"oracle_max={oracle_max} exceeds the oracle bound {bound}")
    report = VerificationReport("theorem1", n_max)
    start = time.perf_counter()
    s = X + Y
    power = ONE_ELEMENT
    for n in range(n_max + 1):
        t0 = time.perf_counter()
        if n:
            power = elem_mul(power, s)
        closed = expand_binomial_theorem(n, table)
        failures = _diff_records("elem_pow_vs_binomial_theorem", power, closed, n=n)
        use_oracle = n <= oracle_max
        if use_oracle:
            oracle = word_oracle_expand(n, bound)
            failures += _diff_records("word_oracle_vs_binomial_theorem", oracle, closed, n=n)
        report.failures.extend(failures)
        report.cases.append(
            {
                "n": n,
                "status": "fail" if failures else "pass",
                "oracle": use_oracle,
                "elapsed_ms": round((time.perf_counter() - t0) * 1000, 3),
            }
        )
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


def monomial_to_text(m: NormalMonomial) -> str:
    """``x^k*y^l`` with unit exponents elided; empty string for 1."""
    parts = []
    if m.xexp:
        parts.append("x" if m.xexp == 1 else f"x^{m.xexp}")
    if m.yexp:
        parts.append("y" if m.yexp == 1 else f"y^{m.yexp}")
    return "*".join(parts)


def _is_negative(c: QRational) -> bool:
    return c.num.nonzero_terms() == 1 and c.num.leading < 0


def _is_compound(c: QRational) -> bool:
    return c.num.nonzero_terms() > 1 or not c.den.is_one()


def element_to_text(e: PlaneElement) -> str:
    """Canonical rendering, e.g. ``x^2 + (1 + q)*x*y + y^2``; ``0`` for zero."""
    terms = e.terms()
    if not terms:
        return "0"
    out = []
    for m, c in terms:
        neg = _is_negative(c)
        if neg:
            c = -c
        mono = monomial_to_text(m)
        if not mono:
            body = str(c)
            if _is_compound(c) and len(terms) > 1:
                body = f"({body})"
        elif c.is_one():
            body = mono
        else:
            body = f"({c})*{mono}" if _is_compound(c) else f"{c}*{mono}"
        if not out:
            out.append("-" + body if neg else body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)
