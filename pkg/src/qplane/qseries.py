"""Total-degree truncated series over the quantum plane and the q-exponential.

A :class:`TruncatedSeries` is a plane element known modulo terms of total
degree above ``order``. Arithmetic between series of different orders keeps
the smaller one.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from .coeffring import ONE_POLY, QRational
from .errors import NonzeroConstantTerm
from .qcombinatorics import q_factorial, q_integer
from .quantumplane import (
    ONE_ELEMENT,
    X,
    Y,
    NormalMonomial,
    PlaneElement,
    elem_add,
    elem_mul,
    elem_scale,
    specialize,
)
from .report import VerificationReport

__all__ = [
    "TruncatedSeries",
    "series_from_element",
    "series_add",
    "series_sub",
    "series_mul",
    "series_pow",
    "exp_q_series",
    "exp_q_series_horner",
    "specialize_series",
    "verify_theorem2",
]


@dataclass(frozen=True)
class TruncatedSeries:
    body: PlaneElement
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"truncation order must be natural, got {self.order}")
        if self.body.max_degree() > self.order:
            raise ValueError("series body has terms above its truncation order")

    def coefficient(self, xexp: int, yexp: int) -> QRational:
        return self.body.coefficient(xexp, yexp)

    def __getitem__(self, m) -> QRational:
        return self.body[m]

    def is_zero(self) -> bool:
        return self.body.is_zero()

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        try:
            return series_from_element(PlaneElement.coerce(other), self.order)
        except TypeError:
            return None

    def __add__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else series_add(self, other)

    def __radd__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else series_add(other, self)

    def __sub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else series_sub(self, other)

    def __rsub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else series_sub(other, self)

    def __mul__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else series_mul(self, other)

    def __rmul__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else series_mul(other, self)

    def __neg__(self):
        return TruncatedSeries(-self.body, self.order)

    def __pow__(self, n: int):
        return series_pow(self, n)

    def __str__(self):
        return f"{self.body} + O(deg > {self.order})"


def series_from_element(a: PlaneElement, order: int) -> TruncatedSeries:
    return TruncatedSeries(a.truncate(order), order)


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    order = min(a.order, b.order)
    return TruncatedSeries(elem_add(a.body.truncate(order), b.body.truncate(order)), order)


def series_sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return series_add(a, -b)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Noncommutative product, truncated to the smaller order."""
    order = min(a.order, b.order)
    return TruncatedSeries(elem_mul(a.body, b.body, max_degree=order), order)


def series_pow(a: TruncatedSeries, n: int) -> TruncatedSeries:
    if n < 0:
        raise ValueError("negative exponent")
    result = TruncatedSeries(ONE_ELEMENT, a.order)
    for _ in range(n):
        result = series_mul(result, a)
    return result


def _check_argument(arg: PlaneElement) -> None:
    c = arg.constant_term()
    if c:
        raise NonzeroConstantTerm(f"exp_q argument has constant term {c}; substitution is not formal")


def exp_q_series(arg, order: int) -> TruncatedSeries:
    """``sum_{n <= order} arg^n / (n!)_q`` truncated at total degree ``order``."""
    if isinstance(arg, TruncatedSeries):
        arg, order = arg.body, min(order, arg.order)
    arg = PlaneElement.coerce(arg).truncate(order)
    _check_argument(arg)
    total = ONE_ELEMENT
    power = ONE_ELEMENT
    for n in range(1, order + 1):
        power = elem_mul(power, arg, max_degree=order)
        if power.is_zero():
            break
        inv = QRational._trusted(ONE_POLY, q_factorial(n))
        total = elem_add(total, elem_scale(power, inv))
    return TruncatedSeries(total, order)


def exp_q_series_horner(arg, order: int) -> TruncatedSeries:
    """Nested form ``1 + arg/(1)_q (1 + arg/(2)_q (1 + ...))``; must agree with ``exp_q_series``."""
    if isinstance(arg, TruncatedSeries):
        arg, order = arg.body, min(order, arg.order)
    arg = PlaneElement.coerce(arg).truncate(order)
    _check_argument(arg)
    acc = ONE_ELEMENT
    for n in range(order, 0, -1):
        step = elem_mul(arg, acc, max_degree=order)
        acc = elem_add(ONE_ELEMENT, elem_scale(step, QRational._trusted(ONE_POLY, q_integer(n))))
    return TruncatedSeries(acc, order)


def specialize_series(s: TruncatedSeries, r) -> dict[NormalMonomial, Fraction]:
    """Evaluate every coefficient at q = r; raises ``PoleAtSpecialization``."""
    return specialize(s.body, r)


def verify_theorem2(order: int, reverse: bool = False) -> VerificationReport:
    """Check ``exp_q(x + y) = exp_q(x) exp_q(y)`` coefficientwise up to ``order``.

    Also checks the closed form ``1 / ((k!)_q (l!)_q)`` for the coefficient of
    ``x^k y^l`` on the left. ``reverse=True`` multiplies ``exp_q(y) exp_q(x)``
    instead, which must fail for order >= 2.
    """
    report = VerificationReport("theorem2", order)
    start = time.perf_counter()
    left = exp_q_series(X + Y, order)
    ex, ey = exp_q_series(X, order), exp_q_series(Y, order)
    right = series_mul(ey, ex) if reverse else series_mul(ex, ey)
    diff = series_sub(left, right)
    by_degree: dict[int, list[dict]] = {d: [] for d in range(order + 1)}
    for m, c in diff.body.terms():
        by_degree[m.degree].append(
            {"check": "difference", "xexp": m.xexp, "yexp": m.yexp, "value": str(c)}
        )
    for d in range(order + 1):
        for k in range(d, -1, -1):
            l = d - k
            expected = QRational._trusted(ONE_POLY, q_factorial(k) * q_factorial(l))
            got = left.coefficient(k, l)
            if got != expected:
                by_degree[d].append(
                    {
                        "check": "closed_form",
                        "xexp": k,
                        "yexp": l,
                        "left": str(got),
                        "right": str(expected),
                    }
                )
    for d in range(order + 1):
        report.failures.extend(by_degree[d])
        report.cases.append({"degree": d, "status": "fail" if by_degree[d] else "pass"})
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report
