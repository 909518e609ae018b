"""q-integers, q-factorials and Gaussian binomial coefficients.

Gaussian binomials are computed two ways. The production path is the
triangular recurrence

    [n, k] = [n-1, k] + q^(n-k) [n-1, k-1],    [n, 0] = [n, n] = 1,

memoised in a :class:`QBinomialTable`. The factorial quotient
``(n!)_q / ((k!)_q ((n-k)!)_q)`` is kept as an independent check.

Conventions: ``(0)_q = 0`` (empty sum) and ``(0!)_q = 1`` (empty product).
"""

from __future__ import annotations

import threading
from functools import lru_cache
from typing import NamedTuple

from .coeffring import ONE_POLY, QPolynomial, poly_eval, poly_exact_div
from .errors import InvariantViolation, NotDivisible, OutOfRange

__all__ = [
    "q_integer",
    "q_factorial",
    "q_binomial",
    "q_binomial_quotient",
    "q_binomial_recurrence",
    "q_binomial_check_symmetry",
    "pascal_degeneration",
    "QBinomialTable",
    "SymmetryViolation",
    "default_table",
]


def _check_nk(n: int, k: int) -> None:
    if n < 0 or k < 0 or k > n:
        raise OutOfRange(f"need 0 <= k <= n, got n={n}, k={k}")


def q_integer(k: int) -> QPolynomial:
    """``(k)_q = 1 + q + ... + q^(k-1)``."""
    if k < 0:
        raise OutOfRange(f"q-integer of negative k={k}")
    return QPolynomial._trusted((1,) * k)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> QPolynomial:
    """``(n!)_q = (1)_q (2)_q ... (n)_q``."""
    if n < 0:
        raise OutOfRange(f"q-factorial of negative n={n}")
    if n == 0:
        return ONE_POLY
    return q_factorial(n - 1) * q_integer(n)


def q_binomial_quotient(n: int, k: int) -> QPolynomial:
    """Gaussian binomial as the exact quotient of q-factorials."""
    _check_nk(n, k)
    den = q_factorial(k) * q_factorial(n - k)
    try:
        return poly_exact_div(q_factorial(n), den)
    except NotDivisible as exc:
        raise InvariantViolation(
            f"(n!)_q / ((k!)_q ((n-k)!)_q) left a remainder for n={n}, k={k}"
        ) from exc


class QBinomialTable:
    """Triangle of Gaussian binomials filled row by row by the recurrence.

    Rows are only ever appended, under a lock, so a table may be shared;
    stored polynomials are immutable.
    """

    def __init__(self, n_max: int = 0):
        self._rows: list[tuple[QPolynomial, ...]] = [(ONE_POLY,)]
        self._lock = threading.Lock()
        self.ensure(n_max)

    @property
    def n_max(self) -> int:
        return len(self._rows) - 1

    def ensure(self, n_max: int) -> QBinomialTable:
        if n_max < len(self._rows):
            return self
        with self._lock:
            rows = self._rows
            while len(rows) <= n_max:
                n = len(rows)
                prev = rows[-1]
                row = [ONE_POLY]
                for k in range(1, n):
                    row.append(prev[k] + prev[k - 1].shift(n - k))
                row.append(ONE_POLY)
                rows.append(tuple(row))
        return self

    def __getitem__(self, nk: tuple[int, int]) -> QPolynomial:
        n, k = nk
        _check_nk(n, k)
        if n > self.n_max:
            raise KeyError(f"row {n} not filled (n_max={self.n_max})")
        return self._rows[n][k]

    def row(self, n: int) -> tuple[QPolynomial, ...]:
        return self._rows[n]

    def entries(self):
        """Iterate ``((n, k), polynomial)`` over the stored triangle."""
        for n, row in enumerate(self._rows):
            for k, p in enumerate(row):
                yield (n, k), p

    def with_entry(self, n: int, k: int, value: QPolynomial) -> QBinomialTable:
        """Copy of this table with one entry replaced (used to test the checkers)."""
        _check_nk(n, k)
        clone = QBinomialTable.__new__(QBinomialTable)
        clone._lock = threading.Lock()
        clone._rows = list(self._rows)
        row = list(clone._rows[n])
        row[k] = value
        clone._rows[n] = tuple(row)
        return clone


_default_table = QBinomialTable()


def default_table() -> QBinomialTable:
    return _default_table


def q_binomial_recurrence(n: int, k: int, table: QBinomialTable | None = None) -> QPolynomial:
    _check_nk(n, k)
    table = _default_table if table is None else table
    return table.ensure(n)[n, k]


def q_binomial(n: int, k: int) -> QPolynomial:
    """Gaussian binomial ``[n, k]_q`` from the shared recurrence table."""
    return q_binomial_recurrence(n, k)


class SymmetryViolation(NamedTuple):
    n: int
    k: int
    mirror: int


def q_binomial_check_symmetry(n_max: int, table: QBinomialTable | None = None) -> list[SymmetryViolation]:
    """Compare ``[n, k]`` with ``[n, n-k]`` for every stored ``n <= n_max``.

    Each offending unordered pair is reported once, smaller ``k`` first.
    """
    table = _default_table if table is None else table
    table.ensure(n_max)
    violations = []
    for n in range(n_max + 1):
        row = table.row(n)
        for k in range((n + 1) // 2):
            if row[k] != row[n - k]:
                violations.append(SymmetryViolation(n, k, n - k))
    return violations


def pascal_degeneration(n: int, k: int) -> int:
    """``[n, k]`` at q = 1, which should be the ordinary binomial coefficient."""
    _check_nk(n, k)
    return poly_eval(q_binomial(n, k), 1)
