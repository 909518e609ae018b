"""Exact symbolic computation on the quantum plane ``y*x = q*x*y``.

Gaussian binomial coefficients, normal ordering, the q-binomial theorem
``(x + y)^n = sum_k [n, k]_q x^k y^(n-k)`` and the q-exponential identity
``exp_q(x + y) = exp_q(x) exp_q(y)``, all over exact rational functions of q.
"""

from .coeffring import QPolynomial, QRational
from .errors import (
    BothZero,
    DivisionByZero,
    EvaluationError,
    ExponentTooLarge,
    InvariantViolation,
    MissingOrder,
    NonzeroConstantTerm,
    NotDivisible,
    OracleBoundExceeded,
    OutOfRange,
    ParseError,
    PoleAtSpecialization,
    QPlaneError,
)
from .qcombinatorics import (
    QBinomialTable,
    q_binomial,
    q_binomial_quotient,
    q_binomial_recurrence,
    q_factorial,
    q_integer,
)
from .qseries import TruncatedSeries, exp_q_series, series_mul, specialize_series, verify_theorem2
from .quantumplane import (
    X,
    Y,
    NormalMonomial,
    PlaneElement,
    elem_mul,
    elem_pow,
    expand_binomial_theorem,
    verify_theorem1,
    word_oracle_expand,
)

__version__ = "0.1.0"

__all__ = [
    "BothZero",
    "DivisionByZero",
    "EvaluationError",
    "ExponentTooLarge",
    "InvariantViolation",
    "MissingOrder",
    "NonzeroConstantTerm",
    "NormalMonomial",
    "NotDivisible",
    "OracleBoundExceeded",
    "OutOfRange",
    "ParseError",
    "PlaneElement",
    "PoleAtSpecialization",
    "QBinomialTable",
    "QPlaneError",
    "QPolynomial",
    "QRational",
    "TruncatedSeries",
    "X",
    "Y",
    "elem_mul",
    "elem_pow",
    "exp_q_series",
    "expand_binomial_theorem",
    "q_binomial",
    "q_binomial_quotient",
    "q_binomial_recurrence",
    "q_factorial",
    "q_integer",
    "series_mul",
    "specialize_series",
    "verify_theorem1",
    "verify_theorem2",
    "word_oracle_expand",
]
