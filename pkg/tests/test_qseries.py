import math
import random
from fractions import Fraction

import pytest

from qplane.coeffring import QPolynomial, QRational
from qplane.errors import NonzeroConstantTerm, PoleAtSpecialization
from qplane.qcombinatorics import q_factorial
from qplane.qseries import (
    TruncatedSeries,
    exp_q_series,
    exp_q_series_horner,
    series_add,
    series_from_element,
    series_mul,
    specialize_series,
    verify_theorem2,
)
from qplane.quantumplane import ONE_ELEMENT, X, Y, NormalMonomial, PlaneElement, elem_mul

from randgen import rand_element

P = QPolynomial
M = NormalMonomial
ONE_PLUS_Q = P([1, 1])


def test_series_from_element():
    assert series_from_element(X + Y, 0).body.constant_term() == QRational(0)
    assert series_from_element(X + Y, 0).body.is_zero()
    a = PlaneElement({(0, 0): 1, (1, 0): 1, (3, 0): 1})
    assert series_from_element(a, 2).body == PlaneElement({(0, 0): 1, (1, 0): 1})
    assert series_from_element(a, 3).body == a
    assert series_from_element(a, 7).body == a


def test_series_body_must_fit_order():
    with pytest.raises(ValueError):
        TruncatedSeries(X * X, 1)


def test_mixed_orders_truncate_to_smaller():
    a = series_from_element(X + Y, 5)
    b = series_from_element(X * X * X + Y, 2)
    assert series_add(a, b).order == 2
    assert series_mul(a, b).order == 2


def test_exp_q_examples():
    assert exp_q_series(X, 2).body == PlaneElement({(0, 0): 1, (1, 0): 1, (2, 0): QRational(1, ONE_PLUS_Q)})
    for order in (0, 3, 9):
        assert exp_q_series(PlaneElement(), order).body == ONE_ELEMENT
    expected = PlaneElement(
        {
            (0, 0): 1,
            (1, 0): 1,
            (0, 1): 1,
            (2, 0): QRational(1, ONE_PLUS_Q),
            (1, 1): 1,
            (0, 2): QRational(1, ONE_PLUS_Q),
        }
    )
    assert exp_q_series(X + Y, 2).body == expected


def test_exp_q_rejects_constant_term():
    with pytest.raises(NonzeroConstantTerm):
        exp_q_series(X + 1, 3)


@pytest.mark.parametrize("n_max", [0, 5, 12])
def test_single_variable_coefficients(n_max):
    s = exp_q_series(X, n_max)
    for n in range(n_max + 1):
        assert s.coefficient(n, 0) == QRational(1, q_factorial(n))
    assert len(s.body) == n_max + 1


def test_denominators_divide_factorial():
    order = 7
    s = exp_q_series(X + Y, order)
    for m, c in s.body.terms():
        # den | (order!)_q  <=>  (order!)_q / den is a polynomial
        assert (QRational(q_factorial(order)) / QRational(c.den)).is_polynomial()


@pytest.mark.parametrize("arg", [X, X + Y, Y * X, X * Y + Y * Y * 3, X - Y])
def test_horner_matches_direct_sum(arg):
    for order in (0, 1, 4, 8):
        assert exp_q_series_horner(arg, order) == exp_q_series(arg, order)


def test_series_mul_examples():
    ex, ey = exp_q_series(X, 2), exp_q_series(Y, 2)
    assert series_mul(ex, ey).coefficient(1, 1) == QRational(1)
    assert series_mul(ey, ex).coefficient(1, 1) == QRational(P([0, 1]))
    one = series_from_element(ONE_ELEMENT, 2)
    assert series_mul(ex, one) == ex


@pytest.mark.parametrize("seed", range(25))
def test_truncation_coherence(seed):
    rng = random.Random(seed)
    a, b = rand_element(rng), rand_element(rng)
    n = rng.randint(0, 8)
    lhs = series_mul(series_from_element(a, n), series_from_element(b, n))
    assert lhs.body == elem_mul(a, b).truncate(n)


def test_verify_theorem2_examples():
    assert verify_theorem2(0).ok
    report = verify_theorem2(16)
    assert report.ok and report.status == "verified"
    assert len(report.cases) == 17


def test_verify_theorem2_reversed_factors_fail():
    report = verify_theorem2(2, reverse=True)
    assert not report.ok
    assert report.failures == [{"check": "difference", "xexp": 1, "yexp": 1, "value": "1 - q"}]


def test_closed_form_coefficients():
    s = exp_q_series(X + Y, 10)
    for k in range(11):
        for l in range(11 - k):
            assert s.coefficient(k, l) == QRational(1, q_factorial(k) * q_factorial(l))


def test_noncommutativity_witness():
    reversed_product = series_mul(exp_q_series(Y, 2), exp_q_series(X, 2))
    c = reversed_product.coefficient(1, 1)
    assert c == QRational(P([0, 1])) and c != QRational(1)
    assert specialize_series(reversed_product, 1)[M(1, 1)] == 1


def test_specialize_examples():
    s = exp_q_series(X, 2)
    assert specialize_series(s, 1) == {M(0, 0): 1, M(1, 0): 1, M(2, 0): Fraction(1, 2)}
    with pytest.raises(PoleAtSpecialization) as info:
        specialize_series(s, -1)
    assert info.value.monomial == M(2, 0)
    for v in specialize_series(exp_q_series(X + Y, 9), 0).values():
        assert v.denominator == 1


def test_classical_exponential_at_q_one():
    s = exp_q_series(X + Y, 8)
    values = specialize_series(s, 1)
    for k in range(9):
        for l in range(9 - k):
            assert values[M(k, l)] == Fraction(1, math.factorial(k) * math.factorial(l))


def test_series_operators():
    ex = exp_q_series(X, 3)
    assert (ex - ex).is_zero()
    assert (ex * 1) == ex
    # x^2 in (1 + x + x^2/(1+q))^2: 2/(1+q) + 1
    assert (ex ** 2).coefficient(2, 0) == QRational(P([3, 1]), P([1, 1]))
