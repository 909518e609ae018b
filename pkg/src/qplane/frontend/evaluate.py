"""Bottom-up evaluation of expression trees into canonical form."""

from __future__ import annotations

from ..coeffring import Q_POLY, QRational
from ..errors import DivisionByZero, EvaluationError, MissingOrder
from ..qseries import TruncatedSeries, exp_q_series, series_from_element
from ..quantumplane import X, Y, PlaneElement, elem_add, elem_mul, elem_pow, elem_scale, elem_sub
from .expr import Add, Div, ExpQ, ExprNode, IntLit, Mul, Pow, RatLit, Sub, Var, contains_expq

__all__ = ["evaluate"]

_VARS = {
    "x": X,
    "y": Y,
    "q": PlaneElement.scalar(QRational.coerce(Q_POLY)),
}


def evaluate(e: ExprNode, order: int | None = None) -> PlaneElement | TruncatedSeries:
    """Evaluate ``e``; expressions with ``exp_q`` need ``order`` and give a series.

    Without ``exp_q`` the result is an exact ``PlaneElement`` even when an
    order is supplied.
    """
    if contains_expq(e):
        if order is None:
            raise MissingOrder("expression contains exp_q; a truncation order is required")
        if order < 0:
            raise ValueError(f"truncation order must be natural, got {order}")
        # truncation is a ring map for the total-degree grading, so truncate eagerly
        return TruncatedSeries(_eval(e, order), order)
    return _eval(e, None)


def _scalar_of(value: PlaneElement) -> QRational:
    if not value.is_scalar():
        raise EvaluationError(f"can only divide by an expression free of x and y, got {value}")
    c = value.constant_term()
    if not c:
        raise DivisionByZero("division by zero")
    return c


def _eval(e: ExprNode, order: int | None) -> PlaneElement:
    if isinstance(e, Var):
        return _VARS[e.name] if order is None else _VARS[e.name].truncate(order)
    if isinstance(e, IntLit):
        return PlaneElement.scalar(e.value)
    if isinstance(e, RatLit):
        return PlaneElement.scalar(e.value)
    if isinstance(e, Add):
        return elem_add(_eval(e.left, order), _eval(e.right, order))
    if isinstance(e, Sub):
        return elem_sub(_eval(e.left, order), _eval(e.right, order))
    if isinstance(e, Mul):
        return elem_mul(_eval(e.left, order), _eval(e.right, order), max_degree=order)
    if isinstance(e, Div):
        divisor = _scalar_of(_eval(e.right, order))
        return elem_scale(_eval(e.left, order), divisor.reciprocal())
    if isinstance(e, Pow):
        base = _eval(e.base, order)
        if order is None:
            return elem_pow(base, e.exponent)
        result = PlaneElement.scalar(1)
        for _ in range(e.exponent):
            result = elem_mul(result, base, max_degree=order)
            if result.is_zero():
                break
        return result
    if isinstance(e, ExpQ):
        return exp_q_series(series_from_element(_eval(e.argument, order), order), order).body
    raise TypeError(f"not an expression node: {e!r}")
