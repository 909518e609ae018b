"""Text and JSON output for evaluation results.

JSON for an element or series::

    {"terms": [{"xexp": k, "yexp": l, "num": "<poly>", "den": "<poly>"}, ...]}

terms in display order, polynomials in canonical text form. A series adds
``"order"``; a specialised result uses the same layout with integer
``num``/``den`` strings and adds ``"q"``.
"""

from __future__ import annotations

import json
from fractions import Fraction

from ..coeffring import QPolynomial, QRational
from ..qseries import TruncatedSeries
from ..quantumplane import NormalMonomial, PlaneElement, element_to_text, monomial_to_text

__all__ = ["render", "render_specialized", "render_polynomial", "TEXT", "JSON"]

TEXT = "text"
JSON = "json"


def _element_terms(e: PlaneElement) -> list[dict]:
    return [
        {"xexp": m.xexp, "yexp": m.yexp, "num": str(c.num), "den": str(c.den)}
        for m, c in e.terms()
    ]


def render(result, fmt: str = TEXT) -> str:
    """Render a ``PlaneElement``, ``TruncatedSeries``, ``QRational`` or ``QPolynomial``."""
    if isinstance(result, QPolynomial):
        result = QRational.coerce(result)
    if isinstance(result, QRational):
        result = PlaneElement.scalar(result)
    if isinstance(result, TruncatedSeries):
        if fmt == JSON:
            return json.dumps({"order": result.order, "terms": _element_terms(result.body)})
        return element_to_text(result.body)
    if isinstance(result, PlaneElement):
        if fmt == JSON:
            return json.dumps({"terms": _element_terms(result)})
        return element_to_text(result)
    raise TypeError(f"cannot render {type(result).__name__}")


def _fraction_text(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def render_specialized(values: dict[NormalMonomial, Fraction], q, fmt: str = TEXT) -> str:
    """Render a q-specialised result, e.g. ``1/2*x^2 + x + 1``."""
    items = sorted(values.items(), key=lambda mv: (-mv[0].xexp, -mv[0].yexp))
    if fmt == JSON:
        return json.dumps(
            {
                "q": _fraction_text(Fraction(q)),
                "terms": [
                    {
                        "xexp": m.xexp,
                        "yexp": m.yexp,
                        "num": str(v.numerator),
                        "den": str(v.denominator),
                    }
                    for m, v in items
                ],
            }
        )
    parts = []
    for m, v in items:
        if not v:
            continue
        neg = v < 0
        a = -v if neg else v
        mono = monomial_to_text(m)
        if not mono:
            body = _fraction_text(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_fraction_text(a)}*{mono}"
        if not parts:
            parts.append("-" + body if neg else body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts) if parts else "0"


def render_polynomial(p: QPolynomial, fmt: str = TEXT, **meta) -> str:
    if fmt == JSON:
        return json.dumps({**meta, "poly": str(p), "coeffs": list(p.coeffs)})
    return str(p)
