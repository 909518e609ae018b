"""Parser, evaluator, rendering and CLI for quantum-plane expressions."""

from .cli import CliConfig, main
from .evaluate import evaluate
from .expr import (
    Add,
    Div,
    ExpQ,
    ExprNode,
    IntLit,
    Mul,
    Pow,
    RatLit,
    Sub,
    Var,
    contains_expq,
    parse,
)
from .render import render, render_polynomial, render_specialized

__all__ = [
    "Add",
    "CliConfig",
    "Div",
    "ExpQ",
    "ExprNode",
    "IntLit",
    "Mul",
    "Pow",
    "RatLit",
    "Sub",
    "Var",
    "contains_expq",
    "evaluate",
    "main",
    "parse",
    "render",
    "render_polynomial",
    "render_specialized",
]
