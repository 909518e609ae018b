"""Command-line driver.

Exit codes: 0 success or verified, 1 usage error, 2 evaluation error (parse,
pole, nonzero constant term, ...), 3 verification failure or internal
cross-check mismatch. Results go to stdout and diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction

from ..coeffring import poly_eval
from ..errors import InvariantViolation, QPlaneError
from ..qcombinatorics import q_binomial_quotient, q_binomial_recurrence
from ..qseries import TruncatedSeries, verify_theorem2
from ..quantumplane import NormalMonomial, expand_binomial_theorem, oracle_bound, specialize, verify_theorem1
from .evaluate import evaluate
from .expr import MAX_EXPONENT, parse
from .render import JSON, TEXT, render, render_polynomial, render_specialized

__all__ = ["main", "run", "CliConfig", "UsageError"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_EVAL = 2
EXIT_VERIFY = 3

PROG = "qplane"


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    command: str
    expr: str | None = None
    n: int | None = None
    k: int | None = None
    order: int | None = None
    n_max: int | None = None
    oracle_max: int | None = None
    q_value: Fraction | None = None
    output_format: str = TEXT
    timing: bool = True

    def validate(self) -> None:
        for name in ("n", "k", "order", "n_max", "oracle_max"):
            value = getattr(self, name)
            if value is None:
                continue
            flag = name.replace("_", "-")
            if value < 0:
                raise UsageError(f"{flag} must be a natural number, got {value}")
            if value > MAX_EXPONENT:
                raise UsageError(f"{flag}={value} exceeds the limit {MAX_EXPONENT}")
        if self.oracle_max is not None:
            bound = oracle_bound()
            if self.oracle_max > bound:
                raise UsageError(
                    f"oracle-max={self.oracle_max} exceeds the word-oracle bound {bound} "
                    "(set QPLANE_ORACLE_MAX to raise it)"
                )


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a natural number: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"not a natural number: {text!r}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog=PROG, description="Exact computation on the quantum plane yx = qxy.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add_format(p, default=TEXT):
        p.add_argument("--format", choices=(TEXT, JSON), default=default, dest="output_format")

    p = sub.add_parser("normalize", help="normal-order an expression")
    p.add_argument("expr")
    p.add_argument("--order", type=_natural)
    p.add_argument("--q", type=_rational, dest="q_value")
    add_format(p)

    p = sub.add_parser("qbinom", help="Gaussian binomial coefficient [n, k]_q")
    p.add_argument("n", type=_natural)
    p.add_argument("k", type=_natural)
    p.add_argument("--q", type=_rational, dest="q_value")
    add_format(p)

    p = sub.add_parser("expand", help="sum_k [n, k]_q x^k y^(n-k)")
    p.add_argument("n", type=_natural)
    add_format(p)

    p = sub.add_parser("eval", help="evaluate an expression at a rational q")
    p.add_argument("expr")
    p.add_argument("--q", type=_rational, dest="q_value", required=True)
    p.add_argument("--order", type=_natural)
    add_format(p)

    p = sub.add_parser("verify", help="verify Theorem 1 or Theorem 2")
    which = p.add_subparsers(dest="theorem", parser_class=_Parser)
    t1 = which.add_parser("theorem1")
    t1.add_argument("--n-max", type=_natural, required=True)
    t1.add_argument("--oracle-max", type=_natural, default=None)
    t2 = which.add_parser("theorem2")
    t2.add_argument("--order", type=_natural, required=True)
    for t in (t1, t2):
        add_format(t, default=JSON)
        t.add_argument("--no-timing", action="store_false", dest="timing", help="zero the timing fields")
    return parser


def _config(argv) -> CliConfig:
    ns = _build_parser().parse_args(argv)
    if ns.command is None:
        raise UsageError("a command is required")
    command = ns.command
    if command == "verify":
        if ns.theorem is None:
            raise UsageError("verify needs theorem1 or theorem2")
        command = f"verify-{ns.theorem}"
    fields = {k: v for k, v in vars(ns).items() if k in CliConfig.__dataclass_fields__}
    fields["command"] = command
    config = CliConfig(**fields)
    if command == "verify-theorem1" and config.oracle_max is None:
        config.oracle_max = min(config.n_max, oracle_bound())
    config.validate()
    return config


def _emit_result(result, config: CliConfig, out) -> None:
    if config.q_value is not None:
        body = result.body if isinstance(result, TruncatedSeries) else result
        values = specialize(body, config.q_value)
        out.write(render_specialized(values, config.q_value, config.output_format) + "\n")
    else:
        out.write(render(result, config.output_format) + "\n")


def _execute(config: CliConfig, out) -> int:
    cmd = config.command
    fmt = config.output_format
    if cmd in ("normalize", "eval"):
        result = evaluate(parse(config.expr), config.order)
        _emit_result(result, config, out)
        return EXIT_OK
    if cmd == "qbinom":
        n, k = config.n, config.k
        fast = q_binomial_recurrence(n, k)
        slow = q_binomial_quotient(n, k)
        if fast != slow:
            raise InvariantViolation(f"q-binomial algorithms disagree at n={n}, k={k}: {fast} vs {slow}")
        if config.q_value is not None:
            value = Fraction(poly_eval(fast, config.q_value))
            values = {NormalMonomial(0, 0): value} if value else {}
            out.write(render_specialized(values, config.q_value, fmt) + "\n")
        else:
            out.write(render_polynomial(fast, fmt, n=n, k=k) + "\n")
        return EXIT_OK
    if cmd == "expand":
        out.write(render(expand_binomial_theorem(config.n), fmt) + "\n")
        return EXIT_OK
    if cmd.startswith("verify-"):
        if cmd == "verify-theorem1":
            report = verify_theorem1(config.n_max, config.oracle_max)
        else:
            report = verify_theorem2(config.order)
        if fmt == JSON:
            out.write(report.to_json(timing=config.timing) + "\n")
        else:
            out.write(report.summary() + "\n")
        return EXIT_OK if report.ok else EXIT_VERIFY
    raise UsageError(f"unknown command {cmd!r}")


def main(argv=None, out=None, err=None) -> int:
    """Run one CLI invocation and return its exit code."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        config = _config(sys.argv[1:] if argv is None else list(argv))
    except UsageError as exc:
        err.write(f"{PROG}: usage error: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    try:
        return _execute(config, out)
    except InvariantViolation as exc:
        err.write(f"{PROG}: internal cross-check failed: {exc}\n")
        return EXIT_VERIFY
    except UsageError as exc:
        err.write(f"{PROG}: usage error: {exc}\n")
        return EXIT_USAGE
    except QPlaneError as exc:
        err.write(f"{PROG}: error: {exc}\n")
        return EXIT_EVAL


def run() -> None:
    for stream in (sys.stdout, sys.stderr):
        try:
            stream.reconfigure(encoding="utf-8")
        except AttributeError:
            pass
    sys.exit(main())
