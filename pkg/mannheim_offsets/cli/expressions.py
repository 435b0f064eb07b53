"""
曲線式の文法と評価

式は s とパラメータ名に関する算術式:

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := ('+' | '-') factor | power
    power  := atom (('^' | '**') factor)?
    atom   := number | name | func '(' expr ')' | '(' expr ')'
    func   := sin | cos | tan | sinh | cosh | sqrt | exp

名前は s、pi、定義済みパラメータのみ。字句検査で位置付きの ParseError を
出したあと sympy で構文木を作り、sympy.diff で 1 階・2 階導関数を求めて
numpy 関数に変換する。
"""

import logging
import re
from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass
from tokenize import TokenError

import numpy as np
import sympy as sp
from numpy.typing import ArrayLike, NDArray
from sympy.parsing.sympy_parser import parse_expr, standard_transformations

from mannheim_offsets.ruled_surface import ParamCurve, stack3
from mannheim_offsets.shared.errors import EvaluationError, ParseError

logger = logging.getLogger(__name__)

PARAMETER = sp.Symbol("s", real=True)

FUNCTIONS: dict[str, Callable[..., sp.Expr]] = {
    "sin": sp.sin,
    "cos": sp.cos,
    "tan": sp.tan,
    "sinh": sp.sinh,
    "cosh": sp.cosh,
    "sqrt": sp.sqrt,
    "exp": sp.exp,
}

_TOKEN = re.compile(
    r"(?P<space>\s+)"
    r"|(?P<number>(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>\*\*|[-+*/^()])"
)

_PARSE_GLOBALS = {
    "Integer": sp.Integer,
    "Float": sp.Float,
    "Rational": sp.Rational,
    "Symbol": sp.Symbol,
}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(text: str) -> list[Token]:
    """
    Split an expression into tokens.

    Raises:
        ParseError: unexpected character (position is 1-based)
    """
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", position=pos + 1)
        kind = m.lastgroup or ""
        if kind != "space":
            tokens.append(Token(kind, m.group(), pos + 1))
        pos = m.end()
    return tokens


def validate(text: str, names: Sequence[str]) -> None:
    """
    Check names, bracket balance and operator placement.

    Raises:
        ParseError: with the 1-based column of the offending token
    """
    tokens = tokenize(text)
    if not tokens:
        raise ParseError("empty expression", position=1)
    allowed = {"s", "pi", *names}
    depth = 0
    # True when the previous token ends an operand
    operand = False
    for i, tok in enumerate(tokens):
        if tok.kind == "name":
            if tok.text in FUNCTIONS:
                if operand:
                    raise ParseError(f"missing operator before {tok.text!r}", tok.position)
                following = tokens[i + 1] if i + 1 < len(tokens) else None
                if following is None or following.text != "(":
                    raise ParseError(f"function {tok.text} needs an argument in parentheses", tok.position)
                operand = False
                continue
            if tok.text not in allowed:
                raise ParseError(f"unknown name {tok.text!r}", tok.position)
            if operand:
                raise ParseError(f"missing operator before {tok.text!r}", tok.position)
            operand = True
        elif tok.kind == "number":
            if operand:
                raise ParseError(f"missing operator before {tok.text!r}", tok.position)
            operand = True
        elif tok.text == "(":
            if operand:
                raise ParseError("missing operator before '('", tok.position)
            depth += 1
        elif tok.text == ")":
            if depth == 0:
                raise ParseError("unbalanced ')'", tok.position)
            if not operand:
                raise ParseError("empty or incomplete group", tok.position)
            depth -= 1
        else:
            unary = tok.text in "+-" and not operand
            if not operand and not unary:
                raise ParseError(f"operator {tok.text!r} lacks a left operand", tok.position)
            operand = False
    if depth:
        raise ParseError("unclosed '('", len(text) + 1)
    if not operand:
        raise ParseError("expression ends with an operator", len(text) + 1)


def parse(text: str, parameters: Mapping[str, float] | None = None) -> sp.Expr:
    """
    Parse an expression in s with the given parameter values substituted.

    Raises:
        ParseError: lexical or syntactic error
    """
    params = dict(parameters or {})
    validate(text, list(params))
    local: dict[str, object] = {"s": PARAMETER, "pi": sp.pi, **FUNCTIONS}
    local.update({name: sp.Float(value) for name, value in params.items()})
    try:
        expr = parse_expr(
            text.replace("^", "**"),
            local_dict=local,
            global_dict=dict(_PARSE_GLOBALS),
            transformations=standard_transformations,
        )
    except (SyntaxError, TypeError, TokenError, sp.SympifyError) as e:
        raise ParseError(f"cannot parse {text!r}: {e}") from e
    logger.debug(f"parsed {text!r} as {expr}")
    return sp.sympify(expr)


@dataclass(frozen=True)
class ScalarFunction:
    """A parsed scalar f(s) with f′ and f″ as numpy callables."""

    label: str
    expr: sp.Expr
    value: Callable[[ArrayLike], NDArray[np.float64]]
    d1: Callable[[ArrayLike], NDArray[np.float64]]
    d2: Callable[[ArrayLike], NDArray[np.float64]]

    @property
    def is_constant(self) -> bool:
        return PARAMETER not in self.expr.free_symbols


def _numeric(label: str, expr: sp.Expr) -> Callable[[ArrayLike], NDArray[np.float64]]:
    fn = sp.lambdify(PARAMETER, expr, "numpy")

    def evaluate(s: ArrayLike) -> NDArray[np.float64]:
        x = np.asarray(s, dtype=float)
        with np.errstate(all="ignore"):
            y = np.broadcast_to(np.asarray(fn(x), dtype=float), x.shape).copy()
        if not np.all(np.isfinite(y)):
            raise EvaluationError(label, f"non-finite value of {expr}")
        return y

    return evaluate


def scalar_function(label: str, text: str, parameters: Mapping[str, float] | None = None) -> ScalarFunction:
    """Parse and differentiate a scalar expression."""
    expr = parse(text, parameters)
    first = sp.diff(expr, PARAMETER)
    second = sp.diff(first, PARAMETER)
    return ScalarFunction(label, expr, _numeric(label, expr), _numeric(label, first), _numeric(label, second))


def curve_from_expressions(
    label: str,
    components: Sequence[str],
    parameters: Mapping[str, float] | None = None,
    period: float | None = None,
) -> ParamCurve:
    """
    Curve (x1(s), x2(s), x3(s)) with symbolic first and second derivatives.

    Raises:
        ParseError: a component does not parse or there are not three of them
        EvaluationError: a component evaluates to a non-finite value
    """
    if len(components) != 3:
        raise ParseError(f"{label} needs three components, got {len(components)}")
    parts = [
        scalar_function(f"{label}[{i + 1}]", text, parameters) for i, text in enumerate(components)
    ]

    def value(s: ArrayLike) -> NDArray[np.float64]:
        return stack3(*(p.value(s) for p in parts))

    def d1(s: ArrayLike) -> NDArray[np.float64]:
        return stack3(*(p.d1(s) for p in parts))

    def d2(s: ArrayLike) -> NDArray[np.float64]:
        return stack3(*(p.d2(s) for p in parts))

    return ParamCurve(value, d1, d2, period)


def split_components(text: str) -> list[str]:
    """
    Split "(e1, e2, e3)" or "e1, e2, e3" at top-level commas.

    Raises:
        ParseError: unbalanced parentheses
    """
    body = text.strip()
    if body.startswith("(") and body.endswith(")") and _outer_group(body):
        body = body[1:-1]
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced ')'", position=i + 1)
        elif ch == "," and depth == 0:
            parts.append(body[start:i].strip())
            start = i + 1
    if depth:
        raise ParseError("unclosed '('", position=len(body) + 1)
    parts.append(body[start:].strip())
    return parts


def _outer_group(text: str) -> bool:
    """The first '(' closes at the last character."""
    depth = 0
    for i, ch in enumerate(text):
        depth += ch == "("
        depth -= ch == ")"
        if depth == 0:
            return i == len(text) - 1
    return False
