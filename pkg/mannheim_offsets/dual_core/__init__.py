"""双対数 λ + ελ* の算術と解析関数の持ち上げ"""

from mannheim_offsets.dual_core.dual import (
    DualScalar,
    add,
    arccos,
    arccosh,
    arcsinh,
    as_dual,
    atan2,
    cos,
    cosh,
    div,
    exp,
    lift,
    mul,
    sin,
    sinh,
    sqrt,
    tan,
)

__all__ = [
    "DualScalar",
    "add",
    "arccos",
    "arccosh",
    "arcsinh",
    "as_dual",
    "atan2",
    "cos",
    "cosh",
    "div",
    "exp",
    "lift",
    "mul",
    "sin",
    "sinh",
    "sqrt",
    "tan",
]
