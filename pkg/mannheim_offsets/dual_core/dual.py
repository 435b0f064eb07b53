"""
Dual numbers λ + ελ* with ε² = 0.

Components may be Python floats or numpy arrays of equal shape, so one
DualScalar can carry a whole batch of samples along a curve.
"""

import logging
from collections.abc import Callable
from dataclasses import dataclass
from typing import Any, Union

import numpy as np
from numpy.typing import ArrayLike

from mannheim_offsets.shared import config
from mannheim_offsets.shared.errors import DomainError, ZeroDivisorError

logger = logging.getLogger(__name__)

Number = Union[float, int, np.floating[Any], np.ndarray]
DualLike = Union["DualScalar", float, int]


def _is_operand(value: object) -> bool:
    """Dual numbers, real scalars and sample arrays; anything else defers to its own operator."""
    return isinstance(value, (DualScalar, int, float, np.number, np.ndarray))


@dataclass(frozen=True)
class DualScalar:
    """A dual number; ``real`` is λ and ``dual`` is λ*."""

    real: Number
    dual: Number = 0.0

    # ndarray op DualScalar defers to the reflected dual operator
    __array_ufunc__ = None

    @classmethod
    def of(cls, value: DualLike) -> "DualScalar":
        """Promote a real number to a dual number with zero dual part."""
        if isinstance(value, DualScalar):
            return value
        return cls(value, 0.0)

    @classmethod
    def variable(cls, value: Number) -> "DualScalar":
        """x + ε·1, the seed for forward-mode differentiation."""
        return cls(value, np.ones_like(value, dtype=float) if np.ndim(value) else 1.0)

    # --- arithmetic --------------------------------------------------------

    def __add__(self, other: DualLike) -> "DualScalar":
        if not _is_operand(other):
            return NotImplemented
        return add(self, DualScalar.of(other))

    __radd__ = __add__

    def __sub__(self, other: DualLike) -> "DualScalar":
        if not _is_operand(other):
            return NotImplemented
        o = DualScalar.of(other)
        return DualScalar(self.real - o.real, self.dual - o.dual)

    def __rsub__(self, other: DualLike) -> "DualScalar":
        if not _is_operand(other):
            return NotImplemented
        return DualScalar.of(other) - self

    def __neg__(self) -> "DualScalar":
        return DualScalar(-self.real, -self.dual)

    def __mul__(self, other: DualLike) -> "DualScalar":
        if not _is_operand(other):
            return NotImplemented
        return mul(self, DualScalar.of(other))

    __rmul__ = __mul__

    def __truediv__(self, other: DualLike) -> "DualScalar":
        if not _is_operand(other):
            return NotImplemented
        return div(self, DualScalar.of(other))

    def __rtruediv__(self, other: DualLike) -> "DualScalar":
        if not _is_operand(other):
            return NotImplemented
        return div(DualScalar.of(other), self)

    def __pow__(self, n: int) -> "DualScalar":
        # (a + εb)^n = a^n + ε n a^(n-1) b
        return DualScalar(self.real**n, n * self.real ** (n - 1) * self.dual)

    # --- helpers -----------------------------------------------------------

    def conjugate(self) -> "DualScalar":
        return DualScalar(self.real, -self.dual)

    def isclose(self, other: DualLike, tol: float = 1e-9) -> bool:
        """Componentwise absolute comparison (all samples for array components)."""
        o = DualScalar.of(other)
        return bool(
            np.all(np.abs(np.subtract(self.real, o.real)) <= tol)
            and np.all(np.abs(np.subtract(self.dual, o.dual)) <= tol)
        )

    def at(self, index: Any) -> "DualScalar":
        """Select samples from array-valued components."""
        return DualScalar(np.asarray(self.real)[index], np.asarray(self.dual)[index])

    def as_tuple(self) -> tuple[float, float]:
        return float(self.real), float(self.dual)

    def __repr__(self) -> str:
        return f"DualScalar({self.real!r} + ε{self.dual!r})"


def add(a: DualScalar, b: DualScalar) -> DualScalar:
    """(λ+β) + ε(λ*+β*)"""
    return DualScalar(a.real + b.real, a.dual + b.dual)


def mul(a: DualScalar, b: DualScalar) -> DualScalar:
    """λβ + ε(λβ* + λ*β)"""
    return DualScalar(a.real * b.real, a.real * b.dual + a.dual * b.real)


def div(a: DualScalar, b: DualScalar) -> DualScalar:
    """
    Dual quotient (λ/β) + ε(λ*β − λβ*)/β².

    Raises:
        ZeroDivisorError: if the divisor is pure dual (|β| below tolerance)
    """
    if np.any(np.abs(b.real) < config.ZERO_DIVISOR_TOLERANCE):
        raise ZeroDivisorError(f"divisor has vanishing real part: {b!r}")
    return DualScalar(a.real / b.real, (a.dual * b.real - a.real * b.dual) / (b.real * b.real))


def lift(f: Callable[[Any], Any], fprime: Callable[[Any], Any], x: DualLike) -> DualScalar:
    """
    Extend an analytic real function to dual numbers.

    f(x + εx*) = f(x) + εx* f′(x)

    Args:
        f: real function
        fprime: its derivative
        x: dual argument

    Returns:
        the lifted value
    """
    d = DualScalar.of(x)
    with np.errstate(divide="raise", invalid="raise", over="raise"):
        try:
            real = f(d.real)
            slope = fprime(d.real)
        except (FloatingPointError, ValueError, ZeroDivisionError) as e:
            raise DomainError(f"function undefined at {d.real!r}: {e}") from e
    if not np.all(np.isfinite(real)) or not np.all(np.isfinite(slope)):
        raise DomainError(f"function undefined at {d.real!r}")
    return DualScalar(real, d.dual * slope)


# =============================================================================
# Lifted catalog
# =============================================================================


def _require(condition: Any, message: str) -> None:
    if not np.all(condition):
        raise DomainError(message)


def sin(x: DualLike) -> DualScalar:
    return lift(np.sin, np.cos, x)


def cos(x: DualLike) -> DualScalar:
    return lift(np.cos, lambda t: -np.sin(t), x)


def tan(x: DualLike) -> DualScalar:
    return lift(np.tan, lambda t: 1.0 / np.cos(t) ** 2, x)


def sinh(x: DualLike) -> DualScalar:
    return lift(np.sinh, np.cosh, x)


def cosh(x: DualLike) -> DualScalar:
    return lift(np.cosh, np.sinh, x)


def sqrt(x: DualLike) -> DualScalar:
    d = DualScalar.of(x)
    _require(np.asarray(d.real) > 0, f"sqrt needs a positive real part, got {d.real!r}")
    return lift(np.sqrt, lambda t: 0.5 / np.sqrt(t), d)


def arccos(x: DualLike) -> DualScalar:
    d = DualScalar.of(x)
    _require(np.abs(d.real) < 1.0, f"arccos needs |real| < 1, got {d.real!r}")
    return lift(np.arccos, lambda t: -1.0 / np.sqrt(1.0 - t * t), d)


def arccosh(x: DualLike) -> DualScalar:
    d = DualScalar.of(x)
    _require(np.asarray(d.real) > 1.0, f"arccosh needs real > 1, got {d.real!r}")
    return lift(np.arccosh, lambda t: 1.0 / np.sqrt(t * t - 1.0), d)


def arcsinh(x: DualLike) -> DualScalar:
    return lift(np.arcsinh, lambda t: 1.0 / np.sqrt(t * t + 1.0), x)


def atan2(y: DualLike, x: DualLike) -> DualScalar:
    """Dual analog of atan2: angle of (x, y) with derivative (x dy − y dx)/(x² + y²)."""
    a = DualScalar.of(y)
    b = DualScalar.of(x)
    r2 = np.asarray(b.real) ** 2 + np.asarray(a.real) ** 2
    _require(r2 > 0, "atan2 undefined at the origin")
    return DualScalar(np.arctan2(a.real, b.real), (b.real * a.dual - a.real * b.dual) / r2)


def exp(x: DualLike) -> DualScalar:
    return lift(np.exp, np.exp, x)


def as_dual(real: ArrayLike, dual: ArrayLike) -> DualScalar:
    """Build a batch DualScalar from two arrays."""
    return DualScalar(np.asarray(real, dtype=float), np.asarray(dual, dtype=float))
