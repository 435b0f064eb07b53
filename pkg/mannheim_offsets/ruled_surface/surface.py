"""
Ruled surface φ(s, v) = k(s) + v q(s).
"""

import logging
from dataclasses import dataclass, replace
from functools import cached_property
from typing import TYPE_CHECKING

import numpy as np
from numpy.typing import ArrayLike, NDArray

from mannheim_offsets.ruled_surface.curves import ParamCurve, normalize
from mannheim_offsets.shared.errors import UsageError
from mannheim_offsets.shared.numerics import probe_points

if TYPE_CHECKING:
    from mannheim_offsets.shared.models import SurfaceType

logger = logging.getLogger(__name__)

# relative agreement required between the base and ruling periods
_PERIOD_MATCH = 1e-12


@dataclass(frozen=True)
class RuledSurface:
    """
    Base curve k and Lorentz-unit ruling q over a parameter span.

    Build instances with ``from_curves`` so the ruling is normalised.
    """

    base: ParamCurve
    ruling: ParamCurve
    span: tuple[float, float]
    name: str = ""

    @classmethod
    def from_curves(
        cls,
        base: ParamCurve,
        ruling: ParamCurve,
        name: str = "",
        span: tuple[float, float] | None = None,
    ) -> "RuledSurface":
        """
        Create a surface, renormalising the ruling to Lorentz unit length.

        Args:
            base: base curve k(s)
            ruling: direction curve q(s), any non-null magnitude
            name: label used in reports
            span: parameter interval; defaults to [0, period] for closed curves

        Returns:
            RuledSurface
        """
        if span is None:
            if base.period is None:
                raise UsageError("an open surface needs an explicit parameter span")
            span = (0.0, float(base.period))
        return cls(base=base, ruling=normalize(ruling), span=(float(span[0]), float(span[1])), name=name)

    @property
    def period(self) -> float | None:
        """Common period of base and ruling, None when the surface is open."""
        tb, tq = self.base.period, self.ruling.period
        if tb is None or tq is None:
            return None
        if abs(tb - tq) > _PERIOD_MATCH * max(1.0, abs(tb)):
            return None
        return float(tb)

    @property
    def closed(self) -> bool:
        return self.period is not None

    def point(self, s: ArrayLike, v: ArrayLike) -> NDArray[np.float64]:
        """φ(s, v) for broadcastable s and v."""
        s_arr, v_arr = np.broadcast_arrays(np.asarray(s, dtype=float), np.asarray(v, dtype=float))
        return self.base.value(s_arr) + v_arr[..., np.newaxis] * self.ruling.value(s_arr)

    def probes(self, count: int | None = None) -> NDArray[np.float64]:
        return probe_points(self.span, self.closed, count)

    def restricted(self, start: float, stop: float) -> "RuledSurface":
        """The same surface over a sub-interval, treated as open."""
        base = replace(self.base, period=None)
        ruling = replace(self.ruling, period=None)
        return RuledSurface(base=base, ruling=ruling, span=(start, stop), name=self.name)

    def reversed(self) -> "RuledSurface":
        """Opposite orientation s ↦ −s."""
        return RuledSurface(
            base=self.base.reversed(),
            ruling=self.ruling.reversed(),
            span=(-self.span[1], -self.span[0]),
            name=f"{self.name} reversed" if self.name else "reversed",
        )

    @cached_property
    def surface_type(self) -> "SurfaceType":
        from mannheim_offsets.ruled_surface.geometry import classify_surface

        return classify_surface(self)
