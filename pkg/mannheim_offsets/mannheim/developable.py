"""
Mannheim offsets of developable bases.

On a developable base the frame {q, h, a} is the Frenet frame {T, N, B} of
the striction line α, k₁ is its curvature and τ_α = −k₂ its torsion (per
arc length). With the curvature-integral angle (θ′ = −κ, θ*′ = 0) the offset
drall is

    δ_{q₁} = (sin θ − θ* τ_α cos θ) / (τ_α sin θ),

so the offset is developable exactly where sin θ − θ* τ_α cos θ vanishes.
"""

import logging

import numpy as np
from numpy.typing import ArrayLike, NDArray

from mannheim_offsets.invariants import pitch, quadrature_nodes
from mannheim_offsets.lorentz3 import cross, euclidean_norm
from mannheim_offsets.mannheim.angle import SPECIAL_ANGLE_TOLERANCE
from mannheim_offsets.mannheim.offset import MannheimPair
from mannheim_offsets.ruled_surface import RuledSurface, drall, frame_data, max_drall
from mannheim_offsets.ruled_surface.geometry import per_arc_length
from mannheim_offsets.shared import config
from mannheim_offsets.shared.errors import (
    ConditionNotMetError,
    DomainError,
    NotClosedError,
    NotDevelopableError,
    RightAngleDegenerateError,
)
from mannheim_offsets.shared.models import CheckRow, VerificationReport
from mannheim_offsets.shared.numerics import simpson

logger = logging.getLogger(__name__)

Array = NDArray[np.float64]

# |τ_α| below this makes the closed-form drall meaningless
TORSION_TOLERANCE = 1e-12


def _require_developable(surf: RuledSurface) -> None:
    worst = max_drall(surf)
    if worst > config.DEVELOPABLE_TOLERANCE:
        raise NotDevelopableError(f"{surf.name or 'base'} is not developable: max |δ| = {worst:.3e}")


def developability_condition(theta: ArrayLike, theta_star: ArrayLike, tau_alpha: ArrayLike) -> Array:
    """sin θ − θ* τ_α cos θ"""
    t = np.asarray(theta, dtype=float)
    star = np.asarray(theta_star, dtype=float)
    return np.asarray(np.sin(t) - star * np.asarray(tau_alpha, dtype=float) * np.cos(t))


def offset_drall_formula(theta: ArrayLike, theta_star: ArrayLike, tau_alpha: ArrayLike) -> Array:
    """
    Closed-form δ_{q₁} = (sin θ − θ* τ_α cos θ) / (τ_α sin θ).

    Raises:
        RightAngleDegenerateError: sin θ vanishes (pole of the formula)
        DomainError: τ_α vanishes
    """
    t = np.asarray(theta, dtype=float)
    tau = np.asarray(tau_alpha, dtype=float)
    if np.any(np.abs(np.sin(t)) < SPECIAL_ANGLE_TOLERANCE):
        raise RightAngleDegenerateError("the offset drall formula has a pole at sin θ = 0")
    if np.any(np.abs(tau) < TORSION_TOLERANCE):
        raise DomainError("the offset drall formula needs a nonzero torsion τ_α")
    return developability_condition(t, theta_star, tau) / (tau * np.sin(t))


def tau_alpha(surf: RuledSurface, s: ArrayLike) -> Array:
    """Torsion of the striction line, −k₂ per arc length."""
    data = frame_data(surf, s)
    return -data.k2 / per_arc_length(data)


def offset_drall(pair: MannheimPair, s: ArrayLike | None = None) -> Array:
    """
    Closed-form drall of the offset at s (default: the probe points).

    Valid for the curvature-integral offset angle θ̄ = θ̄₀ − ∫k̄₁.

    Raises:
        NotDevelopableError: the base is not developable
        RightAngleDegenerateError: sin θ vanishes at some s
    """
    _require_developable(pair.base_surface)
    x = pair.probes() if s is None else np.asarray(s, dtype=float)
    angle = pair.offset_angle(x)
    return offset_drall_formula(angle.real, angle.dual, tau_alpha(pair.base_surface, x))


def offset_pitch_developable(
    base: RuledSurface, theta: float, theta_star: float, nodes: int | None = None
) -> float:
    """
    ℓ_{q₁} = −∮(cos θ + θ* τ_α sin θ) du over the striction arc length u.

    Raises:
        NotClosedError: the base is open
        NotDevelopableError: the base is not developable
    """
    if not base.closed:
        raise NotClosedError("the developable offset pitch needs a closed base")
    _require_developable(base)
    s = quadrature_nodes(base, nodes)
    data = frame_data(base, s)
    # τ_α du = −k₂ ds
    integrand = np.cos(theta) * data.rate + theta_star * (-data.k2) * np.sin(theta)
    return -float(simpson(integrand, s))


def _unit(x: Array) -> Array:
    return x / euclidean_norm(x)[..., np.newaxis]


def _parallel_residual(x: Array, y: Array) -> float:
    """max Euclidean sine of the angle between x and y over the samples."""
    return float(np.max(euclidean_norm(cross(_unit(x), _unit(y)))))


def _follows_curvature(pair: MannheimPair, s: Array) -> bool:
    """θ′ = −k₁ and θ*′ = −k₁* at s (raw rates)."""
    data = frame_data(pair.base_surface, s)
    rate = pair.offset_angle.rate(s)
    residual = max(
        float(np.max(np.abs(np.asarray(rate.real) + data.k1))),
        float(np.max(np.abs(np.asarray(rate.dual) + data.k1_dual))),
    )
    return residual < config.VERIFY_TOLERANCE


def _residual_row(name: str, residual: float, tol: float, note: str = "") -> CheckRow:
    return CheckRow(
        name=name,
        lhs_real=residual,
        rhs_real=0.0,
        residual=residual,
        passed=bool(np.isfinite(residual) and residual < tol),
        note=note,
    )


def striction_mannheim_check(pair: MannheimPair, s: ArrayLike | None = None) -> VerificationReport:
    """
    The striction lines of a developable pair are Mannheim partner curves.

    The principal normal of β (the offset's central normal h₁) must be
    parallel to the binormal of α (the base's asymptotic normal a), and the
    offset must be developable with striction line β.

    Raises:
        NotDevelopableError: the base is not developable
        ConditionNotMetError: sin θ − θ* τ_α cos θ exceeds the developable tolerance
    """
    _require_developable(pair.base_surface)
    tol = config.VERIFY_TOLERANCE
    x = pair.probes() if s is None else np.asarray(s, dtype=float)
    base = frame_data(pair.base_surface, x)
    angle = pair.offset_angle(x)
    theta, theta_star = np.asarray(angle.real, dtype=float), np.asarray(angle.dual, dtype=float)

    report = VerificationReport(title=f"striction lines of {pair.offset_surface.name}")
    if np.all(np.abs(theta) < SPECIAL_ANGLE_TOLERANCE) and np.all(np.abs(theta_star) < SPECIAL_ANGLE_TOLERANCE):
        offset = frame_data(pair.offset_surface, x)
        residual = float(np.max(np.abs(offset.striction - base.striction)))
        report.rows.append(_residual_row("coincident surfaces: offset striction = base striction", residual, tol))
        return report

    condition = developability_condition(theta, theta_star, tau_alpha(pair.base_surface, x))
    worst = float(np.max(np.abs(condition)))
    if worst > config.DEVELOPABLE_TOLERANCE:
        raise ConditionNotMetError(f"sin θ − θ* τ_α cos θ reaches {worst:.3e}; the offset is not developable")

    offset = frame_data(pair.offset_surface, x)
    beta = base.striction - theta_star[..., np.newaxis] * base.a
    report.rows.extend(
        [
            _residual_row(
                "principal normal of β ∥ binormal of α",
                _parallel_residual(offset.h, base.a),
                tol,
                note="Euclidean sine of the angle between h₁ and a",
            ),
            _residual_row(
                "tangent of β ∥ offset ruling",
                _parallel_residual(offset.dstriction, offset.q),
                tol,
                note="Euclidean sine of the angle between β′ and q₁",
            ),
            _residual_row(
                "offset striction = β = α − θ* a",
                float(np.max(np.abs(offset.striction - beta))),
                tol,
            ),
            _residual_row("offset drall vanishes", float(np.max(np.abs(drall(pair.offset_surface, x)))), tol),
        ]
    )
    logger.info(f"{report.title}: passed={report.passed}")
    return report


def developable_report(pair: MannheimPair, nodes: int | None = None) -> VerificationReport:
    """
    Closed-form offset drall and pitch against direct computation on the offset.

    Raises:
        NotDevelopableError: the base is not developable
    """
    _require_developable(pair.base_surface)
    tol = config.VERIFY_TOLERANCE
    x = pair.probes()
    report = VerificationReport(title=f"developable base {pair.base_surface.name}")
    theta = np.asarray(pair.offset_angle(x).real, dtype=float)
    if _follows_curvature(pair, x) and np.all(np.abs(np.sin(theta)) >= SPECIAL_ANGLE_TOLERANCE):
        closed_form = offset_drall(pair, x)
        direct = drall(pair.offset_surface, x)
        i = int(np.argmax(np.abs(closed_form - direct)))
        report.rows.append(
            CheckRow.compare(
                "δ_q1 = (sin θ − θ*τ_α cos θ)/(τ_α sin θ)",
                (float(direct[i]), 0.0),
                (float(closed_form[i]), 0.0),
                tol,
                note=f"worst probe s={x[i]:.6g}",
            )
        )

    profile = pair.offset_angle
    if pair.base_surface.closed and profile.is_constant:
        angle = profile(pair.base_surface.span[0])
        th, ts = float(angle.real), float(angle.dual)
        closed_form_pitch = offset_pitch_developable(pair.base_surface, th, ts, nodes)
        direct_pitch = pitch(pair.offset_surface, nodes)
        report.rows.append(
            CheckRow.compare(
                "ℓ_q1 = −∮(cos θ + θ*τ_α sin θ) du",
                (direct_pitch, 0.0),
                (closed_form_pitch, 0.0),
                tol,
            )
        )
    logger.info(f"{report.title}: passed={report.passed}")
    return report
