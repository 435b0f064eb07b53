"""
不変量の整合性チェック

双対ピッチ角・Steiner ベクトル・面積ベクトルの間の恒等式を、独立に求めた
積分どうしで比較して VerificationReport にまとめる。
"""

import logging
import math

from mannheim_offsets.dual_core import DualScalar
from mannheim_offsets.invariants.integrals import (
    Q_AXIS,
    MotionInvariants,
    MovingFrameVector,
    compute_invariants,
)
from mannheim_offsets.ruled_surface import RuledSurface
from mannheim_offsets.shared import config
from mannheim_offsets.shared.models import CheckRow, VerificationReport

logger = logging.getLogger(__name__)

# node doubling must change an invariant by less than this
CONVERGENCE_TOLERANCE = 1e-8

_AXES = ("q", "h", "a")


def vector_row(
    name: str,
    lhs: MovingFrameVector,
    rhs: MovingFrameVector,
    tolerance: float,
    *,
    enforced: bool = True,
    convention: str | None = None,
    note: str = "",
) -> CheckRow:
    """Compare two frame vectors; the row shows the worst component."""
    worst, worst_residual = 0, -1.0
    for i in range(3):
        a, b = lhs.component(i), rhs.component(i)
        residual = max(abs(float(a.real - b.real)), abs(float(a.dual - b.dual)))
        if residual > worst_residual:
            worst, worst_residual = i, residual
    label = f"{note}; " if note else ""
    return CheckRow.compare(
        name,
        lhs.component(worst).as_tuple(),
        rhs.component(worst).as_tuple(),
        tolerance,
        enforced=enforced,
        convention=convention,
        note=f"{label}worst component {_AXES[worst]}",
    )


def _signed_match(lhs: tuple[float, float], rhs: tuple[float, float], tolerance: float) -> str | None:
    for label, sign in (("+", 1.0), ("-", -1.0)):
        if max(abs(lhs[0] - sign * rhs[0]), abs(lhs[1] - sign * rhs[1])) < tolerance:
            return label
    return None


def consistency_report(surf: RuledSurface, nodes: int | None = None) -> VerificationReport:
    """
    Identity checks for one closed surface.

    Enforced:
      - dual part of Λ̄ equals o·ℓ (o = −ε_aε_q);
      - Λ̄ equals −o⟨q̃, d̃⟩ with the moving-frame Steiner vector;
      - Λ̄ equals 2π − ā, ā integrated from the rulings' Plücker coordinates;
      - the integrated area vector equals −ε_q d̃ − oΛ̄ q̃;
      - invariants stable under halving the node count.

    Report-only:
      - λ = ε_q⟨q, d⟩, sign recorded in ``convention``;
      - w̃_q = −d̃ + Λ̄ q̃ as printed in the literature.
    """
    tol = config.VERIFY_TOLERANCE
    n = nodes or config.QUADRATURE_NODES
    inv = compute_invariants(surf, n)
    o = inv.orientation
    report = VerificationReport(title=f"invariants of {surf.name or 'surface'}")
    rows = report.rows

    big = inv.dual_angle_of_pitch
    rows.append(
        CheckRow.compare(
            "dual angle of pitch: dual part = o·pitch",
            (float(big.dual), 0.0),
            (o * inv.pitch, 0.0),
            tol,
        )
    )

    steiner_side = -inv.moving_steiner.inner(Q_AXIS) * o
    rows.append(
        CheckRow.compare(
            "dual angle of pitch = −o⟨q̃, d̃⟩", big.as_tuple(), steiner_side.as_tuple(), tol
        )
    )

    area_side = DualScalar(2.0 * math.pi, 0.0) - inv.spherical_area
    rows.append(
        CheckRow.compare(
            "dual angle of pitch = 2π − spherical area",
            big.as_tuple(),
            area_side.as_tuple(),
            tol,
            note="spherical area from the rulings' Plücker coordinates",
        )
    )

    eps_q = surf.surface_type.signature[0]
    plain = inv.moving_steiner.inner(Q_AXIS) * eps_q
    lhs = (inv.angle_of_pitch, 0.0)
    rhs = (float(plain.real), 0.0)
    rows.append(
        CheckRow.compare(
            "angle of pitch = ε_q⟨q, d⟩",
            lhs,
            rhs,
            tol,
            enforced=False,
            convention=_signed_match(lhs, rhs, tol),
            note="sign in convention column: '-' means λ = −ε_q⟨q, d⟩",
        )
    )

    rows.extend(_area_vector_rows(inv, eps_q, tol))
    rows.extend(convergence_rows(surf, n))
    logger.info(f"consistency report for {surf.name or 'surface'}: passed={report.passed}")
    return report


def _area_vector_rows(inv: MotionInvariants, eps_q: int, tol: float) -> list[CheckRow]:
    """Integrated w̃_q against the Steiner prediction and against the printed form."""
    d = inv.moving_steiner
    q = MovingFrameVector.of(Q_AXIS, d.signature)
    big = inv.dual_angle_of_pitch
    derived = (-d).scaled(eps_q) + q.scaled(-big * inv.orientation)
    printed = (-d) + q.scaled(big)
    # the unsettled sign of ⟨q̃, d̃⟩: read Λ̄ as +o⟨q̃, d̃⟩
    reread = (-d) + q.scaled(-big)
    matched = "Λ̄ = +o⟨q̃, d̃⟩" if inv.moving_area_vector.max_abs_difference(reread) < tol else None
    return [
        vector_row("area vector = −ε_q d̃ − oΛ̄ q̃", inv.moving_area_vector, derived, tol),
        vector_row(
            "area vector = −d̃ + Λ̄ q̃",
            inv.moving_area_vector,
            printed,
            tol,
            enforced=False,
            convention=matched,
            note="as printed",
        ),
    ]


def convergence_rows(surf: RuledSurface, nodes: int) -> list[CheckRow]:
    """Invariants at n and n/2 intervals differ by less than CONVERGENCE_TOLERANCE."""
    fine = compute_invariants(surf, nodes)
    coarse = compute_invariants(surf, max(config.MIN_QUADRATURE_NODES, nodes // 2))
    note = f"{coarse.nodes} vs {fine.nodes} intervals"
    rows = [
        CheckRow.compare(
            "convergence: pitch",
            (coarse.pitch, 0.0),
            (fine.pitch, 0.0),
            CONVERGENCE_TOLERANCE,
            note=note,
        ),
        CheckRow.compare(
            "convergence: dual angle of pitch",
            coarse.dual_angle_of_pitch.as_tuple(),
            fine.dual_angle_of_pitch.as_tuple(),
            CONVERGENCE_TOLERANCE,
            note=note,
        ),
    ]
    for name, a, b in (
        ("convergence: Steiner vector", coarse.steiner, fine.steiner),
        ("convergence: area vector", coarse.area_vector, fine.area_vector),
    ):
        residual = a.max_abs_difference(b)
        rows.append(
            CheckRow(
                name=name,
                lhs_real=residual,
                rhs_real=0.0,
                residual=residual,
                passed=residual < CONVERGENCE_TOLERANCE,
                note=note,
            )
        )
    return rows
