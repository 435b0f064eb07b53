"""
mannheim コマンド

サブコマンド:
- classify:   曲面の型・可展性・striction 曲線
- invariants: 閉じた曲面の積分不変量
- offset:     Mannheim オフセットを構成し OBJ に書き出す
- verify:     不変量の恒等式と Mannheim オフセットの定理を検証
- mesh:       曲面を OBJ に書き出す

終了コード: 0 成功、2 入力の誤り、3 幾何学的前提条件の違反、4 検証失敗
"""

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any, TextIO

import numpy as np

from mannheim_offsets import __version__
from mannheim_offsets.cli.catalog import (
    PRINTED_OFFSETS,
    SurfaceSpec,
    build_surface,
    deviation_report,
    load_spec,
    offset_angle_from_text,
)
from mannheim_offsets.cli.output import ObjScene, render_table
from mannheim_offsets.invariants import MotionInvariants, compute_invariants, consistency_report
from mannheim_offsets.mannheim import (
    MannheimPair,
    OffsetAngle,
    developable_report,
    mannheim_orientation,
    normal_orthogonality_residual,
    offset_angle_from_curvature,
    partner_residual,
    rotated_frame_residual,
    verify_pitch_relation,
    verify_projection_areas,
)
from mannheim_offsets.ruled_surface import (
    RuledSurface,
    frame_data,
    is_developable,
    max_drall,
    mesh,
)
from mannheim_offsets.shared import config
from mannheim_offsets.shared.errors import GeometryError, MannheimError, UsageError
from mannheim_offsets.shared.models import BuiltinId, CheckRow, SurfaceType, VerificationReport

logger = logging.getLogger(__name__)

# 点ごとの恒等式（回転フレーム、Mannheim 条件）の合格しきい値
POINTWISE_TOLERANCE = 1e-8


# =============================================================================
# Argument helpers
# =============================================================================


def parse_params(items: Sequence[str] | None) -> dict[str, float]:
    """
    --param k=v の列を辞書にする

    Raises:
        UsageError: 形式の誤り
    """
    params: dict[str, float] = {}
    for item in items or []:
        key, sep, value = item.partition("=")
        if not sep or not key.strip():
            raise UsageError(f"--param expects key=value, got {item!r}")
        try:
            params[key.strip()] = float(value)
        except ValueError as e:
            raise UsageError(f"--param {key.strip()} needs a number, got {value!r}") from e
    return params


def resolve_spec(args: argparse.Namespace) -> SurfaceSpec:
    """--builtin / --spec から曲面定義を得る"""
    params = parse_params(args.param)
    if args.builtin and args.spec:
        raise UsageError("use either --builtin or --spec, not both")
    if args.builtin:
        return SurfaceSpec.builtin(args.builtin, params)
    if args.spec:
        return load_spec(Path(args.spec), params)
    raise UsageError("a surface is required: --builtin NAME or --spec FILE")


def resolve_nodes(args: argparse.Namespace) -> int:
    nodes = config.QUADRATURE_NODES if args.nodes is None else args.nodes
    if nodes < config.MIN_QUADRATURE_NODES:
        raise UsageError(f"--nodes must be at least {config.MIN_QUADRATURE_NODES}, got {nodes}")
    return int(nodes)


def resolve_angle(args: argparse.Namespace, spec: SurfaceSpec, base: RuledSurface) -> OffsetAngle:
    """--theta / --theta-star（s の式も可）または --from-curvature の角"""
    if args.from_curvature:
        start = offset_angle_from_text(args.theta, args.theta_star, spec.parameters)(base.span[0])
        return offset_angle_from_curvature(base, float(start.real), float(start.dual))
    return offset_angle_from_text(args.theta, args.theta_star, spec.parameters)


def _emit(rows: list[dict[str, Any]], args: argparse.Namespace, stream: TextIO) -> None:
    stream.write(render_table(rows, args.format))


# =============================================================================
# Commands
# =============================================================================


def cmd_classify(args: argparse.Namespace, stream: TextIO) -> int:
    spec = resolve_spec(args)
    surf = build_surface(spec)
    surface_type = surf.surface_type
    s = surf.probes()
    data = frame_data(surf, s)
    striction_gap = float(np.max(np.abs(data.striction - data.point)))
    rows = [
        {
            "surface": surf.name,
            "type": surface_type.value,
            "developable": is_developable(surf),
            "max_abs_drall": max_drall(surf),
            "striction_is_base": striction_gap < config.UNIT_TOLERANCE,
            "max_striction_gap": striction_gap,
            "closed": surf.closed,
        }
    ]
    _emit(rows, args, stream)
    return 0


def _dual_row(quantity: str, component: str, real: float, dual: float, nodes: int) -> dict[str, Any]:
    return {"quantity": quantity, "component": component, "real": real, "dual": dual, "nodes": nodes}


def invariant_rows(inv: MotionInvariants) -> list[dict[str, Any]]:
    """不変量を (quantity, component, real, dual, nodes) の行にする"""
    n = inv.nodes
    rows = [
        _dual_row("pitch", "", inv.pitch, 0.0, n),
        _dual_row("angle_of_pitch", "", inv.angle_of_pitch, 0.0, n),
        _dual_row("dual_angle_of_pitch", "", *inv.dual_angle_of_pitch.as_tuple(), n),
        _dual_row("spherical_area", "", *inv.spherical_area.as_tuple(), n),
    ]
    for quantity, vector in (("steiner", inv.steiner), ("area_vector", inv.area_vector)):
        for label, value in zip(("x1", "x2", "x3"), vector.components(), strict=True):
            rows.append(_dual_row(quantity, label, *value.as_tuple(), n))
    for quantity, moving in (
        ("moving_steiner", inv.moving_steiner),
        ("moving_area_vector", inv.moving_area_vector),
    ):
        for i, label in enumerate(("q", "h", "a")):
            rows.append(_dual_row(quantity, label, *moving.component(i).as_tuple(), n))
    return rows


def cmd_invariants(args: argparse.Namespace, stream: TextIO) -> int:
    spec = resolve_spec(args)
    nodes = resolve_nodes(args)
    surf = build_surface(spec)
    inv = compute_invariants(surf, nodes)
    rows = [{"surface": surf.name, "type": surf.surface_type.value, **row} for row in invariant_rows(inv)]
    _emit(rows, args, stream)
    return 0


def _pointwise_rows(pair: MannheimPair) -> list[CheckRow]:
    """
    回転フレームと Mannheim 条件の点ごとの残差

    θ̄′ = −k̄₁ を満たさない定数角のオフセットは Mannheim オフセットではないため、
    ã = h̃₁ の行はその旨を note に記して report-only にする。
    """
    rotated = rotated_frame_residual(pair)
    partner = partner_residual(pair)
    normal = normal_orthogonality_residual(pair)
    mannheim = pair.is_mannheim
    if mannheim:
        flips = int(np.count_nonzero(np.diff(mannheim_orientation(pair, pair.probes()))))
        partner_note = f"max over probes; h̃₁ = sign(sin θ k₂)ã, {flips} orientation changes"
    else:
        partner_note = "not a Mannheim offset: θ̄′ ≠ −k̄₁ (rotated-frame offset)"
    rows = []
    for name, residual, enforced, note in (
        ("offset ruling = rotated generator q̃₁", rotated, True, "max over probes"),
        ("ã = h̃₁ (Mannheim condition)", partner, mannheim, partner_note),
        ("⟨dq̃₁/ds, ã₁⟩ = −θ̄′ − k̄₁ = 0", normal, mannheim, "max over probes"),
    ):
        rows.append(
            CheckRow(
                name=name,
                lhs_real=residual,
                rhs_real=0.0,
                residual=residual,
                passed=bool(np.isfinite(residual) and residual < POINTWISE_TOLERANCE),
                enforced=enforced,
                note=note,
            )
        )
    return rows


def _striction_polyline(surf: RuledSurface, samples: int) -> np.ndarray:
    s = np.linspace(surf.span[0], surf.span[1], samples)
    return frame_data(surf, s).striction


def _scene(surfaces: Sequence[RuledSurface], args: argparse.Namespace) -> ObjScene:
    if args.s_samples < 2 or args.v_samples < 2:
        raise UsageError("--s-samples and --v-samples must be at least 2")
    scene = ObjScene()
    v_range = (args.v_min, args.v_max)
    for i, surf in enumerate(surfaces):
        label = f"surface{i}"
        scene.add_mesh(label, mesh(surf, args.s_samples, v_range, args.v_samples))
        try:
            scene.add_polyline(f"{label}_striction", _striction_polyline(surf, args.s_samples))
        except GeometryError as e:
            logger.warning(f"no striction line for {surf.name}: {e}")
    return scene


def _require_out(args: argparse.Namespace) -> Path:
    if not args.out:
        raise UsageError("--out PATH is required")
    return Path(args.out)


def cmd_offset(args: argparse.Namespace, stream: TextIO) -> int:
    spec = resolve_spec(args)
    out = _require_out(args)
    base = build_surface(spec)
    pair = MannheimPair.build(base, resolve_angle(args, spec, base))
    _scene([pair.base_surface, pair.offset_surface], args).write(out)
    report = VerificationReport(title=f"offset of {base.name}", rows=_pointwise_rows(pair))
    _emit(report.to_table(), args, stream)
    return 0


def build_verification(
    spec: SurfaceSpec, base: RuledSurface, angle: OffsetAngle, nodes: int
) -> VerificationReport:
    """verify サブコマンドが出すすべての検証行"""
    report = consistency_report(base, nodes)
    if base.surface_type is not SurfaceType.M1_PLUS:
        return report
    pair = MannheimPair.build(base, angle)
    report = report.extend(VerificationReport(title="", rows=_pointwise_rows(pair)))
    if angle.is_constant and base.closed:
        report = report.extend(verify_pitch_relation(pair, nodes))
        report = report.extend(verify_projection_areas(pair, nodes))
    if is_developable(base):
        report = report.extend(developable_report(pair, nodes))
    if spec.builtin_id in PRINTED_OFFSETS:
        report = report.extend(deviation_report(spec.builtin_id, spec.parameters))
    return report


def cmd_verify(args: argparse.Namespace, stream: TextIO) -> int:
    spec = resolve_spec(args)
    nodes = resolve_nodes(args)
    base = build_surface(spec)
    report = build_verification(spec, base, resolve_angle(args, spec, base), nodes)
    _emit(report.to_table(), args, stream)
    failed = report.failed_rows()
    if failed:
        logger.error(f"{len(failed)} enforced checks failed: {', '.join(r.name for r in failed)}")
        return 4
    return 0


def cmd_mesh(args: argparse.Namespace, stream: TextIO) -> int:
    spec = resolve_spec(args)
    out = _require_out(args)
    surf = build_surface(spec)
    _scene([surf], args).write(out)
    stream.write(f"{out}\n")
    return 0


# =============================================================================
# Parser
# =============================================================================


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mannheim",
        description="Ruled surfaces in Minkowski 3-space and their Mannheim offsets",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    surface = argparse.ArgumentParser(add_help=False)
    surface.add_argument("--builtin", help=f"builtin surface: {', '.join(b.value for b in BuiltinId)}")
    surface.add_argument("--spec", help="surface definition file (key = value)")
    surface.add_argument("--param", action="append", metavar="K=V", help="parameter value, repeatable")
    surface.add_argument("--format", choices=("csv", "json"), default="csv", help="table format")

    nodes = argparse.ArgumentParser(add_help=False)
    nodes.add_argument("--nodes", type=int, default=None, help="Simpson intervals per period (>= 16)")

    angle = argparse.ArgumentParser(add_help=False)
    angle.add_argument("--theta", default="0", help="offset angle θ (number or expression in s)")
    angle.add_argument("--theta-star", default="0", help="offset distance θ* (number or expression in s)")
    angle.add_argument(
        "--from-curvature",
        action="store_true",
        help="use θ̄(s) = θ̄₀ − ∫k̄₁ ds with θ̄₀ = θ + εθ* at the span start",
    )

    geometry = argparse.ArgumentParser(add_help=False)
    geometry.add_argument("--out", help="OBJ output path")
    geometry.add_argument("--s-samples", type=int, default=64, help="samples along s")
    geometry.add_argument("--v-samples", type=int, default=9, help="samples along the ruling")
    geometry.add_argument("--v-min", type=float, default=-1.0)
    geometry.add_argument("--v-max", type=float, default=1.0)

    commands.add_parser("classify", parents=[surface], help="surface type, developability, striction")
    commands.add_parser("invariants", parents=[surface, nodes], help="closed-motion invariants")
    commands.add_parser("offset", parents=[surface, angle, geometry], help="construct and export an offset")
    commands.add_parser("verify", parents=[surface, nodes, angle], help="verify identities and theorems")
    commands.add_parser("mesh", parents=[surface, geometry], help="export a surface mesh")
    return parser


COMMANDS = {
    "classify": cmd_classify,
    "invariants": cmd_invariants,
    "offset": cmd_offset,
    "verify": cmd_verify,
    "mesh": cmd_mesh,
}


def main(argv: Sequence[str] | None = None, stream: TextIO | None = None) -> int:
    """
    エントリーポイント

    Returns:
        終了コード
    """
    logging.basicConfig(
        level=config.LOG_LEVEL,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    args = build_parser().parse_args(argv)
    out = stream or sys.stdout
    try:
        return COMMANDS[args.command](args, out)
    except MannheimError as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
