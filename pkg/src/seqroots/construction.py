"""Compass-and-straightedge realization of one exact complex division.

Given four signed integer counts (u1, v1, u2, v2) with (u2, v2) != (0, 0),
the construction produces the point (u1 - i*v1)/(u2 - i*v2) in the plane,
identifying the point (x, y) with x + i*y:

  * four colored runs of unit segments are laid along the axis from the
    origin A: AB = u1, BC = v1, CD = u2, DE = v2 (signed, so negative counts
    run in the negative direction);
  * BC is rotated clockwise by a right angle about B, giving C' with
    AC' = u1 - i*v1; the denominator counts are re-laid from A (D', then F)
    and rotated the same way, giving E' with AE' = u2 - i*v2;
  * AE' is rotated about A onto the positive axis, giving E'' at distance
    |u2 - i*v2|, and AC' is rotated by the same signed angle, giving C'';
  * the unit mark U and the similar-triangle intercept finish the division:
    the parallel to E''C'' through U meets line AC'' in the result R.

When the quotient is real the triangle A-E''-C'' degenerates onto the axis
and the intercept above has no meaning, so the trace routes the last stage
over an auxiliary perpendicular ray instead: |AC''| is rotated onto the
downward vertical through V (U turned by a right angle), the intercept is
performed against that ray, and the resulting length is rotated back onto
the ray AC''.  Both endings are emitted by the planner; which one applies is
decided exactly from the integers (the quotient is real iff u1*v2 == v1*u2).

Steps operate on labeled points, segments and lines.  Straightedge semantics
apply throughout: a drawn segment may be produced indefinitely, so
intersections treat segments as full lines.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from xml.sax.saxutils import escape


class ZeroDenominator(ValueError):
    """Both denominator counts are zero; there is nothing to divide by."""


class MalformedTrace(ValueError):
    """Dangling label, duplicate output, or geometrically impossible step."""


class StepKind(Enum):
    PLACE_POINT = "PLACE_POINT"
    DRAW_SEGMENT = "DRAW_SEGMENT"
    TRANSFER_DISTANCE = "TRANSFER_DISTANCE"
    ERECT_PERPENDICULAR = "ERECT_PERPENDICULAR"
    ROTATE_SEGMENT_CLOCKWISE_90 = "ROTATE_SEGMENT_CLOCKWISE_90"
    ROTATE_SEGMENT_TO_RAY = "ROTATE_SEGMENT_TO_RAY"
    PARALLEL_THROUGH_POINT = "PARALLEL_THROUGH_POINT"
    MARK_INTERSECTION = "MARK_INTERSECTION"
    MARK_UNIT = "MARK_UNIT"


@dataclass(frozen=True, slots=True)
class Point:
    x: float
    y: float
    label: str = ""


@dataclass(frozen=True, slots=True)
class ConstructionStep:
    """One macro step.  inputs name previously produced labels; amount is the
    signed unit count of a TRANSFER_DISTANCE; at gives PLACE_POINT coordinates."""

    kind: StepKind
    inputs: tuple[str, ...]
    output: str
    color: int | None = None
    amount: int | None = None
    at: tuple[float, float] | None = None


@dataclass(frozen=True, slots=True)
class ConstructionTrace:
    steps: tuple[ConstructionStep, ...]
    result_label: str


def plan_quotient_construction(u1: int, v1: int, u2: int, v2: int) -> ConstructionTrace:
    """Trace whose result point realizes (u1 - i*v1)/(u2 - i*v2)."""
    if u2 == 0 and v2 == 0:
        raise ZeroDenominator("denominator counts are both zero")
    steps: list[ConstructionStep] = [
        ConstructionStep(StepKind.PLACE_POINT, (), "A", at=(0.0, 0.0)),
        ConstructionStep(StepKind.MARK_UNIT, ("A",), "U"),
        ConstructionStep(StepKind.TRANSFER_DISTANCE, ("A",), "B", color=1, amount=u1),
        ConstructionStep(StepKind.DRAW_SEGMENT, ("A", "B"), "AB", color=1),
        ConstructionStep(StepKind.TRANSFER_DISTANCE, ("B",), "C", color=2, amount=v1),
        ConstructionStep(StepKind.DRAW_SEGMENT, ("B", "C"), "BC", color=2),
        ConstructionStep(StepKind.TRANSFER_DISTANCE, ("C",), "D", color=3, amount=u2),
        ConstructionStep(StepKind.DRAW_SEGMENT, ("C", "D"), "CD", color=3),
        ConstructionStep(StepKind.TRANSFER_DISTANCE, ("D",), "E", color=4, amount=v2),
        ConstructionStep(StepKind.DRAW_SEGMENT, ("D", "E"), "DE", color=4),
        ConstructionStep(StepKind.ROTATE_SEGMENT_CLOCKWISE_90, ("B", "C"), "C'"),
        ConstructionStep(StepKind.DRAW_SEGMENT, ("A", "C'"), "AC'"),
        ConstructionStep(StepKind.TRANSFER_DISTANCE, ("A",), "D'", color=3, amount=u2),
        ConstructionStep(StepKind.TRANSFER_DISTANCE, ("D'",), "F", color=4, amount=v2),
        ConstructionStep(StepKind.ROTATE_SEGMENT_CLOCKWISE_90, ("D'", "F"), "E'"),
        ConstructionStep(StepKind.DRAW_SEGMENT, ("A", "E'"), "AE'"),
        ConstructionStep(StepKind.ROTATE_SEGMENT_TO_RAY, ("A", "E'", "E'", "U"), "E''"),
        ConstructionStep(StepKind.ROTATE_SEGMENT_TO_RAY, ("A", "C'", "E'", "E''"), "C''"),
    ]
    if u1 * v2 != v1 * u2:
        steps += [
            ConstructionStep(StepKind.DRAW_SEGMENT, ("E''", "C''"), "E''C''"),
            ConstructionStep(StepKind.DRAW_SEGMENT, ("A", "C''"), "AC''"),
            ConstructionStep(StepKind.PARALLEL_THROUGH_POINT, ("U", "E''C''"), "par"),
            ConstructionStep(StepKind.MARK_INTERSECTION, ("par", "AC''"), "R"),
        ]
    else:
        steps += [
            ConstructionStep(StepKind.ROTATE_SEGMENT_CLOCKWISE_90, ("A", "U"), "V"),
            ConstructionStep(StepKind.ROTATE_SEGMENT_TO_RAY, ("A", "C''", "C''", "V"), "C'''"),
            ConstructionStep(StepKind.DRAW_SEGMENT, ("E''", "C'''"), "E''C'''"),
            ConstructionStep(StepKind.DRAW_SEGMENT, ("A", "C'''"), "AC'''"),
            ConstructionStep(StepKind.PARALLEL_THROUGH_POINT, ("U", "E''C'''"), "par"),
            ConstructionStep(StepKind.MARK_INTERSECTION, ("par", "AC'''"), "R0"),
            ConstructionStep(StepKind.ROTATE_SEGMENT_TO_RAY, ("A", "R0", "R0", "C''"), "R"),
        ]
    return ConstructionTrace(tuple(steps), "R")


# Evaluated objects: ("point", x, y), ("segment", x1, y1, x2, y2),
# ("line", px, py, dx, dy).


class _Env:
    def __init__(self) -> None:
        self.objects: dict[str, tuple] = {}
        self.scale = 1.0

    def eps(self) -> float:
        return 1e-9 * self.scale

    def define(self, label: str, obj: tuple) -> None:
        if label in self.objects:
            raise MalformedTrace(f"label '{label}' defined twice")
        self.objects[label] = obj
        if obj[0] == "point":
            self.scale = max(self.scale, abs(obj[1]), abs(obj[2]))

    def get(self, label: str) -> tuple:
        try:
            return self.objects[label]
        except KeyError:
            raise MalformedTrace(f"undefined label '{label}'") from None

    def point(self, label: str) -> tuple[float, float]:
        obj = self.get(label)
        if obj[0] != "point":
            raise MalformedTrace(f"'{label}' is not a point")
        return obj[1], obj[2]


def _as_line_or_point(env: _Env, label: str) -> tuple:
    obj = env.get(label)
    if obj[0] == "point":
        return obj
    if obj[0] == "line":
        return obj
    _, x1, y1, x2, y2 = obj
    if math.hypot(x2 - x1, y2 - y1) <= env.eps():
        return ("point", x1, y1)
    return ("line", x1, y1, x2 - x1, y2 - y1)


def _point_on_line(px: float, py: float, line: tuple, eps: float) -> bool:
    _, ox, oy, dx, dy = line
    return abs((px - ox) * dy - (py - oy) * dx) <= eps * math.hypot(dx, dy)


def _intersect(env: _Env, a: tuple, b: tuple) -> tuple[float, float]:
    eps = env.eps()
    if a[0] == "point" and b[0] == "point":
        if math.hypot(a[1] - b[1], a[2] - b[2]) <= eps:
            return a[1], a[2]
        raise MalformedTrace("intersection of two distinct points")
    if a[0] == "point" or b[0] == "point":
        pt, line = (a, b) if a[0] == "point" else (b, a)
        if _point_on_line(pt[1], pt[2], line, eps):
            return pt[1], pt[2]
        raise MalformedTrace("degenerate object does not meet the line")
    _, ax, ay, adx, ady = a
    _, bx, by, bdx, bdy = b
    cross = adx * bdy - ady * bdx
    if abs(cross) <= 1e-12 * math.hypot(adx, ady) * math.hypot(bdx, bdy):
        raise MalformedTrace("lines are parallel where an intersection is required")
    t = ((bx - ax) * bdy - (by - ay) * bdx) / cross
    return ax + t * adx, ay + t * ady


def _apply_step(env: _Env, step: ConstructionStep) -> None:
    kind = step.kind
    if kind is StepKind.PLACE_POINT:
        if step.at is None:
            raise MalformedTrace("PLACE_POINT without coordinates")
        env.define(step.output, ("point", float(step.at[0]), float(step.at[1])))
    elif kind is StepKind.MARK_UNIT:
        ax, ay = env.point(step.inputs[0])
        env.define(step.output, ("point", ax + 1.0, ay))
    elif kind is StepKind.TRANSFER_DISTANCE:
        if step.amount is None:
            raise MalformedTrace("TRANSFER_DISTANCE without a count")
        bx, by = env.point(step.inputs[0])
        env.define(step.output, ("point", bx + float(step.amount), by))
    elif kind is StepKind.DRAW_SEGMENT:
        x1, y1 = env.point(step.inputs[0])
        x2, y2 = env.point(step.inputs[1])
        env.define(step.output, ("segment", x1, y1, x2, y2))
    elif kind is StepKind.ROTATE_SEGMENT_CLOCKWISE_90:
        cx, cy = env.point(step.inputs[0])
        px, py = env.point(step.inputs[1])
        vx, vy = px - cx, py - cy
        env.define(step.output, ("point", cx + vy, cy - vx))
    elif kind is StepKind.ROTATE_SEGMENT_TO_RAY:
        cx, cy = env.point(step.inputs[0])
        px, py = env.point(step.inputs[1])
        vx, vy = px - cx, py - cy
        radius = math.hypot(vx, vy)
        if radius <= env.eps():
            env.define(step.output, ("point", cx, cy))
            return
        fx, fy = env.point(step.inputs[2])
        tx, ty = env.point(step.inputs[3])
        fvx, fvy = fx - cx, fy - cy
        tvx, tvy = tx - cx, ty - cy
        if math.hypot(fvx, fvy) <= env.eps() or math.hypot(tvx, tvy) <= env.eps():
            raise MalformedTrace("rotation reference ray is degenerate")
        if step.inputs[1] == step.inputs[2]:
            # Rotating the reference point itself lands exactly on the target
            # ray, at the preserved distance.
            norm = math.hypot(tvx, tvy)
            env.define(
                step.output,
                ("point", cx + radius * tvx / norm, cy + radius * tvy / norm),
            )
            return
        theta = math.atan2(fvx * tvy - fvy * tvx, fvx * tvx + fvy * tvy)
        c, s = math.cos(theta), math.sin(theta)
        env.define(
            step.output,
            ("point", cx + vx * c - vy * s, cy + vx * s + vy * c),
        )
    elif kind is StepKind.ERECT_PERPENDICULAR:
        px, py = env.point(step.inputs[0])
        ref = _as_line_or_point(env, step.inputs[1])
        if ref[0] != "line":
            raise MalformedTrace("perpendicular reference is degenerate")
        _, _, _, dx, dy = ref
        env.define(step.output, ("line", px, py, -dy, dx))
    elif kind is StepKind.PARALLEL_THROUGH_POINT:
        px, py = env.point(step.inputs[0])
        ref = _as_line_or_point(env, step.inputs[1])
        if ref[0] != "line":
            raise MalformedTrace("parallel reference is degenerate")
        _, _, _, dx, dy = ref
        env.define(step.output, ("line", px, py, dx, dy))
    elif kind is StepKind.MARK_INTERSECTION:
        a = _as_line_or_point(env, step.inputs[0])
        b = _as_line_or_point(env, step.inputs[1])
        x, y = _intersect(env, a, b)
        env.define(step.output, ("point", x, y))
    else:  # pragma: no cover
        raise MalformedTrace(f"unknown step kind {kind}")


def _evaluate(trace: ConstructionTrace) -> _Env:
    env = _Env()
    for step in trace.steps:
        _apply_step(env, step)
    return env


def evaluate_trace(trace: ConstructionTrace) -> Point:
    """Run every step analytically and return the result point."""
    env = _evaluate(trace)
    obj = env.get(trace.result_label)
    if obj[0] != "point":
        raise MalformedTrace("result label is not a point")
    if not (math.isfinite(obj[1]) and math.isfinite(obj[2])):
        raise MalformedTrace("result point is not finite")
    return Point(obj[1], obj[2], trace.result_label)


_PALETTE = {1: "#d62728", 2: "#1f77b4", 3: "#2ca02c", 4: "#9467bd"}
_AUX = "#b0b0b0"
_INK = "#444444"


def _clip_line(px, py, dx, dy, xmin, ymin, xmax, ymax):
    """Intersect an infinite line with a rectangle; None if it misses."""
    ts = []
    for bound, origin, direction in (
        (xmin, px, dx),
        (xmax, px, dx),
    ):
        if direction != 0:
            ts.append((bound - origin) / direction)
    for bound, origin, direction in (
        (ymin, py, dy),
        (ymax, py, dy),
    ):
        if direction != 0:
            ts.append((bound - origin) / direction)
    pts = []
    for t in ts:
        x, y = px + t * dx, py + t * dy
        if xmin - 1e-9 <= x <= xmax + 1e-9 and ymin - 1e-9 <= y <= ymax + 1e-9:
            pts.append((x, y))
    if len(pts) < 2:
        return None
    pts.sort()
    return pts[0], pts[-1]


def render_svg(trace: ConstructionTrace, size: int = 1000) -> str:
    """Deterministic SVG 1.1 document: one layer per step, colored unit runs,
    auxiliary arcs for the compass macros, labeled points, result highlighted."""
    env = _evaluate(trace)

    xs: list[float] = []
    ys: list[float] = []
    circles: list[tuple[float, float, float]] = []
    for step in trace.steps:
        obj = env.objects[step.output]
        if obj[0] == "point":
            xs.append(obj[1])
            ys.append(obj[2])
        elif obj[0] == "segment":
            xs += [obj[1], obj[3]]
            ys += [obj[2], obj[4]]
        if step.kind in (StepKind.ROTATE_SEGMENT_CLOCKWISE_90, StepKind.ROTATE_SEGMENT_TO_RAY):
            cx, cy = env.point(step.inputs[0])
            ox, oy = env.point(step.output)
            r = math.hypot(ox - cx, oy - cy)
            if r > 0:
                circles.append((cx, cy, r))
                xs += [cx - r, cx + r]
                ys += [cy - r, cy + r]
    xmin, xmax = min(xs), max(xs)
    ymin, ymax = min(ys), max(ys)
    width = max(xmax - xmin, 1e-6)
    height = max(ymax - ymin, 1e-6)
    margin = size * 0.08
    scale = (size - 2 * margin) / max(width, height)
    ox = margin + (size - 2 * margin - scale * width) / 2 - scale * xmin
    oy = size - margin - (size - 2 * margin - scale * height) / 2 + scale * ymin

    def X(x: float) -> float:
        return ox + scale * x

    def Y(y: float) -> float:
        return oy - scale * y

    def f(v: float) -> str:
        return f"{v:.3f}"

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect x="0" y="0" width="{size}" height="{size}" fill="#ffffff"/>',
    ]
    # Axis through A and U.
    ax_y = Y(0.0)
    out.append(
        f'<line x1="{f(margin / 2)}" y1="{f(ax_y)}" x2="{f(size - margin / 2)}" y2="{f(ax_y)}" '
        f'stroke="#dddddd" stroke-width="1"/>'
    )

    labeled: set[str] = set()
    for idx, step in enumerate(trace.steps):
        obj = env.objects[step.output]
        parts = [f'<g id="step-{idx:02d}" data-kind="{step.kind.value}">']
        if step.kind in (StepKind.ROTATE_SEGMENT_CLOCKWISE_90, StepKind.ROTATE_SEGMENT_TO_RAY):
            cx, cy = env.point(step.inputs[0])
            px2, py2 = env.point(step.output)
            r = math.hypot(px2 - cx, py2 - cy)
            if r > 0:
                parts.append(
                    f'<circle cx="{f(X(cx))}" cy="{f(Y(cy))}" r="{f(scale * r)}" fill="none" '
                    f'stroke="{_AUX}" stroke-width="1" stroke-dasharray="4 4"/>'
                )
        if obj[0] == "segment":
            color = _PALETTE.get(step.color or 0, _INK)
            wdt = "3" if step.color else "1.5"
            parts.append(
                f'<line x1="{f(X(obj[1]))}" y1="{f(Y(obj[2]))}" x2="{f(X(obj[3]))}" '
                f'y2="{f(Y(obj[4]))}" stroke="{color}" stroke-width="{wdt}"/>'
            )
        elif obj[0] == "line":
            clipped = _clip_line(obj[1], obj[2], obj[3], obj[4], xmin - 0.5, ymin - 0.5, xmax + 0.5, ymax + 0.5)
            if clipped:
                (x1, y1), (x2, y2) = clipped
                parts.append(
                    f'<line x1="{f(X(x1))}" y1="{f(Y(y1))}" x2="{f(X(x2))}" y2="{f(Y(y2))}" '
                    f'stroke="{_INK}" stroke-width="1" stroke-dasharray="7 3"/>'
                )
        elif obj[0] == "point" and step.output not in labeled:
            labeled.add(step.output)
            is_result = step.output == trace.result_label
            fill = "#c70000" if is_result else "#222222"
            radius = "6" if is_result else "3"
            parts.append(
                f'<circle cx="{f(X(obj[1]))}" cy="{f(Y(obj[2]))}" r="{radius}" fill="{fill}"/>'
            )
            weight = ' font-weight="bold"' if is_result else ""
            parts.append(
                f'<text x="{f(X(obj[1]) + 7)}" y="{f(Y(obj[2]) - 7)}" font-family="monospace" '
                f'font-size="15" fill="{fill}"{weight}>{escape(step.output)}</text>'
            )
        parts.append("</g>")
        out.append("".join(parts))

    # Legend: the four colored unit runs and the drawing scale.
    legend = ['<g id="legend">']
    names = {1: "u1", 2: "v1", 3: "u2", 4: "v2"}
    amounts = {}
    for step in trace.steps:
        if step.kind is StepKind.TRANSFER_DISTANCE and step.color in names and step.color not in amounts:
            amounts[step.color] = step.amount
    for i, color_idx in enumerate(sorted(amounts)):
        y = 24 + 20 * i
        legend.append(
            f'<line x1="16" y1="{y}" x2="46" y2="{y}" stroke="{_PALETTE[color_idx]}" stroke-width="4"/>'
        )
        legend.append(
            f'<text x="54" y="{y + 5}" font-family="monospace" font-size="14" fill="#222222">'
            f"c{color_idx}: {names[color_idx]} = {amounts[color_idx]}</text>"
        )
    legend.append(
        f'<text x="16" y="{24 + 20 * len(amounts) + 5}" font-family="monospace" font-size="14" '
        f'fill="#222222">unit = {f(scale)} px</text>'
    )
    legend.append("</g>")
    out.append("".join(legend))
    out.append("</svg>")
    return "\n".join(out) + "\n"
