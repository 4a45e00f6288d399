"""The flattened wheel metric on triangulated discs.

Triangles inside a flattened k-wheel (k = 4, 5) are isoceles with apex
angle 2*pi/k at the wheel center; everything else is the unit equilateral
triangle.  All angles are integer multiples of pi/60, so angle sums and the
CAT(0) verdict use exact integer arithmetic; floating point only enters
lengths and areas, which never feed the curvature decision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .complexes import WheelWitness, canonical_cycle
from .discs import SimplicialDisc

UNITS_PER_PI = 60


class MetricError(ValueError):
    """Bad metrization input or query."""


class MetrizationError(MetricError):
    """The flattened wheel metric is undefined for this disc."""


def units_to_pi(units: int) -> Fraction:
    """An angle in pi/60 units as an exact multiple of pi."""
    return Fraction(units, UNITS_PER_PI)


@dataclass(frozen=True)
class TriangleShape:
    """Euclidean isoceles triangle used by the flattened wheel metric.

    Unit base, apex angle 2*pi/k, base angles (k-2)*pi/(2k); k = 6 is the
    unit equilateral triangle.  Angles are stored in pi/60 units.
    """

    k: int
    apex_units: int
    base_units: int
    base_length: float
    leg_length: float
    area: float


def triangle_shape_for(k: int) -> TriangleShape:
    """The shape T_k; only k in {4, 5, 6} occurs in the metric."""
    if k not in (4, 5, 6):
        raise MetricError(f"no flattened triangle shape for k = {k}")
    apex = (2 * UNITS_PER_PI) // k
    base = (UNITS_PER_PI * (k - 2)) // (2 * k)
    assert apex + 2 * base == UNITS_PER_PI
    leg = 1.0 / (2.0 * math.sin(math.pi / k))
    area = math.tan(base * math.pi / UNITS_PER_PI) / 4.0
    return TriangleShape(k, apex, base, 1.0, leg, area)


@dataclass(frozen=True)
class MetrizedDisc:
    """A disc with a shape and apex assignment per triangle."""

    disc: SimplicialDisc
    shapes: dict
    apexes: dict
    flattened_wheels: tuple[WheelWitness, ...]

    def corner_units(self, tri: tuple[int, int, int], v: int) -> int:
        if v not in tri:
            raise MetricError(f"vertex {v} is not a corner of {tri}")
        shape = self.shapes[tri]
        apex = self.apexes[tri]
        if apex is None:
            return shape.base_units  # equilateral: base == apex == 20
        return shape.apex_units if v == apex else shape.base_units


def metrize(D: SimplicialDisc) -> MetrizedDisc:
    """Assign the flattened wheel metric to a disc.

    Every interior vertex of degree k < 6 centers a flattened k-wheel;
    distinct flattened wheels may only meet along their boundaries, which
    fails exactly when two such centers are adjacent.  The offending pair
    is reported.
    """
    centers = sorted(
        v for v in D.interior_vertices() if D.degree(v) < 6
    )
    for c in centers:
        if D.degree(c) < 4:
            raise MetrizationError(
                f"interior vertex {c} has degree {D.degree(c)}; disc is not flag"
            )
    for i, c1 in enumerate(centers):
        for c2 in centers[i + 1 :]:
            if D.has_edge(c1, c2):
                raise MetrizationError(
                    f"flattened wheels at {c1} and {c2} overlap beyond "
                    "their boundaries; metric undefined"
                )
    t6 = triangle_shape_for(6)
    shapes = {t: t6 for t in D.triangles}
    apexes: dict[tuple[int, int, int], int | None] = {t: None for t in D.triangles}
    wheels = []
    for c in centers:
        shape = triangle_shape_for(D.degree(c))
        for t in D.triangles_at(c):
            shapes[t] = shape
            apexes[t] = c
        wheels.append(WheelWitness(c, canonical_cycle(D.rotation(c)), True))
    return MetrizedDisc(D, shapes, apexes, tuple(wheels))


def angle_sum(M: MetrizedDisc, v: int) -> int:
    """Exact corner-angle sum at an interior vertex, in pi/60 units."""
    if v not in M.disc.interior_vertices():
        raise MetricError(f"vertex {v} is not interior")
    return sum(M.corner_units(t, v) for t in M.disc.triangles_at(v))


def is_cat0(M: MetrizedDisc) -> tuple[bool, list[int]]:
    """Whether every interior angle sum reaches 2*pi, with the deficient list.

    The comparison is exact: 120 units of pi/60.  For a simply connected
    piecewise Euclidean disc this angle criterion decides CAT(0).
    """
    deficient = [
        v
        for v in sorted(M.disc.interior_vertices())
        if angle_sum(M, v) < 2 * UNITS_PER_PI
    ]
    return (not deficient, deficient)


def metric_area(M: MetrizedDisc) -> float:
    """Total Euclidean area of the metrized triangles."""
    return sum(shape.area for shape in M.shapes.values())


def isoperimetric_bound(n: int) -> tuple[float, int]:
    """Quadratic triangle-count bound n^2/pi for boundary length n."""
    if n < 3:
        raise MetricError("boundary length must be >= 3")
    bound = n * n / math.pi
    return bound, math.floor(bound)


# -- reporting and drawing ------------------------------------------------------


def metric_report(M: MetrizedDisc) -> dict:
    """JSON-ready report: shapes, exact angle sums, verdict, areas."""
    verdict, deficient = is_cat0(M)
    n = len(M.disc.boundary)
    bound, tri_bound = isoperimetric_bound(n)
    sums = {}
    for v in sorted(M.disc.interior_vertices()):
        units = angle_sum(M, v)
        frac = units_to_pi(units)
        sums[str(v)] = {
            "units": units,
            "pi_multiple": f"{frac.numerator}/{frac.denominator}",
        }
    return {
        "cat0": verdict,
        "deficient_vertices": deficient,
        "angle_sums": sums,
        "shapes": {
            "-".join(map(str, t)): M.shapes[t].k for t in M.disc.triangles
        },
        "flattened_wheels": [
            {"center": w.center, "boundary": list(w.boundary)}
            for w in M.flattened_wheels
        ],
        "metric_area": metric_area(M),
        "boundary_length": n,
        "triangle_count": M.disc.area,
        "isoperimetric_bound": bound,
        "triangle_bound": tri_bound,
    }


_SHAPE_FILL = {4: "#e06666", 5: "#f2c14e", 6: "#dbe5f1"}


def _layout(D: SimplicialDisc) -> dict[int, tuple[float, float]]:
    """Convex (Tutte) embedding: boundary on a regular polygon.

    Combinatorially faithful, not isometric; the flattened metric need not
    embed in the plane.
    """
    import numpy as np

    n = len(D.boundary)
    radius = 40.0 * max(3.0, n / 2.0)
    pos: dict[int, tuple[float, float]] = {}
    for i, v in enumerate(D.boundary):
        ang = 2.0 * math.pi * i / n
        pos[v] = (radius * math.cos(ang), radius * math.sin(ang))
    interior = sorted(D.interior_vertices())
    if interior:
        idx = {v: i for i, v in enumerate(interior)}
        a = np.zeros((len(interior), len(interior)))
        bx = np.zeros(len(interior))
        by = np.zeros(len(interior))
        for v in interior:
            i = idx[v]
            deg = D.degree(v)
            a[i, i] = 1.0
            for w in D.neighbors(v):
                if w in idx:
                    a[i, idx[w]] -= 1.0 / deg
                else:
                    bx[i] += pos[w][0] / deg
                    by[i] += pos[w][1] / deg
        xs = np.linalg.solve(a, bx)
        ys = np.linalg.solve(a, by)
        for v in interior:
            pos[v] = (float(xs[idx[v]]), float(ys[idx[v]]))
    return pos


def export_svg(M: MetrizedDisc) -> str:
    """SVG drawing of the disc with triangles colour-coded by shape."""
    pos = _layout(M.disc)
    xs = [p[0] for p in pos.values()]
    ys = [p[1] for p in pos.values()]
    pad = 20.0
    x0, y0 = min(xs) - pad, min(ys) - pad
    w, h = max(xs) - x0 + pad, max(ys) - y0 + pad
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{x0:.1f} {y0:.1f} {w:.1f} {h:.1f}">'
    ]
    for t in M.disc.triangles:
        pts = " ".join(f"{pos[v][0]:.2f},{pos[v][1]:.2f}" for v in t)
        fill = _SHAPE_FILL[M.shapes[t].k]
        parts.append(
            f'<polygon points="{pts}" fill="{fill}" '
            f'stroke="#333333" stroke-width="1"/>'
        )
    for v, (x, y) in sorted(pos.items()):
        parts.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="2.5" fill="#111111"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
