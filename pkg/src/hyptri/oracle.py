"""Formula-free verification backends.

Three independent ways to measure the same geometry: arc-length
quadrature with the 1/y weight, the closed-form point-pair distance, and
tangent-line angles.  None of them goes through the arc trigonometric
formulas they are used to check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _kernels
from .errors import DomainError, NearAxisError, QuadratureBudgetError
from .geometry import Semicircle, UpperHalfPoint

_MAX_EVALS = 1000000


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    evaluations: int


def geodesic_length_quadrature(s: Semicircle, theta1: float, theta2: float,
                               tol: float = 1e-9) -> QuadratureResult:
    """Arc length along the semicircle between polar angles theta1, theta2.

    Integrates d(theta)/sin(theta) by adaptive Simpson bisection; the
    radius cancels out of the integrand.  Endpoints closer than 1e-9 to
    the axis are rejected (the integrand is singular there).
    """
    if not 1e-13 <= tol <= 1e-4:
        raise DomainError(f"tol must lie in [1e-13, 1e-4], got {tol}")
    for th in (theta1, theta2):
        if not 0.0 < th < math.pi:
            raise DomainError(f"angle {th} outside (0, pi)")
        if min(th, math.pi - th) < 1e-9:
            raise NearAxisError(f"angle {th} within 1e-9 of the axis")
    value, err, evals = _kernels.quad_inv_sin(theta1, theta2, tol, _MAX_EVALS)
    if not err <= tol:
        raise QuadratureBudgetError(
            f"adaptive quadrature exceeded {_MAX_EVALS} evaluations")
    return QuadratureResult(value=abs(value), error_estimate=err, evaluations=evals)


def distance_closed(p1: UpperHalfPoint, p2: UpperHalfPoint) -> float:
    """Distance between two points: acosh(1 + (dx^2 + dy^2)/(2 y1 y2))."""
    if p1.y <= 0 or p2.y <= 0:
        raise DomainError("points must lie strictly above the axis")
    dx = p2.x - p1.x
    dy = p2.y - p1.y
    q = (dx * dx + dy * dy) / (2.0 * p1.y * p2.y)
    # acosh(1+q) written as log1p for accuracy near zero distance
    return math.log1p(q + math.sqrt(q * (q + 2.0)))


def tangent_angle(vertex: UpperHalfPoint, s1: Semicircle, s2: Semicircle,
                  toward1: UpperHalfPoint, toward2: UpperHalfPoint) -> float:
    """Angle at ``vertex`` between the two circle tangents.

    Each tangent is oriented toward the far endpoint of its arc
    (``toward1`` on s1, ``toward2`` on s2), which makes the result the
    interior angle of the curvilinear triangle.  Swapping the circle
    arguments (with their witnesses) leaves the angle unchanged.
    """
    for s, name in ((s1, "s1"), (s2, "s2")):
        if not s.contains(vertex, 1e-10):
            raise DomainError(f"vertex does not lie on {name}")

    def tdir(s: Semicircle, toward: UpperHalfPoint) -> tuple[float, float]:
        ux = vertex.x - s.center_x
        uy = vertex.y
        tx, ty = -uy, ux
        if tx * (toward.x - vertex.x) + ty * (toward.y - vertex.y) < 0:
            tx, ty = uy, -ux
        n = math.hypot(tx, ty)
        return tx / n, ty / n

    t1 = tdir(s1, toward1)
    t2 = tdir(s2, toward2)
    d = max(-1.0, min(1.0, t1[0] * t2[0] + t1[1] * t2[1]))
    return math.acos(d)


def interior_angles_tangent(t) -> tuple[float, float, float]:
    """Tangent-line interior angles (alpha, beta, delta) of a TripleConfig."""
    return (
        tangent_angle(t.vertex_A, t.circle_b, t.circle_c, t.vertex_C, t.vertex_B),
        tangent_angle(t.vertex_B, t.circle_a, t.circle_c, t.vertex_C, t.vertex_A),
        tangent_angle(t.vertex_C, t.circle_a, t.circle_b, t.vertex_B, t.vertex_A),
    )
