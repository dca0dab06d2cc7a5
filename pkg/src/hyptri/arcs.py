"""Arc hyperbolic functions, vertex angles, and the designation table.

The hyperbolic cosine/sine of a semicircle arc depend only on the two
radius angles; side lengths are therefore invariant under scaling and
translation of the whole configuration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _kernels
from .errors import DomainError, InconsistentConfigurationError, NonCanonicalConfigurationError
from .geometry import RadiusAngles, TripleConfig, radius_angles


@dataclass(frozen=True)
class ArcHyp:
    """cosh, sinh and length of one geodesic arc (sinh and length >= 0)."""

    cosh_val: float
    sinh_val: float
    length: float


@dataclass(frozen=True)
class WVTable:
    """Designation table: w0i = r cos(first angle), wi = r sin(first angle),
    v0i/vi likewise for the second angle; i = 1, 2, 3 for circles a, b, c.
    x, y, z are the shared vertex heights y_A, y_B, y_C."""

    w01: float
    w1: float
    v01: float
    v1: float
    w02: float
    w2: float
    v02: float
    v2: float
    w03: float
    w3: float
    v03: float
    v3: float
    x: float
    y: float
    z: float


@dataclass(frozen=True)
class TriangleMeasures:
    """The three side measures and the three interior vertex angles."""

    side_a: ArcHyp
    side_b: ArcHyp
    side_c: ArcHyp
    alpha: float
    beta: float
    delta: float


@dataclass(frozen=True)
class RelationResiduals:
    """Relative residuals of the structural relations of one configuration."""

    relation_i: tuple[float, float, float]
    relation_ii: float
    relation_ii_wv: float
    relation_ii_alt: float
    projection_sum: float
    wv_xyz: tuple[float, float, float]

    def max_residual(self) -> float:
        return max(*self.relation_i, self.relation_ii, self.relation_ii_wv,
                   self.relation_ii_alt, self.projection_sum, *self.wv_xyz)


def _check_interior(angle: float, name: str) -> None:
    if not 0.0 < angle < math.pi:
        raise DomainError(f"{name} must lie strictly inside (0, pi), got {angle}")


def arc_hyp_from_top(angle: float) -> tuple[float, float]:
    """cosh and sinh of the arc from the circle top to polar angle ``angle``.

    cosh = 1/sin, sinh = |cot|; the top itself gives (1, 0).
    """
    _check_interior(angle, "angle")
    return 1.0 / math.sin(angle), abs(math.cos(angle) / math.sin(angle))


def arc_hyp(a1: float, a2: float) -> ArcHyp:
    """Arc measure between two radius angles on one semicircle.

    cosh = (1 - cos a1 cos a2)/(sin a1 sin a2) and
    sinh = |cos a1 - cos a2|/(sin a1 sin a2), evaluated in the
    cancellation-free half-angle form; length = asinh(sinh).
    """
    _check_interior(a1, "a1")
    _check_interior(a2, "a2")
    ch, sh = _kernels.arc_cosh_sinh(a1, a2)
    sh = abs(sh)
    return ArcHyp(cosh_val=ch, sinh_val=sh, length=math.asinh(sh))


def side_lengths(ra: RadiusAngles) -> tuple[ArcHyp, ArcHyp, ArcHyp]:
    """Side measures (a, b, c) = arcs BC, AC, AB from the radius angles."""
    return (arc_hyp(ra.a1, ra.a2), arc_hyp(ra.b1, ra.b2), arc_hyp(ra.c1, ra.c2))


def vertex_angles(ra: RadiusAngles) -> tuple[float, float, float]:
    """Interior angles (alpha, beta, delta) at vertices A, B, C.

    alpha = b1 - c1, beta = a2 + c2, delta = pi - a1 - b2.  All three are
    positive for any canonical configuration; a nonpositive value means
    the angles did not come from one.
    """
    alpha = ra.b1 - ra.c1
    beta = ra.a2 + ra.c2
    delta = math.pi - ra.a1 - ra.b2
    for val, name in ((alpha, "alpha"), (beta, "beta"), (delta, "delta")):
        if not 0.0 < val < math.pi:
            raise NonCanonicalConfigurationError(
                f"vertex angle {name} = {val:g} is outside (0, pi)")
    return alpha, beta, delta


def triangle_measures(t: TripleConfig) -> TriangleMeasures:
    """Full measure set of a configuration (sides plus vertex angles)."""
    ra = radius_angles(t)
    sa, sb, sc = side_lengths(ra)
    alpha, beta, delta = vertex_angles(ra)
    return TriangleMeasures(side_a=sa, side_b=sb, side_c=sc,
                            alpha=alpha, beta=beta, delta=delta)


def wv_table(ra: RadiusAngles, radii: tuple[float, float, float],
             tol: float = 1e-9) -> WVTable:
    """Designation table from the angles and radii (r_a, r_b, r_c).

    The shared-height relations are verified to ``tol`` relative; a
    violation means angles and radii do not belong to one configuration.
    """
    r_a, r_b, r_c = radii
    w01, w1 = r_a * math.cos(ra.a1), r_a * math.sin(ra.a1)
    v01, v1 = r_a * math.cos(ra.a2), r_a * math.sin(ra.a2)
    w02, w2 = r_b * math.cos(ra.b1), r_b * math.sin(ra.b1)
    v02, v2 = r_b * math.cos(ra.b2), r_b * math.sin(ra.b2)
    w03, w3 = r_c * math.cos(ra.c1), r_c * math.sin(ra.c1)
    v03, v3 = r_c * math.cos(ra.c2), r_c * math.sin(ra.c2)
    for u, v, name in ((w1, v2, "r_a sin a1 = r_b sin b2"),
                       (v3, v1, "r_c sin c2 = r_a sin a2"),
                       (w3, w2, "r_c sin c1 = r_b sin b1")):
        if abs(u - v) > tol * max(abs(u), abs(v), 1e-300):
            raise InconsistentConfigurationError(f"shared-height relation {name} violated")
    return WVTable(w01=w01, w1=w1, v01=v01, v1=v1,
                   w02=w02, w2=w2, v02=v02, v2=v2,
                   w03=w03, w3=w3, v03=v03, v3=v3,
                   x=w2, y=v1, z=w1)


def relation_residuals(t: TripleConfig) -> RelationResiduals:
    """Relative residuals of the shared-height and center-distance relations.

    Works on any TripleConfig-shaped data, including perturbed (invalid)
    configurations, so it can be used for fault detection.
    """
    oa = t.circle_a.center_x
    ob = t.circle_b.center_x
    oc = t.circle_c.center_x
    r_a, r_b, r_c = t.circle_a.radius, t.circle_b.radius, t.circle_c.radius
    A, B, C = t.vertex_A, t.vertex_B, t.vertex_C
    a1 = math.atan2(C.y, oa - C.x)
    a2 = math.atan2(B.y, oa - B.x)
    b1 = math.atan2(A.y, A.x - ob)
    b2 = math.atan2(C.y, C.x - ob)
    c1 = math.atan2(A.y, A.x - oc)
    c2 = math.atan2(B.y, B.x - oc)

    w01, w1 = r_a * math.cos(a1), r_a * math.sin(a1)
    v01, v1 = r_a * math.cos(a2), r_a * math.sin(a2)
    w02, w2 = r_b * math.cos(b1), r_b * math.sin(b1)
    v02, v2 = r_b * math.cos(b2), r_b * math.sin(b2)
    w03, w3 = r_c * math.cos(c1), r_c * math.sin(c1)
    v03, v3 = r_c * math.cos(c2), r_c * math.sin(c2)

    def rel(u, v):
        return abs(u - v) / max(abs(u), abs(v), 1e-300)

    scale = max(abs(w03), abs(w02), abs(v03), abs(v01), abs(w01), abs(v02), 1e-300)
    rel_ii = abs((w03 - w02) - (v03 + v01 - w01 - v02)) / scale
    rel_ii_alt = abs((w03 - v03) - (w02 - v02 - (w01 - v01))) / scale

    def pdiff(r, t1, t2):
        return r * 2.0 * math.sin(0.5 * (t1 + t2)) * math.sin(0.5 * (t2 - t1))

    p_bc = pdiff(r_a, a1, a2)
    p_ac = pdiff(r_b, b1, b2)
    p_ab = pdiff(r_c, c1, c2)
    proj = abs(p_ac - p_ab - p_bc) / max(abs(p_ac), abs(p_ab), abs(p_bc), 1e-300)

    return RelationResiduals(
        relation_i=(rel(w1, v2), rel(v3, v1), rel(w3, w2)),
        relation_ii=rel_ii,
        relation_ii_wv=rel_ii,
        relation_ii_alt=rel_ii_alt,
        projection_sum=proj,
        wv_xyz=(rel(w2, w3), rel(v1, v3), rel(w1, v2)),
    )
