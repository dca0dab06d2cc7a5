"""Euclidean primitives: semicircles, intersections, radius angles.

The triple of semicircles is always handled in canonical form: centers
ordered ``O_c <= O_b <= O_a`` on the x-axis, vertices named

* ``A`` = circle_b x circle_c,
* ``B`` = circle_a x circle_c,
* ``C`` = circle_a x circle_b.

Radius angles follow the directional convention documented in
``_kernels._pure``: circle-a angles are measured from the negative
x direction, circle-b/c angles from the positive one.  Subscripts pair
angles with vertices so that the three shared-height relations
``r_a sin a1 = r_b sin b2``, ``r_c sin c2 = r_a sin a2`` and
``r_c sin c1 = r_b sin b1`` hold structurally (a1, b2 point at C;
a2, c2 at B; b1, c1 at A).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _kernels
from .errors import (
    DegenerateInputError,
    DegenerateTriangleError,
    DivisionDegenerateError,
    DomainError,
    InconsistentConfigurationError,
    MissingIntersectionError,
    NonCanonicalConfigurationError,
)


@dataclass(frozen=True)
class Semicircle:
    """Axis-centered semicircle: the support of one geodesic side."""

    center_x: float
    radius: float

    def __post_init__(self):
        if not math.isfinite(self.center_x):
            raise DomainError(f"center_x must be finite, got {self.center_x}")
        if not (self.radius > 0 and math.isfinite(self.radius)):
            raise DomainError(f"radius must be positive, got {self.radius}")

    def contains(self, p: "UpperHalfPoint", tol: float = 1e-12) -> bool:
        return abs(math.hypot(p.x - self.center_x, p.y) - self.radius) <= tol * self.radius


@dataclass(frozen=True)
class UpperHalfPoint:
    """A point strictly above the x-axis."""

    x: float
    y: float

    def __post_init__(self):
        if not (self.y > 0 and math.isfinite(self.y) and math.isfinite(self.x)):
            raise DomainError(f"point must lie strictly above the axis, got ({self.x}, {self.y})")


@dataclass(frozen=True)
class TripleConfig:
    """Three canonically labeled semicircles plus their triangle vertices."""

    circle_a: Semicircle
    circle_b: Semicircle
    circle_c: Semicircle
    vertex_A: UpperHalfPoint
    vertex_B: UpperHalfPoint
    vertex_C: UpperHalfPoint

    def validate(self, tol: float = 1e-12) -> None:
        """Check the structural invariants, raising on the first violation."""
        if not (self.circle_c.center_x <= self.circle_b.center_x <= self.circle_a.center_x):
            raise InconsistentConfigurationError(
                "centers are not in canonical order O_c <= O_b <= O_a")
        on = (
            ("vertex_A", self.vertex_A, self.circle_b, "circle_b"),
            ("vertex_A", self.vertex_A, self.circle_c, "circle_c"),
            ("vertex_B", self.vertex_B, self.circle_a, "circle_a"),
            ("vertex_B", self.vertex_B, self.circle_c, "circle_c"),
            ("vertex_C", self.vertex_C, self.circle_a, "circle_a"),
            ("vertex_C", self.vertex_C, self.circle_b, "circle_b"),
        )
        for vname, v, s, sname in on:
            if not s.contains(v, tol):
                raise InconsistentConfigurationError(
                    f"{vname} does not lie on {sname} within {tol:g}*radius")
        verts = (self.vertex_A, self.vertex_B, self.vertex_C)
        for i in range(3):
            for j in range(i + 1, 3):
                if verts[i].x == verts[j].x and verts[i].y == verts[j].y:
                    raise DegenerateTriangleError("two triangle vertices coincide")


@dataclass(frozen=True)
class RadiusAngles:
    """The six radius/axis angles, in radians inside (0, pi)."""

    a1: float
    a2: float
    b1: float
    b2: float
    c1: float
    c2: float

    def as_tuple(self):
        return (self.a1, self.a2, self.b1, self.b2, self.c1, self.c2)


@dataclass(frozen=True)
class CenterDistances:
    """Nonnegative distances between the circle centers."""

    o_cb: float
    o_ba: float
    o_ac: float


def intersect_semicircles(s1: Semicircle, s2: Semicircle) -> UpperHalfPoint | None:
    """Upper-half-plane intersection of two semicircles, if any.

    Tangency counts as no intersection.  Coincident circles raise
    DegenerateInputError.
    """
    if s1.center_x == s2.center_x:
        if s1.radius == s2.radius:
            raise DegenerateInputError("coincident semicircles")
        return None
    got = _kernels.intersect_upper(s1.center_x, s1.radius, s2.center_x, s2.radius)
    if got is None:
        return None
    return UpperHalfPoint(got[0], got[1])


def build_triple(circle_a: Semicircle, circle_b: Semicircle,
                 circle_c: Semicircle) -> TripleConfig:
    """Canonicalize the three circles and intersect them pairwise.

    The labels are reassigned so the centers satisfy O_c <= O_b <= O_a,
    then A = b x c, B = a x c, C = a x b.
    """
    sc, sb, sa = sorted((circle_a, circle_b, circle_c), key=lambda s: s.center_x)
    pairs = (("b*c", sb, sc), ("a*c", sa, sc), ("a*b", sa, sb))
    verts = []
    for name, s1, s2 in pairs:
        p = intersect_semicircles(s1, s2)
        if p is None:
            raise MissingIntersectionError(name)
        verts.append(p)
    cfg = TripleConfig(sa, sb, sc, verts[0], verts[1], verts[2])
    cfg.validate()
    return cfg


def radius_angles(t: TripleConfig) -> RadiusAngles:
    """Directional radius angles of the configuration.

    Raises NonCanonicalConfigurationError when the vertex abscissas are
    not ordered x_C < x_B < x_A, i.e. when the configuration is outside
    the regime in which the triangle identities are derived (there the
    angle orderings and the signs of the arc formulas break down).
    """
    oa = t.circle_a.center_x
    ob = t.circle_b.center_x
    oc = t.circle_c.center_x
    A, B, C = t.vertex_A, t.vertex_B, t.vertex_C
    ra = RadiusAngles(
        a1=math.atan2(C.y, oa - C.x),
        a2=math.atan2(B.y, oa - B.x),
        b1=math.atan2(A.y, A.x - ob),
        b2=math.atan2(C.y, C.x - ob),
        c1=math.atan2(A.y, A.x - oc),
        c2=math.atan2(B.y, B.x - oc),
    )
    if not (ra.a1 < ra.a2 and ra.b1 < ra.b2 and ra.c1 < ra.c2):
        raise NonCanonicalConfigurationError(
            "vertex abscissas are not ordered x_C < x_B < x_A; "
            "the configuration is outside the canonical regime")
    return ra


def center_distances(t: TripleConfig) -> CenterDistances:
    """Distances between centers, cross-checked against the angle formulas."""
    oa = t.circle_a.center_x
    ob = t.circle_b.center_x
    oc = t.circle_c.center_x
    dist = CenterDistances(o_cb=ob - oc, o_ba=oa - ob, o_ac=oa - oc)
    ang = radius_angles(t)
    ra, rb, rc = t.circle_a.radius, t.circle_b.radius, t.circle_c.radius
    from_angles = (
        (rc * math.cos(ang.c1) - rb * math.cos(ang.b1), dist.o_cb, "O_cb"),
        (ra * math.cos(ang.a1) + rb * math.cos(ang.b2), dist.o_ba, "O_ba"),
        (rc * math.cos(ang.c2) + ra * math.cos(ang.a2), dist.o_ac, "O_ac"),
    )
    scale = max(abs(v) for v, _, _ in from_angles)
    for value, direct, name in from_angles:
        if abs(value - direct) > 1e-9 * max(scale, 1e-300):
            raise InconsistentConfigurationError(
                f"{name} from the angle formula disagrees with the center difference")
    return dist


def projections(t: TripleConfig) -> tuple[float, float, float]:
    """Signed x-axis projections (P_BC, P_AC, P_AB) of the triangle sides.

    Each equals r * (cos of first angle - cos of second angle) for its
    circle and telescopes to the vertex abscissa difference.
    """
    ang = radius_angles(t)
    ra, rb, rc = t.circle_a.radius, t.circle_b.radius, t.circle_c.radius

    def pdiff(r, t1, t2):
        return r * 2.0 * math.sin(0.5 * (t1 + t2)) * math.sin(0.5 * (t2 - t1))

    return (
        pdiff(ra, ang.a1, ang.a2),
        pdiff(rb, ang.b1, ang.b2),
        pdiff(rc, ang.c1, ang.c2),
    )


def cos_angles_from_distances(t: TripleConfig) -> tuple[float, float, float, float, float, float]:
    """The six radius-angle cosines from squared center distances.

    Quotient formulas over (O_ik, r_i, r_k); raises when a center
    distance vanishes (concentric supports).
    """
    d = center_distances(t)
    ra, rb, rc = t.circle_a.radius, t.circle_b.radius, t.circle_c.radius
    if d.o_cb == 0 or d.o_ba == 0 or d.o_ac == 0:
        raise DivisionDegenerateError("two circle centers coincide")
    cos_a2 = (d.o_ac ** 2 - rc ** 2 + ra ** 2) / (2.0 * ra * d.o_ac)
    cos_c2 = (d.o_ac ** 2 - ra ** 2 + rc ** 2) / (2.0 * rc * d.o_ac)
    cos_b2 = (d.o_ba ** 2 - ra ** 2 + rb ** 2) / (2.0 * rb * d.o_ba)
    cos_a1 = (d.o_ba ** 2 - rb ** 2 + ra ** 2) / (2.0 * ra * d.o_ba)
    cos_c1 = (d.o_cb ** 2 - rb ** 2 + rc ** 2) / (2.0 * rc * d.o_cb)
    cos_b1 = (-d.o_cb ** 2 + rc ** 2 - rb ** 2) / (2.0 * rb * d.o_cb)
    return (cos_a1, cos_a2, cos_b1, cos_b2, cos_c1, cos_c2)
