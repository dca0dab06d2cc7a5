"""Hyperbolic reparameterization of right triangles and tangent lines.

Everything here is closed form: the ratio-exponential identity, the
right-triangle evolution in a hyperbolic angle, the parallel-angle
function, and the rotating-tangent figure around a semicircle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError


def key_formula_phi(a0: float, b0: float) -> float:
    """Exponent density phi with exp((a0 - b0) * phi) = a0 / b0.

    For a0 == b0 every phi satisfies the equation; the continuous
    extension 1/a0 is returned.  Uses log1p so the value stays accurate
    arbitrarily close to the diagonal.
    """
    if not (a0 > 0 and b0 > 0):
        raise DomainError("key formula needs positive quantities")
    d = a0 - b0
    if d == 0.0:
        return 1.0 / a0
    return math.log1p(d / b0) / d


@dataclass(frozen=True)
class RightTriangleHyp:
    """Right triangle with legs a, b and hypotenuse c, plus its hyperbolic angle."""

    leg_a: float
    leg_b: float
    hyp_c: float
    xi: float
    phi: float


def right_triangle_from_xi(leg_a: float, xi: float) -> RightTriangleHyp:
    """Build the right triangle evolved to hyperbolic angle xi.

    c = a*coth(xi), b = a/sinh(xi), phi = xi/a.  tanh/sinh are evaluated
    directly (no exponential differences), so the small-xi regime keeps
    full precision: a -> 0 at fixed phi gives c -> 1/phi.
    """
    if leg_a <= 0:
        raise DomainError("leg_a must be positive")
    if xi <= 0:
        raise DomainError("xi must be positive (the triangle degenerates at 0)")
    hyp_c = leg_a / math.tanh(xi)
    leg_b = leg_a / math.sinh(xi)
    return RightTriangleHyp(leg_a=leg_a, leg_b=leg_b, hyp_c=hyp_c,
                            xi=xi, phi=xi / leg_a)


def angle_b(tri: RightTriangleHyp) -> float:
    """The acute angle opposite leg b: sin B = 1/cosh(xi)."""
    return math.asin(1.0 / math.cosh(tri.xi))


def parallel_angle(d: float, kappa: float) -> float:
    """Angle of parallelism at distance d: 2*atan(exp(-d/kappa))."""
    if kappa <= 0:
        raise DomainError("kappa must be positive")
    if d < 0:
        raise DomainError("distance must be nonnegative")
    return 2.0 * math.atan(math.exp(-d / kappa))


@dataclass(frozen=True)
class TangentFigure:
    """Segment lengths of the tangent-line figure at hyperbolic angle xi.

    ab and ac are math.inf at xi = 0, where the tangent line is
    horizontal and its axis intersection recedes to infinity.
    """

    r: float
    xi: float
    ab: float
    ac: float
    p1k1: float
    p2k2: float
    bm1: float
    p2m2: float


def tangent_construction(r: float, xi: float) -> TangentFigure:
    """Evaluate the rotating-tangent segment lengths for radius r.

    p1k1 = r e^{-xi}, p2k2 = r e^{xi}, bm1 = r cosh xi, p2m2 = r sinh xi,
    and for xi > 0 also ab = r coth xi, ac = r / sinh xi.
    """
    if r <= 0:
        raise DomainError("radius must be positive")
    if xi < 0:
        raise DomainError("xi must be nonnegative")
    if xi == 0.0:
        return TangentFigure(r=r, xi=xi, ab=math.inf, ac=math.inf,
                             p1k1=r, p2k2=r, bm1=r, p2m2=0.0)
    return TangentFigure(
        r=r,
        xi=xi,
        ab=r / math.tanh(xi),
        ac=r / math.sinh(xi),
        p1k1=r * math.exp(-xi),
        p2k2=r * math.exp(xi),
        bm1=r * math.cosh(xi),
        p2m2=r * math.sinh(xi),
    )
