"""The three hyperbolic triangle laws and the appendix identity, as residuals.

Residuals are normalized by max(1, dominant term): cosh grows
exponentially with side length, so raw differences would be meaningless
for large triangles while plain relative errors would over-reward tiny
ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arcs import TriangleMeasures, WVTable
from .errors import DegenerateTriangleError, DomainError, InconsistentConfigurationError
from .geometry import TripleConfig, center_distances


@dataclass(frozen=True)
class SinesLawResult:
    """Common ratio sinh a / sin alpha plus deviations of the other two ratios."""

    ratio: float
    deviations: tuple[float, float]


@dataclass(frozen=True)
class LawReport:
    """All law residuals of one configuration."""

    cosines_i: tuple[float, float, float]
    sines: SinesLawResult
    sines_lemma: tuple[float, float]
    cosines_ii: tuple[float, float, float]
    cosines_ii_printed: float
    appendix: float

    def law_residuals(self) -> tuple[float, ...]:
        return (*self.cosines_i, *self.sines.deviations, *self.cosines_ii)


def law_cosines_I_residual(m: TriangleMeasures) -> tuple[float, float, float]:
    """Residuals of cosh c = cosh a cosh b - sinh a sinh b cos(delta)
    and its two cyclic companions."""
    cha, sha = m.side_a.cosh_val, m.side_a.sinh_val
    chb, shb = m.side_b.cosh_val, m.side_b.sinh_val
    chc, shc = m.side_c.cosh_val, m.side_c.sinh_val
    r1 = abs(chc - (cha * chb - sha * shb * math.cos(m.delta))) / max(1.0, cha * chb)
    r2 = abs(chb - (cha * chc - shc * sha * math.cos(m.beta))) / max(1.0, cha * chc)
    r3 = abs(cha - (chc * chb - shc * shb * math.cos(m.alpha))) / max(1.0, chc * chb)
    return (r1, r2, r3)


def law_sines_residual(m: TriangleMeasures) -> SinesLawResult:
    """sinh(side)/sin(opposite angle) ratios: the first one plus the
    relative deviations of the other two from it."""
    sines = (math.sin(m.alpha), math.sin(m.beta), math.sin(m.delta))
    if min(sines) <= 0:
        raise DegenerateTriangleError("a vertex angle has vanishing sine")
    rat_a = m.side_a.sinh_val / sines[0]
    rat_b = m.side_b.sinh_val / sines[1]
    rat_c = m.side_c.sinh_val / sines[2]
    return SinesLawResult(ratio=rat_a,
                          deviations=(abs(rat_b - rat_a) / rat_a,
                                      abs(rat_c - rat_a) / rat_a))


def lemma_projection_residuals(t: TripleConfig) -> tuple[float, float]:
    """Deviations among the three projection/center-distance quotients.

    The quotients P(BC)/O_cb, P(AC)/O_ac, P(AB)/O_ba are equal for every
    valid configuration; returned are the deviations of the second and
    third from the first, normalized by max(1, |first|).
    """
    from .geometry import projections
    p_bc, p_ac, p_ab = projections(t)
    d = center_distances(t)
    q1 = p_bc / d.o_cb
    q2 = p_ac / d.o_ac
    q3 = p_ab / d.o_ba
    return (abs(q2 - q1) / max(1.0, abs(q1)), abs(q3 - q1) / max(1.0, abs(q1)))


def law_cosines_II_residual(m: TriangleMeasures) -> tuple[float, float, float]:
    """Residuals of cos(delta) = sin(alpha) sin(beta) cosh c - cos(alpha) cos(beta)
    and the two analogues."""
    sal, cal = math.sin(m.alpha), math.cos(m.alpha)
    sbe, cbe = math.sin(m.beta), math.cos(m.beta)
    sde, cde = math.sin(m.delta), math.cos(m.delta)
    t1 = sal * sbe * m.side_c.cosh_val
    t2 = sal * sde * m.side_b.cosh_val
    t3 = sbe * sde * m.side_a.cosh_val
    return (
        abs(cde - (t1 - cal * cbe)) / max(1.0, abs(t1)),
        abs(cbe - (t2 - cal * cde)) / max(1.0, abs(t2)),
        abs(cal - (t3 - cbe * cde)) / max(1.0, abs(t3)),
    )


def law_cosines_II_printed_residual(m: TriangleMeasures) -> float:
    """Residual of the sign variant cos(delta) = -cos(alpha)cos(beta)
    - sin(alpha)sin(beta)cosh c.

    This variant is inconsistent with constructed configurations; the
    residual is expected to be large and documents the discrepancy.
    """
    sal, cal = math.sin(m.alpha), math.cos(m.alpha)
    sbe, cbe = math.sin(m.beta), math.cos(m.beta)
    t1 = sal * sbe * m.side_c.cosh_val
    return abs(math.cos(m.delta) - (-cal * cbe - t1)) / max(1.0, abs(t1))


def vertex_cos_from_distances(t: TripleConfig) -> tuple[float, float, float]:
    """(cos alpha, cos beta, cos delta) from radii and center distances only."""
    d = center_distances(t)
    r_a, r_b, r_c = t.circle_a.radius, t.circle_b.radius, t.circle_c.radius
    if r_a * r_b * r_c == 0:
        raise DomainError("zero radius")
    cos_alpha = (r_c ** 2 + r_b ** 2 - d.o_cb ** 2) / (2.0 * r_b * r_c)
    cos_beta = -(r_c ** 2 + r_a ** 2 - d.o_ac ** 2) / (2.0 * r_a * r_c)
    cos_delta = (r_a ** 2 + r_b ** 2 - d.o_ba ** 2) / (2.0 * r_b * r_a)
    return (cos_alpha, cos_beta, cos_delta)


def appendix_identity_residual(wv: WVTable, radii: tuple[float, float, float],
                               tol: float = 1e-12) -> float:
    """Residual of the exact polynomial identity reducing the quartic
    combination of designations to 2(r_a^2 - v01 w01)(r_b^2 - v02 w02).

    Needs v2 = w1 (a shared-height relation); anything else about the
    table is irrelevant.
    """
    if abs(wv.v2 - wv.w1) > tol * max(abs(wv.v2), abs(wv.w1), 1e-300):
        raise InconsistentConfigurationError(
            "appendix identity requires v2 = w1")
    r_a, r_b, _ = radii
    lhs = wv.v2 * wv.w1 * (wv.w2 ** 2 + wv.v1 ** 2
                           + (wv.w02 - wv.v02) ** 2 + (wv.w01 - wv.v01) ** 2) \
        - 2.0 * wv.v02 * wv.w01 * (wv.w02 - wv.v02) * (wv.w01 - wv.v01)
    rhs = 2.0 * (r_a ** 2 - wv.v01 * wv.w01) * (r_b ** 2 - wv.v02 * wv.w02)
    return abs(lhs - rhs) / max(1.0, abs(rhs))


def sines_common_factor_residual(m: TriangleMeasures, wv: WVTable,
                                 radii: tuple[float, float, float]) -> float:
    """Deviation of sinh a / sin alpha from its closed designation form
    (w01 - v01)/(w03 - w02) * r_a r_b r_c / (x y z)."""
    r_a, r_b, r_c = radii
    factor = ((wv.w01 - wv.v01) / (wv.w03 - wv.w02)) \
        * (r_a * r_b * r_c) / (wv.x * wv.y * wv.z)
    ratio = m.side_a.sinh_val / math.sin(m.alpha)
    return abs(ratio - factor) / abs(ratio)
