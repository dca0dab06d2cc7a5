"""Inverse construction, random configuration sampling, and full reports.

The inverse problem (three hyperbolic side lengths -> a canonical triple
of semicircles) is solved in closed form in a normalized gauge where the
middle circle is the unit semicircle:

* the interior angles follow from the cosine law;
* the side-b arc is placed on the unit circle in geodesic coordinates
  ``Lambda = ln tan(theta/2)``;
* the apex is dropped at perpendicular distance h from the foot point of
  its altitude (both closed form), via the conformal map w = (z-1)/(z+1)
  that straightens the unit circle into the imaginary axis;
* the free sliding parameter along the base geodesic is fixed at the
  midpoint of the admissible window, whose two edges (where one of the
  other geodesics would become a vertical line) solve quadratics.

A similarity then pins vertex A at (anchor_x, scale), and a short damped
Gauss-Newton pass on the circle parameters absorbs the rounding of the
construction.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from . import _kernels
from .arcs import (RelationResiduals, TriangleMeasures, WVTable,
                   relation_residuals, triangle_measures, wv_table)
from .errors import (ConvergenceError, DomainError, GaugeDegenerateError,
                     HyptriError, InfeasibleError)
from .geometry import (RadiusAngles, Semicircle, TripleConfig, build_triple,
                       radius_angles)
from .laws import (LawReport, law_cosines_I_residual, law_cosines_II_printed_residual,
                   law_cosines_II_residual, law_sines_residual,
                   lemma_projection_residuals, appendix_identity_residual)
from .oracle import geodesic_length_quadrature

POLISH_TOL = 1e-10
ROUND_TRIP_TOL = 1e-8
SAMPLER_MAX_REJECTS = 100000


@dataclass(frozen=True)
class Gauge:
    """Position/scale freedom of the inverse problem."""

    scale: float = 1.0
    anchor_x: float = 0.0

    def __post_init__(self):
        if not (self.scale > 0 and math.isfinite(self.scale)):
            raise DomainError(f"gauge scale must be positive, got {self.scale}")
        if not math.isfinite(self.anchor_x):
            raise DomainError("gauge anchor_x must be finite")


@dataclass(frozen=True)
class SolveRequest:
    """Target hyperbolic side lengths plus the gauge fixing."""

    target_a: float
    target_b: float
    target_c: float
    gauge: Gauge = Gauge()

    def __post_init__(self):
        sides = (self.target_a, self.target_b, self.target_c)
        if not all(s > 0 and math.isfinite(s) for s in sides):
            raise InfeasibleError(f"side lengths must be positive, got {sides}")
        a, b, c = sides
        if a >= b + c or b >= a + c or c >= a + b:
            raise InfeasibleError(
                f"sides {sides} violate the strict triangle inequality")


@dataclass(frozen=True)
class Report:
    """Everything measured and verified on one configuration."""

    config: TripleConfig
    radius_angles: RadiusAngles
    wv: WVTable
    measures: TriangleMeasures
    laws: LawReport
    relations: RelationResiduals
    oracle_deltas: tuple[float, float, float]


@dataclass(frozen=True)
class SampleStats:
    proposals: int
    rejected: int

    @property
    def rejection_rate(self) -> float:
        return self.rejected / self.proposals if self.proposals else 0.0


def _sides_of(params):
    row = _kernels.config_row(*params)
    if row is None:
        return None
    return (row[_kernels.COL_LEN_A], row[_kernels.COL_LEN_B], row[_kernels.COL_LEN_C])


def _construct_unit_gauge(ta: float, tb: float, tc: float):
    """Closed-form vertices (A, B, C) with circle b = unit semicircle at 0."""
    cha, chb, chc = math.cosh(ta), math.cosh(tb), math.cosh(tc)
    shb = math.sinh(tb)
    q = (chb * chc - cha) / (chc * shb)
    if not -1.0 < q < 1.0:
        raise InfeasibleError("triangle is numerically degenerate")
    u = math.atanh(q)                     # altitude foot, measured from A toward C
    ch_h = chc / math.cosh(u)             # cosh of the altitude
    if ch_h <= 1.0:
        raise InfeasibleError("triangle is numerically degenerate (flat)")
    spsi = 1.0 / ch_h
    cpsi = math.sqrt((1.0 - spsi) * (1.0 + spsi))

    def window_edge(k):
        # positive root of k*cpsi*t^2 - (1 - k^2)*t - k*cpsi = 0
        half = (1.0 - k * k) / (2.0 * k * cpsi)
        return half + math.sqrt(half * half + 1.0)

    lam_lo = math.log(window_edge(math.exp(u)))
    lam_hi = math.log(window_edge(math.exp(u - tb))) - tb
    lam0 = 0.5 * (lam_lo + lam_hi)

    def on_circle(lam):
        t = math.exp(lam)
        return ((1.0 - t * t) / (1.0 + t * t), 2.0 * t / (1.0 + t * t))

    A = on_circle(lam0)
    C = on_circle(lam0 + tb)
    rho = math.exp(lam0 + u)
    den = 1.0 - 2.0 * rho * cpsi + rho * rho
    B = ((1.0 - rho * rho) / den, 2.0 * rho * spsi / den)
    return A, B, C


def _circle_through(p, q) -> Semicircle:
    if p[0] == q[0]:
        raise GaugeDegenerateError(
            "two vertices share an abscissa (vertical geodesic); "
            "choose a different anchor_x")
    cx = (q[0] * q[0] + q[1] * q[1] - p[0] * p[0] - p[1] * p[1]) / (2.0 * (q[0] - p[0]))
    return Semicircle(center_x=cx, radius=math.hypot(p[0] - cx, p[1]))


def _polish(params, targets):
    """Damped Gauss-Newton on (rc, oa, ra); oc and the gauge pair stay fixed.

    Returns (params, residual).  The full 1e-10 target is unreachable for
    a small set of thin triangles whose float64 circle representation
    quantizes the side lengths more coarsely; those stall below the
    round-trip bound instead.
    """
    def resid(p):
        got = _sides_of(p)
        if got is None:
            return None
        return [got[i] - targets[i] for i in range(3)]

    p = list(params)
    r = resid(p)
    if r is None:
        raise ConvergenceError("constructed configuration lost its intersections",
                               math.inf)
    m = max(abs(v) for v in r)
    for _ in range(100):
        if m < POLISH_TOL:
            return p, m
        jac = [[0.0] * 3 for _ in range(3)]
        cols = (1, 4, 5)  # rc, oa, ra
        failed = False
        for j, idx in enumerate(cols):
            h = 1e-7 * max(1.0, abs(p[idx]))
            while True:
                qp = list(p); qp[idx] += h
                qm = list(p); qm[idx] -= h
                rp, rm = resid(qp), resid(qm)
                if rp is not None and rm is not None:
                    break
                h *= 0.25
                if h < 1e-13 * max(1.0, abs(p[idx])):
                    failed = True
                    break
            if failed:
                break
            for i in range(3):
                jac[i][j] = (rp[i] - rm[i]) / (2.0 * h)
        if failed:
            break
        step = _solve3(jac, [-v for v in r])
        if step is None:
            break
        scale, accepted = 1.0, False
        for _ in range(30):
            q = list(p)
            for j, idx in enumerate(cols):
                q[idx] += scale * step[j]
            r2 = resid(q)
            if r2 is not None:
                m2 = max(abs(v) for v in r2)
                if m2 < m:
                    p, r, m, accepted = q, r2, m2, True
                    break
            scale *= 0.5
        if not accepted:
            break
    if m <= 0.5 * ROUND_TRIP_TOL:
        return p, m
    raise ConvergenceError(
        f"side polish stalled at residual {m:.3e}", m)


def _solve3(mat, rhs):
    aug = [list(mat[i]) + [rhs[i]] for i in range(3)]
    for col in range(3):
        piv = max(range(col, 3), key=lambda i: abs(aug[i][col]))
        if abs(aug[piv][col]) < 1e-300:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        for i in range(3):
            if i != col:
                f = aug[i][col] / aug[col][col]
                for k in range(col, 4):
                    aug[i][k] -= f * aug[col][k]
    return [aug[i][3] / aug[i][i] for i in range(3)]


def solve_sides(req: SolveRequest) -> TripleConfig:
    """Construct a canonical configuration realizing the requested sides.

    Round trip: the side lengths measured on the result match the
    targets within 1e-8 (normally far better).
    """
    ta, tb, tc = req.target_a, req.target_b, req.target_c
    A, B, C = _construct_unit_gauge(ta, tb, tc)
    circle_a = _circle_through(B, C)
    circle_c = _circle_through(A, B)
    # similarity pinning vertex A at (anchor_x, scale)
    sigma = req.gauge.scale / A[1]
    dx = req.gauge.anchor_x - sigma * A[0]
    params = [sigma * circle_c.center_x + dx, sigma * circle_c.radius,
              dx, sigma,
              sigma * circle_a.center_x + dx, sigma * circle_a.radius]
    params, _ = _polish(params, (ta, tb, tc))
    return build_triple(Semicircle(params[4], params[5]),
                        Semicircle(params[2], params[3]),
                        Semicircle(params[0], params[1]))


def _propose(rng: random.Random):
    oc = rng.uniform(-3.0, 3.0)
    d1 = rng.uniform(0.4, 2.0)
    d2 = rng.uniform(0.4, 2.0)
    rc = rng.uniform(0.6, 3.0)
    rb = rng.uniform(0.6, 3.0)
    ra = rng.uniform(0.6, 3.0)
    return (oc, rc, oc + d1, rb, oc + d1 + d2, ra)


def _acceptable(params, min_sin: float) -> bool:
    oc, rc, ob, rb, oa, ra = params
    A = _kernels.intersect_upper(ob, rb, oc, rc)
    B = _kernels.intersect_upper(oa, ra, oc, rc)
    C = _kernels.intersect_upper(oa, ra, ob, rb)
    if A is None or B is None or C is None:
        return False
    if not C[0] < B[0] < A[0]:
        return False
    # keep every vertex well off the axis relative to its circles
    if A[1] < min_sin * max(rb, rc) or B[1] < min_sin * max(ra, rc) \
            or C[1] < min_sin * max(ra, rb):
        return False
    return True


def sample_config(seed: int, n: int, min_sin: float = 0.02) -> list[TripleConfig]:
    """Deterministically sample n valid canonical configurations."""
    configs, _ = sample_config_with_stats(seed, n, min_sin)
    return configs


def sample_config_with_stats(seed: int, n: int,
                             min_sin: float = 0.02) -> tuple[list[TripleConfig], SampleStats]:
    """Like sample_config, also reporting the rejection statistics."""
    if n < 1:
        raise DomainError("n must be at least 1")
    rng = random.Random(seed)
    configs: list[TripleConfig] = []
    proposals = 0
    rejected = 0
    streak = 0
    while len(configs) < n:
        params = _propose(rng)
        proposals += 1
        if not _acceptable(params, min_sin):
            rejected += 1
            streak += 1
            if streak >= SAMPLER_MAX_REJECTS:
                raise HyptriError(
                    f"sampler exhausted after {streak} consecutive rejections")
            continue
        streak = 0
        oc, rc, ob, rb, oa, ra = params
        configs.append(build_triple(Semicircle(oa, ra), Semicircle(ob, rb),
                                    Semicircle(oc, rc)))
    return configs, SampleStats(proposals=proposals, rejected=rejected)


def config_params(t: TripleConfig) -> tuple[float, float, float, float, float, float]:
    """Kernel-order parameter tuple (oc, rc, ob, rb, oa, ra) of a config."""
    return (t.circle_c.center_x, t.circle_c.radius,
            t.circle_b.center_x, t.circle_b.radius,
            t.circle_a.center_x, t.circle_a.radius)


def run_report(t: TripleConfig, quad_tol: float = 1e-9, strict: bool = True) -> Report:
    """Measure everything on one configuration.

    strict=True validates the structural invariants first and raises on
    any violation; strict=False computes residuals for whatever was
    given, which is what fault-detection paths want.
    """
    if strict:
        t.validate()
    ra = radius_angles(t)
    measures = triangle_measures(t)
    radii = (t.circle_a.radius, t.circle_b.radius, t.circle_c.radius)
    wv = wv_table(ra, radii, tol=1e-9 if strict else math.inf)
    sines = law_sines_residual(measures)
    laws = LawReport(
        cosines_i=law_cosines_I_residual(measures),
        sines=sines,
        sines_lemma=lemma_projection_residuals(t),
        cosines_ii=law_cosines_II_residual(measures),
        cosines_ii_printed=law_cosines_II_printed_residual(measures),
        appendix=appendix_identity_residual(wv, radii, tol=math.inf),
    )
    relations = relation_residuals(t)
    deltas = []
    for circ, th1, th2, side in ((t.circle_a, ra.a1, ra.a2, measures.side_a),
                                 (t.circle_b, ra.b1, ra.b2, measures.side_b),
                                 (t.circle_c, ra.c1, ra.c2, measures.side_c)):
        quad = geodesic_length_quadrature(circ, th1, th2, quad_tol)
        deltas.append(abs(side.length - quad.value))
    return Report(config=t, radius_angles=ra, wv=wv, measures=measures,
                  laws=laws, relations=relations, oracle_deltas=tuple(deltas))
