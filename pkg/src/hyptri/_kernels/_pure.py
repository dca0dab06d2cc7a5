"""Pure-Python kernel backend.

Scalar primitives plus the batched sweeps used by the acceptance
property tests.  The compiled backend (``_fast.pyx``) mirrors this file
operation for operation; any change here must be replicated there.

Angle convention (canonical center order O_c <= O_b <= O_a):

* circle-a angles are measured from the negative x direction,
  ``a_k = atan2(y, O_a - x)``;
* circle-b and circle-c angles from the positive x direction,
  ``b_k = atan2(y, x - O_b)``, ``c_k = atan2(y, x - O_c)``.

With that convention every center-distance and vertex-angle identity of
the triple-semicircle construction holds with the printed signs, and the
arc sinh values are positive exactly in the canonical regime
``x_C < x_B < x_A``.
"""

import math

import numpy as np

BACKEND = "pure"

# residual_sweep column layout (shared with the compiled backend)
COL_REL_I_1, COL_REL_I_2, COL_REL_I_3 = 0, 1, 2
COL_REL_II = 3
COL_REL_II_WV = 4
COL_REL_II_ALT = 5
COL_PROJ_SUM = 6
COL_WV_X, COL_WV_Y, COL_WV_Z = 7, 8, 9
COL_COS_I_1, COL_COS_I_2, COL_COS_I_3 = 10, 11, 12
COL_SINES_DEV_1, COL_SINES_DEV_2 = 13, 14
COL_LEMMA_1, COL_LEMMA_2 = 15, 16
COL_SINES_FACTOR = 17
COL_COS_II_1, COL_COS_II_2, COL_COS_II_3 = 18, 19, 20
COL_COS_II_PRINTED = 21
COL_APPENDIX = 22
COL_DEFECT = 23
COL_LEN_A, COL_LEN_B, COL_LEN_C = 24, 25, 26
COL_COS_DIST_MAX = 27
COL_ALPHA, COL_BETA, COL_DELTA = 28, 29, 30
COL_VERTEX_COS_MAX = 31
N_COLS = 32


def intersect_upper(op, rp, oq, rq):
    """Upper intersection of two axis-centered circles.

    Returns ``(x, y, dxp, dxq)`` where ``dxp = x - op`` and ``dxq = x - oq``
    are computed without subtracting large center coordinates, and ``y``
    comes from Kahan's stable triangle-area formula.  Returns ``None``
    for disjoint, nested or tangent circles; callers must reject
    coincident centers beforehand.
    """
    d = abs(oq - op)
    if d == 0.0:
        return None
    if not (abs(rp - rq) < d < rp + rq):
        return None
    s = 1.0 if oq >= op else -1.0
    dxp = s * (d * d + rp * rp - rq * rq) / (2.0 * d)
    dxq = -s * (d * d + rq * rq - rp * rp) / (2.0 * d)
    # Kahan's form of Heron's formula for the triangle with sides d, rp, rq.
    if rp >= rq:
        hi, lo = rp, rq
    else:
        hi, lo = rq, rp
    if d >= hi:
        a, b, c = d, hi, lo
    elif d >= lo:
        a, b, c = hi, d, lo
    else:
        a, b, c = hi, lo, d
    t = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c))
    if t <= 0.0:
        return None
    y = 0.5 * math.sqrt(t) / d
    return (op + dxp, y, dxp, dxq)


def arc_cosh_sinh(t1, t2):
    """Hyperbolic cosine/sine of the arc between polar angles t1, t2.

    Evaluates ``(1 - cos t1 cos t2)/(sin t1 sin t2)`` and
    ``(cos t1 - cos t2)/(sin t1 sin t2)`` through the half-angle form,
    which stays accurate when the angles nearly coincide.  The sinh is
    signed exactly like the quotient form: positive for t2 > t1.
    """
    sh = math.sin(0.5 * (t1 + t2))
    sd = math.sin(0.5 * (t2 - t1))
    den = math.sin(t1) * math.sin(t2)
    return (sh * sh + sd * sd) / den, 2.0 * sh * sd / den


def _simpson(lo, hi, flo, fmid, fhi):
    return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi)


def quad_inv_sin(t1, t2, tol, max_evals=1000000):
    """Adaptive Simpson quadrature of 1/sin over [t1, t2].

    Returns ``(value, error_estimate, evaluations)``.  The estimate is the
    accumulated |S2 - S1| / 15 of the accepted panels; if the evaluation
    cap is reached the estimate is reported as infinity.
    """
    lo, hi = (t1, t2) if t1 <= t2 else (t2, t1)
    if lo == hi:
        return 0.0, 0.0, 0
    state = [0, False]  # evaluations, budget exceeded

    def f(x):
        state[0] += 1
        return 1.0 / math.sin(x)

    def rec(a, b, fa, fm, fb, whole, budget, depth):
        if state[1]:
            return whole, 0.0
        mid = 0.5 * (a + b)
        lm = 0.5 * (a + mid)
        rm = 0.5 * (mid + b)
        if state[0] + 2 > max_evals:
            state[1] = True
            return whole, 0.0
        flm = f(lm)
        frm = f(rm)
        left = _simpson(a, mid, fa, flm, fm)
        right = _simpson(mid, b, fm, frm, fb)
        delta = left + right - whole
        if depth >= 60 or abs(delta) <= 15.0 * budget:
            return left + right + delta / 15.0, abs(delta) / 15.0
        lv, le = rec(a, mid, fa, flm, fm, left, 0.5 * budget, depth + 1)
        rv, re = rec(mid, b, fm, frm, fb, right, 0.5 * budget, depth + 1)
        return lv + rv, le + re

    fa = f(lo)
    fb = f(hi)
    fm = f(0.5 * (lo + hi))
    whole = _simpson(lo, hi, fa, fm, fb)
    value, err = rec(lo, hi, fa, fm, fb, whole, tol, 0)
    if state[1]:
        return value, math.inf, state[0]
    return value, err, state[0]


def _rel(u, v):
    return abs(u - v) / max(abs(u), abs(v), 1e-300)


def config_row(oc, rc, ob, rb, oa, ra):
    """Evaluate every identity and law for one circle configuration.

    Returns a tuple of N_COLS floats, or ``None`` when an intersection is
    missing or two vertices coincide.  Input order is the canonical one:
    centers ``oc <= ob <= oa``.
    """
    A = intersect_upper(ob, rb, oc, rc)
    B = intersect_upper(oa, ra, oc, rc)
    C = intersect_upper(oa, ra, ob, rb)
    if A is None or B is None or C is None:
        return None
    if (A[0] == B[0] and A[1] == B[1]) or (A[0] == C[0] and A[1] == C[1]) \
            or (B[0] == C[0] and B[1] == C[1]):
        return None
    # directional radius angles; subscript 1 pairs with the vertex the
    # shared-height relations require (a1<->C, a2<->B, b1<->A, b2<->C,
    # c1<->A, c2<->B)
    a1 = math.atan2(C[1], -C[2])
    a2 = math.atan2(B[1], -B[2])
    b1 = math.atan2(A[1], A[2])
    b2 = math.atan2(C[1], C[3])
    c1 = math.atan2(A[1], A[3])
    c2 = math.atan2(B[1], B[3])

    sa1, ca1 = math.sin(a1), math.cos(a1)
    sa2, ca2 = math.sin(a2), math.cos(a2)
    sb1, cb1 = math.sin(b1), math.cos(b1)
    sb2, cb2 = math.sin(b2), math.cos(b2)
    sc1, cc1 = math.sin(c1), math.cos(c1)
    sc2, cc2 = math.sin(c2), math.cos(c2)

    # designation table
    w01, w1 = ra * ca1, ra * sa1
    v01, v1 = ra * ca2, ra * sa2
    w02, w2 = rb * cb1, rb * sb1
    v02, v2 = rb * cb2, rb * sb2
    w03, w3 = rc * cc1, rc * sc1
    v03, v3 = rc * cc2, rc * sc2

    out = [0.0] * N_COLS
    out[COL_REL_I_1] = _rel(w1, v2)
    out[COL_REL_I_2] = _rel(v3, v1)
    out[COL_REL_I_3] = _rel(w3, w2)

    o_cb = ob - oc
    o_ba = oa - ob
    o_ac = oa - oc
    lhs = w03 - w02
    rhs = v03 + v01 - w01 - v02
    scale = max(abs(w03), abs(w02), abs(v03), abs(v01), abs(w01), abs(v02), 1e-300)
    out[COL_REL_II] = abs(lhs - rhs) / scale
    out[COL_REL_II_WV] = out[COL_REL_II]
    out[COL_REL_II_ALT] = abs((w03 - v03) - (w02 - v02 - (w01 - v01))) / scale

    # projections from the stable cosine differences
    p_bc = ra * 2.0 * math.sin(0.5 * (a1 + a2)) * math.sin(0.5 * (a2 - a1))
    p_ac = rb * 2.0 * math.sin(0.5 * (b1 + b2)) * math.sin(0.5 * (b2 - b1))
    p_ab = rc * 2.0 * math.sin(0.5 * (c1 + c2)) * math.sin(0.5 * (c2 - c1))
    out[COL_PROJ_SUM] = abs(p_ac - p_ab - p_bc) / max(abs(p_ac), abs(p_ab), abs(p_bc), 1e-300)

    out[COL_WV_X] = _rel(w2, w3)
    out[COL_WV_Y] = _rel(v1, v3)
    out[COL_WV_Z] = _rel(w1, v2)

    cha, sha = arc_cosh_sinh(a1, a2)
    chb, shb = arc_cosh_sinh(b1, b2)
    chc, shc = arc_cosh_sinh(c1, c2)
    sha, shb, shc = abs(sha), abs(shb), abs(shc)
    out[COL_LEN_A] = math.asinh(sha)
    out[COL_LEN_B] = math.asinh(shb)
    out[COL_LEN_C] = math.asinh(shc)

    alpha = b1 - c1
    beta = a2 + c2
    delta = math.pi - a1 - b2
    out[COL_ALPHA] = alpha
    out[COL_BETA] = beta
    out[COL_DELTA] = delta
    out[COL_DEFECT] = math.pi - (alpha + beta + delta)

    cal, sal = math.cos(alpha), math.sin(alpha)
    cbe, sbe = math.cos(beta), math.sin(beta)
    cde, sde = math.cos(delta), math.sin(delta)

    out[COL_COS_I_1] = abs(chc - (cha * chb - sha * shb * cde)) / max(1.0, cha * chb)
    out[COL_COS_I_2] = abs(chb - (cha * chc - shc * sha * cbe)) / max(1.0, cha * chc)
    out[COL_COS_I_3] = abs(cha - (chc * chb - shc * shb * cal)) / max(1.0, chc * chb)

    rat_a = sha / sal
    rat_b = shb / sbe
    rat_c = shc / sde
    out[COL_SINES_DEV_1] = abs(rat_b - rat_a) / rat_a
    out[COL_SINES_DEV_2] = abs(rat_c - rat_a) / rat_a

    q1 = p_bc / o_cb
    q2 = p_ac / o_ac
    q3 = p_ab / o_ba
    out[COL_LEMMA_1] = abs(q2 - q1) / max(1.0, abs(q1))
    out[COL_LEMMA_2] = abs(q3 - q1) / max(1.0, abs(q1))

    factor = (p_bc / (w03 - w02)) * (ra * rb * rc) / (w2 * v1 * w1)
    out[COL_SINES_FACTOR] = abs(rat_a - factor) / rat_a

    term1 = sal * sbe * chc
    out[COL_COS_II_1] = abs(cde - (term1 - cal * cbe)) / max(1.0, abs(term1))
    term2 = sal * sde * chb
    out[COL_COS_II_2] = abs(cbe - (term2 - cal * cde)) / max(1.0, abs(term2))
    term3 = sbe * sde * cha
    out[COL_COS_II_3] = abs(cal - (term3 - cbe * cde)) / max(1.0, abs(term3))
    out[COL_COS_II_PRINTED] = abs(cde - (-cal * cbe - term1)) / max(1.0, abs(term1))

    lhs_app = v2 * w1 * (w2 * w2 + v1 * v1 + (w02 - v02) ** 2 + (w01 - v01) ** 2) \
        - 2.0 * v02 * w01 * (w02 - v02) * (w01 - v01)
    rhs_app = 2.0 * (ra * ra - v01 * w01) * (rb * rb - v02 * w02)
    out[COL_APPENDIX] = abs(lhs_app - rhs_app) / max(1.0, abs(rhs_app))

    # quotient cosines from squared center distances
    d = 0.0
    d = max(d, abs((o_ac * o_ac - rc * rc + ra * ra) / (2.0 * ra * o_ac) - ca2))
    d = max(d, abs((o_ac * o_ac - ra * ra + rc * rc) / (2.0 * rc * o_ac) - cc2))
    d = max(d, abs((o_ba * o_ba - ra * ra + rb * rb) / (2.0 * rb * o_ba) - cb2))
    d = max(d, abs((o_ba * o_ba - rb * rb + ra * ra) / (2.0 * ra * o_ba) - ca1))
    d = max(d, abs((o_cb * o_cb - rb * rb + rc * rc) / (2.0 * rc * o_cb) - cc1))
    d = max(d, abs((-o_cb * o_cb + rc * rc - rb * rb) / (2.0 * rb * o_cb) - cb1))
    out[COL_COS_DIST_MAX] = d

    d = abs((rc * rc + rb * rb - o_cb * o_cb) / (2.0 * rb * rc) - cal)
    d = max(d, abs(-(rc * rc + ra * ra - o_ac * o_ac) / (2.0 * ra * rc) - cbe))
    d = max(d, abs((ra * ra + rb * rb - o_ba * o_ba) / (2.0 * rb * ra) - cde))
    out[COL_VERTEX_COS_MAX] = d
    return tuple(out)


def residual_sweep(params):
    """Run config_row over an (n, 6) array of (oc, rc, ob, rb, oa, ra).

    Rows that fail to form a triple come back as NaN.
    """
    params = np.asarray(params, dtype=np.float64)
    n = params.shape[0]
    out = np.empty((n, N_COLS), dtype=np.float64)
    for i in range(n):
        row = config_row(params[i, 0], params[i, 1], params[i, 2],
                         params[i, 3], params[i, 4], params[i, 5])
        if row is None:
            out[i, :] = np.nan
        else:
            out[i, :] = row
    return out


def oracle_delta_sweep(params, tol):
    """|closed-form side length - quadrature| for each side of each config."""
    params = np.asarray(params, dtype=np.float64)
    n = params.shape[0]
    out = np.empty((n, 3), dtype=np.float64)
    for i in range(n):
        oc, rc, ob, rb, oa, ra = params[i]
        A = intersect_upper(ob, rb, oc, rc)
        B = intersect_upper(oa, ra, oc, rc)
        C = intersect_upper(oa, ra, ob, rb)
        if A is None or B is None or C is None:
            out[i, :] = np.nan
            continue
        pairs = (
            (math.atan2(C[1], -C[2]), math.atan2(B[1], -B[2])),
            (math.atan2(A[1], A[2]), math.atan2(C[1], C[3])),
            (math.atan2(A[1], A[3]), math.atan2(B[1], B[3])),
        )
        for j, (t1, t2) in enumerate(pairs):
            _, sh = arc_cosh_sinh(t1, t2)
            closed = math.asinh(abs(sh))
            val, _, _ = quad_inv_sin(t1, t2, tol)
            out[i, j] = abs(closed - val)
    return out
