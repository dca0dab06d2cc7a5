"""Numeric kernel backend selection.

The compiled Cython module is preferred when it was built; otherwise the
pure-Python implementation is used.  Both expose the same names and
produce the same values (the compiled module mirrors ``_pure`` operation
for operation and is compiled without FP contraction).
"""

from . import _pure

try:
    from . import _fast as _impl
    BACKEND = "cython"
except ImportError:
    _impl = _pure
    BACKEND = "pure"

intersect_upper = _impl.intersect_upper
arc_cosh_sinh = _impl.arc_cosh_sinh
quad_inv_sin = _impl.quad_inv_sin
config_row = _impl.config_row
residual_sweep = _impl.residual_sweep
oracle_delta_sweep = _impl.oracle_delta_sweep

COL_REL_I_1 = _pure.COL_REL_I_1
COL_REL_I_2 = _pure.COL_REL_I_2
COL_REL_I_3 = _pure.COL_REL_I_3
COL_REL_II = _pure.COL_REL_II
COL_REL_II_WV = _pure.COL_REL_II_WV
COL_REL_II_ALT = _pure.COL_REL_II_ALT
COL_PROJ_SUM = _pure.COL_PROJ_SUM
COL_WV_X = _pure.COL_WV_X
COL_WV_Y = _pure.COL_WV_Y
COL_WV_Z = _pure.COL_WV_Z
COL_COS_I_1 = _pure.COL_COS_I_1
COL_COS_I_2 = _pure.COL_COS_I_2
COL_COS_I_3 = _pure.COL_COS_I_3
COL_SINES_DEV_1 = _pure.COL_SINES_DEV_1
COL_SINES_DEV_2 = _pure.COL_SINES_DEV_2
COL_LEMMA_1 = _pure.COL_LEMMA_1
COL_LEMMA_2 = _pure.COL_LEMMA_2
COL_SINES_FACTOR = _pure.COL_SINES_FACTOR
COL_COS_II_1 = _pure.COL_COS_II_1
COL_COS_II_2 = _pure.COL_COS_II_2
COL_COS_II_3 = _pure.COL_COS_II_3
COL_COS_II_PRINTED = _pure.COL_COS_II_PRINTED
COL_APPENDIX = _pure.COL_APPENDIX
COL_DEFECT = _pure.COL_DEFECT
COL_LEN_A = _pure.COL_LEN_A
COL_LEN_B = _pure.COL_LEN_B
COL_LEN_C = _pure.COL_LEN_C
COL_COS_DIST_MAX = _pure.COL_COS_DIST_MAX
COL_ALPHA = _pure.COL_ALPHA
COL_BETA = _pure.COL_BETA
COL_DELTA = _pure.COL_DELTA
COL_VERTEX_COS_MAX = _pure.COL_VERTEX_COS_MAX
N_COLS = _pure.N_COLS
