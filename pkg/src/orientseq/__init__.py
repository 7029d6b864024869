"""Special orientable sequences: constructions, lifts and exact verification."""

from ._accel import BACKEND
from .bounds import BoundBreakdown, os2_max_period, sos_bound, sos_bound_oracle
from .constructions import (
    ConstructionError,
    ConstructionParams,
    choose_xyz,
    construct,
    embed_qprime,
    goodify,
    increment_embed,
    join_negative,
    make_S2,
    make_T,
    make_T2,
    make_U,
    make_U_prime,
    make_U_star,
    make_U_starstar,
)
from .euler import EulerGraph, build_graph, eulerian_with_prefix, os2_maximal, os2_starter
from .lempel import d_beta, d_inverse, extend_Ea, sos3, sos_general, tower
from .seq import (
    RingSequence,
    embed_E,
    map_M,
    negate,
    reverse,
    translate,
    weight,
    weight_mod,
    window,
)
from .verify import (
    CertificationError,
    PropertyReport,
    check_disjoint,
    check_good,
    check_negative_orientable,
    check_orientable,
    check_special,
    check_window,
    report,
)

__version__ = "0.1.0"
