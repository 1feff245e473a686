"""Distances between Schubert varieties in flag varieties G/P, the 2-point
quantum K-theory they determine, and checks for quantum K structure-constant
tables."""

from .distance import (
    CurveGraph, Degree, build_curve_graph, connected_by_degree, curve_class,
    dist, dist_beta, fixed_points_opposite, fixed_points_schubert,
    pareto_min_degrees,
)
from .qkcore import (
    KClass, QSeries, chi_series, euler_char, gw_two_point, metric,
    metric_truncated, pairing_classical,
)
from .rootsys import CartanType, RootSystem, build_root_system, in_parabolic_span, pairing
from .verify import (
    QKTable, bundled_table, check_euler_dist, check_ringhom, check_sumcoef,
    load_table, mobius_coeffs, parse_table, product, run_checks,
)
from .weyl import WeylElement, WeylGroup, bruhat_leq_subword, weyl_group

__version__ = "0.1.0"
