"""Exact and Monte Carlo descent statistics of standard Young tableaux.

Shapes are lists of weakly decreasing positive parts, tableaux are lists of
rows. Exact results come back as ints and fractions.Fraction; Monte Carlo
summaries as floats.
"""

from ._core import (  # noqa: F401
    __version__,
    CapExceeded,
    DomainError,
    InternalError,
    all_partitions,
    char_ratios,
    character_via_descent_weights,
    chebyshev_tail_bound,
    conjugate,
    content_sum,
    count_syt,
    des,
    descent_position_probability,
    descent_set,
    descent_statistic,
    dominates,
    enumerate_syt,
    expected_descent_statistic,
    expected_maj,
    genfun_moments,
    hecke_exponents,
    hook_lengths,
    joint_descent_probabilities,
    maj,
    maj_genfun_coeffs,
    mn_character,
    run_concentration_experiment,
    sample_statistics,
    sample_syt,
    squared_content_sum,
    variance_descent_statistic,
    variance_maj,
    verify,
)
