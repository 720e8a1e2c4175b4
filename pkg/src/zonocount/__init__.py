"""Lattice zonotopes inscribed in [0,n]^d: exact counts, asymptotics, sampling.

Layers:

* ``primitives`` — primitive directions of the nonnegative orthant and their
  sign-class weights (the index set of the generating function).
* ``exact`` — arbitrary-precision coefficient extraction (counts and exact
  first moments), plus an independent brute-force oracle.
* ``special`` — Riemann zeta / gamma numerics and refined zeta zeros.
* ``asympt`` — the closed-form estimate ln alpha + beta ln n + Q(n^(1/(d+1)))
  + I_crit, its saddle-form twin, and the moment asymptotics.
* ``sampler`` — Boltzmann sampling at the saddle parameter with seeded
  reproducibility.
* ``cli`` — the ``zonocount`` command.
"""

from .asympt import (
    AsympEstimate,
    RationalPoly,
    SaddleData,
    WaveForm,
    alpha_ln,
    beta_exact,
    estimate,
    estimate_saddle_form,
    icrit,
    icrit_theta,
    icrit_wave_form,
    kappa,
    kappa_factored,
    log_zon_univariate,
    mean_diameter_asympt,
    mean_occurrence_asympt,
    pd_poly,
    pi_d_apply,
    pi_d_zeta_at_zero,
    q_poly,
    q_poly_factored,
    q_value,
    saddle_theta,
    theta_tilde,
)
from .exact import (
    BruteForceResult,
    CoeffTable,
    EnumerationBudgetError,
    MemoryBudgetError,
    MomentPair,
    brute_force_count,
    build_table,
    diameter_moment,
    diameter_numerators,
    occurrence_moments,
    occurrence_numerators,
    zon_coefficient,
    zon_cumulative,
)
from .primitives import (
    PrimVec,
    count_primitive_moebius,
    enumerate_primitive,
    is_primitive,
    iter_primitive_l1,
)
from .sampler import (
    ClassSystem,
    SampleStats,
    ZonotopeSample,
    boltzmann_sample,
    class_system,
    expected_directions_truncated,
    expected_endpoint_truncated,
    iter_samples,
    sample_stats,
    signed_representative,
    to_polygon,
    truncation_bias_estimate,
    write_polygon_csv,
    write_sample_csv,
)
from .special import (
    EULER_GAMMA,
    SpecialFunctionError,
    ZeroVerificationError,
    ZetaZero,
    bernoulli,
    first_zero,
    gamma_complex,
    load_zeros_file,
    refine_zero,
    zeta_complex,
    zeta_deriv_complex,
    zeta_deriv_neg_int,
    zeta_neg_int,
    zeta_real,
)

__version__ = "0.1.0"
