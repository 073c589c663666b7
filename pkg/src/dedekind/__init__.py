"""Two-character generalized Dedekind sums and their exact second-moment identities.

Modules:
    chargroup  exact Dirichlet characters and multiplicative functions
    analytic   Bernoulli functions, Gauss sums, L(1, chi) for odd characters
    sums       the generalized Dedekind sum in four forms plus Gamma_0 algebra
    moments    finite Fourier transform, g-factor, second-moment identities
    cli        command-line front end (`dedekind` entry point)
"""

from .chargroup import (
    CharacterGroup,
    DirichletCharacter,
    Factorization,
    characters,
    count_primitive_with_parity,
    dirichlet_convolve,
    divisors,
    euler_phi,
    factorize,
    mobius,
    phi_star,
    principal,
    product,
    unit_group,
)
from .analytic import (
    LValue,
    b1,
    b1_chi,
    b1_chi_series,
    char_sum_b1,
    char_sum_b1_brute,
    char_sum_b1chi,
    char_sum_b1chi_brute,
    gauss_sum,
    gauss_sum_all,
    gauss_sum_via_primitive,
    l_one,
)
from .sums import (
    DedekindContext,
    GammaMatrix,
    classical_context,
    classical_s,
    crossed_hom_residual,
    gamma_from_ac,
    invert_residual,
    make_context,
    negate_residual,
    random_gamma0,
    s_b1chi,
    s_cotangent,
    s_direct,
    s_matrix,
    s_single_b1,
    scale_residual,
)
from .moments import (
    GFactor,
    HypothesisError,
    IdentityViolation,
    MomentReport,
    PsiTerm,
    SweepRow,
    bounds_sweep,
    fourier_brute,
    fourier_closed,
    g_factor,
    g_sq_bound,
    nonvanishing_witness,
    ratio_envelope,
    second_moment_brute,
    second_moment_closed,
    sweep_csv,
    walum_lhs,
    walum_rhs,
)

__version__ = "0.1.0"
