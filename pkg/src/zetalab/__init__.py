"""Numerical laboratory for the Riemann zeta function in the critical strip."""

from .bernoulli import b3_max, bernoulli_number, bernoulli_poly, periodic_bernoulli
from .errors import DomainError, NumericalFailure, PoleError, RangeError, SingularityError
from .psi_probe import (
    PhiTerms,
    PsiDecomposition,
    contradiction_sets,
    em_remainder,
    em_remainder_bound,
    f_derivative,
    f_eval,
    phi_direct,
    phi_em,
    psi,
    psi_decompose,
)
from .zeros import RegionReport, ZeroRecord, region_sigma_bound, scan_critical_line, verify_region, verify_symmetry
from .zeta_eval import (
    EMParams,
    EvalResult,
    Method,
    em_zeta,
    eta_series,
    integral_zeta,
    tail_bound,
    tail_integral,
    zeta_from_eta,
)

__version__ = "0.1.0"
