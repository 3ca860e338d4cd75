"""Complete elliptic integrals, the function psi, and rectangle moduli.

psi(r) = 2 (E(r) - (1-r) K(r)) / (E'(r) - r K'(r)) maps (0,1) onto (0,inf);
the exterior modulus of [0,1] x [0,b] is mu(psi^-1(1/b)) / pi.
"""

from .elliptic import (
    EllipticState,
    EllipticValues,
    agm,
    ellip_e,
    ellip_k,
    elliptic_combination,
    elliptic_values,
    legendre_residual,
    series_oracle,
)
from .errors import ConvergenceError, DomainError
from .modulus import (
    ModulusBounds,
    ModulusResult,
    comparison_gap,
    exterior_modulus,
    interior_modulus,
    modulus_bounds,
    modulus_power_mean_check,
    r0_constant,
    rectangle,
)
from .psimu import (
    BoundPair,
    f8,
    f8_root,
    mu,
    mu_inv,
    mu_prime,
    power_mean,
    psi,
    psi_bounds,
    psi_identity_residuals,
    psi_inv,
    psi_prime,
)
from .report import CheckReport, GridSpec
from .roots import newton_bisect

__all__ = [
    "BoundPair", "CheckReport", "ConvergenceError", "DomainError", "EllipticState",
    "EllipticValues", "GridSpec", "ModulusBounds", "ModulusResult", "agm",
    "comparison_gap", "ellip_e", "ellip_k", "elliptic_combination", "elliptic_values",
    "exterior_modulus", "f8", "f8_root", "interior_modulus", "legendre_residual",
    "modulus_bounds", "modulus_power_mean_check", "mu", "mu_inv", "mu_prime",
    "newton_bisect", "power_mean", "psi", "psi_bounds", "psi_identity_residuals",
    "psi_inv", "psi_prime", "r0_constant", "rectangle", "series_oracle",
]
