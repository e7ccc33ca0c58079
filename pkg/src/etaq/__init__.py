"""Exact eta-quotient expansions and sign-pattern verification."""
from .qseries import CoeffSeries, EtaQuotientSpec, eta_coefficients, eta_fourier_series
from .verify import VerificationReport, sturm_bound, verify_identity, verify_theorem

__all__ = [
    "CoeffSeries",
    "EtaQuotientSpec",
    "VerificationReport",
    "eta_coefficients",
    "eta_fourier_series",
    "sturm_bound",
    "verify_identity",
    "verify_theorem",
]
__version__ = "0.1.0"
