"""Exact invariants of complex hyperplane arrangements.

Arrangements are passed as a list of integer covectors plus the ambient
dimension. Levels that are infinite come back as None.
"""

from ._arrtop import (
    DEFAULT_SEED,
    ArrtopError,
    __version__,
    exponents,
    gr_pi_p_cokernel,
    k_genericity,
    lcs_ranks,
    normalize,
    p_connectivity,
    pi_p_hilbert_series,
    poincare,
    polar_degree,
    run_cli,
    u_envelope_dims,
    verify_resolution,
)

__all__ = [
    "DEFAULT_SEED",
    "ArrtopError",
    "__version__",
    "exponents",
    "gr_pi_p_cokernel",
    "k_genericity",
    "lcs_ranks",
    "normalize",
    "p_connectivity",
    "pi_p_hilbert_series",
    "poincare",
    "polar_degree",
    "run_cli",
    "u_envelope_dims",
    "verify_resolution",
]
