"""Bergman kernels of generalized annuli.

Core evaluators live in the compiled extension; `run_suite` returns a parsed
check report for the named verification suite.
"""

import json as _json

from ._bergkern import (
    DomainError,
    NonConvergence,
    RectLattice,
    Weierstrass,
    boundary_decay_profile,
    complex_hessian_fd,
    kernel_closed,
    kernel_general,
    kernel_scan,
    kernel_series,
    levi_zeta_component,
    levi_zeta_fd,
    min_eigenvalue,
    monomial_norm,
    remark_identity_residual,
    suite_json,
    truncated_log_kernel,
    u0_eval,
)

__all__ = [
    "DomainError",
    "NonConvergence",
    "RectLattice",
    "Weierstrass",
    "boundary_decay_profile",
    "complex_hessian_fd",
    "kernel_closed",
    "kernel_general",
    "kernel_scan",
    "kernel_series",
    "levi_zeta_component",
    "levi_zeta_fd",
    "min_eigenvalue",
    "monomial_norm",
    "remark_identity_residual",
    "run_suite",
    "truncated_log_kernel",
    "u0_eval",
]


def run_suite(name, **kwargs):
    """Run a named check suite ('identities', 'theorem12', ...) and return
    the report as a dict."""
    return _json.loads(suite_json(name, **kwargs))
