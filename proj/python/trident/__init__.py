"""Restricted colored base-3 partition polynomials."""

from ._trident import (
    CapExceeded,
    NoConvergence,
    count_partitions,
    enumerate_partitions,
    profile,
    q_poly,
    r_poly,
    run_cli,
    s_poly,
    s_poly_str,
    scalar_qr,
    spec_poly,
    verify_locus,
    zeros,
)

__all__ = [
    "CapExceeded",
    "NoConvergence",
    "count_partitions",
    "enumerate_partitions",
    "profile",
    "q_poly",
    "r_poly",
    "run_cli",
    "s_poly",
    "s_poly_str",
    "scalar_qr",
    "spec_poly",
    "verify_locus",
    "zeros",
]

__version__ = "0.1.0"
