"""Minimal bigraded resolutions of Rees algebras of monomial plane curves.

For coprime 0 < u < d/2 the ideal <T0^d, T0^(d-u) T1^u, T1^d> has a Rees
algebra whose defining equations, syzygies and second syzygies are given by
closed formulas driven by a slow variant of the Euclidean algorithm.  The
package builds those formulas, checks them against an independent Groebner
basis computation, and counts adjoint pencils of the curve.
"""

from .euclid import InputPair, coprime_pairs, euclid_data, sers_data, validate
from .reesfamilies import (
    betti_numbers,
    build_resolution,
    context,
    f0_family,
    f1_family,
    f2_family,
    resolution,
    verify_resolution,
)

__version__ = "0.1.0"

__all__ = [
    "InputPair",
    "betti_numbers",
    "build_resolution",
    "context",
    "coprime_pairs",
    "euclid_data",
    "f0_family",
    "f1_family",
    "f2_family",
    "resolution",
    "sers_data",
    "validate",
    "verify_resolution",
]
