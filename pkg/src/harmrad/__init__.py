"""Radius constants for harmonic maps f = h + conj(g) whose analytic part lies in a Ma-Minda class."""

from .psi import CATALOG, PsiSpec, H_psi, convexity_radius, extremal_hpsi, hpsi_prime_closed, psi_eval, psi_series
from .radii import (
    PROOF_CONSISTENT,
    TABLE_PRINTED,
    bernardi_radius,
    close_to_convex_radius,
    fully_convex_radius,
    fully_starlike_radius,
    fully_starlike_radius_improved,
    strongly_starlike_radius,
    uniform_radius,
    univalence_radius,
)
from .results import RadiusResult, VerificationReport
from .series import PowerSeries, bernardi_transform, hadamard, series_exp
from .solve import NoBracketError, NumericalFailure, minimize_on_circle, smallest_positive_root
from .verify import DilatationSpec, HarmonicMap, build_harmonic, counterexample_suite, table1_roots

__version__ = "0.1.0"
