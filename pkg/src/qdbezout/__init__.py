"""Counting zeros of polynomials in quadrature domains with Bezout matrices.

A simply connected quadrature domain is the image of the upper half-plane
under a rational map ``phi``.  The zeros of ``p`` inside it are read off the
inertia of a Hermitian matrix built from ``p(phi)`` and its reflection.
"""
__version__ = "0.1.0"

from .bezout import (HermitianForm, OrderedPoleBasis, SignatureMatrix, hermitian_form,
                     inertia, ordered_basis_and_J, signature_form, surface_bezoutian)
from .counting import (ZeroCountReport, count_by_corollary, count_zeros_in_domain,
                       hermite_half_plane_count)
from .errors import (AmbiguousRankError, DegreeOverflowError, ExactModeUnavailable,
                     InvalidInput, NumericalFailure, PoleConfigurationError, QDError)
from .gallery import GalleryDomain, gallery_lookup
from .oracles import (FiberReport, cauchy_index, dividing_check, fiber_imbalance,
                      membership_count)
from .poly import (Polynomial, classical_bezout, poly_arith, poly_gcd, poly_gcd_extended,
                   poly_roots)
from .ratfun import (PoleDivisor, RationalFunction, compose_poly_ratfun,
                     partial_fraction_matrix, pole_divisor, ratfun_tau, to_common_denominator)
from .scalars import DOUBLE, EXACT, GaussRat, format_scalar, parse_scalar

__all__ = [
    "AmbiguousRankError", "DOUBLE", "DegreeOverflowError", "EXACT", "ExactModeUnavailable",
    "FiberReport", "GalleryDomain", "GaussRat", "HermitianForm", "InvalidInput",
    "NumericalFailure", "OrderedPoleBasis", "PoleConfigurationError", "PoleDivisor",
    "Polynomial", "QDError", "RationalFunction", "SignatureMatrix", "ZeroCountReport",
    "cauchy_index", "classical_bezout", "compose_poly_ratfun", "count_by_corollary",
    "count_zeros_in_domain", "dividing_check", "fiber_imbalance", "format_scalar",
    "gallery_lookup", "hermite_half_plane_count", "hermitian_form", "inertia",
    "membership_count", "ordered_basis_and_J", "parse_scalar", "partial_fraction_matrix",
    "poly_arith", "poly_gcd", "poly_gcd_extended", "poly_roots", "pole_divisor",
    "ratfun_tau", "signature_form", "surface_bezoutian", "to_common_denominator",
]
