"""Closed-form disjunctive cuts for two-term disjunctions on second-order and p-order cones."""

from .cone import (ConeSpec, Membership, Region, classify_porder, classify_soc, p_norm,
                   sample_cone_point, sample_cone_points)
from .cuts import (BSets, ConicQuadraticCut, ConvexRadicalCut, LinearCut, Member, PointQuadratics,
                   Separated, VLICertificate, b_sets, beta_star, conic_form_vector,
                   convex_cut_margin, cqr_holds, cut_family, inf_f, linear_certificate, linear_cut,
                   membership, membership_batch, n_coefficient, point_quadratics, separate)
from .disjunction import (ClassificationReport, Disjunction, DSets, containment, d_sets, normalize,
                          preflight, strict_feasibility)
from .errors import (AssumptionViolation, DomainError, InvalidArgumentError, InvalidInputError,
                     InvalidInstanceError, NoCertificateError, NumericalFailure, SocDisjError,
                     UnsupportedInstanceError)
from .intervals import BetaInterval
from .oracle import ValidityReport, grid_infimum, sample_hull_points, tau_roots, verify_validity
from .porder import (POrderSplitCut, POrderSplitInstance, pcomplement_margin, pmain_margin,
                     split_cut_margin, tau_star)

__version__ = "0.1.0"

__all__ = [
    "ConeSpec", "Membership", "Region", "classify_porder", "classify_soc", "p_norm",
    "sample_cone_point", "sample_cone_points", "BSets", "ConicQuadraticCut", "ConvexRadicalCut",
    "LinearCut", "Member", "PointQuadratics", "Separated", "VLICertificate", "b_sets", "beta_star",
    "conic_form_vector", "convex_cut_margin", "cqr_holds", "cut_family", "inf_f",
    "linear_certificate", "linear_cut", "membership", "membership_batch", "n_coefficient",
    "point_quadratics", "separate", "ClassificationReport", "Disjunction", "DSets", "containment",
    "d_sets", "normalize", "preflight", "strict_feasibility", "AssumptionViolation", "DomainError",
    "InvalidArgumentError", "InvalidInputError", "InvalidInstanceError", "NoCertificateError",
    "NumericalFailure", "SocDisjError", "UnsupportedInstanceError", "BetaInterval",
    "ValidityReport", "grid_infimum", "sample_hull_points", "tau_roots", "verify_validity",
    "POrderSplitCut", "POrderSplitInstance", "pcomplement_margin", "pmain_margin",
    "split_cut_margin", "tau_star",
]
