"""Exact-arithmetic tools for unexpected hypersurfaces of point
configurations and the companion varieties of their defining forms."""

__version__ = "0.1.0"

from .field import (Field, FieldError, FieldSpec, default_field_specs,
                    make_field)
from .configs import (PointConfiguration, catalog, config_from_json,
                      config_requirements, normalize_point)
from .poly import (BihomForm, MultiPoly, bihom_to_text, parse_bihom,
                   parse_poly, poly_to_text, proportional, tangent_cone)
from .ideals import (GradedPiece, HVector, evaluation_rows, h_vector_points,
                     hilbert_function, ideal_piece, minimal_generators)
from .unexpected import (BihomSolveError, BihomSolveResult, DisagreementError,
                         UnexpectedReport, actual_dimension, bmss_report,
                         cone_property, expected_dimension, is_unexpected,
                         solve_bihom)
from .companion import (MapReport, RationalMapDescriptor, StabilizationError,
                        alphabet_points, base_locus_probe, blowup_degree,
                        catalog_map, decompose, fermat_catalog_maps,
                        image_degree_and_hvector, image_hilbert_function,
                        image_ideal_basis, image_ideal_dims, image_report,
                        jacobian_rank_probe, map_degree,
                        reference_decompose_basis, support_decompose_basis)

__all__ = [
    "Field", "FieldError", "FieldSpec", "default_field_specs", "make_field",
    "PointConfiguration", "catalog", "config_from_json",
    "config_requirements", "normalize_point",
    "BihomForm", "MultiPoly", "bihom_to_text", "parse_bihom", "parse_poly",
    "poly_to_text", "proportional", "tangent_cone",
    "GradedPiece", "HVector", "evaluation_rows", "h_vector_points",
    "hilbert_function", "ideal_piece", "minimal_generators",
    "BihomSolveError", "BihomSolveResult", "DisagreementError",
    "UnexpectedReport", "actual_dimension", "bmss_report", "cone_property",
    "expected_dimension", "is_unexpected", "solve_bihom",
    "MapReport", "RationalMapDescriptor", "StabilizationError",
    "alphabet_points", "base_locus_probe", "blowup_degree", "catalog_map",
    "decompose", "fermat_catalog_maps", "image_degree_and_hvector",
    "image_hilbert_function", "image_ideal_basis", "image_ideal_dims",
    "image_report", "jacobian_rank_probe", "map_degree",
    "reference_decompose_basis", "support_decompose_basis",
]
