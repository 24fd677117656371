"""Exact computer-algebra engine for Bourbaki degrees of plane curves."""

__version__ = "0.1.0"

from .fields import QQ, PrimeField, RationalField, field_from_name
from .poly import (Polynomial, MonomialOrder, elimination_order, grevlex, lex,
                   poly_arith)
from .parsing import format_polynomial, integer_normalized, parse_polynomial
from .groebner import (GroebnerBasis, ModuleVector, PresentationMatrix,
                       buchberger, elimination_ideal, exact_divide,
                       hilbert_degree, ideal_equal, ideal_intersect,
                       ideal_quotient, kernel_of_presentation,
                       minimalize_generators, module_buchberger,
                       module_contains, module_equal, multivariate_gcd,
                       normal_form, presentation, saturation,
                       syzygy_basis, vector_space_dimension)
from .curve import (Curve, CurveReport, ProjectivePoint, analyze,
                    bourbaki_ideal, classify, global_degrees, jacobian_ideal,
                    local_degree, projective_points, random_coordinate_change,
                    saito_check, syzygy_analysis, tjurina, validate_curve)
from . import errors, oracle
