"""Exact arithmetic for the Burkhardt quartic threefold.

Point counts and zeta functions over finite fields, the rational
parametrization and its inverse, and the universal genus-2 curve with
its five explicit order-3 markings.
"""

from .errors import (BaseLocusError, BurkhardtError, CharacteristicError,
                     DegeneracyError, FieldError, ScanCapError)
from .fields import QQ, Field, field_for_order, field_make
from .invariants import (IgusaClebsch, binary_discriminant, igusa_clebsch,
                         igusa_weighted_equal, transvectant)
from .maps import phi_eval, psi_eval, smooth_point_test, verify_roundtrip
from .moduli import (CubicCover, CurveModel, Decomposition, DivisorPair,
                     QuadricSystem, coble_quadrics, cubic_cover,
                     curve_from_point, level3_decompositions, project_jplane,
                     standard_quadrics, symmetroid, tangency_check,
                     trope_line_of_divisor, verify_divisor_line,
                     verify_order3_certificate, weddle_surface)
from .poly import (MultiPoly, RatFunc, cubic_discriminant, parse_poly,
                   parse_ratfunc, poly_eval, poly_matrix_det)
from .projective import LinearSubspace, ProjPoint, parse_point
from .quartic import (burkhardt_form, group_invariance_check, hessian_form,
                      node_census, off_hessian_points, polars,
                      rational_jplanes, steiner_primes)
from .zeta import (ZetaFunction, conjugate_pair, count_hypersurface, epsilon,
                   inclusion_exclusion, off_hessian_count,
                   point_count_from_zeta, verify_desing_correction,
                   zeta_burkhardt, zeta_desing, zeta_pn)

__version__ = "0.1.0"
