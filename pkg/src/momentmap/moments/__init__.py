from .jacobian import (
    JacobianReport,
    closed_form_exponent,
    embed_coefficients,
    finite_difference_matrix,
    jacobian_analytic,
    jacobian_closed_form,
    jacobian_finite_difference,
    jacobian_matrix,
    jacobian_report,
    jacobian_y_matrix,
    real_coordinate_jacobian,
    restore_coefficients,
    wirtinger_partial_a,
    wirtinger_partial_abar,
    y_matrix,
    y_route_sign,
)
from .real import (
    HurwitzCalibration,
    UncalibratedError,
    calibrate_hurwitz,
    real_resultant_identity,
    real_jacobian,
    real_jacobian_formula,
)
from .routes import (
    InconsistentMomentError,
    MomentVector,
    QuadratureRule,
    moment_laurent,
    moment_quadrature,
    moment_richardson,
    moment_vector,
)
