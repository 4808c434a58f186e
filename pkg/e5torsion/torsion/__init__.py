from .checks import (
    b_factorization_check,
    census_check,
    curve_membership_check,
    d5_root_check,
    discriminant_check,
    lemma_check,
    pole_disjointness_check,
    scalar_identity_check,
    unit_check,
    verify_doubling,
    verify_order5,
    vieta_check,
    x_forms_check,
)
from .formulas import TorsionFormulas, b_of_u, build_formulas, sigma
from .points import PointLabel, all_labels, exact_points, numeric_points, point, sigma_label
