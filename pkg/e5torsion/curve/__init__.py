from .division import D5_DISPLAY, compare_with_display, d5, d5_display, division_poly_5, psi5_xpart
from .eprime import eprime_curve, eprime_double, from_eprime, n_of_x, p_of_x, to_eprime
from .weierstrass import INFINITY, CurvePoint, WeierstrassCurve, group_law, origin_subgroup, tate5, tate5_discriminant
