from .closed_forms import K_SCALE, P, Q, a_coefficients, closed_forms, expanded_root_display, g_coefficients
from .quintic import (
    WatsonData,
    assemble_root,
    build_g,
    compare_with_closed_forms,
    depress,
    depressed_quintic,
    eisenstein_check,
    expanded_display_mismatches,
    factorization_check,
    h_at_theta,
    lagrange_resolvent,
    phi_of_b,
    radical_data,
    resolvent,
    root_identity,
    root_in_u,
    run_pipeline,
)
