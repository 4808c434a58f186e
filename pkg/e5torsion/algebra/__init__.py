from .factored import Factored
from .field import (
    ALPHA,
    EPS,
    EPS_BAR,
    ETA,
    ONE,
    ZERO,
    ZETA,
    CycloElement,
    ExactRational,
    cyclo_arith,
    cyclo_inv,
    embed,
    galois,
    norm,
    qa,
    zeta_pow,
)
from .poly import UniPoly, poly_arith
from .ratfunc import RatFunc, coeff_galois, const, gen, rf_arith, rf_eval, rf_zero, substitute
