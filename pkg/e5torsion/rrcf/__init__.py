from .modular import coords_from_r, fricke_spot_check, numeric_torsion_check, u_from_r
from .numeric import TauPoint, cf_eval, r_eval
from .series import PuiseuxSeries, r5_series, r_series, series_identity, series_of
