from ._evaluate import (evaluate, wiener_norm, sup_norm_estimate, boundary_values,
                        pairing, SupNormBracket)
from ._compose import (AnalyticGerm, compose_power_series, reciprocal_one_plus,
                       mobius_postcompose, fejer_means)


__all__ = ['evaluate', 'wiener_norm', 'sup_norm_estimate', 'boundary_values', 'pairing',
           'AnalyticGerm', 'compose_power_series', 'reciprocal_one_plus',
           'mobius_postcompose', 'fejer_means', 'SupNormBracket']
