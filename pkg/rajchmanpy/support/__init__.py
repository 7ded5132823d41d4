from ._moments import (phi_lambda, moment_vector, quotient_moments, discretize_measure,
                       arc_masses, random_convex_combination)
from ._duality import (sup_over_S0, search_resolution, verify_support_pair,
                       pairing_crosscheck, support_deviation, SupportReport,
                       SearchResult, CrossCheck)


__all__ = ['phi_lambda', 'moment_vector', 'quotient_moments', 'discretize_measure',
           'arc_masses', 'random_convex_combination', 'sup_over_S0', 'search_resolution',
           'verify_support_pair', 'pairing_crosscheck', 'support_deviation',
           'SupportReport']
