from ._admissibility import (PeakParams, admissible_parameters, metric_sum, peak_threshold,
                             Admissibility)
from ._herglotz import (HerglotzWeight, herglotz_weight_moments, weight_nodes, central_mass,
                        total_mass)
from ._candidate import (PeakCandidate, build_peak_candidate, weak_to_peak, vanish_at_origin,
                         compose_peak, weak_peak_check, WeakPeakCheck, SUMMATIONS)


__all__ = ['PeakParams', 'admissible_parameters', 'metric_sum', 'peak_threshold',
           'HerglotzWeight', 'herglotz_weight_moments', 'weight_nodes', 'central_mass',
           'total_mass', 'PeakCandidate', 'build_peak_candidate', 'weak_to_peak',
           'vanish_at_origin', 'compose_peak', 'weak_peak_check', 'WeakPeakCheck']
