from ._cantor import (as_ratio, cantor_stage, complementary_gaps, gap_intervals,
                      stage_measure_cdf, Gap, GapSummary)
from ._coefficients import (fs_coeff_product, fs_coeff_oracle, choose_oracle_stage,
                            product_truncation, coefficient_table, decay_profile,
                            FourierCoefficientTable, CoefficientValue, DecayBlock)
from ._classify import (pisot_check, rajchman_classify, parse_polynomial,
                        PisotStatus, PisotResult, Verdict, ClassificationVerdict)


__all__ = ['cantor_stage', 'complementary_gaps', 'gap_intervals', 'stage_measure_cdf',
           'fs_coeff_product', 'fs_coeff_oracle', 'choose_oracle_stage',
           'coefficient_table', 'decay_profile', 'pisot_check', 'rajchman_classify',
           'parse_polynomial', 'FourierCoefficientTable', 'ClassificationVerdict',
           'Verdict', 'PisotStatus', 'GapSummary']
