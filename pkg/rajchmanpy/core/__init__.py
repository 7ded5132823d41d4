from .ratio import RatioParam, IntervalSet
from .series import CoefficientSeries
from .measures import (Measure, DiskAtomSet, MomentVector, DiscretizationGrid,
                       CantorSpec, LebesgueMeasure)
