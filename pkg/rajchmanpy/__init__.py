from .version import __version__
from .core.ratio import RatioParam, IntervalSet
from .core.series import CoefficientSeries
from .core.measures import DiskAtomSet, MomentVector, DiscretizationGrid, CantorSpec, LebesgueMeasure
from .peaks import PeakParams, PeakCandidate, HerglotzWeight
from .support import SupportReport
from .utils import Settings, DiagnosticCapError
