from .validators import RajchmanValidator, validate
from .settings import Settings, DEFAULT_SETTINGS
from .errors import DiagnosticCapError
