import os
import dataclasses
from dataclasses import dataclass


__all__ = ['Settings', 'DEFAULT_SETTINGS']


THREADS_ENV = 'RAJCHMANPY_THREADS'


@dataclass(frozen=True)
class Settings:
    '''
    Library wide defaults. Every operation takes its own keyword arguments;
    a ``Settings`` only supplies the values that were not given.

    Derive per-run settings with ``settings.replace(product_tol=1e-10)``.
    '''

    # circlemeasure
    product_tol: float = 1e-12
    max_generation: int = 40
    max_peak_generation: int = 20
    max_oracle_stage: int = 22
    pisot_tol: float = 1e-9
    pisot_dps: int = 50

    # wiener
    max_degree: int = 2**14
    reciprocal_tol: float = 1e-10

    # support
    search_angles: int = 4096
    search_radii: int = 20
    sup_grid: int = 2**20
    support_slack: float = 0.2

    # peaks
    quadrature_order: int = 32
    generations: int = 10
    degree: int = 2**12
    deficiency_cap: float = 0.05
    sup_slack: float = 1e-6
    real_part_slack: float = 1e-9
    summation: str = 'fejer'

    # runtime
    threads: int = 1

    @classmethod
    def from_env(cls, environ=None, **overrides):
        '''Defaults with the thread count taken from ``RAJCHMANPY_THREADS``.'''
        environ = os.environ if environ is None else environ
        value = environ.get(THREADS_ENV)
        if value is not None and 'threads' not in overrides:
            try:
                threads = int(value)
            except ValueError:
                threads = 0
            if threads < 1:
                raise ValueError(f'{THREADS_ENV} must be a positive integer, got {value!r}')
            overrides['threads'] = threads
        return cls(**overrides)

    def replace(self, **changes):
        return dataclasses.replace(self, **changes)


DEFAULT_SETTINGS = Settings()
