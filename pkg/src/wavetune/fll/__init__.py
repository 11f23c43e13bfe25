"""
Second-order generalized integrator with a frequency-locked loop.
"""

from ._errors import NonFiniteInputError, NormalizationError
from ._config import FllConfig
from ._loop import (
    FllResult,
    FllState,
    FllStep,
    fll_filter,
    fll_init,
    fll_run,
    fll_step,
    normalize_force,
)
