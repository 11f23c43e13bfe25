"""
Frequency estimation of excitation force records by method name.
"""

from wavetune._frequency_estimator import ConstantConfig
from ._estimate import (
    SUPPORTED_METHODS_AND_THEIR_ESTIMATORS,
    UnknownMethodError,
    estimate_frequency,
    resolve_method,
)
