"""
Extended Kalman filter tracking a single time-varying frequency.
"""

from ._errors import NumericalDegeneracyError
from ._config import EkfConfig
from ._filter import (
    EkfResult,
    EkfState,
    EkfStep,
    ekf_filter,
    ekf_init,
    ekf_run,
    ekf_step,
)
