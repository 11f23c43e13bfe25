"""
Passive and reactive power take-off tuning with force saturation.
"""

from ._config import ControlConfig, resolve_mode, resolve_saturation
from ._laws import (
    PtoCommand,
    TuningParams,
    pc_damping,
    pto_force,
    rc_params,
    saturate,
    tune,
)
