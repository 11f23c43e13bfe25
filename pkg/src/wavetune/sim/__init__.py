"""
Time-domain heave simulation and power metrics.
"""

from ._errors import DivergenceError
from ._trajectory import (
    TRAJECTORY_COLUMNS,
    Trajectory,
    read_trajectory,
    write_trajectory,
)
from ._metrics import EnergyBalance, SimMetrics, metrics
from ._simulate import SimReport, simulate
from ._summary import read_summary, write_summary
