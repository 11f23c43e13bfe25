from dataclasses import dataclass
import numpy as np
from scipy.integrate import trapezoid

from wavetune._utils import Parameter
from wavetune.hydro._errors import NonDecayingKernelError
from wavetune.hydro._table import HydroTable


DECAY_FRACTION = 0.01
DEFAULT_HORIZON = 60.0
_CHUNK_SIZE = 512


@dataclass(frozen=True, eq=False)
class RadiationKernel:
    """
    Sampled radiation impulse response h_r(k·dt), truncated after ``memory_length``.

    :param dt:
        Sample interval in seconds.
    :param taps:
        Kernel samples in N/m, ``taps[0]`` at t = 0.
    :param memory_length:
        Last time at which \\|h_r\\| reaches 1% of its peak.
    """

    dt: float
    taps: np.ndarray
    memory_length: float

    def __post_init__(self) -> None:
        taps = np.array(self.taps, dtype=float)
        taps.setflags(write=False)
        object.__setattr__(self, "taps", taps)

    @property
    def times(self) -> np.ndarray:
        return self.dt * np.arange(self.taps.size)


def radiation_kernel(
    table: HydroTable, dt: float, horizon: float = DEFAULT_HORIZON
) -> RadiationKernel:
    """
    Radiation impulse response by trapezoidal cosine transform of the radiation damping.

    h_r(t) = (2/π)·∫ B_r(ω)·cos(ωt) dω on the table grid, sampled at ``t = k·dt`` up to ``horizon``.
    Taps past the last sample whose magnitude reaches 1% of the peak are dropped.

    The truncation bounds how well the kernel reproduces the table.
    For the shipped table at ``dt = 0.05`` the forward transform ``∫ h_r(t)·cos(ωt) dt`` is within 3% of B_r wherever B_r is at least 10% of its peak, and within 1% of the peak damping at every grid frequency.
    Far into the tail, where B_r is small, the relative error is large.

    :param table:
        Coefficient table.
    :type table:
        HydroTable
    :param dt:
        Sample interval in seconds.
    :type dt:
        float
    :param horizon:
        Time by which the kernel must have decayed.
        Defaults to ``60.0``.
    :type horizon:
        float

    :return:
        The truncated kernel.
    :rtype:
        RadiationKernel

    .. topic:: Example usage

        >>> kernel = wt.hydro.radiation_kernel(wt.hydro.sample_table(), 0.05)
        >>> kernel.memory_length < 15
        True
    """
    Parameter(table, "table").throw_error_if_not_of_type(HydroTable)
    Parameter(dt, "dt").throw_error_if_not_positive()
    Parameter(horizon, "horizon").throw_error_if_not_positive()

    times = dt * np.arange(int(np.floor(horizon / dt)) + 1)
    h = np.empty_like(times)
    for start in range(0, times.size, _CHUNK_SIZE):
        chunk = times[start : start + _CHUNK_SIZE]
        h[start : start + _CHUNK_SIZE] = (2 / np.pi) * trapezoid(
            table.radiation_damping * np.cos(np.outer(chunk, table.omega)),
            table.omega,
            axis=1,
        )

    peak = np.abs(h).max()
    if peak == 0:
        return RadiationKernel(dt, np.zeros(1), 0.0)

    significant = np.flatnonzero(np.abs(h) >= DECAY_FRACTION * peak)
    last = int(significant[-1])
    if last >= times.size - 1:
        raise NonDecayingKernelError(
            f"Radiation kernel still exceeds {DECAY_FRACTION:.0%} of its peak at "
            f"{times[-1]:.1f} s. Check the radiation damping table."
        )

    return RadiationKernel(dt, h[: last + 1], float(times[last]))
