import numpy as np
from scipy import fft

from wavetune._utils import Parameter
from wavetune.hydro._table import HydroTable, _interp
from wavetune.signals import InsufficientDataError, TimeSeries


MIN_SAMPLES = 64


def excitation_force(table: HydroTable, zeta: TimeSeries) -> TimeSeries:
    """
    Excitation force of a wave-elevation record, computed offline in the frequency domain.

    The zero-padded record is transformed, multiplied by the interpolated H_e(ω) and transformed back, which evaluates the non-causal convolution of ζ with the excitation impulse response.

    :param table:
        Coefficient table supplying H_e(ω).
    :type table:
        HydroTable
    :param zeta:
        Complete elevation record in metres, at least 64 samples.
    :type zeta:
        TimeSeries

    :return:
        Excitation force in N on the time base of ``zeta``.
    :rtype:
        TimeSeries
    """
    Parameter(table, "table").throw_error_if_not_of_type(HydroTable)
    Parameter(zeta, "zeta").throw_error_if_not_of_type(TimeSeries)

    n = len(zeta)
    if n < MIN_SAMPLES:
        raise InsufficientDataError(
            f"Excitation force needs at least {MIN_SAMPLES} elevation samples, got {n}."
        )

    nfft = fft.next_fast_len(2 * n, real=True)
    spectrum = fft.rfft(zeta.values, nfft)
    omega = 2 * np.pi * fft.rfftfreq(nfft, zeta.dt)
    omega[0] = table.omega[0]

    response = _interp(table, omega).excitation
    force = fft.irfft(spectrum * response, nfft)[:n]

    return zeta.with_values(force)
