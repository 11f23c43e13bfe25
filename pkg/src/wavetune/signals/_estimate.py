import numpy as np
from scipy import signal

from wavetune import _utils
from wavetune._utils import Parameter
from wavetune.signals._errors import InsufficientDataError
from wavetune.signals._spectrum import Spectrum
from wavetune.signals._time_series import TimeSeries


MIN_SAMPLES = 64


def estimate_spectrum(
    series: TimeSeries,
    segment_length: int = 256,
    suppress_warnings: bool = False,
) -> Spectrum:
    """
    Estimate the one-sided spectral density of a record by segment-averaged periodograms.

    Segments are Hann-tapered, mean-detrended and overlap by half their length.
    The zero-frequency bin is dropped so the returned grid starts above 0 rad/s.

    :param series:
        Record to analyse, at least 64 samples long.
    :type series:
        TimeSeries
    :param segment_length:
        Samples per segment.
        Records shorter than one segment are analysed as a single segment.
        Defaults to ``256``.
    :type segment_length:
        int
    :param suppress_warnings:
        Disable the warning emitted when the segment is shortened.
        Defaults to ``False``.
    :type suppress_warnings:
        bool

    :return:
        Spectral density in (units)²·s/rad on the grid ``2π·k/(segment·dt)``.
    :rtype:
        Spectrum

    .. topic:: Example usage

        >>> t = np.arange(2304) * 0.78125
        >>> x = wt.signals.TimeSeries(0.0, 0.78125, np.cos(1.0 * t))
        >>> s = wt.signals.estimate_spectrum(x)
        >>> round(s.peak_frequency, 2)
        1.0
    """
    Parameter(series, "series").throw_error_if_not_of_type(TimeSeries)
    Parameter(segment_length, "segment_length").throw_error_if_not_of_type(int)
    Parameter(suppress_warnings, "suppress_warnings").throw_error_if_not_of_type(bool)

    if segment_length < MIN_SAMPLES:
        raise ValueError(
            f'"segment_length" must be at least {MIN_SAMPLES}, got {segment_length}.'
        )

    n = len(series)
    if n < MIN_SAMPLES:
        raise InsufficientDataError(
            f"Spectral estimation needs at least {MIN_SAMPLES} samples, got {n}."
        )

    nperseg = segment_length
    if n < segment_length:
        nperseg = n
        if not suppress_warnings:
            _utils.warn_segment_shortened(segment_length, n)

    frequencies, pxx = signal.welch(
        series.values,
        fs=1.0 / series.dt,
        window="hann",
        nperseg=nperseg,
        noverlap=nperseg // 2,
        detrend="constant",
        return_onesided=True,
        scaling="density",
    )

    omega = 2 * np.pi * frequencies[1:]
    density = np.clip(pxx[1:] / (2 * np.pi), 0.0, None)

    return Spectrum(omega, density)


def periodogram_peak(
    series: TimeSeries,
    n_samples: int = 128,
    omega_min: float = 0.0,
    omega_max: float = np.inf,
) -> float:
    """
    Peak frequency in rad/s of a single periodogram over the first ``n_samples`` samples, clamped to ``[omega_min, omega_max]``.

    The zero-frequency bin is ignored. A flat record yields the lowest non-zero bin.
    """
    Parameter(series, "series").throw_error_if_not_of_type(TimeSeries)
    Parameter(n_samples, "n_samples").throw_error_if_not_of_type(int)

    head = series.values[: max(n_samples, 4)]
    frequencies, pxx = signal.periodogram(head, fs=1.0 / series.dt, detrend="constant")
    peak = 2 * np.pi * frequencies[1 + int(np.argmax(pxx[1:]))]

    return float(np.clip(peak, omega_min, omega_max))
