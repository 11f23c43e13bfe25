from dataclasses import dataclass
import numpy as np
import pandas as pd
from pathlib import Path
from scipy import signal
from scipy.ndimage import uniform_filter1d
from typing import NamedTuple, Optional, Union

from wavetune import _utils
from wavetune._utils import Parameter
from wavetune.hht._config import HhtConfig
from wavetune.hht._emd import MIN_SAMPLES, ImfSet, dominant_imf, emd_decompose
from wavetune.signals import InsufficientDataError, TimeSeries


class AnalyticSignal(NamedTuple):
    amplitude: TimeSeries
    phase: TimeSeries


@dataclass(frozen=True, eq=False)
class FreqTrack:
    """
    Instantaneous frequency and amplitude of the dominant IMF.

    :param omega:
        Instantaneous frequency in rad/s, clamped to the configured range.
    :param amplitude:
        Instantaneous amplitude in the units of the input.
    :param dominant_index:
        Index of the IMF the track was taken from.
    :param imf_set:
        The full decomposition.
    """

    omega: TimeSeries
    amplitude: TimeSeries
    dominant_index: int
    imf_set: Optional[ImfSet] = None


def hilbert_analytic(c: TimeSeries) -> AnalyticSignal:
    """
    Amplitude and unwrapped phase of the analytic signal of a record.

    The analytic signal is built in the frequency domain by zeroing negative frequencies and doubling positive ones.

    :param c:
        Record of at least 64 samples.
    :type c:
        TimeSeries

    :return:
        Instantaneous amplitude and phase in rad.
    :rtype:
        AnalyticSignal

    .. topic:: Example usage

        >>> t = 0.1 * np.arange(3000)
        >>> analytic = wt.hht.hilbert_analytic(wt.signals.TimeSeries(0.0, 0.1, 2 * np.cos(t)))
        >>> round(float(analytic.amplitude.values[1500]), 2)
        2.0
    """
    Parameter(c, "c").throw_error_if_not_of_type(TimeSeries)

    if len(c) < MIN_SAMPLES:
        raise InsufficientDataError(
            f"Analytic signal needs at least {MIN_SAMPLES} samples, got {len(c)}."
        )

    analytic = signal.hilbert(c.values)
    amplitude = np.abs(analytic)
    phase = np.unwrap(np.angle(analytic))

    return AnalyticSignal(c.with_values(amplitude), c.with_values(phase))


def inst_frequency(
    phase: TimeSeries,
    smoothing_s: float = 2.0,
    omega_min: float = 0.1,
    omega_max: float = 3.0,
) -> TimeSeries:
    """
    Instantaneous frequency as the time derivative of an unwrapped phase.

    The phase is differentiated with central differences, smoothed by a centred moving average spanning ``smoothing_s`` and clamped to ``[omega_min, omega_max]``.

    :param phase:
        Unwrapped phase in rad, at least 3 samples.
    :type phase:
        TimeSeries
    :param smoothing_s:
        Moving-average span in seconds, ``0`` disables smoothing.
        Defaults to ``2.0``.
    :type smoothing_s:
        float
    :param omega_min:
        Lower clamp in rad/s.
        Defaults to ``0.1``.
    :type omega_min:
        float
    :param omega_max:
        Upper clamp in rad/s.
        Defaults to ``3.0``.
    :type omega_max:
        float

    :return:
        Instantaneous frequency in rad/s.
    :rtype:
        TimeSeries
    """
    Parameter(phase, "phase").throw_error_if_not_of_type(TimeSeries)
    Parameter(smoothing_s, "smoothing_s").throw_error_if_not_of_type((int, float))
    Parameter(omega_min, "omega_min").throw_error_if_not_positive()
    Parameter(omega_max, "omega_max").throw_error_if_not_positive()

    if len(phase) < 3:
        raise InsufficientDataError(
            f"Instantaneous frequency needs at least 3 samples, got {len(phase)}."
        )

    omega = np.gradient(phase.values, phase.dt)

    half_width = int(round(smoothing_s / (2 * phase.dt)))
    if half_width > 0:
        omega = uniform_filter1d(omega, size=2 * half_width + 1, mode="nearest")

    return phase.with_values(np.clip(omega, omega_min, omega_max))


def hht_run(
    fe: TimeSeries,
    config: Optional[HhtConfig] = None,
    suppress_warnings: bool = False,
) -> FreqTrack:
    """
    Estimate the instantaneous frequency of a force record by the Hilbert-Huang transform.

    The record is decomposed offline, the IMF with the largest energy share is selected and its analytic signal gives the frequency and amplitude tracks.
    A warning is emitted when the selected IMF stopped sifting without meeting the IMF criterion.

    :param fe:
        Complete excitation force record.
    :type fe:
        TimeSeries
    :param config:
        Decomposition and smoothing settings. Defaults to ``HhtConfig()``.
    :type config:
        HhtConfig
    :param suppress_warnings:
        Disable the warning about an unconverged IMF.
        Defaults to ``False``.
    :type suppress_warnings:
        bool

    :return:
        Frequency and amplitude tracks on the time base of ``fe``.
    :rtype:
        FreqTrack
    """
    Parameter(fe, "fe").throw_error_if_not_of_type(TimeSeries)
    Parameter(config, "config").throw_error_if_not_of_type(HhtConfig, optional=True)
    Parameter(suppress_warnings, "suppress_warnings").throw_error_if_not_of_type(bool)
    config = HhtConfig() if config is None else config

    imf_set = emd_decompose(fe, config.n_imf_max, config.sd_threshold, config.max_sift)
    index = dominant_imf(imf_set)
    if not imf_set.converged[index] and not suppress_warnings:
        _utils.warn_imf_not_converged(index, imf_set.sift_counts[index])

    analytic = hilbert_analytic(imf_set.imfs[index])
    omega = inst_frequency(
        analytic.phase, config.smoothing_s, config.omega_min, config.omega_max
    )

    return FreqTrack(omega, analytic.amplitude, index, imf_set)


def write_hilbert_spectrum(track: FreqTrack, path: Union[str, Path]) -> None:
    """
    Write a frequency track as a ``time_s,omega_rad_s,amplitude`` CSV file.
    """
    Parameter(track, "track").throw_error_if_not_of_type(FreqTrack)

    frame = pd.DataFrame(
        {
            "time_s": track.omega.times,
            "omega_rad_s": track.omega.values,
            "amplitude": track.amplitude.values,
        }
    )
    frame.to_csv(path, index=False, lineterminator="\n")
