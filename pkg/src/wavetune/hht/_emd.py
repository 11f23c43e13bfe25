from dataclasses import dataclass
import numpy as np
from scipy.integrate import trapezoid
from scipy.interpolate import CubicSpline
from typing import List, Optional, Tuple

from wavetune._utils import Parameter
from wavetune.signals import InsufficientDataError, TimeSeries


MIN_SAMPLES = 64


@dataclass(frozen=True, eq=False)
class ImfSet:
    """
    Result of an empirical mode decomposition.

    ``imfs`` are ordered from the highest to the lowest frequency and ``imfs`` plus ``residue`` add up to the input.
    ``energies`` holds ∫c_i² dt for every IMF and ``source_energy`` the same integral of the input.
    ``sift_counts`` records how many siftings each IMF took and ``converged`` whether it met the IMF criterion when sifting stopped.
    """

    imfs: List[TimeSeries]
    residue: TimeSeries
    energies: np.ndarray
    source_energy: float
    sift_counts: List[int]
    converged: List[bool]

    def __len__(self) -> int:
        return len(self.imfs)

    @property
    def all_converged(self) -> bool:
        return all(self.converged)

    @property
    def energy_ratios(self) -> np.ndarray:
        if self.source_energy == 0:
            return np.zeros_like(self.energies)
        return self.energies / self.source_energy

    def reconstruct(self) -> np.ndarray:
        return np.sum([imf.values for imf in self.imfs], axis=0) + self.residue.values


def _extrema(values: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    slope = np.diff(values)
    maxima = np.flatnonzero((slope[:-1] > 0) & (slope[1:] <= 0)) + 1
    minima = np.flatnonzero((slope[:-1] < 0) & (slope[1:] >= 0)) + 1
    return maxima, minima


def count_extrema(series: TimeSeries) -> int:
    """
    Number of interior local maxima and minima.
    """
    maxima, minima = _extrema(series.values)
    return maxima.size + minima.size


def count_zero_crossings(series: TimeSeries) -> int:
    """
    Number of sign changes between consecutive samples, ignoring exact zeros.
    """
    values = series.values[series.values != 0]
    return int(np.count_nonzero(values[:-1] * values[1:] < 0))


def _envelope(indices: np.ndarray, values: np.ndarray, n: int) -> np.ndarray:
    last = n - 1
    knots = np.concatenate((-indices[1::-1], indices, 2 * last - indices[:-3:-1]))
    knot_values = np.concatenate((values[1::-1], values, values[:-3:-1]))
    return CubicSpline(knots, knot_values)(np.arange(n))


def _mean_envelope(values: np.ndarray) -> Optional[np.ndarray]:
    maxima, minima = _extrema(values)
    if maxima.size < 2 or minima.size < 2:
        return None

    n = values.size
    upper = _envelope(maxima, values[maxima], n)
    lower = _envelope(minima, values[minima], n)
    return 0.5 * (upper + lower)


def mean_envelope(series: TimeSeries) -> TimeSeries:
    """
    Mean of the cubic-spline envelopes through the maxima and the minima of a record.

    Two extrema are mirrored about each end of the record before the splines are fitted.

    :param series:
        Record with at least two maxima and two minima.
    :type series:
        TimeSeries

    :return:
        The mean envelope on the time base of ``series``.
    :rtype:
        TimeSeries
    """
    Parameter(series, "series").throw_error_if_not_of_type(TimeSeries)

    envelope = _mean_envelope(series.values)
    if envelope is None:
        raise InsufficientDataError(
            "A mean envelope needs at least two maxima and two minima."
        )
    return series.with_values(envelope)


def _is_imf(values: np.ndarray, envelope: np.ndarray, sd_threshold: float) -> bool:
    rms_values = np.sqrt(np.mean(values**2))
    rms_envelope = np.sqrt(np.mean(envelope**2))
    if rms_envelope > sd_threshold * rms_values:
        return False

    maxima, minima = _extrema(values)
    nonzero = values[values != 0]
    crossings = np.count_nonzero(nonzero[:-1] * nonzero[1:] < 0)
    return abs(maxima.size + minima.size - crossings) <= 1


def _sift(
    values: np.ndarray, sd_threshold: float, max_sift: int
) -> Tuple[np.ndarray, int, bool]:
    h = values
    for count in range(max_sift + 1):
        envelope = _mean_envelope(h)
        if envelope is None:
            return h, count, False
        if _is_imf(h, envelope, sd_threshold):
            return h, count, True
        if count == max_sift:
            break
        h = h - envelope
    return h, max_sift, False


def _has_enough_extrema(values: np.ndarray) -> bool:
    maxima, minima = _extrema(values)
    return maxima.size >= 2 and minima.size >= 2


def emd_decompose(
    fe: TimeSeries,
    n_max: Optional[int] = None,
    sd_threshold: float = 0.2,
    max_sift: int = 100,
) -> ImfSet:
    """
    Empirical mode decomposition of a record into intrinsic mode functions.

    Each IMF is sifted out by repeatedly subtracting the mean envelope until the envelope rms falls below ``sd_threshold`` times the rms of the candidate and its extrema and zero crossings differ by at most one, or until ``max_sift`` siftings.
    An IMF that stops on ``max_sift``, or loses its envelope while sifting, is kept and flagged in ``ImfSet.converged``.
    Decomposition stops after ``n_max`` IMFs or once the residue has fewer than two maxima or two minima.

    :param fe:
        Record to decompose, at least 64 samples.
    :type fe:
        TimeSeries
    :param n_max:
        Maximum number of IMFs.
        Defaults to ``floor(log2(len(fe))) - 1``.
    :type n_max:
        int
    :param sd_threshold:
        Mean-envelope stopping threshold.
        Defaults to ``0.2``.
    :type sd_threshold:
        float
    :param max_sift:
        Maximum siftings per IMF.
        Defaults to ``100``.
    :type max_sift:
        int

    :return:
        IMFs, residue and energies.
    :rtype:
        ImfSet

    .. topic:: Example usage

        >>> ramp = wt.signals.TimeSeries(0.0, 0.1, np.linspace(0, 1, 200))
        >>> len(wt.hht.emd_decompose(ramp))
        0
    """
    Parameter(fe, "fe").throw_error_if_not_of_type(TimeSeries)
    Parameter(n_max, "n_max").throw_error_if_not_of_type(int, optional=True)
    Parameter(sd_threshold, "sd_threshold").throw_error_if_not_positive()
    Parameter(max_sift, "max_sift").throw_error_if_not_of_type(int)

    n = len(fe)
    if n < MIN_SAMPLES:
        raise InsufficientDataError(
            f"Decomposition needs at least {MIN_SAMPLES} samples, got {n}."
        )
    if n_max is None:
        n_max = int(np.floor(np.log2(n))) - 1

    imfs = []
    sift_counts = []
    converged = []
    residue = fe.values.copy()

    while len(imfs) < n_max and _has_enough_extrema(residue):
        imf, count, ok = _sift(residue, sd_threshold, max_sift)
        residue = residue - imf
        imfs.append(fe.with_values(imf))
        sift_counts.append(count)
        converged.append(ok)

    energies = np.array([trapezoid(imf.values**2, dx=fe.dt) for imf in imfs])
    source_energy = float(trapezoid(fe.values**2, dx=fe.dt))

    return ImfSet(
        imfs=imfs,
        residue=fe.with_values(residue),
        energies=energies,
        source_energy=source_energy,
        sift_counts=sift_counts,
        converged=converged,
    )


def dominant_imf(imf_set: ImfSet) -> int:
    """
    Index of the IMF carrying the largest share of the input energy.

    Ties resolve to the lowest index, which is the highest-frequency IMF.

    :param imf_set:
        Decomposition with at least one IMF.
    :type imf_set:
        ImfSet

    :return:
        Index into ``imf_set.imfs``.
    :rtype:
        int
    """
    Parameter(imf_set, "imf_set").throw_error_if_not_of_type(ImfSet)

    if len(imf_set) == 0:
        raise ValueError("Decomposition has no IMFs to choose from.")

    return int(np.argmax(imf_set.energy_ratios))
