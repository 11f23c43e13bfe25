from dataclasses import dataclass
import numpy as np
from scipy.integrate import trapezoid
from typing import Dict, Sequence

from wavetune._utils import Parameter
from wavetune.signals._errors import DegenerateSpectrumError, InvalidSpectrumError


@dataclass(frozen=True, eq=False)
class Spectrum:
    """
    One-sided spectral density on an ascending angular-frequency grid.

    :param omega:
        Strictly increasing grid in rad/s, with ``omega[0] > 0``.
    :type omega:
        array_like
    :param density:
        Non-negative spectral density at each grid node (m²·s/rad for wave elevation, N²·s/rad for force).
    :type density:
        array_like
    """

    omega: np.ndarray
    density: np.ndarray

    def __post_init__(self) -> None:
        omega = np.array(self.omega, dtype=float)
        density = np.array(self.density, dtype=float)

        if omega.ndim != 1 or omega.size == 0:
            raise InvalidSpectrumError("Spectrum grid is empty.")
        if density.shape != omega.shape:
            raise InvalidSpectrumError(
                f"Spectrum grid has {omega.size} nodes but density has shape {density.shape}."
            )
        if not (np.all(np.isfinite(omega)) and np.all(np.isfinite(density))):
            raise InvalidSpectrumError("Spectrum contains non-finite values.")
        if np.any(np.diff(omega) <= 0):
            raise InvalidSpectrumError("Spectrum grid is not strictly increasing.")
        if omega[0] <= 0:
            raise InvalidSpectrumError(
                f"Spectrum grid must start above 0 rad/s, got {omega[0]}."
            )
        if np.any(density < 0):
            raise InvalidSpectrumError("Spectral density must be non-negative.")

        omega.setflags(write=False)
        density.setflags(write=False)
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "density", density)

    @property
    def peak_frequency(self) -> float:
        return float(self.omega[np.argmax(self.density)])

    def scaled(self, factor: float) -> "Spectrum":
        return Spectrum(self.omega, factor * self.density)

    def to_dict(self) -> Dict[str, list]:
        return {"omega": self.omega.tolist(), "density": self.density.tolist()}


@dataclass(frozen=True)
class SpectralStats:
    """
    Summary statistics of a spectrum.

    ``omega_e`` is the energy frequency m0/m₋₁ and ``omega_1`` the mean centroid frequency m1/m0.
    """

    hs: float
    omega_p: float
    omega_e: float
    omega_1: float
    m_minus1: float
    m0: float
    m1: float

    def to_dict(self) -> Dict[str, float]:
        return {
            "hs": self.hs,
            "omega_p": self.omega_p,
            "omega_e": self.omega_e,
            "omega_1": self.omega_1,
            "m_minus1": self.m_minus1,
            "m0": self.m0,
            "m1": self.m1,
        }


def spectral_moments(spectrum: Spectrum, n: int) -> float:
    """
    Spectral moment of order ``n``, the trapezoidal quadrature of ωⁿ·S(ω) over the spectrum grid.

    :param spectrum:
        Spectrum to integrate.
    :type spectrum:
        Spectrum
    :param n:
        Moment order, one of ``-1``, ``0`` or ``1``.
    :type n:
        int

    :return:
        The moment m_n.
    :rtype:
        float

    .. topic:: Example usage

        >>> s = wt.signals.line_spectrum([1.047, 0.785], [2.0, 0.5])
        >>> round(wt.signals.spectral_moments(s, 0), 6)
        2.5
    """
    Parameter(spectrum, "spectrum").throw_error_if_not_of_type(Spectrum)
    Parameter(n, "n").throw_error_if_not_one_of(-1, 0, 1)

    return float(trapezoid(spectrum.omega**n * spectrum.density, spectrum.omega))


def spectral_stats(spectrum: Spectrum) -> SpectralStats:
    """
    Significant wave height, peak, energy and mean centroid frequencies of a spectrum.

    .. note::

        The mean centroid frequency is computed as m1/m0, which has units of rad/s.
        The inverse ratio m0/m1 is sometimes printed for the same quantity, but that has units of seconds.

    :param spectrum:
        Spectrum with a non-zero zeroth moment.
    :type spectrum:
        Spectrum

    :return:
        Statistics of ``spectrum``.
    :rtype:
        SpectralStats
    """
    Parameter(spectrum, "spectrum").throw_error_if_not_of_type(Spectrum)

    m_minus1 = spectral_moments(spectrum, -1)
    m0 = spectral_moments(spectrum, 0)
    m1 = spectral_moments(spectrum, 1)

    if m0 <= 0:
        raise DegenerateSpectrumError("Spectrum has zero variance (m0 = 0).")

    return SpectralStats(
        hs=4 * np.sqrt(m0),
        omega_p=spectrum.peak_frequency,
        omega_e=m0 / m_minus1,
        omega_1=m1 / m0,
        m_minus1=m_minus1,
        m0=m0,
        m1=m1,
    )


def line_spectrum(
    frequencies: Sequence[float],
    variances: Sequence[float],
    half_width: float = 1e-3,
) -> Spectrum:
    """
    Spectrum made of discrete lines.

    Each line becomes a triangle of base ``2 * half_width`` centred on its frequency, whose trapezoidal area equals the line variance exactly.
    A regular wave of amplitude ``a`` has variance ``a**2 / 2``.

    :param frequencies:
        Line frequencies in rad/s.
    :type frequencies:
        Sequence[float]
    :param variances:
        Variance carried by each line.
    :type variances:
        Sequence[float]
    :param half_width:
        Half-width of each triangle in rad/s.
        Defaults to ``1e-3``.
    :type half_width:
        float

    :return:
        The line spectrum.
    :rtype:
        Spectrum
    """
    Parameter(half_width, "half_width").throw_error_if_not_positive()

    frequencies = np.asarray(frequencies, dtype=float)
    variances = np.asarray(variances, dtype=float)
    if frequencies.shape != variances.shape or frequencies.ndim != 1:
        raise ValueError("Need exactly one variance per line frequency.")
    if np.any(frequencies - half_width <= 0):
        raise InvalidSpectrumError("Line frequencies must exceed the line half-width.")

    order = np.argsort(frequencies)
    frequencies = frequencies[order]
    variances = variances[order]
    if np.any(np.diff(frequencies) <= 2 * half_width):
        raise InvalidSpectrumError("Spectral lines overlap.")

    omega = np.column_stack(
        (frequencies - half_width, frequencies, frequencies + half_width)
    ).ravel()
    density = np.column_stack(
        (np.zeros_like(variances), variances / half_width, np.zeros_like(variances))
    ).ravel()

    return Spectrum(omega, density)
