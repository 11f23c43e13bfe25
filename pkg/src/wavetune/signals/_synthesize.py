import numpy as np
from numbers import Real
from typing import Optional

from wavetune._resources import SEA_STATES
from wavetune._utils import Parameter, clean_and_lowercase
from wavetune.signals._errors import AliasingError, InsufficientDataError
from wavetune.signals._spectrum import Spectrum
from wavetune.signals._time_series import TimeSeries


DEFAULT_OMEGA = np.linspace(0.05, 4.0, 1581)
MIN_PEAK_PERIODS = 100
_BLOCK_SIZE = 2048


def synthesize_sea(
    spectrum: Spectrum,
    duration: float,
    dt: float,
    seed: int,
) -> TimeSeries:
    """
    Synthesize a surface-elevation record from a spectrum by harmonic superposition.

    Every grid node contributes a cosine of amplitude ``sqrt(2·S(ω)·Δω)``, where ``Δω`` is the trapezoidal weight of the node, with a phase drawn uniformly from ``[0, 2π)``.
    The same ``seed`` always yields the same record.

    :param spectrum:
        Target spectrum.
    :type spectrum:
        Spectrum
    :param duration:
        Record length in seconds, at least 100 peak periods.
    :type duration:
        float
    :param dt:
        Sample interval in seconds.
        The Nyquist frequency ``π/dt`` must not fall below the top of the spectrum grid.
    :type dt:
        float
    :param seed:
        Seed of the phase generator.
    :type seed:
        int

    :return:
        Elevation record starting at ``t = 0`` with ``round(duration / dt)`` samples.
    :rtype:
        TimeSeries

    .. topic:: Example usage

        >>> s = wt.signals.bretschneider(1.43, 1.22)
        >>> zeta = wt.signals.synthesize_sea(s, 1800.0, 0.78125, seed=7)
        >>> len(zeta)
        2304
    """
    Parameter(spectrum, "spectrum").throw_error_if_not_of_type(Spectrum)
    Parameter(duration, "duration").throw_error_if_not_positive()
    Parameter(dt, "dt").throw_error_if_not_positive()
    Parameter(seed, "seed").throw_error_if_not_of_type(int)

    omega_max = spectrum.omega[-1]
    if np.pi / dt < omega_max:
        raise AliasingError(
            f"Sample interval {dt} s has Nyquist frequency {np.pi / dt:.4g} rad/s, "
            f"below the top of the spectrum grid ({omega_max:.4g} rad/s)."
        )

    n = int(round(duration / dt))
    if n < 2:
        raise InsufficientDataError(f"Duration {duration} s holds fewer than 2 samples.")

    rng = np.random.default_rng(seed)
    phases = rng.uniform(0.0, 2 * np.pi, size=spectrum.omega.size)

    if not np.any(spectrum.density > 0):
        return TimeSeries(0.0, dt, np.zeros(n))

    peak_period = 2 * np.pi / spectrum.peak_frequency
    if duration < MIN_PEAK_PERIODS * peak_period:
        raise InsufficientDataError(
            f"Duration {duration} s is shorter than {MIN_PEAK_PERIODS} peak periods "
            f"({MIN_PEAK_PERIODS * peak_period:.1f} s)."
        )

    weights = _trapezoid_weights(spectrum.omega)
    amplitudes = np.sqrt(2 * spectrum.density * weights)
    active = amplitudes > 0
    omega = spectrum.omega[active]
    amplitudes = amplitudes[active]
    phases = phases[active]

    times = dt * np.arange(n)
    values = np.empty(n)
    for start in range(0, n, _BLOCK_SIZE):
        block = times[start : start + _BLOCK_SIZE]
        values[start : start + _BLOCK_SIZE] = np.cos(
            np.outer(block, omega) + phases
        ) @ amplitudes

    return TimeSeries(0.0, dt, values)


def bretschneider(
    hs: float, omega_p: float, omega: Optional[np.ndarray] = None
) -> Spectrum:
    """
    Two-parameter Bretschneider (Pierson-Moskowitz shaped) spectrum.

    :param hs:
        Significant wave height in metres.
    :type hs:
        float
    :param omega_p:
        Peak frequency in rad/s.
    :type omega_p:
        float
    :param omega:
        Frequency grid. Defaults to ``DEFAULT_OMEGA`` (0.05 to 4 rad/s).
    :type omega:
        array_like

    :return:
        The spectrum on ``omega``.
    :rtype:
        Spectrum
    """
    Parameter(hs, "hs").throw_error_if_not_positive()
    Parameter(omega_p, "omega_p").throw_error_if_not_positive()

    omega = DEFAULT_OMEGA if omega is None else np.asarray(omega, dtype=float)
    return Spectrum(omega, _bretschneider_density(hs, omega_p, omega))


def jonswap(
    hs: float,
    omega_p: float,
    gamma: float = 3.3,
    omega: Optional[np.ndarray] = None,
) -> Spectrum:
    """
    JONSWAP spectrum with peak enhancement ``gamma``.

    Peak widths are 0.07 below and 0.09 above ``omega_p``; the ``1 - 0.287·ln(γ)`` factor keeps ``hs`` approximately unchanged by the enhancement.

    :param hs:
        Significant wave height in metres.
    :type hs:
        float
    :param omega_p:
        Peak frequency in rad/s.
    :type omega_p:
        float
    :param gamma:
        Peak enhancement factor, ``1`` reduces to Bretschneider.
        Defaults to ``3.3``.
    :type gamma:
        float
    :param omega:
        Frequency grid. Defaults to ``DEFAULT_OMEGA``.
    :type omega:
        array_like

    :return:
        The spectrum on ``omega``.
    :rtype:
        Spectrum
    """
    Parameter(hs, "hs").throw_error_if_not_positive()
    Parameter(omega_p, "omega_p").throw_error_if_not_positive()
    Parameter(gamma, "gamma").throw_error_if_not_positive()
    if gamma < 1:
        raise ValueError(f'"gamma" must be at least 1, got {gamma}.')

    omega = DEFAULT_OMEGA if omega is None else np.asarray(omega, dtype=float)

    sigma = np.where(omega <= omega_p, 0.07, 0.09)
    enhancement = gamma ** np.exp(-0.5 * ((omega - omega_p) / (sigma * omega_p)) ** 2)
    density = (
        _bretschneider_density(hs, omega_p, omega)
        * enhancement
        * (1 - 0.287 * np.log(gamma))
    )

    return Spectrum(omega, density)


def two_peak(
    swell_hs: float,
    swell_omega_p: float,
    wind_hs: float,
    wind_omega_p: float,
    omega: Optional[np.ndarray] = None,
) -> Spectrum:
    """
    Mixed sea made of a swell and a wind-sea Bretschneider component.

    The total significant wave height is ``sqrt(swell_hs² + wind_hs²)``.
    """
    swell = bretschneider(swell_hs, swell_omega_p, omega)
    wind = bretschneider(wind_hs, wind_omega_p, swell.omega)
    return Spectrum(swell.omega, swell.density + wind.density)


def sea_state(name: str, omega: Optional[np.ndarray] = None) -> Spectrum:
    """
    Parametric stand-in for one of the six studied sea states, ``"S1"`` to ``"S6"``.

    S1 is a narrowband swell, S2 to S5 mix swell and wind sea, and S6 is a single-peaked sea.

    :param name:
        Sea-state name, case and separator insensitive.
    :type name:
        str
    :param omega:
        Frequency grid. Defaults to ``DEFAULT_OMEGA``.
    :type omega:
        array_like

    :return:
        The preset spectrum.
    :rtype:
        Spectrum

    .. topic:: Example usage

        >>> s = wt.signals.sea_state("s2")
        >>> round(wt.signals.spectral_stats(s).hs, 2)
        1.43
    """
    Parameter(name, "name").throw_error_if_not_of_type(str)

    key = clean_and_lowercase(name).upper()
    if key not in SEA_STATES:
        raise ValueError(
            f'Unknown sea state "{name}", expected one of {sorted(SEA_STATES)}.'
        )

    preset = SEA_STATES[key]
    shape = preset["shape"]

    if shape == "bretschneider":
        return bretschneider(preset["hs"], preset["omega_p"], omega)
    if shape == "jonswap":
        return jonswap(preset["hs"], preset["omega_p"], preset["gamma"], omega)
    if shape == "two_peak":
        return two_peak(
            preset["swell"]["hs"],
            preset["swell"]["omega_p"],
            preset["wind"]["hs"],
            preset["wind"]["omega_p"],
            omega,
        )

    raise ValueError(f'Sea state "{name}" has unsupported shape "{shape}".')


def _bretschneider_density(hs: Real, omega_p: Real, omega: np.ndarray) -> np.ndarray:
    return (
        5.0
        / 16.0
        * hs**2
        * omega_p**4
        * omega**-5.0
        * np.exp(-1.25 * (omega_p / omega) ** 4)
    )


def _trapezoid_weights(omega: np.ndarray) -> np.ndarray:
    if omega.size == 1:
        return np.zeros(1)

    steps = np.diff(omega)
    weights = np.zeros_like(omega)
    weights[:-1] += steps / 2
    weights[1:] += steps / 2
    return weights
