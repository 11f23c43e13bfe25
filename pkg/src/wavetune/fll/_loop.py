from dataclasses import dataclass, replace
import math
import numpy as np
from numbers import Real
from typing import NamedTuple, Optional, Tuple

from wavetune._utils import Parameter
from wavetune.fll._config import FllConfig
from wavetune.fll._errors import NonFiniteInputError, NormalizationError
from wavetune.signals import TimeSeries, periodogram_peak


@dataclass(frozen=True)
class FllState:
    """
    State of the SOGI frequency-locked loop.

    ``xi`` is the band-passed input and ``nu`` the integral of ``xi``.
    The quadrature output ``xi_q = omega_hat * nu`` lags ``xi`` by 90° in lock.
    """

    xi: float
    nu: float
    omega_hat: float
    kappa: float = math.sqrt(2)
    gamma: float = 0.16
    omega_min: float = 0.1
    omega_max: float = 3.0

    @property
    def xi_q(self) -> float:
        return self.omega_hat * self.nu


class FllStep(NamedTuple):
    state: FllState
    omega_hat: float


class FllResult(NamedTuple):
    omega: TimeSeries
    xi: TimeSeries
    xi_q: TimeSeries


def fll_init(omega0: float, config: Optional[FllConfig] = None) -> FllState:
    """
    Loop at rest with its frequency at ``omega0`` (clamped to the configured range).
    """
    Parameter(omega0, "omega0").throw_error_if_not_positive()
    Parameter(config, "config").throw_error_if_not_of_type(FllConfig, optional=True)
    config = FllConfig() if config is None else config

    return FllState(
        xi=0.0,
        nu=0.0,
        omega_hat=float(np.clip(omega0, config.omega_min, config.omega_max)),
        kappa=config.kappa,
        gamma=config.gamma,
        omega_min=config.omega_min,
        omega_max=config.omega_max,
    )


def _derivatives(
    state: FllState, xi: float, nu: float, omega: float, u: float
) -> Tuple[float, float, float]:
    error = u - xi
    d_xi = state.kappa * omega * error - omega**2 * nu
    d_nu = xi
    d_omega = -state.gamma * error * omega**2 * nu
    return d_xi, d_nu, d_omega


def fll_step(
    state: FllState, fen: float, dt: float, fen_next: Optional[float] = None
) -> FllStep:
    """
    Advance the loop by ``dt`` with one classical Runge-Kutta step.

    The SOGI obeys ``ξ' = κω̂(u − ξ) − ω̂²ν`` and ``ν' = ξ``, and the frequency ``ω̂' = −γ(u − ξ)ξ*ω̂`` with ``ξ* = ω̂ν``.
    The state carries ``ν``; ``ξ*`` is derived from it.
    The input ``u`` ramps linearly from ``fen`` to ``fen_next`` over the step, or is held at ``fen`` when ``fen_next`` is omitted.

    :param state:
        Loop state at the start of the step.
    :type state:
        FllState
    :param fen:
        Normalized force at the start of the step.
    :type fen:
        float
    :param dt:
        Step length in seconds.
    :type dt:
        float
    :param fen_next:
        Normalized force at the end of the step.
    :type fen_next:
        float

    :return:
        The new state and its clamped frequency estimate.
    :rtype:
        FllStep
    """
    Parameter(state, "state").throw_error_if_not_of_type(FllState)
    Parameter(dt, "dt").throw_error_if_not_positive()
    Parameter(fen, "fen").throw_error_if_not_of_type(Real)
    Parameter(fen_next, "fen_next").throw_error_if_not_of_type(Real, optional=True)

    fen_next = fen if fen_next is None else fen_next
    if not (math.isfinite(fen) and math.isfinite(fen_next)):
        raise NonFiniteInputError(f"Non-finite loop input ({fen}, {fen_next}).")

    u_mid = 0.5 * (fen + fen_next)
    y = (state.xi, state.nu, state.omega_hat)

    k1 = _derivatives(state, *y, fen)
    k2 = _derivatives(state, *(yi + 0.5 * dt * ki for yi, ki in zip(y, k1)), u_mid)
    k3 = _derivatives(state, *(yi + 0.5 * dt * ki for yi, ki in zip(y, k2)), u_mid)
    k4 = _derivatives(state, *(yi + dt * ki for yi, ki in zip(y, k3)), fen_next)

    xi, nu, omega = (
        yi + dt / 6 * (a + 2 * b + 2 * c + d)
        for yi, a, b, c, d in zip(y, k1, k2, k3, k4)
    )
    omega = min(max(omega, state.omega_min), state.omega_max)

    new_state = replace(state, xi=xi, nu=nu, omega_hat=omega)
    return FllStep(new_state, omega)


def normalize_force(fe: TimeSeries, window_s: float = 120.0) -> TimeSeries:
    """
    Divide a force record by its trailing-window rms.

    Samples before the first full window use the rms of the first window.

    :param fe:
        Force record.
    :type fe:
        TimeSeries
    :param window_s:
        Window length in seconds.
        Defaults to ``120.0``.
    :type window_s:
        float

    :return:
        Dimensionless force of unit local rms.
    :rtype:
        TimeSeries
    """
    Parameter(fe, "fe").throw_error_if_not_of_type(TimeSeries)
    Parameter(window_s, "window_s").throw_error_if_not_positive()

    values = fe.values
    if not np.all(np.isfinite(values)):
        raise NonFiniteInputError("Force record contains non-finite samples.")

    overall = float(np.sqrt(np.mean(values**2)))
    if overall == 0:
        raise NormalizationError("Cannot normalize an all-zero force record.")

    n = values.size
    window = min(n, max(1, int(round(window_s / fe.dt))))

    cumulative = np.concatenate(([0.0], np.cumsum(values**2)))
    mean_square = np.empty(n)
    mean_square[window - 1 :] = (cumulative[window:] - cumulative[:-window]) / window
    mean_square[: window - 1] = cumulative[window] / window

    rms = np.sqrt(np.clip(mean_square, 0.0, None))
    rms = np.where(rms > 1e-12 * overall, rms, overall)

    return fe.with_values(values / rms)


def fll_filter(fe: TimeSeries, config: Optional[FllConfig] = None) -> FllResult:
    """
    Run the loop over a force record and return the frequency track with the SOGI outputs.

    The force is normalized first. Between force samples the loop is integrated in equal sub-steps no longer than ``config.dt_internal``, with the input interpolated linearly.

    :param fe:
        Uniformly sampled excitation force.
    :type fe:
        TimeSeries
    :param config:
        Loop tuning. Defaults to ``FllConfig()``.
    :type config:
        FllConfig

    :return:
        Frequency estimate in rad/s and the direct and quadrature SOGI outputs, all on the time base of ``fe``.
    :rtype:
        FllResult
    """
    Parameter(fe, "fe").throw_error_if_not_of_type(TimeSeries)
    Parameter(config, "config").throw_error_if_not_of_type(FllConfig, optional=True)
    config = FllConfig() if config is None else config

    fen = normalize_force(fe, config.norm_window_s).values

    omega0 = config.omega0
    if omega0 is None:
        omega0 = periodogram_peak(
            fe, config.init_samples, config.omega_min, config.omega_max
        )
    state = fll_init(omega0, config)

    substeps = max(1, int(math.ceil(fe.dt / config.dt_internal - 1e-9)))
    h = fe.dt / substeps
    ramp = np.arange(substeps + 1) / substeps

    n = fen.size
    omega = np.empty(n)
    xi = np.empty(n)
    xi_q = np.empty(n)
    omega[0], xi[0], xi_q[0] = state.omega_hat, state.xi, state.xi_q

    for k in range(1, n):
        u = fen[k - 1] + ramp * (fen[k] - fen[k - 1])
        for j in range(substeps):
            state = fll_step(state, float(u[j]), h, float(u[j + 1])).state
        omega[k], xi[k], xi_q[k] = state.omega_hat, state.xi, state.xi_q

    return FllResult(fe.with_values(omega), fe.with_values(xi), fe.with_values(xi_q))


def fll_run(fe: TimeSeries, config: Optional[FllConfig] = None) -> TimeSeries:
    """
    Track the frequency of a force record with the SOGI frequency-locked loop.

    Over irregular seas the track settles near the energy frequency m0/m₋₁ of the force spectrum.
    Scaling ``fe`` by a positive constant leaves the track unchanged.

    :param fe:
        Uniformly sampled excitation force.
    :type fe:
        TimeSeries
    :param config:
        Loop tuning. Defaults to ``FllConfig()``.
    :type config:
        FllConfig

    :return:
        Frequency estimate in rad/s on the time base of ``fe``.
    :rtype:
        TimeSeries

    .. topic:: Example usage

        >>> t = 0.25 * np.arange(7200)
        >>> fe = wt.signals.TimeSeries(0.0, 0.25, 3e5 * np.cos(0.8 * t))
        >>> omega = wt.fll.fll_run(fe)
        >>> round(float(omega.values[-3600:].mean()), 2)
        0.8
    """
    return fll_filter(fe, config).omega
