from dataclasses import dataclass, replace
import numpy as np
from numbers import Real
from typing import NamedTuple, Optional

from wavetune import _utils
from wavetune._utils import Parameter
from wavetune.ekf._config import EkfConfig
from wavetune.ekf._errors import NumericalDegeneracyError
from wavetune.signals import TimeSeries, periodogram_peak


_H = np.array([1.0, 0.0, 0.0])


@dataclass(frozen=True, eq=False)
class EkfState:
    """
    State of the frequency-tracking filter.

    ``x = [ψ, ψ*, ω]`` holds the in-phase and quadrature signal components and the frequency.
    ``P``, ``Q`` and ``R`` are the state, process and measurement covariances and ``ts`` the sample interval.
    """

    x: np.ndarray
    P: np.ndarray
    Q: np.ndarray
    R: float
    ts: float
    omega_min: float = 0.1
    omega_max: float = 3.0

    @property
    def omega(self) -> float:
        return float(self.x[2])

    @property
    def amplitude(self) -> float:
        return float(np.hypot(self.x[0], self.x[1]))


class EkfStep(NamedTuple):
    state: EkfState
    omega_hat: float
    amplitude: float


class EkfResult(NamedTuple):
    omega: TimeSeries
    amplitude: TimeSeries
    resets: int


def ekf_init(fe: TimeSeries, config: Optional[EkfConfig] = None) -> EkfState:
    """
    Prior state of the filter for a force record.

    ψ starts at the first sample and ψ* at zero.
    The frequency starts at ``config.omega0`` or at the periodogram peak of the leading samples, and ``P0 = diag(R, var, p_omega0)`` with ``var`` the record variance.

    :param fe:
        Excitation force record.
    :type fe:
        TimeSeries
    :param config:
        Filter tuning. Defaults to ``EkfConfig()``.
    :type config:
        EkfConfig

    :return:
        The prior state.
    :rtype:
        EkfState
    """
    Parameter(fe, "fe").throw_error_if_not_of_type(TimeSeries)
    Parameter(config, "config").throw_error_if_not_of_type(EkfConfig, optional=True)
    config = EkfConfig() if config is None else config

    finite = fe.values[np.isfinite(fe.values)]
    variance = float(np.var(finite)) if finite.size > 0 else 0.0

    r = config.r
    if r is None:
        r = 0.01 * variance if variance > 0 else 1e-12
    variance = max(variance, r)
    q_psi = 10.0 * r if config.q_psi is None else config.q_psi

    omega0 = config.omega0
    if omega0 is None:
        omega0 = periodogram_peak(
            fe, config.init_samples, config.omega_min, config.omega_max
        )
    omega0 = float(np.clip(omega0, config.omega_min, config.omega_max))

    return EkfState(
        x=np.array([fe.values[0], 0.0, omega0]),
        P=np.diag([r, variance, config.p_omega0]),
        Q=np.diag([q_psi, q_psi, config.q_omega]),
        R=r,
        ts=fe.dt,
        omega_min=config.omega_min,
        omega_max=config.omega_max,
    )


def ekf_step(state: EkfState, fe_k: float) -> EkfStep:
    """
    One prediction and innovation step of the filter.

    The signal components rotate by ``ω·ts`` per sample and the frequency follows a random walk.
    The covariance is propagated with the analytic Jacobian of the rotation, updated in Joseph form and re-symmetrized.

    :param state:
        Filter state at the previous sample.
    :type state:
        EkfState
    :param fe_k:
        Force measurement at the current sample in N.
    :type fe_k:
        float

    :return:
        The new state with its frequency and amplitude estimates.
    :rtype:
        EkfStep

    .. topic:: Example usage

        >>> fe = wt.signals.TimeSeries(0.0, 0.5, np.cos(0.8 * 0.5 * np.arange(600)))
        >>> step = wt.ekf.ekf_step(wt.ekf.ekf_init(fe), fe.values[1])
        >>> 0.1 <= step.omega_hat <= 3.0
        True
    """
    Parameter(state, "state").throw_error_if_not_of_type(EkfState)
    Parameter(fe_k, "fe_k").throw_error_if_not_of_type(Real)

    psi, psi_q, omega = state.x
    angle = omega * state.ts
    c, s = np.cos(angle), np.sin(angle)

    x_pred = np.array([c * psi + s * psi_q, -s * psi + c * psi_q, omega])
    jacobian = np.array(
        [
            [c, s, state.ts * (-s * psi + c * psi_q)],
            [-s, c, state.ts * (-c * psi - s * psi_q)],
            [0.0, 0.0, 1.0],
        ]
    )
    P_pred = jacobian @ state.P @ jacobian.T + state.Q

    innovation_cov = P_pred[0, 0] + state.R
    if not np.isfinite(innovation_cov) or innovation_cov <= 0:
        raise NumericalDegeneracyError(
            f"Innovation covariance is {innovation_cov}, cannot compute the Kalman gain."
        )

    gain = P_pred[:, 0] / innovation_cov
    x_new = x_pred + gain * (fe_k - x_pred[0])

    i_kh = np.eye(3) - np.outer(gain, _H)
    P_new = i_kh @ P_pred @ i_kh.T + state.R * np.outer(gain, gain)
    P_new = 0.5 * (P_new + P_new.T)

    if not (np.all(np.isfinite(x_new)) and np.all(np.isfinite(P_new))):
        raise NumericalDegeneracyError("Filter state became non-finite.")

    x_new[2] = np.clip(x_new[2], state.omega_min, state.omega_max)
    new_state = replace(state, x=x_new, P=P_new)

    return EkfStep(new_state, new_state.omega, new_state.amplitude)


def ekf_filter(
    fe: TimeSeries,
    config: Optional[EkfConfig] = None,
    on_fail: str = "reset",
    suppress_warnings: bool = False,
) -> EkfResult:
    """
    Run the filter over a force record and return both the frequency and amplitude tracks.

    :param fe:
        Uniformly sampled excitation force in N.
    :type fe:
        TimeSeries
    :param config:
        Filter tuning. Defaults to ``EkfConfig()``.
    :type config:
        EkfConfig
    :param on_fail:
        Behaviour when a step degenerates.
        If set to ``"reset"``, the filter restarts from its prior at the failing sample and a warning is emitted.
        If set to ``"raise"``, the :py:class:`NumericalDegeneracyError` propagates.
        Defaults to ``"reset"``.
    :type on_fail:
        str
    :param suppress_warnings:
        Disable warnings about filter resets.
        Defaults to ``False``.
    :type suppress_warnings:
        bool

    :return:
        Frequency track in rad/s, amplitude track in N and the number of resets.
    :rtype:
        EkfResult
    """
    Parameter(fe, "fe").throw_error_if_not_of_type(TimeSeries)
    Parameter(on_fail, "on_fail").throw_error_if_not_one_of("reset", "raise")
    Parameter(suppress_warnings, "suppress_warnings").throw_error_if_not_of_type(bool)

    prior = ekf_init(fe, config)
    state = prior

    n = len(fe)
    omega = np.empty(n)
    amplitude = np.empty(n)
    omega[0] = state.omega
    amplitude[0] = state.amplitude
    resets = 0

    for k in range(1, n):
        sample = float(fe.values[k])
        try:
            state = ekf_step(state, sample).state
        except NumericalDegeneracyError as e:
            if on_fail == "raise":
                raise
            if not suppress_warnings:
                _utils.warn_filter_reset("EKF", k, str(e))
            x = prior.x.copy()
            x[0] = sample if np.isfinite(sample) else 0.0
            state = replace(prior, x=x)
            resets += 1

        omega[k] = state.omega
        amplitude[k] = state.amplitude

    return EkfResult(fe.with_values(omega), fe.with_values(amplitude), resets)


def ekf_run(
    fe: TimeSeries,
    config: Optional[EkfConfig] = None,
    on_fail: str = "reset",
    suppress_warnings: bool = False,
) -> TimeSeries:
    """
    Track the dominant frequency of a force record with the extended Kalman filter.

    Over irregular seas the track settles near the mean centroid frequency m1/m0 of the force spectrum.

    :param fe:
        Uniformly sampled excitation force in N.
    :type fe:
        TimeSeries
    :param config:
        Filter tuning. Defaults to ``EkfConfig()``.
    :type config:
        EkfConfig
    :param on_fail:
        ``"reset"`` or ``"raise"``, see :py:func:`ekf_filter`.
        Defaults to ``"reset"``.
    :type on_fail:
        str
    :param suppress_warnings:
        Disable warnings about filter resets.
        Defaults to ``False``.
    :type suppress_warnings:
        bool

    :return:
        Frequency estimate in rad/s on the time base of ``fe``.
    :rtype:
        TimeSeries
    """
    return ekf_filter(fe, config, on_fail, suppress_warnings).omega
