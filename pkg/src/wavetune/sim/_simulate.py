from dataclasses import dataclass
import numpy as np
from scipy.integrate import trapezoid
from typing import Optional

from wavetune._utils import Parameter
from wavetune.control import ControlConfig, saturate, tune
from wavetune.hydro import HydroTable, RadiationKernel
from wavetune.signals import Spectrum, TimeSeries
from wavetune.sim._errors import DivergenceError
from wavetune.sim._metrics import (
    DEFAULT_TRANSIENT,
    EnergyBalance,
    SimMetrics,
    metrics,
)
from wavetune.sim._trajectory import Trajectory


DEFAULT_DT = 0.05
STEPS_PER_PERIOD = 10


@dataclass(frozen=True, eq=False)
class SimReport:
    trajectory: Trajectory
    metrics: SimMetrics
    energy_balance: EnergyBalance

    def to_summary(self) -> dict:
        return {
            "metrics": self.metrics.to_dict(),
            "energy_balance": self.energy_balance.to_dict(),
        }


def _convolution_weights(kernel: RadiationKernel) -> np.ndarray:
    taps = kernel.taps
    if taps.size < 2:
        return np.zeros(taps.size)

    weights = np.full(taps.size, kernel.dt)
    weights[0] *= 0.5
    weights[-1] *= 0.5
    return (taps * weights)[::-1]


def simulate(
    table: HydroTable,
    kernel: RadiationKernel,
    fe: TimeSeries,
    omega_hat: TimeSeries,
    config: ControlConfig,
    dt: float = DEFAULT_DT,
    zeta: Optional[TimeSeries] = None,
    spectrum: Optional[Spectrum] = None,
    transient_s: float = DEFAULT_TRANSIENT,
    omega_max: float = 3.0,
) -> SimReport:
    """
    Integrate the heave motion of the body under wave excitation, radiation memory and PTO control.

    (m + m_∞)·ẍ + (h_r ∗ ẋ) + S·x = f_e + f_p is stepped with fixed-step RK4 from rest.
    The radiation convolution is a trapezoidal sum over the stored velocity history, extrapolated to the step midpoint and held constant within the step.
    The PTO is retuned every step from ``omega_hat`` and held within the step.
    ``fe`` and ``omega_hat`` are interpolated linearly onto the integrator grid.

    :param table:
        Coefficient table of the body.
    :type table:
        HydroTable
    :param kernel:
        Radiation kernel sampled at ``dt``.
    :type kernel:
        RadiationKernel
    :param fe:
        Excitation force in N over the whole run.
    :type fe:
        TimeSeries
    :param omega_hat:
        Tuning frequency track in rad/s.
    :type omega_hat:
        TimeSeries
    :param config:
        Control law.
    :type config:
        ControlConfig
    :param dt:
        Integrator step in seconds, at most a tenth of the period of ``omega_max``.
        Defaults to ``0.05``.
    :type dt:
        float
    :param zeta:
        Elevation record, only copied into the trajectory.
    :type zeta:
        TimeSeries
    :param spectrum:
        Elevation spectrum for the capture width ratio.
    :type spectrum:
        Spectrum
    :param transient_s:
        Leading span excluded from the metrics.
        Defaults to ``120.0``.
    :type transient_s:
        float
    :param omega_max:
        Highest frequency the integrator must resolve, in rad/s.
        Defaults to ``3.0``.
    :type omega_max:
        float

    :return:
        Trajectory, metrics and energy balance of the run.
    :rtype:
        SimReport
    """
    Parameter(table, "table").throw_error_if_not_of_type(HydroTable)
    Parameter(kernel, "kernel").throw_error_if_not_of_type(RadiationKernel)
    Parameter(fe, "fe").throw_error_if_not_of_type(TimeSeries)
    Parameter(omega_hat, "omega_hat").throw_error_if_not_of_type(TimeSeries)
    Parameter(config, "config").throw_error_if_not_of_type(ControlConfig)
    Parameter(dt, "dt").throw_error_if_not_positive()
    Parameter(zeta, "zeta").throw_error_if_not_of_type(TimeSeries, optional=True)
    Parameter(omega_max, "omega_max").throw_error_if_not_positive()

    max_dt = 2 * np.pi / omega_max / STEPS_PER_PERIOD
    if dt > max_dt:
        raise ValueError(
            f"Step {dt} s is too coarse for {omega_max} rad/s, use at most {max_dt:.4g} s."
        )
    if abs(kernel.dt - dt) > 1e-9 * dt:
        raise ValueError(
            f"Radiation kernel is sampled at {kernel.dt} s but the step is {dt} s."
        )

    n_steps = int(np.floor((fe.end - fe.t0) / dt + 1e-9))
    if n_steps < 1:
        raise ValueError(f"Force record is shorter than one {dt} s step.")

    times = fe.t0 + dt * np.arange(n_steps + 1)
    fe_nodes = fe.at(times)
    fe_mid = fe.at(times[:-1] + 0.5 * dt)

    w = omega_hat.at(times)
    if not np.all(np.isfinite(w)) or np.any(w <= 0):
        raise ValueError("Tuning frequency track must be finite and positive.")
    b_p, s_p = tune(table, w, config.mode)

    weights = _convolution_weights(kernel)
    memory = weights.size
    history = np.zeros(memory - 1 + n_steps + 1)

    total_mass = table.total_mass
    stiffness = table.stiffness

    x = np.zeros(n_steps + 1)
    v = np.zeros(n_steps + 1)
    radiation = np.zeros(n_steps + 1)
    radiated_energy = 0.0
    previous = 0.0

    for n in range(n_steps):
        current = float(weights @ history[n : n + memory])
        radiation[n] = current
        frozen = current if n == 0 else 1.5 * current - 0.5 * previous
        previous = current

        bp, sp = b_p[n], s_p[n]

        def acceleration(xi: float, vi: float, force: float) -> float:
            damping_force, spring_force = saturate(bp * vi, sp * xi, config)
            f_p = -damping_force - spring_force
            return (force + f_p - stiffness * xi - frozen) / total_mass

        x0, v0 = x[n], v[n]
        k1x, k1v = v0, acceleration(x0, v0, fe_nodes[n])
        k2x, k2v = v0 + 0.5 * dt * k1v, acceleration(
            x0 + 0.5 * dt * k1x, v0 + 0.5 * dt * k1v, fe_mid[n]
        )
        k3x, k3v = v0 + 0.5 * dt * k2v, acceleration(
            x0 + 0.5 * dt * k2x, v0 + 0.5 * dt * k2v, fe_mid[n]
        )
        k4x, k4v = v0 + dt * k3v, acceleration(
            x0 + dt * k3x, v0 + dt * k3v, fe_nodes[n + 1]
        )

        x1 = x0 + dt / 6 * (k1x + 2 * k2x + 2 * k3x + k4x)
        v1 = v0 + dt / 6 * (k1v + 2 * k2v + 2 * k3v + k4v)
        if not (np.isfinite(x1) and np.isfinite(v1)):
            raise DivergenceError(
                f"Simulation diverged at step {n + 1} (t = {times[n + 1]:.2f} s)."
            )

        x[n + 1], v[n + 1] = x1, v1
        history[memory + n] = v1
        radiated_energy += frozen * (x1 - x0)

    radiation[n_steps] = float(weights @ history[n_steps : n_steps + memory])

    damping_force, spring_force = saturate(b_p * v, s_p * x, config)
    f_p = -damping_force - spring_force

    trajectory = Trajectory(
        time=times,
        zeta=zeta.at(times) if zeta is not None else np.full(times.size, np.nan),
        fe=fe_nodes,
        x=x,
        v=v,
        f_p=f_p,
        damping_force=damping_force,
        spring_force=spring_force,
        radiation_force=radiation,
        omega_hat=w,
        b_p=b_p,
        s_p=s_p,
    )

    balance = EnergyBalance(
        excitation_work=float(trapezoid(fe_nodes * v, times)),
        pto_energy=float(trapezoid(trajectory.p_total, times)),
        radiated_energy=float(radiated_energy),
        mechanical_change=0.5 * total_mass * v[-1] ** 2 + 0.5 * stiffness * x[-1] ** 2,
    )

    return SimReport(
        trajectory=trajectory,
        metrics=metrics(trajectory, table, spectrum, transient_s),
        energy_balance=balance,
    )
