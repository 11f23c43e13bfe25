from dataclasses import asdict, dataclass
import math
import numpy as np
from scipy.integrate import trapezoid
from typing import Dict, Optional

from wavetune._utils import Parameter
from wavetune.hydro import G, RHO, HydroTable, wave_power
from wavetune.signals import InsufficientDataError, Spectrum
from wavetune.sim._trajectory import Trajectory


DEFAULT_TRANSIENT = 120.0


@dataclass(frozen=True)
class SimMetrics:
    """
    Scalar performance figures of a run, computed after the transient.

    ``energy_j`` and ``mean_power_w`` are the energy and mean power absorbed by the damping term.
    ``reactive_energy_j`` and ``mean_reactive_power_w`` are the signed spring-term figures and ``mean_abs_reactive_power_w`` the mean of the absolute spring-term power.
    ``pto_rating`` is the peak delivered power over ``mean_power_w`` and ``reactive_ratio`` is ``mean_abs_reactive_power_w / mean_power_w``, both NaN when the mean absorbed power is not positive.
    ``cwr`` is the capture width ratio, NaN when no wave spectrum is known.
    """

    energy_j: float
    mean_power_w: float
    reactive_energy_j: float
    mean_reactive_power_w: float
    mean_abs_reactive_power_w: float
    pto_rating: float
    reactive_ratio: float
    cwr: float
    wave_power_w_per_m: float
    max_abs_fp_n: float
    max_abs_damping_force_n: float
    max_abs_spring_force_n: float
    max_abs_x_m: float
    mean_omega_hat: float

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)


@dataclass(frozen=True)
class EnergyBalance:
    """
    Energy bookkeeping over a whole run, in J.

    ``excitation_work`` should equal ``pto_energy + radiated_energy + mechanical_change``; the difference is ``residual``.
    """

    excitation_work: float
    pto_energy: float
    radiated_energy: float
    mechanical_change: float

    @property
    def residual(self) -> float:
        return self.excitation_work - (
            self.pto_energy + self.radiated_energy + self.mechanical_change
        )

    @property
    def relative_residual(self) -> float:
        if self.excitation_work == 0:
            return 0.0 if self.residual == 0 else math.inf
        return abs(self.residual) / abs(self.excitation_work)

    def to_dict(self) -> Dict[str, float]:
        data = asdict(self)
        data["residual"] = self.residual
        data["relative_residual"] = self.relative_residual
        return data


def metrics(
    trajectory: Trajectory,
    table: HydroTable,
    spectrum: Optional[Spectrum] = None,
    transient_s: float = DEFAULT_TRANSIENT,
    rho: float = RHO,
    g: float = G,
) -> SimMetrics:
    """
    Absorbed and reactive power, PTO rating and capture width ratio of a run.

    The first ``transient_s`` seconds are excluded.
    The capture width ratio divides the mean absorbed power by the wave power crossing the body diameter, ``2·r·P_ζ``.

    :param trajectory:
        Simulation output.
    :type trajectory:
        Trajectory
    :param table:
        Coefficient table supplying the body radius.
    :type table:
        HydroTable
    :param spectrum:
        Elevation spectrum of the sea state. Without it the capture width ratio is NaN.
    :type spectrum:
        Spectrum
    :param transient_s:
        Leading span to discard in seconds.
        Defaults to ``120.0``.
    :type transient_s:
        float

    :return:
        The scalar figures.
    :rtype:
        SimMetrics
    """
    Parameter(trajectory, "trajectory").throw_error_if_not_of_type(Trajectory)
    Parameter(table, "table").throw_error_if_not_of_type(HydroTable)
    Parameter(spectrum, "spectrum").throw_error_if_not_of_type(Spectrum, optional=True)
    Parameter(transient_s, "transient_s").throw_error_if_not_of_type((int, float))

    time = trajectory.time
    window = time >= time[0] + transient_s - 1e-9
    if np.count_nonzero(window) < 2:
        raise InsufficientDataError(
            f"Run of {time[-1] - time[0]:.1f} s leaves fewer than 2 samples after "
            f"the {transient_s} s transient."
        )

    t = time[window]
    span = t[-1] - t[0]
    p_abs = trajectory.p_abs[window]
    p_react = trajectory.p_react[window]
    p_total = trajectory.p_total[window]

    energy = float(trapezoid(p_abs, t))
    mean_power = energy / span
    reactive_energy = float(trapezoid(p_react, t))
    mean_abs_reactive = float(trapezoid(np.abs(p_react), t)) / span

    if mean_power > 0:
        pto_rating = float(np.max(np.abs(p_total))) / mean_power
        reactive_ratio = mean_abs_reactive / mean_power
    else:
        pto_rating = math.nan
        reactive_ratio = math.nan

    if spectrum is not None:
        p_wave = wave_power(spectrum, rho, g)
        cwr = mean_power / (2 * table.radius * p_wave) if p_wave > 0 else math.nan
    else:
        p_wave = math.nan
        cwr = math.nan

    return SimMetrics(
        energy_j=energy,
        mean_power_w=mean_power,
        reactive_energy_j=reactive_energy,
        mean_reactive_power_w=reactive_energy / span,
        mean_abs_reactive_power_w=mean_abs_reactive,
        pto_rating=pto_rating,
        reactive_ratio=reactive_ratio,
        cwr=cwr,
        wave_power_w_per_m=p_wave,
        max_abs_fp_n=float(np.max(np.abs(trajectory.f_p[window]))),
        max_abs_damping_force_n=float(
            np.max(np.abs(trajectory.damping_force[window]))
        ),
        max_abs_spring_force_n=float(np.max(np.abs(trajectory.spring_force[window]))),
        max_abs_x_m=float(np.max(np.abs(trajectory.x[window]))),
        mean_omega_hat=float(np.mean(trajectory.omega_hat[window])),
    )
