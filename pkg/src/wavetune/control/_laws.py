import numpy as np
from numbers import Real
from typing import NamedTuple, Union

from wavetune._utils import Parameter
from wavetune.control._config import ControlConfig, resolve_mode
from wavetune.hydro import HydroTable, interp_coeffs


ArrayLike = Union[float, np.ndarray]


class TuningParams(NamedTuple):
    b_p: ArrayLike
    s_p: ArrayLike


class PtoCommand(NamedTuple):
    """
    PTO force split into its damping and spring terms, after saturation.

    ``f_p = -damping_force - spring_force``.
    """

    b_p: float
    s_p: float
    f_p: float
    damping_force: float
    spring_force: float


def pc_damping(table: HydroTable, w_hat: ArrayLike) -> ArrayLike:
    """
    Passive damping tuned to frequency ``w_hat``.

    B_p = sqrt(B_r(ω̂)² + (ω̂·(m + m_r(ω̂)) − S/ω̂)²), the magnitude of the intrinsic impedance.

    :param table:
        Coefficient table.
    :type table:
        HydroTable
    :param w_hat:
        Tuning frequency or frequencies in rad/s.
    :type w_hat:
        Union[float, array_like]

    :return:
        PTO damping in N·s/m.
    :rtype:
        Union[float, numpy.ndarray]

    .. topic:: Example usage

        >>> table = wt.hydro.sample_table()
        >>> w_res = wt.hydro.resonance_frequency(table)
        >>> b_r = wt.hydro.interp_coeffs(table, w_res).radiation_damping
        >>> abs(wt.control.pc_damping(table, w_res) - b_r) < 1e-6 * b_r
        True
    """
    coeffs = interp_coeffs(table, w_hat)
    w = np.asarray(w_hat, dtype=float)
    reactance = w * (table.mass + coeffs.added_mass) - table.stiffness / w
    damping = np.hypot(coeffs.radiation_damping, reactance)
    return float(damping) if damping.ndim == 0 else damping


def rc_params(table: HydroTable, w_hat: ArrayLike) -> TuningParams:
    """
    Reactive damping and stiffness tuned to frequency ``w_hat``.

    S_p = ω̂²·(m + m_r(ω̂)) − S cancels the body reactance and B_p = B_r(ω̂) matches the radiation damping.
    ``S_p`` is negative (a softening spring) below resonance.

    :param table:
        Coefficient table.
    :type table:
        HydroTable
    :param w_hat:
        Tuning frequency or frequencies in rad/s.
    :type w_hat:
        Union[float, array_like]

    :return:
        PTO damping in N·s/m and stiffness in N/m.
    :rtype:
        TuningParams
    """
    coeffs = interp_coeffs(table, w_hat)
    w = np.asarray(w_hat, dtype=float)
    s_p = w**2 * (table.mass + coeffs.added_mass) - table.stiffness
    b_p = coeffs.radiation_damping

    if np.ndim(s_p) == 0:
        return TuningParams(float(b_p), float(s_p))
    return TuningParams(b_p, s_p)


def tune(table: HydroTable, w_hat: ArrayLike, mode: str) -> TuningParams:
    """
    Tuning parameters for either control mode.

    Passive control returns ``S_p = 0``.
    """
    Parameter(table, "table").throw_error_if_not_of_type(HydroTable)
    mode = resolve_mode(mode)

    if mode == "reactive":
        return rc_params(table, w_hat)

    b_p = pc_damping(table, w_hat)
    return TuningParams(b_p, np.zeros_like(b_p) if np.ndim(b_p) else 0.0)


def saturate(damping_force, spring_force, config: ControlConfig):
    """
    Apply the force limit of ``config`` to the damping and spring terms.

    Works on scalars and on arrays of equal shape.
    """
    if not config.is_constrained:
        return damping_force, spring_force

    f_max = config.f_max
    if config.saturation == "per_term":
        return (
            np.clip(damping_force, -f_max, f_max),
            np.clip(spring_force, -f_max, f_max),
        )

    total = np.abs(np.add(damping_force, spring_force))
    scale = np.where(total > f_max, f_max / np.maximum(total, f_max), 1.0)
    return damping_force * scale, spring_force * scale


def pto_force(
    params: TuningParams, x: float, v: float, config: ControlConfig
) -> PtoCommand:
    """
    PTO force for the current body state.

    f_p = −sat(B_p·v) − sat(S_p·x); passive control is the ``S_p = 0`` case.

    :param params:
        Damping and stiffness from :py:func:`tune`.
    :type params:
        TuningParams
    :param x:
        Heave displacement in m.
    :type x:
        float
    :param v:
        Heave velocity in m/s.
    :type v:
        float
    :param config:
        Control law, supplying the force limit.
    :type config:
        ControlConfig

    :return:
        The saturated force and its terms.
    :rtype:
        PtoCommand

    .. topic:: Example usage

        >>> cfg = wt.control.ControlConfig("reactive", f_max=5e5)
        >>> params = wt.control.TuningParams(3e5, 0.0)
        >>> wt.control.pto_force(params, 0.0, 2.0, cfg).f_p
        -500000.0
    """
    Parameter(params, "params").throw_error_if_not_of_type(TuningParams)
    Parameter(x, "x").throw_error_if_not_of_type(Real)
    Parameter(v, "v").throw_error_if_not_of_type(Real)
    Parameter(config, "config").throw_error_if_not_of_type(ControlConfig)

    b_p = float(params.b_p)
    s_p = float(params.s_p) if config.mode == "reactive" else 0.0

    damping_force, spring_force = map(float, saturate(b_p * v, s_p * x, config))

    return PtoCommand(
        b_p=b_p,
        s_p=s_p,
        f_p=-damping_force - spring_force,
        damping_force=damping_force,
        spring_force=spring_force,
    )
