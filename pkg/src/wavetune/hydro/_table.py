from dataclasses import dataclass
import json
from numbers import Real
import numpy as np
from pathlib import Path
from typing import Dict, NamedTuple, Union

from wavetune import _utils
from wavetune._resources import CYLINDER_SAMPLE_TABLE
from wavetune._utils import Parameter
from wavetune.signals import ParseError


TAIL_RATIO_LIMIT = 0.02

_ARRAY_FIELDS = (
    "omega",
    "added_mass",
    "radiation_damping",
    "excitation_gain",
    "excitation_phase",
)
_SCALAR_FIELDS = ("m_inf", "mass", "stiffness", "radius")


@dataclass(frozen=True, eq=False)
class HydroTable:
    """
    Frequency-domain hydrodynamic coefficients of a heaving body.

    :param omega:
        Strictly increasing frequency grid in rad/s, starting above 0.
    :param added_mass:
        Radiation added mass m_r(ω) in kg.
    :param radiation_damping:
        Radiation damping B_r(ω) in N·s/m, non-negative.
    :param excitation_gain:
        Excitation force gain \\|H_e(ω)\\| in N/m.
    :param excitation_phase:
        Excitation force phase ∠H_e(ω) in rad.
    :param m_inf:
        Infinite-frequency added mass in kg.
    :param mass:
        Body mass in kg.
    :param stiffness:
        Hydrostatic (buoyancy) stiffness in N/m.
    :param radius:
        Waterline radius in m, used for capture width.
    """

    omega: np.ndarray
    added_mass: np.ndarray
    radiation_damping: np.ndarray
    excitation_gain: np.ndarray
    excitation_phase: np.ndarray
    m_inf: float
    mass: float
    stiffness: float
    radius: float

    def __post_init__(self) -> None:
        arrays = {}
        for name in _ARRAY_FIELDS:
            array = np.array(getattr(self, name), dtype=float)
            if array.ndim != 1:
                raise ValueError(f'"{name}" must be one-dimensional.')
            if not np.all(np.isfinite(array)):
                raise ValueError(f'"{name}" contains non-finite values.')
            array.setflags(write=False)
            arrays[name] = array

        omega = arrays["omega"]
        if omega.size < 2:
            raise ValueError("A hydro table needs at least 2 frequencies.")
        for name in _ARRAY_FIELDS[1:]:
            if arrays[name].shape != omega.shape:
                raise ValueError(
                    f'"{name}" has {arrays[name].size} values for {omega.size} frequencies.'
                )
        if omega[0] <= 0 or np.any(np.diff(omega) <= 0):
            raise ValueError(
                "Hydro table frequencies must be positive and strictly increasing."
            )
        if np.any(arrays["radiation_damping"] < 0):
            raise ValueError("Radiation damping must be non-negative.")

        Parameter(self.mass, "mass").throw_error_if_not_positive()
        Parameter(self.stiffness, "stiffness").throw_error_if_not_positive()
        Parameter(self.radius, "radius").throw_error_if_not_positive()
        Parameter(self.m_inf, "m_inf").throw_error_if_not_of_type(Real)

        if np.any(self.mass + arrays["added_mass"] <= 0) or self.mass + self.m_inf <= 0:
            raise ValueError("Total mass m + m_r(ω) must be positive.")

        for name, array in arrays.items():
            object.__setattr__(self, name, array)
        for name in _SCALAR_FIELDS:
            object.__setattr__(self, name, float(getattr(self, name)))

    @property
    def total_mass(self) -> float:
        """
        Mass of the body plus its infinite-frequency added mass.
        """
        return self.mass + self.m_inf

    def tail_ratios(self) -> Dict[str, float]:
        """
        Radiation damping at each end of the grid, relative to its peak.
        """
        peak = self.radiation_damping.max()
        if peak == 0:
            return {"low": 0.0, "high": 0.0}
        return {
            "low": float(self.radiation_damping[0] / peak),
            "high": float(self.radiation_damping[-1] / peak),
        }

    def to_dict(self) -> dict:
        data = {name: getattr(self, name).tolist() for name in _ARRAY_FIELDS}
        data.update({name: getattr(self, name) for name in _SCALAR_FIELDS})
        return data


class HydroCoeffs(NamedTuple):
    added_mass: Union[float, np.ndarray]
    radiation_damping: Union[float, np.ndarray]
    excitation: Union[complex, np.ndarray]


def interp_coeffs(table: HydroTable, w) -> HydroCoeffs:
    """
    Hydrodynamic coefficients at frequency ``w`` by piecewise-linear interpolation.

    Below the grid every coefficient holds its first tabulated value.
    Above the grid the radiation damping is 0, the added mass is ``m_inf`` and the excitation gain and phase hold their last values.

    :param table:
        Coefficient table.
    :type table:
        HydroTable
    :param w:
        Frequency or array of frequencies in rad/s, all positive.
    :type w:
        Union[float, array_like]

    :return:
        Added mass, radiation damping and complex excitation coefficient ``|H_e|·exp(j∠H_e)``, scalars for scalar ``w``.
    :rtype:
        HydroCoeffs

    .. topic:: Example usage

        >>> table = wt.hydro.sample_table()
        >>> wt.hydro.interp_coeffs(table, 20.0).radiation_damping
        0.0
    """
    Parameter(table, "table").throw_error_if_not_of_type(HydroTable)

    w_array = np.asarray(w, dtype=float)
    if not np.all(np.isfinite(w_array)) or np.any(w_array <= 0):
        raise ValueError(f'"w" must be positive, got {w}.')

    return _interp(table, w_array)


def _interp(table: HydroTable, w: np.ndarray) -> HydroCoeffs:
    omega = table.omega
    added_mass = np.interp(w, omega, table.added_mass, right=table.m_inf)
    damping = np.interp(w, omega, table.radiation_damping, right=0.0)
    gain = np.interp(w, omega, table.excitation_gain)
    phase = np.interp(w, omega, table.excitation_phase)
    excitation = gain * np.exp(1j * phase)

    if w.ndim == 0:
        return HydroCoeffs(float(added_mass), float(damping), complex(excitation))
    return HydroCoeffs(added_mass, damping, excitation)


def sample_table() -> HydroTable:
    """
    The packaged heaving-cylinder table: radius 5 m, mass 320 t, resonance at 1.2 rad/s.
    """
    return HydroTable(**CYLINDER_SAMPLE_TABLE)


def load_hydro_table(
    path: Union[str, Path], suppress_warnings: bool = False
) -> HydroTable:
    """
    Read a hydro table from JSON.

    The file holds the arrays ``omega``, ``added_mass``, ``radiation_damping``, ``excitation_gain`` and ``excitation_phase`` and the scalars ``m_inf``, ``mass``, ``stiffness`` and ``radius``.
    A warning is emitted when the radiation damping does not vanish at either end of the grid.

    :param path:
        JSON file to read.
    :type path:
        Union[str, Path]
    :param suppress_warnings:
        Disable the warning about non-vanishing damping.
        Defaults to ``False``.
    :type suppress_warnings:
        bool

    :return:
        The table.
    :rtype:
        HydroTable
    """
    Parameter(suppress_warnings, "suppress_warnings").throw_error_if_not_of_type(bool)

    path = Path(path)
    try:
        with open(path, "r") as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise ParseError(f"Could not parse {path}: {e}") from e

    missing = [
        name for name in _ARRAY_FIELDS + _SCALAR_FIELDS if name not in data
    ]
    if missing:
        raise ParseError(f"{path} is missing hydro table fields {missing}.")

    table = HydroTable(
        **{name: data[name] for name in _ARRAY_FIELDS + _SCALAR_FIELDS}
    )

    if not suppress_warnings:
        for end, ratio in table.tail_ratios().items():
            if ratio > TAIL_RATIO_LIMIT:
                _utils.warn_table_tail(end, ratio)

    return table


def write_hydro_table(table: HydroTable, path: Union[str, Path]) -> None:
    Parameter(table, "table").throw_error_if_not_of_type(HydroTable)

    with open(path, "w") as f:
        json.dump(table.to_dict(), f, indent=4)
