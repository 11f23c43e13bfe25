import numpy as np
from scipy.optimize import brentq

from wavetune._utils import Parameter
from wavetune.hydro._errors import NoResonanceError
from wavetune.hydro._table import HydroTable, _interp
from wavetune.signals import Spectrum, spectral_moments


RHO = 1025.0
G = 9.81


def buoyancy_stiffness(rho: float = RHO, g: float = G, r: float = 5.0) -> float:
    """
    Hydrostatic stiffness ρ·g·π·r² of a vertical cylinder of radius ``r``.

    .. topic:: Example usage

        >>> round(wt.hydro.buoyancy_stiffness(1025, 9.81, 5))
        789737
    """
    Parameter(rho, "rho").throw_error_if_not_positive()
    Parameter(g, "g").throw_error_if_not_positive()
    Parameter(r, "r").throw_error_if_not_positive()

    return rho * g * np.pi * r**2


def resonance_frequency(table: HydroTable) -> float:
    """
    Heave resonance frequency, the root of ω²·(m + m_r(ω)) − S inside the table grid.

    The lowest sign change on the grid is refined with Brent's method.

    :param table:
        Coefficient table.
    :type table:
        HydroTable

    :return:
        Resonance frequency in rad/s.
    :rtype:
        float
    """
    Parameter(table, "table").throw_error_if_not_of_type(HydroTable)

    def reactance(w: float) -> float:
        added_mass = _interp(table, np.asarray(w)).added_mass
        return w**2 * (table.mass + added_mass) - table.stiffness

    values = table.omega**2 * (table.mass + table.added_mass) - table.stiffness
    exact = np.flatnonzero(values == 0)
    crossings = np.flatnonzero(np.sign(values[:-1]) * np.sign(values[1:]) < 0)

    candidates = []
    if exact.size > 0:
        candidates.append(float(table.omega[exact[0]]))
    if crossings.size > 0:
        i = int(crossings[0])
        candidates.append(brentq(reactance, table.omega[i], table.omega[i + 1]))

    if not candidates:
        raise NoResonanceError(
            "ω²(m + m_r(ω)) − S does not change sign on the hydro table grid."
        )

    return float(min(candidates))


def force_spectrum(table: HydroTable, spectrum: Spectrum) -> Spectrum:
    """
    Excitation force spectrum \\|H_e(ω)\\|²·S_ζ(ω) on the grid of ``spectrum``.
    """
    Parameter(table, "table").throw_error_if_not_of_type(HydroTable)
    Parameter(spectrum, "spectrum").throw_error_if_not_of_type(Spectrum)

    gain = np.abs(_interp(table, spectrum.omega).excitation)
    return Spectrum(spectrum.omega, gain**2 * spectrum.density)


def wave_power(spectrum: Spectrum, rho: float = RHO, g: float = G) -> float:
    """
    Deep-water wave power per unit crest width, (ρ·g²/2)·∫S_ζ(ω)/ω dω, in W/m.

    :param spectrum:
        Elevation spectrum.
    :type spectrum:
        Spectrum
    :param rho:
        Water density in kg/m³.
        Defaults to ``1025.0``.
    :type rho:
        float
    :param g:
        Gravitational acceleration in m/s².
        Defaults to ``9.81``.
    :type g:
        float

    :return:
        Wave power per metre of crest.
    :rtype:
        float
    """
    Parameter(rho, "rho").throw_error_if_not_positive()
    Parameter(g, "g").throw_error_if_not_positive()

    return rho * g**2 / 2 * spectral_moments(spectrum, -1)
