"""
Hydrodynamic coefficients, radiation memory and wave excitation of a heaving body.
"""

from ._errors import NoResonanceError, NonDecayingKernelError
from ._table import (
    TAIL_RATIO_LIMIT,
    HydroCoeffs,
    HydroTable,
    interp_coeffs,
    load_hydro_table,
    sample_table,
    write_hydro_table,
)
from ._kernel import RadiationKernel, radiation_kernel
from ._excitation import excitation_force
from ._physics import (
    G,
    RHO,
    buoyancy_stiffness,
    force_spectrum,
    resonance_frequency,
    wave_power,
)
