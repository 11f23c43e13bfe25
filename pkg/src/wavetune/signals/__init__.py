"""
Wave-elevation records, spectra and spectral statistics.
"""

from ._errors import (
    AliasingError,
    DegenerateSpectrumError,
    InsufficientDataError,
    InvalidSpectrumError,
    NonUniformSamplingError,
    ParseError,
)
from ._time_series import TimeSeries
from ._spectrum import (
    Spectrum,
    SpectralStats,
    line_spectrum,
    spectral_moments,
    spectral_stats,
)
from ._estimate import estimate_spectrum, periodogram_peak
from ._synthesize import (
    DEFAULT_OMEGA,
    bretschneider,
    jonswap,
    sea_state,
    synthesize_sea,
    two_peak,
)
from ._io import (
    ELEVATION_COLUMN,
    FORCE_COLUMN,
    load_elevation,
    load_series,
    load_spectrum,
    write_elevation,
    write_series,
    write_spectrum,
)
