"""
Empirical mode decomposition and Hilbert instantaneous frequency.
"""

from ._config import HhtConfig
from ._emd import (
    ImfSet,
    count_extrema,
    count_zero_crossings,
    dominant_imf,
    emd_decompose,
    mean_envelope,
)
from ._hilbert import (
    AnalyticSignal,
    FreqTrack,
    hht_run,
    hilbert_analytic,
    inst_frequency,
    write_hilbert_spectrum,
)
