from .errors import WavetuneError
from .parameter import Parameter
from .string_cleaning import clean_and_lowercase
from .warnings import (
    warn_cell_failure,
    warn_filter_reset,
    warn_imf_not_converged,
    warn_segment_shortened,
    warn_table_tail,
)
