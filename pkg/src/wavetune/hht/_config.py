from dataclasses import dataclass
from typing import Optional

from wavetune._utils import Parameter


@dataclass(frozen=True)
class HhtConfig:
    """
    Settings of the EMD and Hilbert frequency estimator.

    ``sd_threshold`` bounds the rms of the mean envelope of an accepted IMF relative to the IMF's own rms, ``max_sift`` caps the sifting iterations per IMF and ``n_imf_max`` the number of IMFs (``None`` means ``floor(log2(Ns)) - 1``).
    ``smoothing_s`` is the moving-average span applied to the instantaneous frequency.
    """

    sd_threshold: float = 0.2
    max_sift: int = 100
    smoothing_s: float = 2.0
    n_imf_max: Optional[int] = None
    omega_min: float = 0.1
    omega_max: float = 3.0

    def __post_init__(self) -> None:
        Parameter(self.sd_threshold, "sd_threshold").throw_error_if_not_positive()
        Parameter(self.max_sift, "max_sift").throw_error_if_not_of_type(int)
        Parameter(self.smoothing_s, "smoothing_s").throw_error_if_not_of_type(
            (int, float)
        )
        Parameter(self.n_imf_max, "n_imf_max").throw_error_if_not_of_type(
            int, optional=True
        )
        Parameter(self.omega_min, "omega_min").throw_error_if_not_positive()
        Parameter(self.omega_max, "omega_max").throw_error_if_not_positive()

        if self.max_sift < 1:
            raise ValueError(f'"max_sift" must be at least 1, got {self.max_sift}.')
        if self.smoothing_s < 0:
            raise ValueError(
                f'"smoothing_s" must be non-negative, got {self.smoothing_s}.'
            )
        if self.n_imf_max is not None and self.n_imf_max < 0:
            raise ValueError(f'"n_imf_max" must be non-negative, got {self.n_imf_max}.')
        if self.omega_min >= self.omega_max:
            raise ValueError(
                f'"omega_min" ({self.omega_min}) must be below "omega_max" ({self.omega_max}).'
            )
