from dataclasses import dataclass
import math
from typing import Optional

from wavetune._utils import Parameter


@dataclass(frozen=True)
class FllConfig:
    """
    Tuning of the SOGI frequency-locked loop.

    ``kappa`` sets the SOGI bandwidth (√2 gives a selective, well-damped filter) and ``gamma`` the frequency-loop gain.
    ``norm_window_s`` is the length of the trailing rms window used to normalize the force.
    ``dt_internal`` is the largest integration sub-step between force samples.
    """

    kappa: float = math.sqrt(2)
    gamma: float = 0.16
    norm_window_s: float = 120.0
    omega_min: float = 0.1
    omega_max: float = 3.0
    omega0: Optional[float] = None
    init_samples: int = 128
    dt_internal: float = 0.05

    def __post_init__(self) -> None:
        Parameter(self.kappa, "kappa").throw_error_if_not_positive()
        Parameter(self.gamma, "gamma").throw_error_if_not_positive()
        Parameter(self.norm_window_s, "norm_window_s").throw_error_if_not_positive()
        Parameter(self.omega_min, "omega_min").throw_error_if_not_positive()
        Parameter(self.omega_max, "omega_max").throw_error_if_not_positive()
        Parameter(self.omega0, "omega0").throw_error_if_not_positive(optional=True)
        Parameter(self.init_samples, "init_samples").throw_error_if_not_of_type(int)
        Parameter(self.dt_internal, "dt_internal").throw_error_if_not_positive()

        if self.omega_min >= self.omega_max:
            raise ValueError(
                f'"omega_min" ({self.omega_min}) must be below "omega_max" ({self.omega_max}).'
            )
