from dataclasses import dataclass
from numbers import Real
from typing import Optional

from wavetune._utils import Parameter


@dataclass(frozen=True)
class EkfConfig:
    """
    Tuning of the frequency-tracking extended Kalman filter.

    :param r:
        Measurement noise variance in N². Defaults to 1% of the record variance.
    :param q_psi:
        Process noise variance of both signal states in N². Defaults to ``10 * r``.
    :param q_omega:
        Process noise variance of the frequency state in rad²/s².
    :param omega_min:
        Lower clamp of the frequency state in rad/s.
    :param omega_max:
        Upper clamp of the frequency state in rad/s.
    :param omega0:
        Initial frequency in rad/s. Defaults to the periodogram peak of the first ``init_samples`` samples.
    :param p_omega0:
        Initial variance of the frequency state.
        The signal states start with variances ``r`` and the record variance.
    :param init_samples:
        Number of leading samples used to seed the frequency.
    """

    r: Optional[float] = None
    q_psi: Optional[float] = None
    q_omega: float = 1e-4
    omega_min: float = 0.1
    omega_max: float = 3.0
    omega0: Optional[float] = None
    p_omega0: float = 0.25
    init_samples: int = 128

    def __post_init__(self) -> None:
        Parameter(self.r, "r").throw_error_if_not_positive(optional=True)
        Parameter(self.q_psi, "q_psi").throw_error_if_not_of_type(Real, optional=True)
        Parameter(self.q_omega, "q_omega").throw_error_if_not_of_type(Real)
        Parameter(self.omega_min, "omega_min").throw_error_if_not_positive()
        Parameter(self.omega_max, "omega_max").throw_error_if_not_positive()
        Parameter(self.omega0, "omega0").throw_error_if_not_positive(optional=True)
        Parameter(self.p_omega0, "p_omega0").throw_error_if_not_of_type(Real)
        Parameter(self.init_samples, "init_samples").throw_error_if_not_of_type(int)

        if self.omega_min >= self.omega_max:
            raise ValueError(
                f'"omega_min" ({self.omega_min}) must be below "omega_max" ({self.omega_max}).'
            )
        if self.q_psi is not None and self.q_psi < 0:
            raise ValueError(f'"q_psi" must be non-negative, got {self.q_psi}.')
        if self.q_omega < 0 or self.p_omega0 < 0:
            raise ValueError('"q_omega" and "p_omega0" must be non-negative.')
