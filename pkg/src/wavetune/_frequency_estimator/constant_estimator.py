from dataclasses import dataclass
import numpy as np
from typing import Optional

from wavetune import signals
from wavetune._frequency_estimator.frequency_estimator import FrequencyEstimator
from wavetune._utils import Parameter
from wavetune.signals import TimeSeries


@dataclass(frozen=True)
class ConstantConfig:
    """
    Fixed tuning frequency. ``statistic`` picks the spectral frequency of the force record used when ``omega`` is not given: ``"omega_e"``, ``"omega_1"`` or ``"omega_p"``.
    """

    omega: Optional[float] = None
    statistic: str = "omega_e"
    omega_min: float = 0.1
    omega_max: float = 3.0

    def __post_init__(self) -> None:
        Parameter(self.omega, "omega").throw_error_if_not_positive(optional=True)
        Parameter(self.statistic, "statistic").throw_error_if_not_one_of(
            "omega_e", "omega_1", "omega_p"
        )


class ConstantEstimator(FrequencyEstimator):
    config_class = ConstantConfig

    @classmethod
    def estimate(
        cls,
        fe: TimeSeries,
        config: Optional[ConstantConfig],
        suppress_warnings: bool,
    ) -> TimeSeries:
        Parameter(config, "config").throw_error_if_not_of_type(
            ConstantConfig, optional=True
        )
        config = ConstantConfig() if config is None else config

        omega = config.omega
        if omega is None:
            spectrum = signals.estimate_spectrum(
                fe, suppress_warnings=suppress_warnings
            )
            omega = getattr(signals.spectral_stats(spectrum), config.statistic)

        omega = float(np.clip(omega, config.omega_min, config.omega_max))
        return fe.with_values(np.full(len(fe), omega))
