from typing import Optional

from wavetune import ekf
from wavetune._frequency_estimator.frequency_estimator import FrequencyEstimator
from wavetune.signals import TimeSeries


class KalmanEstimator(FrequencyEstimator):
    config_class = ekf.EkfConfig

    @classmethod
    def estimate(
        cls,
        fe: TimeSeries,
        config: Optional[ekf.EkfConfig],
        suppress_warnings: bool,
    ) -> TimeSeries:
        return ekf.ekf_run(fe, config, suppress_warnings=suppress_warnings)
