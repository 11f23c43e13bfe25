from typing import Optional

from wavetune import fll
from wavetune._frequency_estimator.frequency_estimator import FrequencyEstimator
from wavetune.signals import TimeSeries


class LockedLoopEstimator(FrequencyEstimator):
    config_class = fll.FllConfig

    @classmethod
    def estimate(
        cls,
        fe: TimeSeries,
        config: Optional[fll.FllConfig],
        suppress_warnings: bool,
    ) -> TimeSeries:
        return fll.fll_run(fe, config)
