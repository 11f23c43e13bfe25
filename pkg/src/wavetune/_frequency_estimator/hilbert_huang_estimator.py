from typing import Optional

from wavetune import hht
from wavetune._frequency_estimator.frequency_estimator import FrequencyEstimator
from wavetune.signals import TimeSeries


class HilbertHuangEstimator(FrequencyEstimator):
    config_class = hht.HhtConfig

    @classmethod
    def estimate(
        cls,
        fe: TimeSeries,
        config: Optional[hht.HhtConfig],
        suppress_warnings: bool,
    ) -> TimeSeries:
        return hht.hht_run(fe, config, suppress_warnings=suppress_warnings).omega
