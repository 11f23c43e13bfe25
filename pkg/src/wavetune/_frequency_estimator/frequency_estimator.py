from abc import ABC, abstractmethod
from typing import Any, Optional

from wavetune.signals import TimeSeries


class FrequencyEstimator(ABC):
    config_class: type

    @classmethod
    @abstractmethod
    def estimate(
        cls, fe: TimeSeries, config: Optional[Any], suppress_warnings: bool
    ) -> TimeSeries:
        """
        Return the frequency track in rad/s of an excitation force record, on the time base of the record.
        """
