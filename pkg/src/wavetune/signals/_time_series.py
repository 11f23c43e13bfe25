from dataclasses import dataclass
from numbers import Real
import numpy as np

from wavetune._utils import Parameter


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """
    Uniformly sampled real-valued signal.

    The sample array is copied on construction and made read-only, so a
    ``TimeSeries`` can be shared freely.

    :param t0:
        Time of the first sample in seconds.
    :type t0:
        float
    :param dt:
        Sample interval in seconds, strictly positive.
    :type dt:
        float
    :param values:
        Ordered samples, at least two of them.
    :type values:
        array_like
    """

    t0: float
    dt: float
    values: np.ndarray

    def __post_init__(self) -> None:
        Parameter(self.t0, "t0").throw_error_if_not_of_type(Real)
        Parameter(self.dt, "dt").throw_error_if_not_positive()

        values = np.array(self.values, dtype=float)
        if values.ndim != 1 or values.size < 2:
            raise ValueError(
                f"A time series needs a one-dimensional record of at least 2 samples, got shape {values.shape}."
            )
        values.setflags(write=False)

        object.__setattr__(self, "t0", float(self.t0))
        object.__setattr__(self, "dt", float(self.dt))
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return self.values.size

    @property
    def times(self) -> np.ndarray:
        return self.t0 + self.dt * np.arange(len(self))

    @property
    def end(self) -> float:
        return self.t0 + self.dt * (len(self) - 1)

    @property
    def duration(self) -> float:
        return self.dt * len(self)

    def with_values(self, values) -> "TimeSeries":
        return TimeSeries(self.t0, self.dt, values)

    def at(self, t) -> np.ndarray:
        """
        Linearly interpolated value(s) at time(s) ``t``, held at the end values outside the record.
        """
        return np.interp(t, self.times, self.values)

    def resample(self, dt: float) -> "TimeSeries":
        """
        Linearly interpolate the record onto a new sample interval covering the same span.
        """
        Parameter(dt, "dt").throw_error_if_not_positive()

        n = int(np.floor((self.end - self.t0) / dt + 1e-9)) + 1
        times = self.t0 + dt * np.arange(n)
        return TimeSeries(self.t0, dt, self.at(times))

    def rms(self) -> float:
        return float(np.sqrt(np.mean(self.values**2)))
