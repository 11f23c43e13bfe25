from typing import Any, Dict, Optional, Type

from wavetune._frequency_estimator import (
    ConstantEstimator,
    FrequencyEstimator,
    HilbertHuangEstimator,
    KalmanEstimator,
    LockedLoopEstimator,
)
from wavetune._utils import Parameter, WavetuneError, clean_and_lowercase
from wavetune.signals import TimeSeries


SUPPORTED_METHODS_AND_THEIR_ESTIMATORS: Dict[str, Type[FrequencyEstimator]] = {
    "ekf": KalmanEstimator,
    "fll": LockedLoopEstimator,
    "hht": HilbertHuangEstimator,
    "constant": ConstantEstimator,
}


class UnknownMethodError(WavetuneError):
    pass


def resolve_method(method: str) -> str:
    Parameter(method, "method").throw_error_if_not_of_type(str)

    key = clean_and_lowercase(method)
    if key not in SUPPORTED_METHODS_AND_THEIR_ESTIMATORS:
        raise UnknownMethodError(
            f'Unknown estimation method "{method}", expected one of '
            f"{sorted(SUPPORTED_METHODS_AND_THEIR_ESTIMATORS)}."
        )
    return key


def estimate_frequency(
    fe: TimeSeries,
    method: str = "ekf",
    config: Optional[Any] = None,
    suppress_warnings: bool = False,
) -> TimeSeries:
    """
    Track the frequency of an excitation force record with the chosen method.

    .. topic:: Supported methods

        - ``"ekf"``: extended Kalman filter, see :py:func:`wavetune.ekf.ekf_run`
        - ``"fll"``: SOGI frequency-locked loop, see :py:func:`wavetune.fll.fll_run`
        - ``"hht"``: empirical mode decomposition with Hilbert transform, see :py:func:`wavetune.hht.hht_run`
        - ``"constant"``: a fixed frequency, by default the energy frequency of the record

    :param fe:
        Uniformly sampled excitation force in N.
    :type fe:
        TimeSeries
    :param method:
        Estimation method (see above), case and separator insensitive.
        Defaults to ``"ekf"``.
    :type method:
        str
    :param config:
        Configuration object of the method (``EkfConfig``, ``FllConfig``, ``HhtConfig`` or ``ConstantConfig``).
        Defaults to the method's defaults.
    :type config:
        Any
    :param suppress_warnings:
        Disable warnings emitted by the method.
        Defaults to ``False``.
    :type suppress_warnings:
        bool

    :return:
        Frequency estimate in rad/s on the time base of ``fe``.
    :rtype:
        TimeSeries

    .. topic:: Example usage

        >>> t = 0.25 * np.arange(7200)
        >>> fe = wt.signals.TimeSeries(0.0, 0.25, np.cos(0.8 * t))
        >>> omega = wt.estimation.estimate_frequency(fe, "EKF")
        >>> round(float(omega.values[-3600:].mean()), 2)
        0.8
    """
    Parameter(fe, "fe").throw_error_if_not_of_type(TimeSeries)
    Parameter(suppress_warnings, "suppress_warnings").throw_error_if_not_of_type(bool)

    estimator = SUPPORTED_METHODS_AND_THEIR_ESTIMATORS[resolve_method(method)]
    return estimator.estimate(fe, config, suppress_warnings)
