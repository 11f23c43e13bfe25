from .frequency_estimator import FrequencyEstimator

from .kalman_estimator import KalmanEstimator
from .locked_loop_estimator import LockedLoopEstimator
from .hilbert_huang_estimator import HilbertHuangEstimator
from .constant_estimator import ConstantConfig, ConstantEstimator
