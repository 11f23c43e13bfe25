from wavetune._utils import WavetuneError


class NormalizationError(WavetuneError):
    pass


class NonFiniteInputError(WavetuneError):
    pass
