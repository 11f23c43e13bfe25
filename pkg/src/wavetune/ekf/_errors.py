from wavetune._utils import WavetuneError


class NumericalDegeneracyError(WavetuneError):
    pass
