from wavetune._utils import WavetuneError


class DivergenceError(WavetuneError):
    pass
