from wavetune._utils import WavetuneError


class NonDecayingKernelError(WavetuneError):
    pass


class NoResonanceError(WavetuneError):
    pass
