from wavetune._utils import WavetuneError


class InvalidSpectrumError(WavetuneError):
    pass


class DegenerateSpectrumError(WavetuneError):
    pass


class InsufficientDataError(WavetuneError):
    pass


class AliasingError(WavetuneError):
    pass


class ParseError(WavetuneError):
    pass


class NonUniformSamplingError(ParseError):
    pass
