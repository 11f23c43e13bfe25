class WavetuneError(ValueError):
    """
    Base class for all domain errors raised by wavetune.
    """
