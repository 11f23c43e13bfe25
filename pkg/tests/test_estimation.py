import numpy as np
import pytest
from wavetune import estimation, signals
from wavetune.estimation import ConstantConfig, UnknownMethodError
from wavetune.signals import TimeSeries


@pytest.fixture(scope="module")
def tone():
    t = 0.25 * np.arange(7200)
    return TimeSeries(0.0, 0.25, 2e5 * np.cos(0.8 * t))


class TestResolveMethod:
    @pytest.mark.parametrize(
        ("method", "expected"),
        (("ekf", "ekf"), ("EKF", "ekf"), (" f-l-l ", "fll"), ("HHT", "hht"), ("Constant", "constant")),
    )
    def test_aliases(self, method, expected):
        assert estimation.resolve_method(method) == expected

    @pytest.mark.parametrize("method", ("pll", "kalman", ""))
    def test_unknown(self, method):
        with pytest.raises(UnknownMethodError):
            estimation.resolve_method(method)

    def test_bad_type(self):
        with pytest.raises(TypeError):
            estimation.resolve_method(None)


class TestEstimateFrequency:
    @pytest.mark.parametrize("method", ("ekf", "fll", "hht"))
    def test_tracks_tone(self, tone, method):
        track = estimation.estimate_frequency(tone, method)

        assert len(track) == len(tone)
        assert track.dt == tone.dt
        assert np.mean(track.values[-3600:]) == pytest.approx(0.8, rel=0.01)

    def test_constant_energy_frequency(self, tone):
        track = estimation.estimate_frequency(tone, "constant")
        expected = signals.spectral_stats(signals.estimate_spectrum(tone)).omega_e

        assert np.all(track.values == pytest.approx(expected))
        assert expected == pytest.approx(0.8, abs=0.05)

    def test_constant_fixed(self, tone):
        track = estimation.estimate_frequency(
            tone, "constant", ConstantConfig(omega=1.1)
        )

        assert np.all(track.values == 1.1)

    def test_constant_clamped(self, tone):
        track = estimation.estimate_frequency(
            tone, "constant", ConstantConfig(omega=5.0)
        )

        assert np.all(track.values == 3.0)

    def test_wrong_config_type(self, tone):
        with pytest.raises(TypeError):
            estimation.estimate_frequency(tone, "constant", ConstantConfig)

    def test_bad_statistic(self):
        with pytest.raises(ValueError):
            ConstantConfig(statistic="omega_2")
