import numpy as np
import pytest
from wavetune import signals
from wavetune.signals import (
    AliasingError,
    DegenerateSpectrumError,
    InsufficientDataError,
    InvalidSpectrumError,
    NonUniformSamplingError,
    ParseError,
    Spectrum,
    TimeSeries,
)


def tone(omega, amplitude=1.0, dt=0.5, n=2048, phase=0.0):
    t = dt * np.arange(n)
    return TimeSeries(0.0, dt, amplitude * np.cos(omega * t + phase))


class TestTimeSeries:
    def test_properties(self):
        series = TimeSeries(10, 0.5, [0.0, 1.0, 2.0, 3.0])

        assert len(series) == 4
        assert series.end == 11.5
        assert series.duration == 2.0
        assert np.allclose(series.times, [10.0, 10.5, 11.0, 11.5])

    def test_values_are_read_only(self):
        series = TimeSeries(0.0, 1.0, [1.0, 2.0])

        with pytest.raises(ValueError):
            series.values[0] = 5.0

    @pytest.mark.parametrize("dt", (0, -0.1, float("nan")))
    def test_bad_dt(self, dt):
        with pytest.raises(ValueError):
            TimeSeries(0.0, dt, [1.0, 2.0])

    @pytest.mark.parametrize("t0", ("0", None, True))
    def test_bad_t0_type(self, t0):
        with pytest.raises(TypeError):
            TimeSeries(t0, 1.0, [1.0, 2.0])

    def test_too_short(self):
        with pytest.raises(ValueError):
            TimeSeries(0.0, 1.0, [1.0])

    def test_resample(self):
        series = TimeSeries(0.0, 1.0, np.arange(11.0))
        resampled = series.resample(0.25)

        assert len(resampled) == 41
        assert resampled.end == pytest.approx(10.0)
        assert np.allclose(resampled.values, resampled.times)


class TestSpectrum:
    @pytest.mark.parametrize(
        ("omega", "density"),
        (
            ([], []),
            ([1.0, 2.0], [1.0]),
            ([1.0, 1.0], [1.0, 1.0]),
            ([0.0, 1.0], [1.0, 1.0]),
            ([1.0, 2.0], [1.0, -1.0]),
            ([1.0, 2.0], [1.0, np.nan]),
        ),
    )
    def test_invalid(self, omega, density):
        with pytest.raises(InvalidSpectrumError):
            Spectrum(omega, density)

    def test_line_spectrum_variance(self):
        spectrum = signals.line_spectrum([0.6], [0.125])

        assert signals.spectral_moments(spectrum, 0) == pytest.approx(0.125)
        assert spectrum.peak_frequency == 0.6

    def test_overlapping_lines(self):
        with pytest.raises(InvalidSpectrumError):
            signals.line_spectrum([1.0, 1.0005], [1.0, 1.0])


class TestSpectralStats:
    def test_two_lines(self):
        spectrum = signals.line_spectrum([1.047, 0.785], [2.0, 0.5])
        stats = signals.spectral_stats(spectrum)

        assert stats.m0 == pytest.approx(2.5)
        assert stats.m1 == pytest.approx(2.4865)
        assert stats.m_minus1 == pytest.approx(2.0 / 1.047 + 0.5 / 0.785)
        assert stats.hs == pytest.approx(6.3246, abs=1e-4)
        assert stats.omega_e == pytest.approx(0.9815, abs=1e-4)
        assert stats.omega_1 == pytest.approx(0.9946, abs=1e-4)
        assert stats.omega_p == 1.047

    def test_frequency_ordering(self):
        stats = signals.spectral_stats(signals.bretschneider(2.0, 0.9))

        assert stats.omega_e < stats.omega_1

    def test_zero_spectrum(self):
        with pytest.raises(DegenerateSpectrumError):
            signals.spectral_stats(Spectrum([0.5, 1.0], [0.0, 0.0]))

    def test_bad_moment_order(self):
        with pytest.raises(ValueError):
            signals.spectral_moments(signals.bretschneider(1.0, 1.0), 2)


class TestParametricSpectra:
    @pytest.mark.parametrize(("hs", "omega_p"), ((1.0, 1.22), (2.5, 0.8)))
    def test_bretschneider_hs(self, hs, omega_p):
        stats = signals.spectral_stats(signals.bretschneider(hs, omega_p))

        assert stats.hs == pytest.approx(hs, rel=0.01)
        assert stats.omega_p == pytest.approx(omega_p, abs=0.005)

    def test_jonswap_hs(self):
        stats = signals.spectral_stats(signals.jonswap(1.26, 0.52, 3.3))

        assert stats.hs == pytest.approx(1.26, rel=0.05)
        assert stats.omega_p == pytest.approx(0.52, abs=0.005)

    def test_jonswap_reduces_to_bretschneider(self):
        jonswap = signals.jonswap(1.5, 1.0, gamma=1.0)
        bretschneider = signals.bretschneider(1.5, 1.0)

        assert np.allclose(jonswap.density, bretschneider.density)

    def test_jonswap_bad_gamma(self):
        with pytest.raises(ValueError):
            signals.jonswap(1.0, 1.0, gamma=0.5)

    def test_two_peak_hs(self):
        stats = signals.spectral_stats(signals.two_peak(1.0, 0.6, 1.0, 1.6))

        assert stats.hs == pytest.approx(np.sqrt(2.0), rel=0.02)

    @pytest.mark.parametrize("name", ("S1", "s2", " S3", "S4", "s-5", "S6"))
    def test_sea_states(self, name):
        stats = signals.spectral_stats(signals.sea_state(name))

        assert 0.5 < stats.hs < 3.0
        assert 0.3 < stats.omega_e < 2.0

    def test_unknown_sea_state(self):
        with pytest.raises(ValueError):
            signals.sea_state("S7")


class TestSynthesizeSea:
    def test_single_line_variance(self):
        omega = 2 * np.pi / 10
        spectrum = signals.line_spectrum([omega], [0.5])
        zeta = signals.synthesize_sea(spectrum, 1010.0, 0.5, seed=1)

        assert len(zeta) == 2020
        assert np.var(zeta.values) == pytest.approx(0.5, rel=1e-6)

    def test_deterministic(self):
        spectrum = signals.bretschneider(1.43, 1.22)
        first = signals.synthesize_sea(spectrum, 1800.0, 0.78125, seed=7)
        second = signals.synthesize_sea(spectrum, 1800.0, 0.78125, seed=7)
        other = signals.synthesize_sea(spectrum, 1800.0, 0.78125, seed=8)

        assert len(first) == 2304
        assert np.array_equal(first.values, second.values)
        assert not np.array_equal(first.values, other.values)

    def test_variance_close_to_m0(self):
        spectrum = signals.bretschneider(2.0, 1.0)
        zeta = signals.synthesize_sea(spectrum, 3600.0, 0.5, seed=3)
        m0 = signals.spectral_moments(spectrum, 0)

        assert np.var(zeta.values) == pytest.approx(m0, rel=0.1)

    @pytest.mark.parametrize("seed", (1, 2, 3))
    def test_estimated_spectrum_recovers_m0(self, seed):
        spectrum = signals.bretschneider(2.0, 1.0)
        zeta = signals.synthesize_sea(spectrum, 3600.0, 0.5, seed=seed)
        estimated = signals.estimate_spectrum(zeta)

        assert signals.spectral_moments(estimated, 0) == pytest.approx(
            signals.spectral_moments(spectrum, 0), rel=0.1
        )

    def test_zero_spectrum(self):
        spectrum = Spectrum([0.5, 1.0, 1.5], [0.0, 0.0, 0.0])
        zeta = signals.synthesize_sea(spectrum, 10.0, 0.5, seed=0)

        assert np.all(zeta.values == 0)

    def test_aliasing(self):
        with pytest.raises(AliasingError):
            signals.synthesize_sea(signals.bretschneider(1.0, 1.0), 1800.0, 1.0, 0)

    def test_too_short(self):
        with pytest.raises(InsufficientDataError):
            signals.synthesize_sea(signals.bretschneider(1.0, 1.22), 100.0, 0.5, 0)

    def test_bad_seed_type(self):
        with pytest.raises(TypeError):
            signals.synthesize_sea(signals.bretschneider(1.0, 1.0), 1800.0, 0.5, 1.5)


class TestEstimateSpectrum:
    def test_tone_peak_and_variance(self):
        omega = 2 * np.pi * 0.125
        spectrum = signals.estimate_spectrum(tone(omega, amplitude=2.0))

        assert spectrum.peak_frequency == pytest.approx(omega)
        assert signals.spectral_moments(spectrum, 0) == pytest.approx(2.0, rel=0.05)

    def test_excludes_zero_frequency(self):
        spectrum = signals.estimate_spectrum(tone(1.0))

        assert spectrum.omega[0] > 0

    def test_short_record_warns(self):
        with pytest.warns(UserWarning, match="Record shorter"):
            spectrum = signals.estimate_spectrum(tone(1.0, n=100))

        assert spectrum.omega.size == 50

    def test_suppress_warnings(self, recwarn):
        signals.estimate_spectrum(tone(1.0, n=100), suppress_warnings=True)

        assert len(recwarn) == 0

    def test_insufficient_data(self):
        with pytest.raises(InsufficientDataError):
            signals.estimate_spectrum(tone(1.0, n=32))

    def test_bad_segment_length(self):
        with pytest.raises(ValueError):
            signals.estimate_spectrum(tone(1.0), segment_length=16)


class TestPeriodogramPeak:
    def test_tone(self):
        omega = 2 * np.pi * 8 / (128 * 0.5)

        assert signals.periodogram_peak(tone(omega)) == pytest.approx(omega)

    def test_clamped(self):
        omega = 2 * np.pi * 8 / (128 * 0.5)

        assert signals.periodogram_peak(tone(omega), omega_max=0.5) == 0.5


class TestIo:
    def test_elevation_round_trip(self, tmp_path):
        zeta = TimeSeries(0.0, 0.78125, np.sin(0.1 * np.arange(200)))
        path = tmp_path / "zeta.csv"
        signals.write_elevation(zeta, path)
        loaded = signals.load_elevation(path)

        assert loaded.dt == pytest.approx(0.78125)
        assert np.array_equal(loaded.values, zeta.values)
        assert path.read_text().startswith("time_s,elevation_m\n")

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            signals.load_elevation(tmp_path / "nothing.csv")

    def test_bad_header(self, tmp_path):
        path = tmp_path / "zeta.csv"
        path.write_text("t,eta\n0,0\n1,0\n")

        with pytest.raises(ParseError, match="header"):
            signals.load_elevation(path)

    @pytest.mark.parametrize("bad_value", ("abc", "nan", ""))
    def test_malformed_value(self, tmp_path, bad_value):
        path = tmp_path / "zeta.csv"
        path.write_text(f"time_s,elevation_m\n0,0.1\n1,{bad_value}\n2,0.3\n")

        with pytest.raises(ParseError, match="data row 2"):
            signals.load_elevation(path)

    def test_single_row(self, tmp_path):
        path = tmp_path / "zeta.csv"
        path.write_text("time_s,elevation_m\n0,0.1\n")

        with pytest.raises(ParseError):
            signals.load_elevation(path)

    def test_non_uniform(self, tmp_path):
        path = tmp_path / "zeta.csv"
        path.write_text("time_s,elevation_m\n0,0\n1,0\n2.5,0\n3,0\n")

        with pytest.raises(NonUniformSamplingError):
            signals.load_elevation(path)

    def test_descending_timestamps(self, tmp_path):
        path = tmp_path / "zeta.csv"
        path.write_text("time_s,elevation_m\n3,0\n2,0\n1,0\n0,0\n")

        with pytest.raises(ParseError, match="zeta.csv.*must increase"):
            signals.load_elevation(path)

    def test_expected_dt(self, tmp_path):
        path = tmp_path / "zeta.csv"
        path.write_text("time_s,elevation_m\n0,0\n1,0\n2,0\n")

        with pytest.raises(NonUniformSamplingError):
            signals.load_elevation(path, dt_expected=0.5)

    def test_spectrum_round_trip(self, tmp_path):
        spectrum = signals.bretschneider(1.0, 1.0)
        path = tmp_path / "spectrum.json"
        signals.write_spectrum(spectrum, path)
        loaded = signals.load_spectrum(path)

        assert np.array_equal(loaded.density, spectrum.density)

    def test_spectrum_bad_json(self, tmp_path):
        path = tmp_path / "spectrum.json"
        path.write_text('{"omega": [1.0]}')

        with pytest.raises(ParseError):
            signals.load_spectrum(path)
