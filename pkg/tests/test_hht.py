import warnings
import numpy as np
import pandas as pd
import pytest
from wavetune import hht
from wavetune.hht import HhtConfig
from wavetune.signals import InsufficientDataError, TimeSeries


def series(values, dt=0.1):
    return TimeSeries(0.0, dt, values)


class TestExtrema:
    def test_counts(self):
        record = series([0.0, 1.0, 0.0, -1.0, 0.0, 1.0, 0.0])

        assert hht.count_extrema(record) == 3
        assert hht.count_zero_crossings(record) == 2

    def test_mean_envelope_of_tone(self):
        t = 0.1 * np.arange(3000)
        envelope = hht.mean_envelope(series(np.cos(t)))

        assert np.max(np.abs(envelope.values[500:2500])) < 0.05

    def test_mean_envelope_needs_extrema(self):
        with pytest.raises(InsufficientDataError):
            hht.mean_envelope(series(np.linspace(0, 1, 200)))


class TestEmdDecompose:
    def test_ramp_has_no_imfs(self):
        ramp = series(np.linspace(0, 1, 200))
        imf_set = hht.emd_decompose(ramp)

        assert len(imf_set) == 0
        assert np.array_equal(imf_set.residue.values, ramp.values)

    def test_tone_is_one_imf(self):
        t = 0.1 * np.arange(3000)
        imf_set = hht.emd_decompose(series(np.cos(t)))

        assert len(imf_set) >= 1
        assert hht.dominant_imf(imf_set) == 0
        assert imf_set.energy_ratios[0] > 0.9
        assert imf_set.converged[0]

    def test_two_tones(self):
        t = 0.1 * np.arange(4000)
        fast = np.cos(2.0 * t)
        slow = 0.5 * np.cos(0.4 * t)
        imf_set = hht.emd_decompose(series(fast + slow))

        assert len(imf_set) >= 2
        assert hht.dominant_imf(imf_set) == 0
        middle = slice(1000, 3000)
        first = imf_set.imfs[0].values[middle]
        assert np.corrcoef(first, fast[middle])[0, 1] > 0.95

    def test_reconstruction(self):
        rng = np.random.default_rng(5)
        record = series(rng.normal(size=1024))
        imf_set = hht.emd_decompose(record)

        assert np.allclose(imf_set.reconstruct(), record.values)
        assert len(imf_set) <= 9
        assert all(count <= 100 for count in imf_set.sift_counts)

    def test_unconverged_imfs_are_flagged(self):
        rng = np.random.default_rng(5)
        imf_set = hht.emd_decompose(series(rng.normal(size=1024)), max_sift=0)

        assert len(imf_set.converged) == len(imf_set)
        assert not imf_set.all_converged
        assert imf_set.sift_counts[0] == 0

    def test_imf_limit(self):
        rng = np.random.default_rng(5)
        imf_set = hht.emd_decompose(series(rng.normal(size=1024)), n_max=2)

        assert len(imf_set) == 2

    def test_too_short(self):
        with pytest.raises(InsufficientDataError):
            hht.emd_decompose(series(np.ones(10)))

    def test_dominant_of_empty(self):
        imf_set = hht.emd_decompose(series(np.linspace(0, 1, 200)))

        with pytest.raises(ValueError):
            hht.dominant_imf(imf_set)


class TestHilbert:
    def test_cosine(self):
        t = 0.1 * np.arange(3000)
        analytic = hht.hilbert_analytic(series(2.0 * np.cos(t)))

        assert analytic.amplitude.values[1500] == pytest.approx(2.0, abs=0.01)
        slope = np.diff(analytic.phase.values[500:2500]) / 0.1
        assert np.allclose(slope, 1.0, atol=0.01)

    def test_too_short(self):
        with pytest.raises(InsufficientDataError):
            hht.hilbert_analytic(series(np.ones(32)))

    def test_linear_phase(self):
        phase = series(0.7 * 0.1 * np.arange(500))
        omega = hht.inst_frequency(phase)

        assert np.allclose(omega.values, 0.7)

    def test_quadratic_phase(self):
        t = 0.1 * np.arange(1000)
        omega = hht.inst_frequency(series(0.5 * t + 0.001 * t**2))

        expected = 0.5 + 0.002 * t
        assert np.allclose(omega.values[20:-20], expected[20:-20])

    def test_clamped(self):
        omega = hht.inst_frequency(series(5.0 * 0.1 * np.arange(100)))

        assert np.all(omega.values == 3.0)


class TestHhtRun:
    def test_chirp(self):
        dt = 0.25
        t = dt * np.arange(2400)
        rate = 1.0 / t[-1]
        fe = TimeSeries(0.0, dt, 2e5 * np.cos(0.5 * t + 0.5 * rate * t**2))

        track = hht.hht_run(fe)
        expected = 0.5 + rate * t

        middle = slice(120, 2280)
        error = np.abs(track.omega.values[middle] - expected[middle]) / expected[middle]
        assert np.max(error) < 0.02
        assert track.dominant_index == 0

    def test_warns_on_unconverged_imf(self, monkeypatch):
        t = 0.1 * np.arange(1000)
        record = series(np.cos(t))
        imf_set = hht.ImfSet(
            imfs=[record],
            residue=record.with_values(np.zeros(1000)),
            energies=np.array([1.0]),
            source_energy=1.0,
            sift_counts=[100],
            converged=[False],
        )
        monkeypatch.setattr(
            "wavetune.hht._hilbert.emd_decompose", lambda *args: imf_set
        )

        with pytest.warns(UserWarning, match="IMF criterion"):
            hht.hht_run(record)

    def test_suppress_unconverged_warning(self, monkeypatch):
        t = 0.1 * np.arange(1000)
        record = series(np.cos(t))
        imf_set = hht.ImfSet(
            imfs=[record],
            residue=record.with_values(np.zeros(1000)),
            energies=np.array([1.0]),
            source_energy=1.0,
            sift_counts=[100],
            converged=[False],
        )
        monkeypatch.setattr(
            "wavetune.hht._hilbert.emd_decompose", lambda *args: imf_set
        )

        with warnings.catch_warnings():
            warnings.simplefilter("error")
            track = hht.hht_run(record, suppress_warnings=True)

        assert track.dominant_index == 0

    def test_write_hilbert_spectrum(self, tmp_path):
        t = 0.1 * np.arange(1000)
        track = hht.hht_run(series(np.cos(t)), HhtConfig(smoothing_s=0))
        path = tmp_path / "hilbert.csv"
        hht.write_hilbert_spectrum(track, path)

        frame = pd.read_csv(path)
        assert list(frame.columns) == ["time_s", "omega_rad_s", "amplitude"]
        assert len(frame) == 1000
