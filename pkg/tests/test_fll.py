import math
import numpy as np
import pytest
from wavetune import fll, hydro, signals
from wavetune.fll import FllConfig, NonFiniteInputError, NormalizationError
from wavetune.signals import TimeSeries


def tone(omega, dt=0.25, n=7200, amplitude=1.0):
    return TimeSeries(0.0, dt, amplitude * np.cos(omega * dt * np.arange(n)))


@pytest.fixture(scope="module")
def table():
    return hydro.sample_table()


class TestFllConfig:
    def test_defaults(self):
        config = FllConfig()

        assert config.kappa == pytest.approx(math.sqrt(2))
        assert config.gamma == 0.16

    @pytest.mark.parametrize(
        "kwargs", ({"gamma": 0.0}, {"kappa": -1.0}, {"omega_min": 3.0})
    )
    def test_invalid(self, kwargs):
        with pytest.raises(ValueError):
            FllConfig(**kwargs)


class TestFllStep:
    def test_rest_is_a_fixed_point(self):
        state = fll.fll_init(0.8)
        step = fll.fll_step(state, 0.0, 0.05)

        assert step.state == state
        assert step.omega_hat == 0.8

    def test_clamped(self):
        state = fll.fll_init(5.0)

        assert state.omega_hat == 3.0

    def test_quadrature_output(self):
        state = fll.fll_init(0.5)
        state = fll.fll_step(state, 1.0, 0.05).state

        assert state.nu > 0
        assert state.xi_q == pytest.approx(state.omega_hat * state.nu)

    def test_locked_equilibrium(self):
        omega, dt = 0.8, 0.05
        state = fll.FllState(xi=1.0, nu=0.0, omega_hat=omega)
        for k in range(200):
            state = fll.fll_step(
                state, math.cos(omega * k * dt), dt, math.cos(omega * (k + 1) * dt)
            ).state

        assert state.omega_hat == pytest.approx(omega, rel=1e-5)
        assert state.xi == pytest.approx(math.cos(omega * 200 * dt), abs=1e-4)

    @pytest.mark.parametrize(("fen", "fen_next"), ((math.nan, 0.0), (0.0, math.inf)))
    def test_non_finite_input(self, fen, fen_next):
        with pytest.raises(NonFiniteInputError):
            fll.fll_step(fll.fll_init(0.8), fen, 0.05, fen_next)


class TestNormalizeForce:
    def test_unit_rms(self):
        normalized = fll.normalize_force(tone(0.8, amplitude=4e5))

        assert normalized.rms() == pytest.approx(1.0, rel=0.02)

    def test_zero_record(self):
        with pytest.raises(NormalizationError):
            fll.normalize_force(TimeSeries(0.0, 0.25, np.zeros(100)))

    def test_non_finite_record(self):
        with pytest.raises(NonFiniteInputError):
            fll.normalize_force(TimeSeries(0.0, 0.25, [1.0, np.nan, 1.0]))

    def test_quiet_stretch_uses_overall_rms(self):
        values = np.concatenate((np.cos(np.arange(200.0)), np.zeros(2000)))
        normalized = fll.normalize_force(TimeSeries(0.0, 0.25, values))

        assert np.all(np.isfinite(normalized.values))
        assert np.all(normalized.values[-10:] == 0)


class TestFllRun:
    @pytest.mark.parametrize("omega", (0.6, 0.8, 1.1))
    def test_tracks_tone(self, omega):
        track = fll.fll_run(tone(omega, amplitude=3e5))

        assert np.mean(track.values[-2400:]) == pytest.approx(omega, rel=0.01)

    def test_converges_from_offset(self):
        track = fll.fll_run(tone(0.8), FllConfig(omega0=1.2))
        settled = track.values[int(200 / 0.25) :]

        assert track.values[0] == 1.2
        assert np.all(np.abs(settled - 0.8) < 0.02 * 0.8)

    def test_quadrature_lags_by_quarter_period(self):
        result = fll.fll_filter(tone(0.8))
        t = result.xi.times[-2400:]
        xi = result.xi.values[-2400:]
        xi_q = result.xi_q.values[-2400:]

        def phase(values):
            return np.angle(np.sum(values * np.exp(-1j * 0.8 * t)))

        lag = np.degrees(np.angle(np.exp(1j * (phase(xi) - phase(xi_q)))))
        assert lag == pytest.approx(90.0, abs=2.0)

    def test_scale_invariant(self):
        fe = tone(0.8, n=2000)

        first = fll.fll_run(fe)
        second = fll.fll_run(fe.with_values(4.0 * fe.values))

        assert np.allclose(first.values, second.values)

    def test_sub_steps(self):
        fe = tone(0.8, dt=0.78125, n=2304)
        result = fll.fll_filter(fe)

        assert len(result.omega) == 2304
        assert np.mean(result.omega.values[-1000:]) == pytest.approx(0.8, rel=0.01)

    def test_bounds(self):
        rng = np.random.default_rng(2)
        track = fll.fll_run(TimeSeries(0.0, 0.25, rng.normal(size=4000)))

        assert np.all(track.values >= 0.1)
        assert np.all(track.values <= 3.0)


class TestEnergyFrequency:
    @pytest.mark.parametrize(
        ("name", "seed"),
        (("S1", 21), ("S2", 22), ("S3", 23), ("S4", 24), ("S5", 25), ("S6", 26)),
    )
    def test_converges_to_energy_frequency(self, table, name, seed):
        zeta = signals.synthesize_sea(signals.sea_state(name), 1800.0, 0.78125, seed)
        fe = hydro.excitation_force(table, zeta)
        stats = signals.spectral_stats(signals.estimate_spectrum(fe))

        mean = float(np.mean(fll.fll_run(fe).values))

        assert mean == pytest.approx(stats.omega_e, rel=0.05)
        assert abs(mean - stats.omega_e) < abs(mean - stats.omega_1)
