import math
import numpy as np
import pytest
from wavetune import estimation, hydro, signals, sim
from wavetune.control import ControlConfig
from wavetune.signals import InsufficientDataError, ParseError, TimeSeries


DT = 0.05


@pytest.fixture(scope="module")
def table():
    return hydro.sample_table()


@pytest.fixture(scope="module")
def kernel(table):
    return hydro.radiation_kernel(table, DT)


def regular_force(omega, amplitude=1e5, duration=400.0):
    t = DT * np.arange(int(round(duration / DT)) + 1)
    return TimeSeries(0.0, DT, amplitude * np.cos(omega * t))


def constant_track(fe, omega):
    return fe.with_values(np.full(len(fe), omega))


@pytest.fixture(scope="module")
def reactive_off_resonance(table, kernel):
    fe = regular_force(0.8)
    return sim.simulate(
        table, kernel, fe, constant_track(fe, 0.8), ControlConfig("reactive")
    )


class TestSimulate:
    def test_zero_excitation(self, table, kernel):
        fe = TimeSeries(0.0, DT, np.zeros(4001))
        report = sim.simulate(
            table, kernel, fe, constant_track(fe, 1.0), ControlConfig("reactive")
        )

        assert np.all(report.trajectory.x == 0)
        assert np.all(report.trajectory.v == 0)
        assert report.metrics.mean_power_w == 0
        assert math.isnan(report.metrics.pto_rating)
        assert math.isnan(report.metrics.cwr)

    @pytest.mark.parametrize("mode", ("passive", "reactive"))
    def test_maximum_absorption_at_resonance(self, table, kernel, mode):
        w_res = hydro.resonance_frequency(table)
        fe = regular_force(w_res)
        report = sim.simulate(table, kernel, fe, constant_track(fe, w_res), ControlConfig(mode))

        b_r = hydro.interp_coeffs(table, w_res).radiation_damping
        expected = 1e5**2 / (8 * b_r)
        assert report.metrics.mean_power_w == pytest.approx(expected, rel=0.03)

    def test_reactive_matches_optimum_off_resonance(self, table, reactive_off_resonance):
        b_r = hydro.interp_coeffs(table, 0.8).radiation_damping
        expected = 1e5**2 / (8 * b_r)

        assert reactive_off_resonance.metrics.mean_power_w == pytest.approx(
            expected, rel=0.03
        )
        assert reactive_off_resonance.metrics.mean_abs_reactive_power_w > 0

    def test_passive_absorbs_less_off_resonance(
        self, table, kernel, reactive_off_resonance
    ):
        fe = regular_force(0.8)
        passive = sim.simulate(
            table, kernel, fe, constant_track(fe, 0.8), ControlConfig("passive")
        )

        assert 0 < passive.metrics.mean_power_w < reactive_off_resonance.metrics.mean_power_w
        assert passive.metrics.max_abs_spring_force_n == 0

    def test_reactive_velocity_in_phase_with_force(self, reactive_off_resonance):
        trajectory = reactive_off_resonance.trajectory
        window = trajectory.time >= 120.0
        carrier = np.exp(-0.8j * trajectory.time[window])

        velocity = np.sum(trajectory.v[window] * carrier)
        force = np.sum(trajectory.fe[window] * carrier)
        lag = np.degrees(np.angle(velocity / force))

        assert abs(lag) < 2.0

    def test_passive_absorbed_power_non_negative(self, table, kernel):
        fe = regular_force(0.8)
        passive = sim.simulate(
            table, kernel, fe, constant_track(fe, 0.8), ControlConfig("passive")
        )

        assert np.all(passive.trajectory.p_abs >= 0)
        assert np.all(passive.trajectory.p_react == 0)

    def test_step_halving(self, table, kernel):
        zeta = signals.synthesize_sea(signals.sea_state("S2"), 900.0, DT, seed=4)
        fe = hydro.excitation_force(table, zeta)
        track = constant_track(fe, 0.7)
        config = ControlConfig("reactive")

        coarse = sim.simulate(table, kernel, fe, track, config)
        fine = sim.simulate(
            table, hydro.radiation_kernel(table, DT / 2), fe, track, config, dt=DT / 2
        )

        assert fine.metrics.energy_j == pytest.approx(coarse.metrics.energy_j, rel=0.005)

    def test_energy_balance(self, reactive_off_resonance):
        balance = reactive_off_resonance.energy_balance

        assert balance.excitation_work != 0
        assert balance.relative_residual < 0.02

    def test_irregular_energy_balance(self, table, kernel):
        zeta = signals.synthesize_sea(signals.sea_state("S6"), 900.0, DT, seed=11)
        fe = hydro.excitation_force(table, zeta)
        report = sim.simulate(
            table,
            kernel,
            fe,
            constant_track(fe, 0.9),
            ControlConfig("reactive", f_max=3e5),
            zeta=zeta,
            spectrum=signals.sea_state("S6"),
        )

        assert report.energy_balance.relative_residual < 0.02
        assert report.energy_balance.radiated_energy > 0
        assert np.all(report.trajectory.p_abs >= 0)
        assert report.metrics.max_abs_damping_force_n <= 3e5
        assert report.metrics.max_abs_spring_force_n <= 3e5
        assert report.metrics.cwr > 0
        assert np.array_equal(report.trajectory.zeta, zeta.at(report.trajectory.time))

    def test_trajectory_length(self, reactive_off_resonance):
        trajectory = reactive_off_resonance.trajectory

        assert len(trajectory) == 8001
        assert trajectory.time[-1] == pytest.approx(400.0)
        assert np.all(np.isnan(trajectory.zeta))

    def test_step_too_coarse(self, table):
        fe = regular_force(0.8)
        coarse_kernel = hydro.radiation_kernel(table, 0.25)

        with pytest.raises(ValueError, match="too coarse"):
            sim.simulate(
                table, coarse_kernel, fe, constant_track(fe, 0.8), ControlConfig(), dt=0.25
            )

    def test_kernel_mismatch(self, table, kernel):
        fe = regular_force(0.8)

        with pytest.raises(ValueError, match="kernel"):
            sim.simulate(
                table, kernel, fe, constant_track(fe, 0.8), ControlConfig(), dt=0.1
            )

    def test_bad_track(self, table, kernel):
        fe = regular_force(0.8)

        with pytest.raises(ValueError):
            sim.simulate(table, kernel, fe, constant_track(fe, 0.0), ControlConfig())


ESTIMATOR_DT = 0.78125
CONTROLLERS = {
    "passive": ControlConfig("passive"),
    "reactive": ControlConfig("reactive", f_max=5e5),
}


@pytest.fixture(scope="module")
def estimator_energy(table, kernel):
    energy = {}
    residuals = []
    for sea, seed in (("S1", 5), ("S2", 5)):
        zeta = signals.synthesize_sea(signals.sea_state(sea), 1800.0, DT, seed=seed)
        fe = hydro.excitation_force(table, zeta)
        sampled = fe.resample(ESTIMATOR_DT)
        for method in ("ekf", "fll", "hht"):
            track = estimation.estimate_frequency(
                sampled, method, suppress_warnings=True
            )
            for name, config in CONTROLLERS.items():
                report = sim.simulate(table, kernel, fe, track, config)
                energy[sea, name, method] = report.metrics.energy_j
                residuals.append(report.energy_balance.relative_residual)
    return energy, residuals


def spread(energy, sea, controller):
    values = [energy[sea, controller, method] for method in ("ekf", "fll", "hht")]
    return (max(values) - min(values)) / max(values)


class TestEstimatorComparison:
    def test_energy_balance_over_half_hour(self, estimator_energy):
        _, residuals = estimator_energy

        assert max(residuals) < 0.01

    @pytest.mark.parametrize("controller", tuple(CONTROLLERS))
    def test_hilbert_huang_absorbs_most_in_broad_sea(self, estimator_energy, controller):
        energy, _ = estimator_energy

        assert energy["S2", controller, "hht"] > energy["S2", controller, "ekf"]
        assert energy["S2", controller, "hht"] > energy["S2", controller, "fll"]

    @pytest.mark.parametrize("controller", tuple(CONTROLLERS))
    def test_narrow_sea_reduces_spread(self, estimator_energy, controller):
        energy, _ = estimator_energy

        assert spread(energy, "S1", controller) < spread(energy, "S2", controller)


class TestMetrics:
    def make_trajectory(self, n=11, dt=1.0):
        time = dt * np.arange(n)
        ones = np.ones(n)
        return sim.Trajectory(
            time=time,
            zeta=np.zeros(n),
            fe=2 * ones,
            x=time,
            v=ones,
            f_p=-2 * ones,
            damping_force=2 * ones,
            spring_force=np.zeros(n),
            radiation_force=np.zeros(n),
            omega_hat=ones,
            b_p=2 * ones,
            s_p=np.zeros(n),
        )

    def test_constant_power(self, table):
        result = sim.metrics(self.make_trajectory(), table, transient_s=0)

        assert result.mean_power_w == pytest.approx(2.0)
        assert result.energy_j == pytest.approx(20.0)
        assert result.pto_rating == pytest.approx(1.0)
        assert result.reactive_ratio == 0.0
        assert result.max_abs_x_m == 10.0

    def test_transient_excluded(self, table):
        result = sim.metrics(self.make_trajectory(), table, transient_s=4)

        assert result.energy_j == pytest.approx(12.0)
        assert result.max_abs_x_m == 10.0

    def test_capture_width(self, table):
        spectrum = signals.line_spectrum([1.0], [0.5])
        result = sim.metrics(self.make_trajectory(), table, spectrum, transient_s=0)

        p_wave = hydro.wave_power(spectrum)
        assert result.wave_power_w_per_m == pytest.approx(p_wave)
        assert result.cwr == pytest.approx(2.0 / (2 * table.radius * p_wave))

    def test_transient_too_long(self, table):
        with pytest.raises(InsufficientDataError):
            sim.metrics(self.make_trajectory(), table, transient_s=20)

    def test_mismatched_fields(self):
        with pytest.raises(ValueError):
            sim.Trajectory(
                time=np.arange(3.0),
                zeta=np.zeros(2),
                fe=np.zeros(3),
                x=np.zeros(3),
                v=np.zeros(3),
                f_p=np.zeros(3),
                damping_force=np.zeros(3),
                spring_force=np.zeros(3),
                radiation_force=np.zeros(3),
                omega_hat=np.zeros(3),
                b_p=np.zeros(3),
                s_p=np.zeros(3),
            )


class TestOutputFiles:
    def test_trajectory_round_trip(self, reactive_off_resonance, tmp_path):
        path = tmp_path / "trajectory.csv"
        sim.write_trajectory(reactive_off_resonance.trajectory, path)
        frame = sim.read_trajectory(path)

        assert list(frame.columns) == list(sim.TRAJECTORY_COLUMNS.values())
        assert np.array_equal(frame["x_m"].to_numpy(), reactive_off_resonance.trajectory.x)

    def test_trajectory_bad_header(self, tmp_path):
        path = tmp_path / "trajectory.csv"
        path.write_text("time_s,x_m\n0,0\n")

        with pytest.raises(ParseError):
            sim.read_trajectory(path)

    def test_summary_round_trip(self, reactive_off_resonance, tmp_path):
        path = tmp_path / "summary.json"
        sim.write_summary(reactive_off_resonance.to_summary(), path)
        summary = sim.read_summary(path)

        assert "null" in path.read_text()
        assert math.isnan(summary["metrics"]["cwr"])
        assert summary["metrics"]["mean_power_w"] == pytest.approx(
            reactive_off_resonance.metrics.mean_power_w
        )
