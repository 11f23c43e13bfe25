from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
import math
import numpy as np
import pandas as pd
from pathlib import Path
from scipy import signal
import sys
from typing import Any, Dict, List, Optional

from wavetune import _utils, hydro, signals
from wavetune.cli._config import BenchConfig, SeaConfig
from wavetune.estimation import estimate_frequency
from wavetune.sim import simulate, write_summary, write_trajectory


RESULT_COLUMNS = (
    "sea",
    "estimator",
    "controller",
    "status",
    "mean_omega_hat",
    "omega_e_fe",
    "omega_1_fe",
    "hs",
    "energy_j",
    "mean_power_w",
    "cwr",
    "pto_rating",
    "reactive_ratio",
    "mean_abs_reactive_power_w",
    "max_abs_fp_n",
    "max_abs_damping_force_n",
    "max_abs_spring_force_n",
    "max_abs_x_m",
    "energy_residual",
)

_CELL_ERRORS = (ValueError, ArithmeticError, OSError, np.linalg.LinAlgError)


@dataclass(frozen=True, eq=False)
class PreparedSea:
    zeta: signals.TimeSeries
    fe: signals.TimeSeries
    spectrum: signals.Spectrum
    force_stats: signals.SpectralStats


def load_table(path: Optional[Path], suppress_warnings: bool = False) -> hydro.HydroTable:
    if path is None:
        return hydro.sample_table()
    return hydro.load_hydro_table(path, suppress_warnings)


def _fourier_resample(series: signals.TimeSeries, dt: float) -> signals.TimeSeries:
    n = max(len(series), int(round(series.duration / dt)))
    values = signal.resample(series.values, n)
    return signals.TimeSeries(series.t0, series.duration / n, values)


def sea_spectrum(sea: SeaConfig) -> Optional[signals.Spectrum]:
    """
    Target spectrum of a synthesized sea, ``None`` for recorded ones.
    """
    if sea.source == "preset":
        return signals.sea_state(sea.value)
    if sea.source == "spectrum":
        return signals.load_spectrum(sea.value)
    if sea.source == "lines":
        return signals.line_spectrum(**sea.value)
    if sea.source == "bretschneider":
        return signals.bretschneider(**sea.value)
    if sea.source == "jonswap":
        return signals.jonswap(**sea.value)
    return None


def prepare_sea(
    config: BenchConfig, sea: SeaConfig, table: hydro.HydroTable
) -> PreparedSea:
    """
    Elevation and excitation force of a sea state on the integrator grid, with its spectrum.

    Synthesized seas are generated directly at the integrator step.
    Recorded seas are band-limited resampled onto it and their spectrum is estimated from the record.
    """
    spectrum = sea_spectrum(sea)
    if spectrum is None:
        record = signals.load_elevation(sea.value)
        spectrum = signals.estimate_spectrum(record, suppress_warnings=True)
        zeta = _fourier_resample(record, config.dt)
    else:
        duration = sea.duration if sea.duration is not None else config.duration
        zeta = signals.synthesize_sea(
            spectrum, duration, config.dt, config.seed_for(sea)
        )

    fe = hydro.excitation_force(table, zeta)
    force_stats = signals.spectral_stats(hydro.force_spectrum(table, spectrum))

    return PreparedSea(zeta, fe, spectrum, force_stats)


def _cell_name(sea: str, estimator: str, controller: str) -> str:
    return f"{sea}_{estimator}_{controller}"


def _failed_row(
    sea: str, estimator: str, controller: str, reason: str, **known: Any
) -> Dict[str, Any]:
    row = {column: math.nan for column in RESULT_COLUMNS}
    row.update(sea=sea, estimator=estimator, controller=controller)
    row.update(known)
    row["status"] = f"error: {reason}"
    return row


def run_cells(
    config: BenchConfig, sea_index: int, method: str, suppress_warnings: bool = True
) -> List[Dict[str, Any]]:
    """
    Run every controller for one sea state and one estimator, writing a trajectory CSV and a summary JSON per cell.

    Failures are returned as rows with an ``"error: ..."`` status.
    """
    sea = config.seas[sea_index]
    out = Path(config.out)

    try:
        table = load_table(config.hydro, suppress_warnings=True)
        kernel = hydro.radiation_kernel(table, config.dt)
        prepared = prepare_sea(config, sea, table)
        fe_estimator = prepared.fe.resample(config.estimator_dt)
        omega_hat = estimate_frequency(
            fe_estimator,
            method,
            config.estimator_config(method),
            suppress_warnings=suppress_warnings,
        )
    except _CELL_ERRORS as e:
        return [
            _failed_row(sea.name, method, controller, str(e))
            for controller in config.controllers
        ]

    known = {
        "omega_e_fe": prepared.force_stats.omega_e,
        "omega_1_fe": prepared.force_stats.omega_1,
        "hs": signals.spectral_stats(prepared.spectrum).hs,
        "mean_omega_hat": float(np.mean(omega_hat.values)),
    }

    rows = []
    for controller in config.controllers:
        name = _cell_name(sea.name, method, controller)
        try:
            report = simulate(
                table,
                kernel,
                prepared.fe,
                omega_hat,
                config.control_config(controller),
                dt=config.dt,
                zeta=prepared.zeta,
                spectrum=prepared.spectrum,
                transient_s=config.transient_s,
            )
        except _CELL_ERRORS as e:
            rows.append(_failed_row(sea.name, method, controller, str(e), **known))
            continue

        summary = {
            "sea": sea.name,
            "estimator": method,
            "controller": controller,
            "seed": config.seed_for(sea) if sea.is_parametric else None,
            "force_spectrum": prepared.force_stats.to_dict(),
            **report.to_summary(),
        }
        write_trajectory(report.trajectory, out / f"{name}_trajectory.csv")
        write_summary(summary, out / f"{name}_summary.json")

        m = report.metrics
        rows.append(
            {
                "sea": sea.name,
                "estimator": method,
                "controller": controller,
                "status": "ok",
                **known,
                "energy_j": m.energy_j,
                "mean_power_w": m.mean_power_w,
                "cwr": m.cwr,
                "pto_rating": m.pto_rating,
                "reactive_ratio": m.reactive_ratio,
                "mean_abs_reactive_power_w": m.mean_abs_reactive_power_w,
                "max_abs_fp_n": m.max_abs_fp_n,
                "max_abs_damping_force_n": m.max_abs_damping_force_n,
                "max_abs_spring_force_n": m.max_abs_spring_force_n,
                "max_abs_x_m": m.max_abs_x_m,
                "energy_residual": report.energy_balance.relative_residual,
            }
        )

    return rows


def run_benchmark(
    config: BenchConfig,
    jobs: int = 1,
    suppress_warnings: bool = False,
    progress: bool = True,
) -> pd.DataFrame:
    """
    Run the whole benchmark matrix and write ``results.csv`` to ``config.out``.

    Rows are ordered by sea state, then estimator, then controller, whatever the number of jobs.

    :param config:
        Benchmark matrix.
    :type config:
        BenchConfig
    :param jobs:
        Number of worker processes. ``1`` runs everything in this process.
        Defaults to ``1``.
    :type jobs:
        int
    :param suppress_warnings:
        Disable warnings about failed cells.
        Defaults to ``False``.
    :type suppress_warnings:
        bool
    :param progress:
        Print one line per finished sea state and estimator pair to stderr.
        Defaults to ``True``.
    :type progress:
        bool

    :return:
        The results table.
    :rtype:
        pandas.DataFrame
    """
    _utils.Parameter(config, "config").throw_error_if_not_of_type(BenchConfig)
    _utils.Parameter(jobs, "jobs").throw_error_if_not_of_type(int)
    if jobs < 1:
        raise ValueError(f'"jobs" must be at least 1, got {jobs}.')

    Path(config.out).mkdir(parents=True, exist_ok=True)

    units = [
        (sea_index, method)
        for sea_index in range(len(config.seas))
        for method in config.estimators
    ]
    sea_indices = [unit[0] for unit in units]
    methods = [unit[1] for unit in units]

    if jobs == 1:
        batches = map(
            run_cells,
            [config] * len(units),
            sea_indices,
            methods,
            [suppress_warnings] * len(units),
        )
        rows = _collect(units, batches, config, progress)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            batches = executor.map(
                run_cells,
                [config] * len(units),
                sea_indices,
                methods,
                [True] * len(units),
            )
            rows = _collect(units, batches, config, progress)

    results = pd.DataFrame(rows, columns=list(RESULT_COLUMNS))
    results.to_csv(Path(config.out) / "results.csv", index=False, lineterminator="\n")

    if not suppress_warnings:
        for row in rows:
            if row["status"] != "ok":
                _utils.warn_cell_failure(
                    _cell_name(row["sea"], row["estimator"], row["controller"]),
                    row["status"][len("error: ") :],
                )

    return results


def _collect(units, batches, config: BenchConfig, progress: bool) -> List[Dict[str, Any]]:
    rows = []
    for i, ((sea_index, method), batch) in enumerate(zip(units, batches), start=1):
        rows.extend(batch)
        if progress:
            failed = sum(row["status"] != "ok" for row in batch)
            state = "ok" if failed == 0 else f"{failed} failed"
            print(
                f"[{i}/{len(units)}] {config.seas[sea_index].name} / {method}: {state}",
                file=sys.stderr,
            )
    return rows
