import argparse
import json
import numpy as np
import pandas as pd
from pathlib import Path
import sys
from typing import Any, Dict, List, Optional, Tuple, Union

from wavetune import VERSION, hydro, signals
from wavetune._utils import WavetuneError
from wavetune.cli._config import load_bench_config, override
from wavetune.cli._harness import load_table, run_benchmark
from wavetune.estimation import (
    SUPPORTED_METHODS_AND_THEIR_ESTIMATORS,
    estimate_frequency,
    resolve_method,
)
from wavetune.sim import write_summary


PathLike = Union[str, Path]


def _load_record(path: PathLike) -> Tuple[signals.TimeSeries, str]:
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"No such record file: {path}")

    header = list(pd.read_csv(path, nrows=0).columns)
    if header == ["time_s", signals.FORCE_COLUMN]:
        return signals.load_series(path, signals.FORCE_COLUMN), "force"
    return signals.load_elevation(path), "elevation"


def _method_config(method: str, config_path: Optional[PathLike]) -> Any:
    if config_path is None:
        return None
    with open(config_path, "r") as f:
        section = json.load(f).get(method)
    if section is None:
        return None
    return SUPPORTED_METHODS_AND_THEIR_ESTIMATORS[method].config_class(**section)


def cmd_estimate(
    input_path: PathLike,
    method: str = "ekf",
    out: PathLike = ".",
    hydro_path: Optional[PathLike] = None,
    config_path: Optional[PathLike] = None,
    suppress_warnings: bool = False,
) -> Dict[str, Any]:
    """
    Estimate the frequency track of a record and write it with a summary.

    Elevation records (``time_s,elevation_m``) are converted to excitation force with the hydro table first; force records (``time_s,force_n``) are used as they are.
    Writes ``<stem>_<method>_track.csv`` (``time_s,omega_hat_rads``) and ``<stem>_<method>_summary.json``.

    :return:
        The summary: mean estimate over the whole record and over its second half, and the spectral statistics of the force record.
    :rtype:
        Dict[str, Any]
    """
    method = resolve_method(method)
    series, kind = _load_record(input_path)

    if kind == "elevation":
        table = load_table(hydro_path, suppress_warnings)
        fe = hydro.excitation_force(table, series)
    else:
        fe = series

    track = estimate_frequency(
        fe, method, _method_config(method, config_path), suppress_warnings
    )
    stats = signals.spectral_stats(
        signals.estimate_spectrum(fe, suppress_warnings=suppress_warnings)
    )

    values = track.values
    summary = {
        "input": str(input_path),
        "kind": kind,
        "method": method,
        "n_samples": len(track),
        "mean_omega_hat": float(np.mean(values)),
        "mean_omega_hat_second_half": float(np.mean(values[len(values) // 2 :])),
        "omega_e_fe": stats.omega_e,
        "omega_1_fe": stats.omega_1,
        "omega_p_fe": stats.omega_p,
    }

    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    stem = f"{Path(input_path).stem}_{method}"
    signals.write_series(track, out / f"{stem}_track.csv", "omega_hat_rads")
    write_summary(summary, out / f"{stem}_summary.json")

    return summary


def cmd_spectrum(
    input_path: PathLike,
    out: PathLike = ".",
    hydro_path: Optional[PathLike] = None,
    suppress_warnings: bool = False,
) -> Dict[str, Any]:
    """
    Estimate the spectrum of a record and write it with its statistics.

    Writes ``<stem>_spectrum.json`` and ``<stem>_stats.json``.
    For elevation records the statistics also cover the excitation force spectrum and the wave power.

    :return:
        The statistics written to ``<stem>_stats.json``.
    :rtype:
        Dict[str, Any]
    """
    series, kind = _load_record(input_path)
    spectrum = signals.estimate_spectrum(series, suppress_warnings=suppress_warnings)

    result: Dict[str, Any] = {
        "input": str(input_path),
        "kind": kind,
        "stats": signals.spectral_stats(spectrum).to_dict(),
    }
    if kind == "elevation":
        table = load_table(hydro_path, suppress_warnings)
        force = hydro.force_spectrum(table, spectrum)
        result["force_stats"] = signals.spectral_stats(force).to_dict()
        result["wave_power_w_per_m"] = hydro.wave_power(spectrum)

    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    stem = Path(input_path).stem
    signals.write_spectrum(spectrum, out / f"{stem}_spectrum.json")
    write_summary(result, out / f"{stem}_stats.json")

    return result


def cmd_simulate(
    config_path: PathLike,
    method: Optional[str] = None,
    control: Optional[str] = None,
    f_max: Optional[float] = None,
    dt: Optional[float] = None,
    seed: Optional[int] = None,
    out: Optional[PathLike] = None,
    hydro_path: Optional[PathLike] = None,
    jobs: int = 1,
    suppress_warnings: bool = False,
    progress: bool = True,
) -> int:
    """
    Run the benchmark matrix of a configuration file.

    Arguments other than ``config_path`` override the file; ``method`` and ``control`` restrict the matrix to one estimator or one controller.

    :return:
        ``0`` if every cell succeeded, ``1`` otherwise.
    :rtype:
        int
    """
    config = load_bench_config(config_path)
    config = override(
        config,
        estimators=(method,) if method is not None else None,
        controllers=(control,) if control is not None else None,
        f_max=f_max,
        dt=dt,
        seed=seed,
        out=Path(out) if out is not None else None,
        hydro=Path(hydro_path) if hydro_path is not None else None,
    )

    results = run_benchmark(config, jobs, suppress_warnings, progress)
    return 0 if (results["status"] == "ok").all() else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wavetune",
        description="Benchmark frequency estimators for tuning wave energy converter control.",
    )
    parser.add_argument("--version", action="version", version=VERSION)
    subparsers = parser.add_subparsers(dest="command", required=True)

    methods = sorted(SUPPORTED_METHODS_AND_THEIR_ESTIMATORS)

    estimate = subparsers.add_parser(
        "estimate", help="track the frequency of an elevation or force record"
    )
    estimate.add_argument("input", help="CSV record (time_s,elevation_m or time_s,force_n)")
    estimate.add_argument("--method", default="ekf", choices=methods)
    estimate.add_argument("--config", help="JSON file with estimator sections")
    estimate.add_argument("--hydro", help="hydro table JSON (defaults to the sample table)")
    estimate.add_argument("--out", default=".", help="output directory")

    simulate = subparsers.add_parser(
        "simulate", help="run a benchmark matrix from a configuration file"
    )
    simulate.add_argument("--config", required=True, help="benchmark JSON file")
    simulate.add_argument("--method", choices=methods)
    simulate.add_argument("--control", choices=["pc", "rc", "passive", "reactive"])
    simulate.add_argument("--fmax", type=float, help="PTO force limit in N")
    simulate.add_argument("--dt", type=float, help="integrator step in s")
    simulate.add_argument("--seed", type=int, help="seed for synthesized seas")
    simulate.add_argument("--out", help="output directory")
    simulate.add_argument("--hydro", help="hydro table JSON")
    simulate.add_argument("--jobs", type=int, default=1, help="worker processes")

    spectrum = subparsers.add_parser(
        "spectrum", help="estimate the spectrum and statistics of a record"
    )
    spectrum.add_argument("input", help="CSV record (time_s,elevation_m or time_s,force_n)")
    spectrum.add_argument("--hydro", help="hydro table JSON")
    spectrum.add_argument("--out", default=".", help="output directory")

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Command-line entry point. Returns the process exit status.
    """
    args = _build_parser().parse_args(argv)

    try:
        if args.command == "estimate":
            summary = cmd_estimate(
                args.input, args.method, args.out, args.hydro, args.config
            )
            print(json.dumps(summary, indent=4))
            return 0

        if args.command == "spectrum":
            result = cmd_spectrum(args.input, args.out, args.hydro)
            print(json.dumps(result["stats"], indent=4))
            return 0

        return cmd_simulate(
            args.config,
            method=args.method,
            control=args.control,
            f_max=args.fmax,
            dt=args.dt,
            seed=args.seed,
            out=args.out,
            hydro_path=args.hydro,
            jobs=args.jobs,
        )
    except (WavetuneError, ValueError, FileNotFoundError) as e:
        print(f"wavetune: error: {e}", file=sys.stderr)
        return 2
