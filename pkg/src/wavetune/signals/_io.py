import json
import numpy as np
import pandas as pd
from pathlib import Path
from typing import Optional, Union

from wavetune._utils import Parameter
from wavetune.signals._errors import NonUniformSamplingError, ParseError
from wavetune.signals._spectrum import Spectrum
from wavetune.signals._time_series import TimeSeries


PathLike = Union[str, Path]

TIME_COLUMN = "time_s"
ELEVATION_COLUMN = "elevation_m"
FORCE_COLUMN = "force_n"
UNIFORMITY_TOLERANCE = 1e-6


def load_series(
    path: PathLike, column: str, dt_expected: Optional[float] = None
) -> TimeSeries:
    """
    Read a uniformly sampled record from a two-column CSV file with header ``time_s,<column>``.

    Timestamps must increase strictly and uniformly.

    :param path:
        CSV file to read.
    :type path:
        Union[str, Path]
    :param column:
        Name of the value column.
    :type column:
        str
    :param dt_expected:
        Expected sample interval in seconds.
        If given, timestamps are checked against it and it becomes the interval of the returned series.
        Otherwise the mean timestamp step is used.
    :type dt_expected:
        float

    :return:
        The record.
    :rtype:
        TimeSeries
    """
    Parameter(column, "column").throw_error_if_not_of_type(str)
    Parameter(dt_expected, "dt_expected").throw_error_if_not_positive(optional=True)

    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"No such record file: {path}")

    try:
        frame = pd.read_csv(path, float_precision="round_trip")
    except (pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise ParseError(f"Could not parse {path}: {e}") from e

    expected_header = [TIME_COLUMN, column]
    if list(frame.columns) != expected_header:
        raise ParseError(
            f'{path} must have header "{",".join(expected_header)}", '
            f'got "{",".join(map(str, frame.columns))}".'
        )

    for name in expected_header:
        numeric = pd.to_numeric(frame[name], errors="coerce").to_numpy(dtype=float)
        bad_rows = np.flatnonzero(~np.isfinite(numeric))
        if bad_rows.size > 0:
            row = int(bad_rows[0])
            raise ParseError(
                f'{path}: malformed "{name}" value {frame[name].iloc[row]!r} '
                f"in data row {row + 1} (line {row + 2})."
            )
        frame[name] = numeric

    if len(frame) < 2:
        raise ParseError(f"{path} holds fewer than 2 samples.")

    times = frame[TIME_COLUMN].to_numpy()
    steps = np.diff(times)

    backwards = np.flatnonzero(steps <= 0)
    if backwards.size > 0:
        row = int(backwards[0]) + 1
        raise ParseError(
            f"{path}: timestamps must increase, data row {row + 1} is at "
            f"{times[row]!r} s after {times[row - 1]!r} s."
        )
    dt = (
        dt_expected
        if dt_expected is not None
        else (times[-1] - times[0]) / (times.size - 1)
    )

    deviation = np.abs(steps - dt)
    bad_steps = np.flatnonzero(deviation > UNIFORMITY_TOLERANCE * dt)
    if bad_steps.size > 0:
        row = int(bad_steps[0]) + 1
        raise NonUniformSamplingError(
            f"{path}: timestamp step into data row {row + 1} is {steps[row - 1]!r} s, "
            f"expected {dt!r} s."
        )

    return TimeSeries(times[0], dt, frame[column].to_numpy())


def load_elevation(path: PathLike, dt_expected: Optional[float] = None) -> TimeSeries:
    """
    Read a surface-elevation record from a ``time_s,elevation_m`` CSV file.

    :param path:
        CSV file to read.
    :type path:
        Union[str, Path]
    :param dt_expected:
        Expected sample interval in seconds.
    :type dt_expected:
        float

    :return:
        The elevation record in metres.
    :rtype:
        TimeSeries

    .. topic:: Example usage

        >>> zeta = wt.signals.load_elevation("buoy.csv", dt_expected=0.78125)
        >>> zeta.duration
        1800.0
    """
    return load_series(path, ELEVATION_COLUMN, dt_expected)


def write_series(series: TimeSeries, path: PathLike, column: str) -> None:
    """
    Write a record as a ``time_s,<column>`` CSV file with LF line endings.
    """
    Parameter(series, "series").throw_error_if_not_of_type(TimeSeries)
    Parameter(column, "column").throw_error_if_not_of_type(str)

    frame = pd.DataFrame({TIME_COLUMN: series.times, column: series.values})
    frame.to_csv(path, index=False, lineterminator="\n")


def write_elevation(series: TimeSeries, path: PathLike) -> None:
    write_series(series, path, ELEVATION_COLUMN)


def load_spectrum(path: PathLike) -> Spectrum:
    """
    Read a spectrum from a JSON file of the form ``{"omega": [...], "density": [...]}``.
    """
    path = Path(path)
    try:
        with open(path, "r") as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise ParseError(f"Could not parse {path}: {e}") from e

    if not isinstance(data, dict) or not {"omega", "density"} <= set(data):
        raise ParseError(f'{path} must hold an object with "omega" and "density".')

    return Spectrum(data["omega"], data["density"])


def write_spectrum(spectrum: Spectrum, path: PathLike) -> None:
    Parameter(spectrum, "spectrum").throw_error_if_not_of_type(Spectrum)

    with open(path, "w") as f:
        json.dump(spectrum.to_dict(), f, indent=4)
