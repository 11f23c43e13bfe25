from dataclasses import dataclass, field, fields, replace
import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from wavetune._utils import Parameter
from wavetune.control import ControlConfig, resolve_mode, resolve_saturation
from wavetune.ekf import EkfConfig
from wavetune.estimation import (
    SUPPORTED_METHODS_AND_THEIR_ESTIMATORS,
    ConstantConfig,
    resolve_method,
)
from wavetune.fll import FllConfig
from wavetune.hht import HhtConfig
from wavetune.signals import ParseError


SEA_SOURCES = ("preset", "csv", "spectrum", "lines", "bretschneider", "jonswap")
_SCALAR_KEYS = (
    "dt",
    "estimator_dt",
    "duration",
    "transient_s",
    "f_max",
    "saturation",
    "seed",
)
_SECTION_KEYS = tuple(SUPPORTED_METHODS_AND_THEIR_ESTIMATORS)
_TOP_LEVEL_KEYS = frozenset(
    ("seas", "estimators", "controllers", "hydro", "out") + _SCALAR_KEYS + _SECTION_KEYS
)


@dataclass(frozen=True)
class SeaConfig:
    """
    One sea state of the benchmark.

    Exactly one source is given: ``preset`` names a packaged sea state, ``csv`` an elevation record, ``spectrum`` a spectrum JSON file, ``lines`` a dict of ``frequencies`` and ``variances`` and ``bretschneider`` or ``jonswap`` a dict of shape parameters.
    Every source except ``csv`` is synthesized and needs a ``seed``.
    """

    name: str
    source: str
    value: Any
    seed: Optional[int] = None
    duration: Optional[float] = None

    @property
    def is_parametric(self) -> bool:
        return self.source != "csv"


@dataclass(frozen=True)
class BenchConfig:
    """
    Benchmark matrix: every sea state is run with every estimator and every controller.

    ``estimator_dt`` is the sample interval at which the estimators see the excitation force, ``dt`` the integrator step and ``duration`` the default length of synthesized seas.
    """

    seas: Tuple[SeaConfig, ...]
    estimators: Tuple[str, ...] = ("ekf", "fll", "hht")
    controllers: Tuple[str, ...] = ("passive", "reactive")
    hydro: Optional[Path] = None
    dt: float = 0.05
    estimator_dt: float = 0.78125
    duration: float = 1800.0
    transient_s: float = 120.0
    f_max: Optional[float] = None
    saturation: str = "per_term"
    seed: Optional[int] = None
    out: Path = Path("results")
    ekf: EkfConfig = field(default_factory=EkfConfig)
    fll: FllConfig = field(default_factory=FllConfig)
    hht: HhtConfig = field(default_factory=HhtConfig)
    constant: ConstantConfig = field(default_factory=ConstantConfig)

    def __post_init__(self) -> None:
        Parameter(self.dt, "dt").throw_error_if_not_positive()
        Parameter(self.estimator_dt, "estimator_dt").throw_error_if_not_positive()
        Parameter(self.duration, "duration").throw_error_if_not_positive()
        Parameter(self.f_max, "f_max").throw_error_if_not_positive(optional=True)

        if len(self.seas) == 0:
            raise ValueError("A benchmark needs at least one sea state.")
        if len(self.estimators) == 0:
            raise ValueError("A benchmark needs at least one estimator.")
        if len(self.controllers) == 0:
            raise ValueError("A benchmark needs at least one controller.")

        Parameter(self.seed, "seed").throw_error_if_not_of_type(int, optional=True)
        object.__setattr__(self, "saturation", resolve_saturation(self.saturation))
        for sea in self.seas:
            if sea.is_parametric and sea.seed is None and self.seed is None:
                raise ValueError(
                    f"Synthesized sea state \"{sea.name}\" needs a seed, set one in the config or pass --seed."
                )

        names = [sea.name for sea in self.seas]
        if len(set(names)) != len(names):
            raise ValueError(f"Sea state names must be unique, got {names}.")

        object.__setattr__(
            self, "estimators", tuple(resolve_method(m) for m in self.estimators)
        )
        object.__setattr__(
            self, "controllers", tuple(resolve_mode(c) for c in self.controllers)
        )

        for path in self.referenced_files():
            if not path.is_file():
                raise FileNotFoundError(f"Benchmark input not found: {path}")

    def referenced_files(self) -> List[Path]:
        paths = [Path(sea.value) for sea in self.seas if sea.source in ("csv", "spectrum")]
        if self.hydro is not None:
            paths.append(Path(self.hydro))
        return paths

    def seed_for(self, sea: SeaConfig) -> Optional[int]:
        return sea.seed if sea.seed is not None else self.seed

    def control_config(self, mode: str) -> ControlConfig:
        return ControlConfig(mode, self.f_max, self.saturation)

    def estimator_config(self, method: str) -> Any:
        return getattr(self, method)


def _sea_from_dict(data: Dict[str, Any], base: Path) -> SeaConfig:
    if "name" not in data:
        raise ParseError(f"Sea state entry {data} has no name.")

    sources = [key for key in SEA_SOURCES if key in data]
    if len(sources) != 1:
        raise ParseError(
            f'Sea state "{data["name"]}" must give exactly one of {SEA_SOURCES}, got {sources}.'
        )
    source = sources[0]
    value = data[source]
    if source in ("csv", "spectrum"):
        value = str((base / value).resolve())

    return SeaConfig(
        name=str(data["name"]),
        source=source,
        value=value,
        seed=data.get("seed"),
        duration=data.get("duration"),
    )


def _section(cls, data: Optional[Dict[str, Any]], name: str):
    if data is None:
        return cls()
    known = {f.name for f in fields(cls)}
    unknown = set(data) - known
    if unknown:
        raise ParseError(f'Unknown keys {sorted(unknown)} in "{name}" section.')
    return cls(**data)


def load_bench_config(path: Union[str, Path]) -> BenchConfig:
    """
    Read a benchmark configuration from JSON.

    Relative file paths are resolved against the directory of the configuration file.

    .. code-block:: json

        {
            "seas": [{"name": "S2", "preset": "S2", "seed": 1}],
            "estimators": ["ekf", "fll", "hht"],
            "controllers": ["pc", "rc"],
            "f_max": 500000,
            "ekf": {"q_omega": 2e-4}
        }
    """
    path = Path(path)
    base = path.resolve().parent
    try:
        with open(path, "r") as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise ParseError(f"Could not parse {path}: {e}") from e

    if not isinstance(data, dict) or "seas" not in data:
        raise ParseError(f'{path} must hold an object with a "seas" list.')

    unknown = set(data) - _TOP_LEVEL_KEYS
    if unknown:
        raise ParseError(f"Unknown benchmark keys {sorted(unknown)} in {path}.")

    kwargs: Dict[str, Any] = {
        "seas": tuple(_sea_from_dict(sea, base) for sea in data["seas"]),
    }
    for key in ("estimators", "controllers"):
        if key in data:
            kwargs[key] = tuple(data[key])
    for key in _SCALAR_KEYS:
        if key in data:
            kwargs[key] = data[key]
    if data.get("hydro") is not None:
        kwargs["hydro"] = (base / data["hydro"]).resolve()
    if "out" in data:
        kwargs["out"] = base / data["out"]

    for method, estimator in SUPPORTED_METHODS_AND_THEIR_ESTIMATORS.items():
        kwargs[method] = _section(estimator.config_class, data.get(method), method)

    return BenchConfig(**kwargs)


def override(config: BenchConfig, **changes: Any) -> BenchConfig:
    """
    Copy of ``config`` with the given fields replaced, skipping ``None`` values.
    """
    changes = {key: value for key, value in changes.items() if value is not None}
    return replace(config, **changes)
