from dataclasses import dataclass
from typing import Dict, Optional

from wavetune._utils import Parameter, clean_and_lowercase


MODE_ALIASES: Dict[str, str] = {
    "passive": "passive",
    "pc": "passive",
    "reactive": "reactive",
    "rc": "reactive",
}

SATURATION_ALIASES: Dict[str, str] = {
    "perterm": "per_term",
    "total": "total",
    "off": "off",
}


def resolve_mode(mode: str) -> str:
    Parameter(mode, "mode").throw_error_if_not_of_type(str)

    key = clean_and_lowercase(mode)
    if key not in MODE_ALIASES:
        raise ValueError(
            f'Unknown control mode "{mode}", expected one of {sorted(MODE_ALIASES)}.'
        )
    return MODE_ALIASES[key]


def resolve_saturation(saturation: str) -> str:
    Parameter(saturation, "saturation").throw_error_if_not_of_type(str)

    key = clean_and_lowercase(saturation)
    if key not in SATURATION_ALIASES:
        raise ValueError(
            f'"saturation" must be one of ("per_term", "total", "off"), got {saturation}.'
        )
    return SATURATION_ALIASES[key]


@dataclass(frozen=True)
class ControlConfig:
    """
    Power take-off control law.

    :param mode:
        ``"passive"`` (alias ``"pc"``) or ``"reactive"`` (alias ``"rc"``).
    :param f_max:
        Force limit in N. ``None`` leaves the force unconstrained.
    :param saturation:
        How ``f_max`` is applied.
        ``"per_term"`` clips the damping and spring terms separately, ``"total"`` scales both terms so their sum stays within ``f_max`` and ``"off"`` ignores the limit.
    """

    mode: str = "passive"
    f_max: Optional[float] = None
    saturation: str = "per_term"

    def __post_init__(self) -> None:
        Parameter(self.f_max, "f_max").throw_error_if_not_positive(optional=True)
        object.__setattr__(self, "mode", resolve_mode(self.mode))
        object.__setattr__(self, "saturation", resolve_saturation(self.saturation))

    @property
    def is_constrained(self) -> bool:
        return self.f_max is not None and self.saturation != "off"
