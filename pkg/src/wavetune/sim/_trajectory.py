from dataclasses import dataclass, fields
import numpy as np
import pandas as pd
from pathlib import Path
from typing import Union

from wavetune._utils import Parameter
from wavetune.signals import ParseError


TRAJECTORY_COLUMNS = {
    "time": "time_s",
    "zeta": "zeta_m",
    "fe": "fe_n",
    "x": "x_m",
    "v": "v_ms",
    "f_p": "fp_n",
    "omega_hat": "omega_hat_rads",
    "p_abs": "p_abs_w",
    "p_react": "p_react_w",
}


@dataclass(frozen=True, eq=False)
class Trajectory:
    """
    Sampled simulation output, one value per integrator step.

    Forces are in N, powers in W.
    ``p_abs`` is the power absorbed by the damping term, ``p_react`` the power through the spring term and ``p_total = -f_p·v`` the power delivered by the PTO.
    ``zeta`` is NaN when no elevation record was supplied.
    """

    time: np.ndarray
    zeta: np.ndarray
    fe: np.ndarray
    x: np.ndarray
    v: np.ndarray
    f_p: np.ndarray
    damping_force: np.ndarray
    spring_force: np.ndarray
    radiation_force: np.ndarray
    omega_hat: np.ndarray
    b_p: np.ndarray
    s_p: np.ndarray

    def __post_init__(self) -> None:
        n = None
        for field in fields(self):
            array = np.array(getattr(self, field.name), dtype=float)
            if n is None:
                n = array.shape
            if array.ndim != 1 or array.shape != n:
                raise ValueError(
                    f'Trajectory field "{field.name}" has shape {array.shape}, expected {n}.'
                )
            array.setflags(write=False)
            object.__setattr__(self, field.name, array)

    def __len__(self) -> int:
        return self.time.size

    @property
    def p_abs(self) -> np.ndarray:
        return self.damping_force * self.v

    @property
    def p_react(self) -> np.ndarray:
        return self.spring_force * self.v

    @property
    def p_total(self) -> np.ndarray:
        return -self.f_p * self.v

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                column: getattr(self, attribute)
                for attribute, column in TRAJECTORY_COLUMNS.items()
            }
        )


def write_trajectory(trajectory: Trajectory, path: Union[str, Path]) -> None:
    """
    Write a trajectory CSV with columns ``time_s,zeta_m,fe_n,x_m,v_ms,fp_n,omega_hat_rads,p_abs_w,p_react_w``.
    """
    Parameter(trajectory, "trajectory").throw_error_if_not_of_type(Trajectory)

    trajectory.to_frame().to_csv(path, index=False, lineterminator="\n")


def read_trajectory(path: Union[str, Path]) -> pd.DataFrame:
    """
    Read a trajectory CSV written by :py:func:`write_trajectory`.
    """
    frame = pd.read_csv(path, float_precision="round_trip")

    expected = list(TRAJECTORY_COLUMNS.values())
    if list(frame.columns) != expected:
        raise ParseError(
            f'{path} must have header "{",".join(expected)}", '
            f'got "{",".join(map(str, frame.columns))}".'
        )
    return frame
