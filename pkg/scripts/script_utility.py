import json
import numpy as np
from pathlib import Path


def round_significant(values, digits: int = 10) -> list:
    return [float(f"{x:.{digits}g}") for x in np.atleast_1d(values)]


def save_as_json(data: dict, file_name: str) -> None:
    path_to_resources_dir = Path("src") / "wavetune" / "_resources"
    with open(path_to_resources_dir / file_name, "w") as f:
        json.dump(data, f, indent=4)
