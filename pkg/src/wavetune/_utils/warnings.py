from warnings import warn


def warn_filter_reset(method: str, sample_index: int, reason: str) -> None:
    warn(
        f"{method} filter reset to its prior at sample {sample_index}: {reason}."
    )


def warn_cell_failure(cell: str, reason: str) -> None:
    warn(f'Benchmark cell "{cell}" failed: {reason}.')


def warn_segment_shortened(requested: int, used: int) -> None:
    warn(
        f"Record shorter than one {requested}-sample segment. "
        f"Using a single {used}-sample segment instead."
    )


def warn_table_tail(end: str, ratio: float) -> None:
    warn(
        f"Radiation damping at the {end} end of the hydro table is "
        f"{ratio:.1%} of its peak and does not vanish."
    )


def warn_imf_not_converged(index: int, sift_count: int) -> None:
    warn(
        f"IMF {index} did not meet the IMF criterion after {sift_count} siftings. "
        f"Its instantaneous frequency may be unreliable."
    )
