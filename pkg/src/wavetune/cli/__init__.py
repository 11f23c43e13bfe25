"""
Command-line benchmark harness.
"""

from ._config import BenchConfig, SeaConfig, load_bench_config
from ._harness import RESULT_COLUMNS, prepare_sea, run_benchmark
from ._commands import cmd_estimate, cmd_simulate, cmd_spectrum, main
