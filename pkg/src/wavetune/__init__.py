"""
Benchmark frequency estimators for tuning wave energy converter control.
"""

VERSION = "1.0.0"

from . import signals, hydro, ekf, fll, hht, control, estimation, sim, cli
