"""Differential evolution boundary-violation experimentation framework.

The compiled extension carries the full API: domains, deterministic
random streams, correction strategies, the evolution engine, the
infeasibility probability model, and the parameter-sweep runner.
"""

from ._core import *  # noqa: F401,F403

__version__ = "0.1.0"
