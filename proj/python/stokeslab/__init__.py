"""Stokes waves in holomorphic coordinates and crest-singularity checks."""

from ._core import *  # noqa: F401,F403
from ._core import (
    ConfigError,
    ConvergenceFailure,
    Error,
    InvalidArgument,
    SingularJacobian,
)

__version__ = "0.1.0"
