"""quivercanon: exact canonical-basis computations for symmetric quivers."""

__version__ = "0.1.0"
__author__ = "quivercanon contributors"

from .config import RunConfig

__all__ = ["RunConfig", "__version__"]
