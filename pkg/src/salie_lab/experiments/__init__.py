from .report import emit
from .runner import BoundReport, run
from .spec import KINDS, ExperimentSpec

__all__ = ["BoundReport", "ExperimentSpec", "KINDS", "emit", "run"]
