"""Recognition and explicit drawings of witness rectangle graphs."""

from .cointerval import interval_model, recognize_cointerval
from .models import IntervalModel, Realization
from .plusminus import realize_pm
from .staircase import compose_join, intervals_to_staircase, staircase_to_intervals
from .trees import IndependentTriple, realize_tree
from .twocomp import realize_two_components

__all__ = [
    "IndependentTriple",
    "IntervalModel",
    "Realization",
    "compose_join",
    "interval_model",
    "intervals_to_staircase",
    "realize_pm",
    "realize_tree",
    "realize_two_components",
    "recognize_cointerval",
    "staircase_to_intervals",
]
