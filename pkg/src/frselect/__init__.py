"""In-place sampling-based selection with comparison counting."""

from .baseline import RiConfig, riselect
from .core import PartitionBounds, RunCounters, SelectionResult, Workspace, counters_merge, normalize
from .generators import InputSpec, generate
from .sampling import SampleStrategy, Variant, f_fr, pivot_ranks, place_sample, sample_and_gap
from .select import SelectConfig, pmselect, select, sselect

__all__ = [
    "InputSpec", "PartitionBounds", "RiConfig", "RunCounters", "SampleStrategy", "SelectConfig",
    "SelectionResult", "Variant", "Workspace", "counters_merge", "f_fr", "generate", "normalize",
    "pivot_ranks", "place_sample", "pmselect", "riselect", "sample_and_gap", "select", "sselect",
]
