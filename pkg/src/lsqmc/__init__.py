"""Two-length interval partitions, the point sequences they induce, and
discrepancy measurement for the derived 1D and 2D point sets."""

from .discrepancy import (
    BoxWitness,
    DiscrepancyReport,
    brute_force_1d,
    brute_force_2d,
    extreme_disc_1d,
    random_boxes_max,
    star_disc_1d,
    star_disc_2d,
)
from .errors import CapExceededError
from .partition import (
    CountSequence,
    Interval,
    LSPartition,
    counts,
    left_endpoints,
    partition_at,
    refine,
)
from .quadfield import (
    LSParams,
    QuadNum,
    SqrtNum,
    gamma_power,
    make_params,
    to_sqrt_form,
)
from .sequence import (
    DigitVector,
    PointList1D,
    admissible_indices,
    is_admissible,
    phi,
    sequence_prefix,
)
from .square import (
    PointList2D,
    ResonanceResult,
    detect_resonance,
    halton_pair,
    vdc_set,
)

__version__ = "0.1.0"

__all__ = [
    "BoxWitness", "CapExceededError", "CountSequence", "DigitVector",
    "DiscrepancyReport", "Interval", "LSParams", "LSPartition",
    "PointList1D", "PointList2D", "QuadNum", "ResonanceResult", "SqrtNum",
    "admissible_indices", "brute_force_1d", "brute_force_2d", "counts",
    "detect_resonance", "extreme_disc_1d", "gamma_power", "halton_pair",
    "is_admissible", "left_endpoints", "make_params", "partition_at",
    "phi", "random_boxes_max", "refine", "sequence_prefix", "star_disc_1d",
    "star_disc_2d", "to_sqrt_form", "vdc_set",
]
