"""Discrete chaotic iterations, their chaos witnesses, and a hash built on them."""

from cihash.core import (
    IDENTITY,
    NEGATION,
    BitState,
    ChaoticIterationError,
    IterationFunction,
    Strategy,
    SystemPoint,
    apply_ff,
    initial,
    iterate,
    shift,
    step_gf,
)
from cihash.hashing import Digest, digest, hexdigest

__all__ = [
    "BitState", "Strategy", "SystemPoint", "IterationFunction", "ChaoticIterationError",
    "NEGATION", "IDENTITY", "shift", "initial", "apply_ff", "step_gf", "iterate",
    "Digest", "digest", "hexdigest",
]
__version__ = "0.1.0"
