"""Exact solving and 3SAT(3) reduction gadgets for collision-free string partitioning."""
from .strcore import (
    Alphabet,
    CollisionKind,
    Instance,
    Partition,
    VerifyReport,
    collides,
    mirror_instance,
    pieces_of,
    substr_closure,
    verify_partition,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet", "CollisionKind", "Instance", "Partition", "VerifyReport",
    "collides", "mirror_instance", "pieces_of", "substr_closure", "verify_partition",
]
