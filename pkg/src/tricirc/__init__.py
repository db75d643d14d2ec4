"""Circumference of essentially 4-connected planar triangulations."""

from .cycles import GoodCycle, circumference, longest_good_cycle
from .discharging import VerificationReport, verify_bound
from .embedding import Embedding, Triangulation, from_rotation, read_rot, write_rot
from .generators import (
    double_wheel,
    extremal_expand,
    random_4connected_triangulation,
    random_essentially_4connected_triangulation,
)

__version__ = "0.1.0"

__all__ = [
    "Embedding",
    "GoodCycle",
    "Triangulation",
    "VerificationReport",
    "circumference",
    "double_wheel",
    "extremal_expand",
    "from_rotation",
    "longest_good_cycle",
    "random_4connected_triangulation",
    "random_essentially_4connected_triangulation",
    "read_rot",
    "verify_bound",
    "write_rot",
]
