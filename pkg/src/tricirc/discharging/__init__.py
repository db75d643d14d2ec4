"""Side partition, branches, discharging rules and the per-instance verifier."""

from .sides import Branch, SidePartition, branches, build_side_partition, classify
from .verify import VerificationReport, lower_bound, verify_bound, verify_cycle
from .weights import WeightLedger, distribute_points, redistribute_first, redistribute_second

__all__ = [
    "Branch",
    "SidePartition",
    "VerificationReport",
    "WeightLedger",
    "branches",
    "build_side_partition",
    "classify",
    "distribute_points",
    "lower_bound",
    "redistribute_first",
    "redistribute_second",
    "verify_bound",
    "verify_cycle",
]
