"""Exception hierarchy shared by every tricirc module."""

from __future__ import annotations


class TricircError(Exception):
    """Base class for all library errors."""


# -- embeddings --------------------------------------------------------------


class InconsistentRotation(TricircError, ValueError):
    """Neighbor lists are asymmetric, contain loops, or repeat a neighbor."""


class NotPlanarGenus(TricircError, ValueError):
    """Traced faces violate Euler's relation n - m + f = 2."""


class Disconnected(TricircError, ValueError):
    pass


class NotIndependent(TricircError, ValueError):
    pass


class WrongDegree(TricircError, ValueError):
    pass


class NotAFace(TricircError, ValueError):
    pass


class RotFormatError(TricircError, ValueError):
    """Malformed text in the ``rot`` interchange format."""


# -- connectivity / generators -------------------------------------------------


class NotThreeConnected(TricircError, ValueError):
    pass


class NotFourConnected(TricircError, ValueError):
    pass


class TooSmall(TricircError, ValueError):
    pass


class Unsatisfiable(TricircError, RuntimeError):
    """A rejection sampler exhausted its retry budget."""


# -- cycles ------------------------------------------------------------------


class Acyclic(TricircError, ValueError):
    pass


class NotACycle(TricircError, ValueError):
    pass


class NotExtendable(TricircError, ValueError):
    pass


class NoGoodCycle(TricircError, RuntimeError):
    """No good cycle exists; for admissible inputs this would refute the lemma."""


class ConfigMismatch(TricircError, ValueError):
    """A rerouting move was requested but a required edge is missing."""


class Timeout(TricircError, TimeoutError):
    """An exact search ran past its time budget."""


# -- discharging ----------------------------------------------------------------


class PreconditionFailed(TricircError, ValueError):
    pass


class ChordConflict(TricircError, RuntimeError):
    pass


class ThreeFaceFound(TricircError, RuntimeError):
    pass


class Claim1Violation(TricircError, RuntimeError):
    pass


class NoZeroFace(TricircError, ValueError):
    pass


class RimNotPath(TricircError, RuntimeError):
    pass


class RuleAmbiguity(TricircError, RuntimeError):
    pass


class Claim5Violation(TricircError, RuntimeError):
    pass


class Claim6Violation(TricircError, RuntimeError):
    pass
