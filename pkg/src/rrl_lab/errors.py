"""Exception hierarchy shared by all modules."""


class RrlLabError(Exception):
    """Base class for all library errors."""


class ValidationError(RrlLabError):
    """Bad input detected before any computation started."""


class PoleCollision(RrlLabError):
    """Evaluation point fell inside the exclusion radius of a pole."""


class NonConvergent(RrlLabError):
    """A limit trace still oscillates at the finest sampled radius."""


class DuplicatePole(RrlLabError):
    """Two constructed poles coincide on the circle."""


class DuplicateRoot(RrlLabError):
    """A root set meant to be distinct contains a repeated point."""


class NotARoot(RrlLabError):
    """The designated point is not a member of the root set."""


class ResonantGamma(RrlLabError):
    """Rotation offset lies (numerically) on the orbit lattice Z + theta*Z."""


class CapExceeded(RrlLabError):
    """A bounded search ran past its configured cap without a certificate."""


class InsufficientDepth(RrlLabError):
    """A sign change lies in the zone where the truncation tail bound explodes."""


class EvalFailure(RrlLabError):
    """A user-supplied evaluator raised while being probed."""
