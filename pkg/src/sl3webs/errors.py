"""Exception types shared across the package."""


class SingularMatrix(ValueError):
    """Raised when a matrix that must be invertible over K has zero determinant."""


class RankDeficient(ValueError):
    """Raised when generators fail to span a full-rank lattice."""


class PreconditionViolated(ValueError):
    """Raised when an operation's documented input contract does not hold."""


class NotAPath(ValueError):
    """Raised when consecutive vertices of a claimed path are not adjacent."""


class InvalidChain(ValueError):
    """Raised when a sequence of partitions is not a chain of vertical strips."""


class LocalRuleViolation(ValueError):
    """Raised when growth-diagram completion contradicts a prescribed entry."""


class NotAPartitionAfterSort(ValueError):
    """Raised when the growth local rule produces a non-partition triple."""


class NotVerticalStrip(ValueError):
    """Raised when two partitions do not differ by a vertical strip."""


class MalformedDiskoid(ValueError):
    """Raised when triangle, edge, and boundary data are inconsistent."""


class NoDoubleElbow(ValueError):
    """Raised when a diagram without U-turns or sharp corners has no elbow pair."""


class RealizationFailed(RuntimeError):
    """Raised when polygon realization exhausts its retry budget."""
