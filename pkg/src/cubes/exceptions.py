"""
Exception hierarchy shared by every cubegraph module

Domain errors exit with code 1 from the command line, resource and
infeasibility errors with code 2.
"""


class CubeError(ValueError):
    """Base class for all library errors"""
    exit_code = 1


# Domain errors

class ParseError(CubeError):
    """Malformed subcube text or family file"""

    def __init__(self, message: str, position: int = None):
        self.position = position
        if position is not None:
            message = f"{message} (position {position})"
        super().__init__(message)


class DimensionError(CubeError):
    """Operands of different widths"""


class PreconditionError(CubeError):
    """Operation called outside its precondition"""


class DegenerateBaseError(CubeError):
    """Projection onto a subcube with no free coordinates"""


class DomainError(CubeError):
    """Parameter outside its mathematical domain"""


class InvalidWitnessError(CubeError):
    """A Ramsey witness graph fails its own clique/independence check"""


class UnsupportedOrderError(CubeError):
    """Latin square order that the cyclic construction cannot handle"""


class TooManySquaresError(CubeError):
    """More mutually orthogonal Latin squares requested than exist"""


# Resource and infeasibility errors

class InfeasibleError(CubeError):
    """No object with the requested parameters exists"""
    exit_code = 2


class SizeLimitError(CubeError):
    """Enumeration would exceed the configured cap"""
    exit_code = 2


class ResourceLimitError(CubeError):
    """Search parameters beyond the configured search cap"""
    exit_code = 2


class CheckpointMismatchError(CubeError):
    """Checkpoint written for a different search configuration"""
    exit_code = 2


class SearchInterrupted(CubeError):
    """Search stopped early; progress was saved to a checkpoint"""
    exit_code = 2

    def __init__(self, message: str, checkpoint_path: str = None):
        self.checkpoint_path = checkpoint_path
        super().__init__(message)
