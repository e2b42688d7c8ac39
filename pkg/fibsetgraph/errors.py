"""
Exception hierarchy shared by the library and the command-line front end
"""

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CAPACITY = 2
EXIT_UNKNOWN = 3
EXIT_IO = 4
EXIT_DEVIATION = 5


class FibSetGraphError(Exception):
    """Root of every error raised by fibsetgraph"""

    exit_code = EXIT_USAGE


class DomainError(FibSetGraphError, ValueError):
    """An argument lies outside the operation's domain"""


class BoundError(DomainError):
    """A sum exceeds the largest value a SumSequence can certify"""


class CapacityError(FibSetGraphError):
    """Materializing the requested graph would exceed the configured cap"""

    exit_code = EXIT_CAPACITY


class ConsistencyError(FibSetGraphError, RuntimeError):
    """Two independent computations of the same quantity disagree"""


class ConfigError(FibSetGraphError, ValueError):
    """A configuration value could not be parsed"""
