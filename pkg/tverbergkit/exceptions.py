class TverbergKitError(Exception):
    """Base class for exceptions from within this package"""


class InvalidComplex(TverbergKitError):
    """Raised if a chain complex's boundary of a boundary is not zero, or a complex is malformed"""


class SizeExceeded(TverbergKitError):
    """Raised if an exhaustive computation would exceed its declared bound"""


class NotFree(TverbergKitError):
    """Raised if a group action fixes a vertex"""


class NotRegular(TverbergKitError):
    """Raised if a quotient is not faithful even after one barycentric subdivision"""


class InvalidCollapse(TverbergKitError):
    """Raised if a collapse trace does not replay on a complex"""


class NotACycle(TverbergKitError):
    """Raised if a chain has a nonzero boundary"""


class NotAGenerator(TverbergKitError):
    """Raised if a cycle does not generate an infinite cyclic homology group"""


class NoIntegerSolution(TverbergKitError):
    """Raised if a pushed-forward cycle is not an integer multiple of the target generator, up to boundaries"""


class NotSimplicial(NoIntegerSolution):
    """Raised if a vertex map sends a face of the source outside the target complex"""


class EmptyComplex(TverbergKitError):
    """Raised if an operation requires a nonempty complex"""


class BadArity(TverbergKitError):
    """Raised if a point configuration or value list has the wrong number of entries"""


class OverlappingParts(TverbergKitError):
    """Raised if the parts of a proposed partition are not pairwise disjoint and nonempty"""


class InconsistentConstraints(TverbergKitError):
    """Raised if search constraints contradict each other"""


class InvalidConfiguration(TverbergKitError):
    """Raised if a point configuration or coloring violates its invariants"""


class MalformedInput(TverbergKitError):
    """Raised if an input file can't be parsed"""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = 'line {}: {}'.format(lineno, message)
        super().__init__(message)


class NotPrime(TverbergKitError):
    """Raised if a modulus for field coefficients is not a prime"""
