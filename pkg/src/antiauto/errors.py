"""Exception types raised by the library."""


class AntiautoError(Exception):
    """Base class for all library errors."""


class EmptyModuli(AntiautoError, ValueError):
    """A group needs at least one cyclic factor."""


class ModulusTooSmall(AntiautoError, ValueError):
    """Cyclic factor moduli must be at least 2."""


class DimensionMismatch(AntiautoError, ValueError):
    """Element or map does not match the group's factor count."""


class IndexOutOfRange(AntiautoError, IndexError):
    """Element index outside [0, order)."""


class NonHomogeneousGroup(AntiautoError, ValueError):
    """Matrix semantics require all cyclic factors to share one modulus."""


class NotCyclic(AntiautoError, ValueError):
    """Operation defined only for groups with a single cyclic factor."""


class NotIrreducible(AntiautoError, ValueError):
    """Polynomial is reducible over Z2."""


class NotBijective(AntiautoError, ValueError):
    """Operation requires a bijective table map."""


class RankTooSmall(AntiautoError, ValueError):
    """Elementary 2-group constructions need rank at least 2."""


class NotOdd(AntiautoError, ValueError):
    """Operation defined only for odd moduli."""


class EvenInput(AntiautoError, ValueError):
    """Formula defined only for odd integers."""


class NotPrime(AntiautoError, ValueError):
    """Argument must be an odd prime."""


class BudgetExceeded(AntiautoError, RuntimeError):
    """Group order exceeds the configured search or enumeration budget."""


class UnknownProposition(AntiautoError, ValueError):
    """Verification id not in the supported check set."""


class MethodInapplicable(AntiautoError, ValueError):
    """Requested construction method does not apply to the given group."""


class ParseError(AntiautoError, ValueError):
    """Malformed group, element, polynomial or map spec string."""


class ConstructionFailed(AntiautoError, RuntimeError):
    """A factory produced a witness that failed its own verification."""
