"""Exception types shared across the package."""


class WreathIndError(Exception):
    """Base class for every error raised by wreathind."""


class PatternTooLarge(WreathIndError):
    """A partition pattern has no instance at the requested size."""


class EmptyPartition(WreathIndError):
    pass


class SizeMismatch(WreathIndError):
    pass


class NotACharacter(WreathIndError):
    """An inner product with an irreducible came out negative or fractional."""


class TooLarge(WreathIndError):
    """An enumeration was refused because it exceeds the configured cap."""

    def __init__(self, what, count, cap):
        self.count = count
        self.cap = cap
        super().__init__(f"{what}: {count} exceeds cap {cap}")


class OddRow(WreathIndError):
    pass


class NoSolution(WreathIndError):
    """The restricted target admits no nonnegative preimage with the trivial pin."""


class SolutionCapExceeded(WreathIndError):
    pass


class AmbiguousRecursion(WreathIndError):
    """The recursion produced more than one candidate decomposition.

    The partially adjudicated ``LevelResult`` is attached as ``result``.
    """

    def __init__(self, result):
        self.result = result
        super().__init__(
            f"{result.family.kind}_{{{result.family.m},{result.n}}}: recursion is ambiguous "
            f"at levels {sorted(k for k, u in result.step_uniqueness.items() if u == 'ambiguous')}"
        )
