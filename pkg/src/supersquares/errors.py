"""Exception types shared across the package."""


class InvalidArgument(ValueError):
    """An argument violates an operation's precondition."""


class NotABasis(InvalidArgument):
    """Two points are linearly dependent (zero determinant)."""


class DeterminantNotOne(InvalidArgument):
    """Two points form a basis but their determinant is not 1."""


class InvalidPartition(InvalidArgument):
    """Blocks do not partition M x M into D blocks of size D."""


class UnsupportedOrder(InvalidArgument):
    """The requested order is outside what an exhaustive routine handles."""
