"""Exception hierarchy shared by all modules."""


class FPError(Exception):
    """Base class for every error raised by fpgroups."""


class ParseError(FPError, ValueError):
    """Malformed tree, diagram or word text."""


class DomainError(FPError, ValueError):
    """Argument outside the domain of an operation."""


class ArityError(DomainError):
    """A caret or diagram has the wrong number of children."""


class ArityMismatch(DomainError):
    """Two operands belong to groups F(p) with different p."""


class DivisibilityError(DomainError):
    """q - 1 is not a multiple of p - 1."""


class VariantMismatch(DomainError):
    """Unit-interval and real-line maps were mixed."""


class ResourceError(FPError):
    """An enumeration would exceed its configured state budget."""


class InternalError(FPError, RuntimeError):
    """An invariant that should always hold was violated."""
