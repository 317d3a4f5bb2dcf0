"""Exception hierarchy shared by every module of the package."""


class SmallQuotError(Exception):
    """Base class for all errors raised by smallquot."""


class CarrierMismatchError(SmallQuotError, TypeError):
    """Two group elements cannot be combined (different carrier or size)."""


class NotInGroupError(SmallQuotError, ValueError):
    """An element (or set of elements) does not lie in the given group."""


class CeilingExceededError(SmallQuotError, RuntimeError):
    """A closure grew past the configured element-count ceiling."""

    def __init__(self, ceiling):
        self.ceiling = ceiling
        super().__init__(f"closure exceeded the element-count ceiling of {ceiling}")


class TrivialGroupError(SmallQuotError, ValueError):
    pass


class DomainError(SmallQuotError, ValueError):
    """A parameter lies outside the supported range of an operation."""


class BraidWordError(SmallQuotError, ValueError):
    pass


class ConventionError(SmallQuotError, RuntimeError):
    """A relation that must hold under the chosen conventions failed."""


class InvalidHomomorphismError(SmallQuotError, ValueError):
    pass


class CatalogError(SmallQuotError, ValueError):
    """Malformed catalog input. ``line`` is 1-based when known."""

    def __init__(self, message, line=None, entry=None):
        self.line = line
        self.entry = entry
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
