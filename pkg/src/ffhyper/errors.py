"""Exception hierarchy shared by all ffhyper modules."""


class FFHyperError(Exception):
    """Base class for every error raised by this package."""


class NotAPrimePower(FFHyperError, ValueError):
    pass


class LimitExceeded(FFHyperError, ValueError):
    pass


class DivisionByZero(FFHyperError, ZeroDivisionError):
    pass


class DlogOfZero(FFHyperError, ValueError):
    pass


class OrderMismatch(FFHyperError, ValueError):
    pass


class ArityMismatch(FFHyperError, ValueError):
    pass


class DomainRestriction(FFHyperError, ValueError):
    """Raised when an evaluator is called outside its theorem's hypotheses."""


class UnknownIdentity(FFHyperError, KeyError):
    pass


class EmptyDomain(FFHyperError, ValueError):
    pass


class CacheError(FFHyperError):
    """A table cache file is missing fields or fails invariant checks."""


class IndexOutOfRange(FFHyperError, IndexError):
    pass
