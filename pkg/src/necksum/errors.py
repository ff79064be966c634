"""Exception types raised by the library.

Plain ``ValueError`` is used for malformed parameters (``k > n`` and the
like).  Everything below derives from :class:`DomainError` and carries a
stable ``code`` that the command line reports verbatim.
"""


class DomainError(Exception):
    code = "DOMAIN_ERROR"

    def __str__(self):
        msg = super().__str__()
        return f"{self.code}: {msg}" if msg else self.code


class NonExactDivision(DomainError, ArithmeticError):
    code = "NON_EXACT_DIVISION"


class NotCoprime(DomainError):
    code = "NOT_COPRIME"


class SearchExhausted(DomainError):
    code = "SEARCH_EXHAUSTED"


class ZNotCoprime(DomainError):
    code = "Z_NOT_COPRIME"


class NotCyclic(DomainError):
    code = "NOT_CYCLIC"


class ShapeViolation(DomainError):
    code = "SHAPE_VIOLATION"


class UnexpectedCoperiod(DomainError):
    code = "UNEXPECTED_COPERIOD"


class NotInDomain(DomainError):
    code = "NOT_IN_DOMAIN"


class AmbiguousAnchor(DomainError):
    code = "AMBIGUOUS_ANCHOR"


class GcdNotOne(DomainError):
    code = "GCD_NOT_ONE"
