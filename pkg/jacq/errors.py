class JacqError(Exception):
    pass


class NotRational(JacqError):
    """An expression expected to be rational kept a nonzero omega part."""


class UnknownIdentity(JacqError):
    pass


class DomainError(JacqError):
    """The arguments lie outside the domain where a formula is stated."""


class NegativeIndexUnsupported(DomainError):
    pass


class DegenerateModulus(DomainError):
    """r is a multiple of 3, so delta_r = 0 and the formula divides by zero."""


class BenchDisagreement(JacqError):
    pass
