"""Exception hierarchy shared by all modules."""


class SemimagicError(Exception):
    pass


class DomainError(SemimagicError, ValueError):
    """An argument lies outside the domain of an operation."""


class NotInvertibleError(DomainError, ArithmeticError):
    pass


class ParameterError(SemimagicError, ValueError):
    """Step parameters violate a hypothesis of the construction."""


class GroupError(SemimagicError):
    """The backing group cannot supply the required torsion structure."""


class CharacteristicError(GroupError, ValueError):
    pass


class TorsionError(GroupError):
    pass


class ResourceError(SemimagicError):
    """A computation would exceed a configured size limit."""
