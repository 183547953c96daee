"""Exception hierarchy shared by every module of the package."""


class NRTError(Exception):
    """Base class for all errors raised by nrtloops."""


class GroupError(NRTError, ValueError):
    """A multiplication table or generator set does not describe a group."""


class NoIdentityAtZero(GroupError):
    pass


class NotLatinSquare(GroupError):
    pass


class MissingInverse(GroupError):
    pass


class NotAssociative(GroupError):
    pass


class NotAPermutation(GroupError):
    pass


class ClosureTooLarge(NRTError):
    pass


class UnknownFamily(NRTError, ValueError):
    pass


class ParameterOutOfRange(NRTError, ValueError):
    pass


class GroupTooLarge(NRTError):
    pass


class EnumerationTooLarge(NRTError):
    pass


class SubgroupIsNormal(NRTError):
    pass


class SubgroupNotNormal(NRTError):
    pass


class ParseError(NRTError, ValueError):
    pass
