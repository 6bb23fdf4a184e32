"""Exception types raised by the library."""


class Level0Error(ValueError):
    """Base class for all domain errors."""


class InputError(Level0Error):
    pass


class SelfDualityViolation(Level0Error):
    pass


class MultiplicityMismatch(Level0Error):
    pass


class NotApplicable(Level0Error):
    pass


class ConventionViolation(Level0Error):
    pass


class ParityError(Level0Error):
    pass


class SizeMismatch(Level0Error):
    pass


class ShapeError(Level0Error):
    pass


class CaseMismatch(Level0Error):
    pass


class NonIntegral(Level0Error):
    pass


class NotStable(Level0Error):
    pass


class Unsupported(Level0Error):
    pass
