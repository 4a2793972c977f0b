"""Exception hierarchy shared by every module."""


class Nambu3Error(Exception):
    """Base class for all library errors."""


class ShapeError(Nambu3Error, ValueError):
    pass


class DomainError(Nambu3Error, ValueError):
    """An operation was applied outside its domain (e.g. a non-cubic matrix)."""


class LabelError(Nambu3Error, IndexError):
    """A 1-based label or index lies outside the matrix extent."""


class ArityError(Nambu3Error, ValueError):
    pass


class HomogeneityError(Nambu3Error, ValueError):
    """A graded operation received an inhomogeneous argument."""


class UnsupportedError(Nambu3Error, NotImplementedError):
    pass


class ConfigError(Nambu3Error, ValueError):
    pass


class InputError(Nambu3Error, ValueError):
    """A file or JSON document could not be parsed into a library value."""
