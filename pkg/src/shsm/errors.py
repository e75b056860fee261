"""Exceptions raised for bad inputs."""


class InputError(ValueError):
    """Base class for problems with user-supplied images or files."""


class DecodeError(InputError):
    """The file could not be read or is not a supported image format."""


class ImageTooSmallError(InputError):
    """The image cannot hold a single analysis window."""


class DimensionMismatchError(InputError):
    """Two planes or images that must be aligned have different shapes."""
