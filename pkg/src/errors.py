# src/errors.py
from typing import Optional


class DubrovnikError(Exception):
    """Base class for every error raised by this package"""


class InputError(DubrovnikError, ValueError):
    """Invalid user input; `index` is the 1-based position of the offending entry"""

    def __init__(self, message: str, index: Optional[int] = None):
        super().__init__(message)
        self.index = index


class PolyParseError(InputError):
    """Malformed polynomial text; `position` is a 0-based character offset"""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class ResourceLimitError(DubrovnikError):
    pass


class WritheUndefinedError(DubrovnikError):
    pass


class EngineMismatchError(DubrovnikError):
    pass
