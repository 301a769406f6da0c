"""
Exception hierarchy and error-handling decorators for clique-powers.
"""

from collections.abc import Callable
from functools import wraps
from typing import Any, TypeVar

from loguru import logger

F = TypeVar("F", bound=Callable[..., Any])


class CliquePowersError(Exception):
    """Base class for clique-powers errors."""


class InputError(CliquePowersError, ValueError):
    """Invalid parameters, out-of-range vertices or malformed input files."""


class PreconditionError(CliquePowersError):
    """A theorem hypothesis does not hold for the requested instance."""


class ResourceLimitError(CliquePowersError):
    """A construction would exceed a configured size ceiling."""

    def __init__(self, what: str, size: int, limit: int):
        self.what = what
        self.size = size
        self.limit = limit
        super().__init__(f"{what}: size {size} exceeds limit {limit}")


class InvalidMatchingError(CliquePowersError):
    """A face matching is not an acyclic matching on its host complex."""


class SubcomplexError(CliquePowersError):
    """A complex expected to be a subcomplex is not one."""


def handle_errors(func: F) -> F:
    """Декоратор для централизованной обработки ошибок."""

    @wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except CliquePowersError as e:
            logger.error(f"clique-powers error in {func.__name__}: {e}")
            raise
        except Exception as e:
            logger.error(f"Unexpected error in {func.__name__}: {e}")
            raise CliquePowersError(f"Unexpected error in {func.__name__}: {e}") from e

    return wrapper  # type: ignore[return-value]
