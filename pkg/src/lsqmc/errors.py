"""Exceptions shared across the package."""


class CapExceededError(RuntimeError):
    """Raised when a computation would exceed a configured resource cap."""
