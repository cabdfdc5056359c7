"""Exception types raised by the runtime half of the package.

The compiler half reports problems as Diagnostic values; the runtime raises
exceptions.  Each type subclasses the closest builtin so callers can catch
either the narrow class or the familiar one.
"""

from __future__ import annotations


class AdlError(Exception):
    """Base class for every error raised by this package."""


class ManifestError(AdlError, ValueError):
    """Malformed or unsupported reflection manifest document."""


class PayloadError(AdlError, ValueError):
    """Malformed, truncated, or unsupported payload bytes."""


class UnknownClassError(AdlError, KeyError):
    """Class name or ClassId not present in the registry."""

    def __str__(self) -> str:  # KeyError quotes its arg; keep the message readable
        return self.args[0] if self.args else ""


class NotInstantiableError(AdlError, TypeError):
    """Attempt to instantiate an opaque (extern) type."""


class UnknownFieldError(AdlError, KeyError):
    """Field path names no attribute or relationship of the class."""

    def __str__(self) -> str:
        return self.args[0] if self.args else ""


class FieldTypeError(AdlError, TypeError):
    """Assigned value does not match the declared attribute type."""


class FieldAccessError(AdlError, PermissionError):
    """Write to a private attribute without a privileged service."""


class StoreError(AdlError, ValueError):
    """Transient-store bookkeeping violation (duplicate or missing key)."""


class LinkError(AdlError, ValueError):
    """Relationship operation violates the declared model."""
