# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Exceptions raised by the valuation checker."""

from typing import Optional


class ValuationError(Exception):
    """Base class for every error raised by the checker."""


class CapabilityError(ValuationError):
    """An operation needs a capability the instance does not have (usually a finite carrier)."""


class ForeignElementError(ValuationError):
    """An element was handed to an instance it does not belong to."""


class InfiniteElementError(ValuationError):
    """An element of infinite value was passed where a finite value is required."""


class BadParameterError(ValuationError):
    """An instance constructor received parameters outside its domain."""


class ElementParseError(ValuationError):
    """A canonical element string could not be parsed."""


class ConfigError(ValuationError):
    """A run configuration is malformed.

    Attrs:
        field: dotted path of the offending field, when known.
    """

    def __init__(self, message: str, field: Optional[str] = None):
        """Construct.

        Args:
            message: human readable diagnostic.
            field: dotted path of the offending field.
        """
        super().__init__(message)
        self.field = field
