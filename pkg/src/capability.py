# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Guards for operations that need an enumerable carrier."""

import functools

from constants.errors import EXHAUSTIVE_ON_INFINITE, NEEDS_FINITE
from exceptions import CapabilityError


def requires_finite(func):
    """Wrap the method to run only when both carriers of self.instance are finite."""

    @functools.wraps(func)
    def wrapper(self, *args, **kwargs):
        if not self.instance.finite:
            raise CapabilityError(NEEDS_FINITE.format(operation=func.__name__, instance=self.instance.instance_id))
        return func(self, *args, **kwargs)

    return wrapper


def requires_enumeration(func):
    """Wrap the method to refuse an exhaustive self.strategy on an infinite self.instance."""

    @functools.wraps(func)
    def wrapper(self, *args, **kwargs):
        if self.strategy.exhaustive and not self.instance.finite:
            raise CapabilityError(EXHAUSTIVE_ON_INFINITE.format(instance=self.instance.instance_id))
        return func(self, *args, **kwargs)

    return wrapper
