# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.
"""Errors constants."""
EXHAUSTIVE_ON_INFINITE = "Error: exhaustive strategy requested on infinite instance {instance}"
NEEDS_FINITE = "Error: {operation} needs a finite carrier, {instance} is infinite"
FOREIGN_ELEMENT = "Error: element of {owner} handed to {instance}"
INFINITE_ELEMENT = "Error: {element} has infinite value"
NOT_PRIME = "Error: {value} is not prime"
BAD_EXPONENT = "Error: {name} must be at least {minimum}, got {value}"
UNKNOWN_KIND = "Error: unknown instance kind {kind}"
UNKNOWN_INSTANCE = "Error: unknown catalog instance {instance}"
UNKNOWN_BASE = "Error: trivial_strong base must be zmod(m) with m >= 1 or int, got {base}"
WRONG_TYPE = "Error: parameter {name} of {kind} must be {expected}, got {value!r}"
UNKNOWN_CLAIM = "Error: unknown claim id {claim}"
UNPARSABLE = "Error: cannot parse {text!r} as an element of {carrier}"
INEXACT_ORBITS = "Error: value orbits on {instance} are not exact, cannot partition"
NO_CLOSED_FORM = "Error: {operation} on infinite instance {instance} needs a closed form"
CONFIG_FIELD = "Error: invalid config field {field}: {message}"
CONFIG_FILE = "Error: cannot read config file {path}: {message}"
MISSING_PARAMETER = "Error: missing parameter {name} for {kind}"
GOLDEN_MISMATCH = "Error: report differs from golden {path}"
GOLDEN_FILE = "Error: cannot read golden report {path}: {message}"
OUTPUT_FILE = "Error: cannot write report {path}: {message}"
