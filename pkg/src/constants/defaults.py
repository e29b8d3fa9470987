# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Default values and limits."""

SCHEMA_VERSION = 1

DEFAULT_SEED = 0
DEFAULT_SAMPLES = 1000
DEFAULT_LEVEL_BOUND = 16
DEFAULT_N_MAX = 2
MAX_N_MAX = 3

# Exhaustive level scans run to stabilization depth plus this margin.
LEVEL_MARGIN = 2

# Above this many triples a structure law group is sampled instead of enumerated.
STRUCTURE_TRIPLE_BUDGET = 200_000

# Upward membership scan limit when the instance proves the intersection of levels is {0}.
SCAN_LIMIT = 4096

INSTANCE_KINDS = (
    "zmod_padic",
    "poly_truncated",
    "int_padic",
    "field_trivial_tail",
    "trivial_strong",
    "direct_sum",
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_ERROR = 2
