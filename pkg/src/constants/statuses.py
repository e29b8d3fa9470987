# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Report note constants."""

ADOPTED_RELATION = "relation: adopted-convention"
ADOPTED_PAIR = "pair condition: adopted-convention"
DEGENERATE = "degenerate"
VACUOUS = "vacuous: hypothesis {claim} is {verdict}"
HYPOTHESIS_INCONCLUSIVE = "hypothesis {claim} is INCONCLUSIVE"
FILTRATION_TRIVIAL = "filtration trivial"
IMAGE = "image = {image}"
LEVELS_CHECKED = "levels checked up to {bound}"
SAMPLED_TRIPLES = "sampled {taken} of {total} triples"
NO_UNIT_FOUND = "no a' found for a = {element} within budget"
NO_GENERATORS = "no generator description for levels beyond the sample"
CLOSED_FORM_AGREES = "closed form agrees on {count} samples"
TAINTED = "depends on a capped infinite value"
CONCLUSION_INCONCLUSIVE = "conclusion {claim} is INCONCLUSIVE"
INEXACT_COLON = "colon ideal is a bounded search"
EMPTY_SKELETON = "degenerate: every element has infinite value, the skeleton is empty"
PARTITION_BY_COMPONENTS = "relation not transitive on the sample, classes are connected components"
