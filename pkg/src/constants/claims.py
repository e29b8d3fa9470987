# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Claim id vocabulary, in canonical run order."""

CLAIM_DESCRIPTIONS = {
    "structure": "ring and module laws of the carriers",
    "def2.1.i": "R_0 = R",
    "def2.1.ii": "R_{n+1} is an additive subgroup contained in R_n",
    "def2.1.iii": "R_n R_m is contained in R_{n+m}",
    "def2.3.i": "M_0 = M",
    "def2.3.ii": "M_{n+1} is an additive subgroup contained in M_n",
    "def2.3.iii": "R_n M_m is contained in M_{n+m}",
    "def2.2": "ring filtration is strong: R_n R_m generates R_{n+m}",
    "def2.4": "module filtration is strong: R_n M_m generates M_{n+m}",
    "lemma3.1": "derived nu is well defined and cache transparent",
    "def2.5.i": "nu(x+y) >= min(nu(x), nu(y))",
    "def2.5.ii": "nu(x) <= nu(y) implies nu(ax) <= nu(ay)",
    "def2.5.iii": "nu(az) <= nu(bz) for a non-core z implies nu(ax) <= nu(bx)",
    "def2.5.iv": "every a outside the core colon has an a' with nu(a'ax) = nu(x)",
    "def2.5.onto": "the image of nu is not {inf}",
    "prop2.1.i": "nu(x) = nu(y) implies nu(ax) = nu(ay)",
    "prop2.1.ii": "nu(-x) = nu(x)",
    "prop2.1.iii": "nu(x) != nu(y) implies nu(x+y) = min(nu(x), nu(y))",
    "prop2.1.iv": "nu(az) = nu(bz) for a non-core z implies nu(ax) = nu(bx)",
    "prop2.1.v": "nu(az) < nu(bz) for some z implies nu(ax) < nu(bx) off the core",
    "prop2.1.vi": "the core is a prime submodule",
    "prop2.1.vii": "(A_nu, P_nu) is a valuation pair",
    "cor3.1": "valuation axioms i-iv imply the derived properties i-v",
    "prop3.1": "a strong filtration carrying a valuation is trivial",
    "def2.6": "the equivalence used for skeletons is an equivalence relation",
    "def2.7": "skeleton representatives are nu-independent",
    "prop3.3.i": "the skeleton is nu-independent",
    "prop3.3.ii": "every non-core x matches exactly one representative",
    "prop3.4": "vanishing combinations of representatives have core-colon coefficients",
}

CLAIMS = tuple(CLAIM_DESCRIPTIONS)

ALL_CLAIMS = "all"

AXIOM_CLAIMS = ("def2.5.i", "def2.5.ii", "def2.5.iii", "def2.5.iv")
DERIVED_CLAIMS = ("prop2.1.i", "prop2.1.ii", "prop2.1.iii", "prop2.1.iv", "prop2.1.v")
TRIVIALITY_HYPOTHESES = ("def2.2", "def2.4", "def2.5.onto") + AXIOM_CLAIMS
