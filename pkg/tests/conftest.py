"""Shared corpus of substitutions used across the test modules.

Most keys spell out the rule images joined by underscores (letters a, b, c,
... in order); a few carry their common names.
"""

import pytest

from subnum import Substitution, is_prolongable

CORPUS: dict[str, Substitution] = {
    "fibonacci": Substitution({"a": "ab", "b": "a"}, "a"),
    # unary-like system: U_i = i + 1
    "ab_b": Substitution({"a": "ab", "b": "b"}, "a"),
    # no fixed point: the initial image does not start with the initial letter
    "ba_cb_b": Substitution({"a": "ba", "b": "cb", "c": "b"}, "a"),
    "ab_cb_b": Substitution({"a": "ab", "b": "cb", "c": "b"}, "a"),
    # greedy and automatic expansions disagree here (41 -> 2021 vs 2100)
    "aab_c_aac": Substitution({"a": "aab", "b": "c", "c": "aac"}, "a"),
    "ab_ac_b": Substitution({"a": "ab", "b": "ac", "c": "b"}, "a"),
    "ab_ac_a": Substitution({"a": "ab", "b": "ac", "c": "a"}, "a"),
    "ab_ac_c": Substitution({"a": "ab", "b": "ac", "c": "c"}, "a"),
    "ab_c_a": Substitution({"a": "ab", "b": "c", "c": "a"}, "a"),
    "ab_ac_ad_c": Substitution({"a": "ab", "b": "ac", "c": "ad", "d": "c"}, "a"),
    "aab_aac_a": Substitution({"a": "aab", "b": "aac", "c": "a"}, "a"),
    # expansion of 5 crashes in this system
    "ab_ca_a": Substitution({"a": "ab", "b": "ca", "c": "a"}, "a"),
    "thue_morse": Substitution({"a": "ab", "b": "ba"}, "a"),
    # the reversal walkthrough automaton
    "ab_c_cc": Substitution({"a": "ab", "b": "c", "c": "cc"}, "a"),
    # product pair whose combination is hard to classify by eye
    "ab_ac_cc": Substitution({"a": "ab", "b": "ac", "c": "cc"}, "a"),
    "ab_c_ac": Substitution({"a": "ab", "b": "c", "c": "ac"}, "a"),
    # order-4 recurrence example
    "ab_aac_d_ac": Substitution({"a": "ab", "b": "aac", "c": "d", "d": "ac"}, "a"),
    "base2": Substitution({"a": "aa"}, "a"),
    "identity": Substitution({"a": "a"}, "a"),
    # 3-uniform, for the k-automaton laws
    "aab_abb": Substitution({"a": "aab", "b": "abb"}, "a"),
}

PROLONGABLE = {name: sub for name, sub in CORPUS.items() if is_prolongable(sub)}

# The substitutions whose rule shapes put them in the sigma0 class.
SIGMA0_SURVEY = [
    "fibonacci",
    "ab_b",
    "aab_c_aac",
    "ab_ac_b",
    "ab_ac_a",
    "ab_ac_c",
    "ab_c_a",
    "ab_ac_ad_c",
    "aab_aac_a",
]


@pytest.fixture
def fibonacci():
    return CORPUS["fibonacci"]
