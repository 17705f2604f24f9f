"""Substitution systems, their automata, and the numeration systems they generate."""

from .analysis import (
    check_digitwise_sum,
    check_full_condition,
    check_numeration_automatic,
    digitwise_sum_case,
    is_sigma0_form,
    sigma0_chain,
)
from .core import (
    EPSILON,
    Automaton,
    IncidenceMatrix,
    ParseError,
    Substitution,
    apply,
    fixed_point_prefix,
    format_substitution,
    growth_is_strict,
    incidence_matrix,
    is_prolongable,
    is_valid_letter,
    k_max,
    n_word,
    parse_substitution,
    to_automaton,
    word_lengths,
)
from .language import (
    CRASH,
    Crash,
    accepts,
    check_tree_correspondence,
    enumerate_words,
    format_digit_word,
    level_states,
    parse_digit_word,
    run,
    words_of_length,
)
from .numeration import (
    Expansion,
    Leftover,
    NumerationSystem,
    Recurrence,
    automatic_expansion,
    greedy_expansion,
    numeration_system,
    recurrence_from_substitution,
    value_of,
    verify_recurrence,
)
from .report import AnalysisReport
from .transform import (
    automaton_to_substitution,
    format_vector,
    product,
    project,
    reverse,
    to_dot,
)

__all__ = [
    "AnalysisReport",
    "Automaton",
    "CRASH",
    "Crash",
    "EPSILON",
    "Expansion",
    "IncidenceMatrix",
    "Leftover",
    "NumerationSystem",
    "ParseError",
    "Recurrence",
    "Substitution",
    "accepts",
    "apply",
    "automatic_expansion",
    "automaton_to_substitution",
    "check_digitwise_sum",
    "check_full_condition",
    "check_numeration_automatic",
    "check_tree_correspondence",
    "digitwise_sum_case",
    "enumerate_words",
    "fixed_point_prefix",
    "format_digit_word",
    "format_substitution",
    "format_vector",
    "greedy_expansion",
    "growth_is_strict",
    "incidence_matrix",
    "is_prolongable",
    "is_sigma0_form",
    "is_valid_letter",
    "k_max",
    "level_states",
    "n_word",
    "numeration_system",
    "parse_digit_word",
    "parse_substitution",
    "product",
    "project",
    "recurrence_from_substitution",
    "reverse",
    "run",
    "sigma0_chain",
    "to_automaton",
    "to_dot",
    "value_of",
    "verify_recurrence",
    "word_lengths",
    "words_of_length",
]
