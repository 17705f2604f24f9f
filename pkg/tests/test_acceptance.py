"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines. Every assertion here is exact; nothing is tolerance-based.
"""

import itertools
from contextlib import contextmanager

from subnum import (
    CRASH,
    accepts,
    automatic_expansion,
    automaton_to_substitution,
    check_numeration_automatic,
    check_tree_correspondence,
    enumerate_words,
    fixed_point_prefix,
    greedy_expansion,
    incidence_matrix,
    is_sigma0_form,
    level_states,
    numeration_system,
    parse_digit_word,
    product,
    project,
    recurrence_from_substitution,
    reverse,
    run,
    to_automaton,
    value_of,
    verify_recurrence,
)
from conftest import CORPUS, PROLONGABLE, SIGMA0_SURVEY
from test_numeration import poly_apply


@contextmanager
def criterion(number, description):
    try:
        yield
    except Exception:
        print(f"criterion {number:02d} FAIL: {description}")
        raise
    else:
        print(f"criterion {number:02d} PASS: {description}")


def digit_words(text):
    return [parse_digit_word(w) for w in text.split()]


def test_criterion_01_fibonacci_fixed_point():
    with criterion(1, "Fibonacci fixed point prefix is exact"):
        expected = "abaababaabaababaababaabaababaabaababaababaabaababaaba"
        prefix = fixed_point_prefix(CORPUS["fibonacci"], 54)
        assert len(prefix) == 54
        assert prefix[: len(expected)] == expected
        assert fixed_point_prefix(CORPUS["fibonacci"], len(expected)) == expected


def test_criterion_02_fibonacci_language_listing():
    with criterion(2, "first 13 Fibonacci words in listing order are exact"):
        expected = [()] + digit_words(
            "0 1 10 100 101 1000 1001 1010 10000 10001 10010 10100"
        )
        aut = to_automaton(CORPUS["fibonacci"])
        assert enumerate_words(aut, 13, allow_leading_zeros=True) == expected


def test_criterion_03_zeckendorf_soundness():
    with criterion(3, "Fibonacci expansions below 10^4 are sound"):
        sub = CORPUS["fibonacci"]
        aut = to_automaton(sub)
        U = numeration_system(sub)
        fixed = fixed_point_prefix(sub, 10**4)
        for n in range(10**4):
            expansion = automatic_expansion(aut, U, n)
            assert expansion is not CRASH, n
            digits = expansion.digits
            assert value_of(U, digits) == n
            assert accepts(aut, digits)
            assert all(not (x == y == 1) for x, y in zip(digits, digits[1:]))
            assert run(aut, digits) == fixed[n]


def test_criterion_04_three_digit_system():
    with criterion(4, "1,3,7,17,... system: 41 -> 2021 automatic, 2100 greedy"):
        sub = CORPUS["aab_c_aac"]
        aut = to_automaton(sub)
        U = numeration_system(sub)
        assert U.terms(11) == [1, 3, 7, 17, 43, 109, 275, 693, 1747, 4405, 11107]
        assert automatic_expansion(aut, U, 41).digits == (2, 0, 2, 1)
        greedy = greedy_expansion(U, 41, 2)
        assert greedy.digits == (2, 1, 0, 0)
        assert not accepts(aut, greedy.digits)


def test_criterion_05_crashing_system():
    with criterion(5, "1,2,4,7,... system crashes at 5 and fails the survey there"):
        sub = CORPUS["ab_ca_a"]
        aut = to_automaton(sub)
        U = numeration_system(sub)
        assert U.terms(12) == [1, 2, 4, 7, 13, 24, 44, 81, 149, 274, 504, 927]
        assert automatic_expansion(aut, U, 5) is CRASH
        report = check_numeration_automatic(sub, 10)
        assert not report.passed
        assert report.first_counterexample[0] == 5


def test_criterion_06_recurrence_extraction():
    with criterion(6, "order-4 recurrence (1,3,-1,-1) with exact annihilation"):
        sub = CORPUS["ab_aac_d_ac"]
        rec = recurrence_from_substitution(sub)
        assert rec.coefficients == (1, 3, -1, -1)
        U = numeration_system(sub)
        assert U.terms(10) == [1, 2, 5, 10, 22, 45, 96, 199, 420, 876]
        assert verify_recurrence(U, rec, 40).passed
        rows = incidence_matrix(sub).rows
        size = len(rows)
        assert poly_apply(rows, rec.coefficients) == [[0] * size] * size


def test_criterion_07_products_and_projections():
    with criterion(7, "product wiring, renaming, and projections are exact"):
        fib = to_automaton(CORPUS["fibonacci"])
        tm = to_automaton(CORPUS["thue_morse"])
        prod = product(fib, tm)
        assert prod.states == ("a", "b", "c", "d")
        assert prod.successors == {
            "a": ("a", "b"),
            "b": ("c",),
            "c": ("c", "d"),
            "d": ("a",),
        }
        assert prod.origin == {
            "a": ("a", "a"),
            "b": ("b", "b"),
            "c": ("a", "b"),
            "d": ("b", "a"),
        }
        # The second coordinate yields the Thue-Morse construction carried
        # into this numeration system: the parity of the Zeckendorf digit
        # sum, checked against an independent greedy oracle. It follows the
        # classic Thue-Morse word only through n = 2, diverging at n = 3;
        # the first coordinate recovers the Fibonacci word exactly.
        language = enumerate_words(prod, 500, allow_leading_zeros=False)
        U = numeration_system(CORPUS["fibonacci"])
        zecks = [greedy_expansion(U, n, 1).digits for n in range(500)]
        assert language == zecks
        second = project(prod, 2)
        first = project(prod, 1)
        parity_word = "".join(
            "a" if sum(z) % 2 == 0 else "b" for z in zecks
        )
        fib_word = fixed_point_prefix(CORPUS["fibonacci"], 500)
        got_second = "".join(second.output[run(prod, w)] for w in language)
        assert got_second == parity_word
        assert "".join(first.output[run(prod, w)] for w in language) == fib_word
        tm_word = fixed_point_prefix(CORPUS["thue_morse"], 500)
        assert got_second[:3] == tm_word[:3] and got_second[3] != tm_word[3]

        seven = product(
            to_automaton(CORPUS["ab_ac_cc"]), to_automaton(CORPUS["ab_c_ac"])
        )
        seven_sub = automaton_to_substitution(seven)
        assert seven_sub.rules == {
            "a": "ab",
            "b": "c",
            "c": "ad",
            "d": "ae",
            "e": "fe",
            "f": "fg",
            "g": "e",
        }
        assert seven.origin == {
            "a": ("a", "a"),
            "b": ("b", "b"),
            "c": ("a", "c"),
            "d": ("b", "c"),
            "e": ("c", "c"),
            "f": ("c", "a"),
            "g": ("c", "b"),
        }
        # same counts written column-wise: entry [y][x] counts y in image(x)
        column_convention = [
            [1, 0, 1, 1, 0, 0, 0],
            [1, 0, 0, 0, 0, 0, 0],
            [0, 1, 0, 0, 0, 0, 0],
            [0, 0, 1, 0, 0, 0, 0],
            [0, 0, 0, 1, 1, 0, 1],
            [0, 0, 0, 0, 1, 1, 0],
            [0, 0, 0, 0, 0, 1, 0],
        ]
        ours = incidence_matrix(seven_sub).rows
        assert ours == tuple(
            tuple(column_convention[j][i] for j in range(7)) for i in range(7)
        )


def test_criterion_08_reversal():
    with criterion(8, "reversal: 8 states, expected vectors, mirror property"):
        source = to_automaton(CORPUS["ab_c_cc"])
        rev = reverse(source)
        assert len(rev.states) == 8
        start = rev.initial
        fs = frozenset
        assert rev.origin[start] == (fs("a"), fs("b"), fs("c"))
        assert rev.output[start] == "a"
        on_zero = rev.successors[start][0]
        on_one = rev.successors[start][1]
        assert rev.origin[on_zero] == (fs("a"), fs(), fs({"b", "c"}))
        assert rev.output[on_zero] == "a"
        assert rev.origin[on_one] == (fs(), fs("a"), fs("c"))
        assert rev.output[on_one] == "b"
        for name in ("ab_c_cc", "fibonacci"):
            aut = to_automaton(CORPUS[name])
            mirror = reverse(aut)
            base = aut.digit_count
            for length in range(13):
                for word in itertools.product(range(base), repeat=length):
                    direct = run(aut, word[::-1])
                    state = run(mirror, word)
                    if direct is CRASH:
                        assert mirror.output[state] == ""
                        assert not accepts(mirror, word)
                    else:
                        assert mirror.output[state] == direct
                        assert accepts(mirror, word)


def test_criterion_09_tree_correspondence():
    with criterion(9, "tree levels spell the iterates to depth 8 on the corpus"):
        for name, sub in CORPUS.items():
            assert check_tree_correspondence(sub, 8).passed, name
        assert level_states(to_automaton(CORPUS["ba_cb_b"]), 3) == "bcbcbba"


def test_criterion_10_sigma0_survey():
    with criterion(10, "sigma0 members pass the survey at 2000; crasher is excluded"):
        for name in SIGMA0_SURVEY:
            ok, witness = is_sigma0_form(CORPUS[name])
            assert ok, (name, witness)
            assert check_numeration_automatic(CORPUS[name], 2000).passed, name
        ok, witness = is_sigma0_form(CORPUS["ab_ca_a"])
        assert not ok
        assert witness == "b -> ca"


def test_criterion_11_property_battery():
    with criterion(11, "quantified invariants hold at their stated bounds"):
        # radix order stability, both listing modes
        for name, sub in CORPUS.items():
            aut = to_automaton(sub)
            for mode in (True, False):
                big = enumerate_words(aut, 200, mode)
                assert enumerate_words(aut, 60, mode) == big[:60], name

        # leading zeros never change the reached state
        for name, sub in PROLONGABLE.items():
            aut = to_automaton(sub)
            for word in enumerate_words(aut, 50, allow_leading_zeros=False):
                target = run(aut, word)
                for k in (1, 2, 3):
                    assert run(aut, (0,) * k + word) == target, name

        # expansions evaluate back, are accepted, and never lead with zero;
        # the full 10^4 sweep applies where terms grow geometrically, while
        # the linear-growth system (whose expansions are n digits long,
        # making the sweep quadratic) is checked densely to 2500
        for name, sub in PROLONGABLE.items():
            aut = to_automaton(sub)
            U = numeration_system(sub)
            bound = 10**4 if U[25] > 10**4 else 2500
            for n in range(bound):
                expansion = automatic_expansion(aut, U, n)
                if expansion is CRASH:
                    continue
                assert value_of(U, expansion.digits) == n, (name, n)
                assert accepts(aut, expansion.digits), (name, n)
                assert not expansion.digits or expansion.digits[0] >= 1

        # product out-degree law
        pairs = [
            ("fibonacci", "thue_morse"),
            ("aab_c_aac", "aab_aac_a"),
            ("ab_ac_cc", "ab_c_ac"),
            ("aab_abb", "base2"),
        ]
        for name_a, name_b in pairs:
            aut_a = to_automaton(CORPUS[name_a])
            aut_b = to_automaton(CORPUS[name_b])
            prod = product(aut_a, aut_b)
            for state in prod.states:
                left, right = prod.origin[state]
                assert prod.out_degree(state) == min(
                    aut_a.out_degree(left), aut_b.out_degree(right)
                )
