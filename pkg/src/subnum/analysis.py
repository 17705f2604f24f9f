"""Deciders and empirical surveys over substitutions and their expansions."""

import random

from .core import Substitution, fixed_point_prefix, k_max, to_automaton
from .language import CRASH, accepts, enumerate_words, format_digit_word, run
from .numeration import (
    NumerationSystem,
    automatic_expansion,
    numeration_system,
    value_of,
)
from .report import AnalysisReport

_DIGIT_CAP_NOTE = (
    "digit-wise sums are required to be accepted only when every summed "
    "digit stays within the digit alphabet (at most the largest digit label)"
)


def is_sigma0_form(sub: Substitution) -> tuple[bool, str | None]:
    """Whether every image is a run of initial letters followed by one letter.

    The initial letter's own image must carry at least one leading copy of
    itself (so the length is at least two); every other image may have zero
    leading copies, and the trailing letter may be any letter, the initial
    one included. Returns ``(ok, witness)`` where the witness names the first
    offending rule, e.g. ``"b -> ca"``.
    """
    start = sub.initial
    for letter, image in sub.rules.items():
        ok = all(ch == start for ch in image[:-1])
        if letter == start:
            ok = ok and len(image) >= 2
        if not ok:
            return False, f"{letter} -> {image}"
    return True, None


def sigma0_chain(sub: Substitution) -> tuple[str, ...]:
    """Letters in tail order: follow each image's final letter from the initial one.

    Every image of a sigma0-form substitution ends in exactly one letter, so
    the tails form a chain starting at the initial letter; the chain stops
    just before it would revisit a letter.
    """
    ok, witness = is_sigma0_form(sub)
    if not ok:
        raise ValueError(f"not sigma0-form: {witness}")
    chain = [sub.initial]
    seen = {sub.initial}
    current = sub.initial
    while True:
        tail = sub.rules[current][-1]
        if tail in seen:
            return tuple(chain)
        chain.append(tail)
        seen.add(tail)
        current = tail


def check_full_condition(sub: Substitution) -> bool:
    """Whether image lengths never increase along the sigma0 chain."""
    chain = sigma0_chain(sub)
    lengths = [len(sub.rules[letter]) for letter in chain]
    return all(a >= b for a, b in zip(lengths, lengths[1:]))


def check_numeration_automatic(sub: Substitution, bound: int) -> AnalysisReport:
    """Survey whether automatic expansions behave as positional numerals.

    For every n below ``bound`` the automatic expansion must succeed,
    evaluate back to n, be accepted, land on the n-th fixed point letter,
    and coincide with the n-th accepted word (leading zeros excluded).
    A "pass" only means no counterexample below the bound.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    aut = to_automaton(sub)
    U = numeration_system(sub)
    fixed = fixed_point_prefix(sub, bound)
    language = enumerate_words(aut, bound, allow_leading_zeros=False)

    def failing(n: int, detail: str) -> AnalysisReport:
        return AnalysisReport.failing(n, detail, 0, bound)

    for n in range(bound):
        expansion = automatic_expansion(aut, U, n)
        if expansion is CRASH:
            return failing(n, "automatic expansion crashed")
        digits = expansion.digits
        if value_of(U, digits) != n:
            return failing(
                n, f"expansion evaluates to {value_of(U, digits)}, not {n}"
            )
        if not accepts(aut, digits):
            return failing(n, "expansion is not accepted")
        landed = run(aut, digits)
        if landed != fixed[n]:
            return failing(
                n, f"expansion lands on {landed!r}, fixed point has {fixed[n]!r}"
            )
        if digits != language[n]:
            return failing(n, "expansion is not the n-th word of the language")
    return AnalysisReport.passing(0, bound)


def digitwise_sum_case(
    aut, U: NumerationSystem, x: int, y: int
) -> tuple[tuple[int, ...], bool, bool]:
    """Digit-wise sum of two automatic expansions, padded to equal width.

    Returns ``(digits, within_cap, accepted)`` where ``within_cap`` says every
    summed digit stays at or below the largest digit label. Raises when either
    expansion crashes. The summed word always evaluates to x + y; that is
    asserted here so surveys can lean on it.
    """
    ex = automatic_expansion(aut, U, x)
    ey = automatic_expansion(aut, U, y)
    if ex is CRASH or ey is CRASH:
        failed = x if ex is CRASH else y
        raise ValueError(f"automatic expansion of {failed} crashed")
    width = max(len(ex.digits), len(ey.digits))
    padded_x = (0,) * (width - len(ex.digits)) + ex.digits
    padded_y = (0,) * (width - len(ey.digits)) + ey.digits
    digits = tuple(a + b for a, b in zip(padded_x, padded_y))
    if value_of(U, digits) != x + y:
        raise ArithmeticError("digit-wise sum broke linearity")
    cap = k_max(U.source)
    within_cap = all(d <= cap for d in digits)
    return digits, within_cap, accepts(aut, digits)


def check_digitwise_sum(
    sub: Substitution, samples: int, bound: int, seed: int = 0
) -> AnalysisReport:
    """Sample pairs below ``bound`` and check their digit-wise sums are accepted.

    Only pairs whose summed digits stay within the digit alphabet count; the
    report's note records that reading. The first rejected sum, or a crashing
    expansion, fails the survey.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    aut = to_automaton(sub)
    U = numeration_system(sub)
    rng = random.Random(seed)
    for _ in range(samples):
        x = rng.randrange(bound)
        y = rng.randrange(bound)
        try:
            digits, within_cap, accepted = digitwise_sum_case(aut, U, x, y)
        except ValueError as exc:
            return AnalysisReport.failing(
                min(x, y), str(exc), 0, bound, _DIGIT_CAP_NOTE
            )
        if within_cap and not accepted:
            return AnalysisReport.failing(
                x,
                f"x={x} y={y}: digit sum {format_digit_word(digits)} is rejected",
                0,
                bound,
                _DIGIT_CAP_NOTE,
            )
    return AnalysisReport.passing(0, bound, _DIGIT_CAP_NOTE)
