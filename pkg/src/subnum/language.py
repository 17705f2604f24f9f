"""Running digit words through automata and enumerating accepted words."""

import itertools

from .core import Automaton, Substitution, n_word, to_automaton
from .report import AnalysisReport


class Crash:
    """Value-level outcome of a walk that needed a missing transition."""

    __slots__ = ()

    def __repr__(self):
        return "CRASH"

    def __bool__(self):
        return False


CRASH = Crash()


def run(aut: Automaton, word) -> str | Crash:
    """State reached from the initial state along ``word``, or CRASH.

    A crash is data, not an error: it marks the first digit for which the
    current state has no transition.
    """
    state = aut.initial
    for digit in word:
        succ = aut.successors[state]
        if not 0 <= digit < len(succ):
            return CRASH
        state = succ[digit]
    return state


def accepts(aut: Automaton, word) -> bool:
    """Whether the word runs without crashing and ends in a final state."""
    state = run(aut, word)
    return state is not CRASH and state in aut.finals


def words_of_length(aut: Automaton, n: int) -> list[tuple[int, ...]]:
    """All accepted words of exactly ``n`` digits, in radix order.

    Brute force over every digit string, so only sensible for small ``n``;
    the point is to stay independent of the cleverer enumerators.
    """
    base = aut.digit_count
    return [
        word
        for word in itertools.product(range(base), repeat=n)
        if accepts(aut, word)
    ]


def level_states(aut: Automaton, n: int) -> str:
    """States reached by the accepted length-``n`` words, spelled in radix order."""
    reached = []
    for word in itertools.product(range(aut.digit_count), repeat=n):
        state = run(aut, word)
        if state is not CRASH and state in aut.finals:
            reached.append(state)
    return "".join(reached)


def check_tree_correspondence(sub: Substitution, depth: int) -> AnalysisReport:
    """Compare automaton levels against substitution iterates, level by level.

    For every n up to ``depth``, the states reached by the accepted length-n
    words (in radix order) must spell out the n-th iterate of the initial
    letter. This is the brute-force side of the substitution/automaton
    bijection, kept deliberately independent of the word enumerator.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    aut = to_automaton(sub)
    for n in range(depth + 1):
        expected = n_word(sub, n)
        spelled = level_states(aut, n)
        if spelled != expected:
            return AnalysisReport.failing(
                n,
                f"level spells {spelled!r} but iteration gives {expected!r}",
                0,
                depth + 1,
            )
    return AnalysisReport.passing(0, depth + 1)


def enumerate_words(
    aut: Automaton, count: int, allow_leading_zeros: bool = True
) -> list[tuple[int, ...]]:
    """First ``count`` accepted words in radix order (shorter first, then numeric).

    Words of two or more digits never start with 0: such a word names the
    same number as its suffix, so listing it would only duplicate entries.
    With ``allow_leading_zeros`` the one-digit word "0" is still listed right
    after the empty word; without it the empty word alone stands for zero and
    index n holds the word for n.
    """
    if count <= 0:
        return []
    found: list[tuple[int, ...]] = []
    if aut.initial in aut.finals:
        found.append(())
        if len(found) == count:
            return found
    frontier: list[tuple[tuple[int, ...], str]] = [((), aut.initial)]
    while frontier:
        extended: list[tuple[tuple[int, ...], str]] = []
        for word, state in frontier:
            for digit, target in enumerate(aut.successors[state]):
                grown = word + (digit,)
                if not word and digit == 0:
                    # Every extension would keep the leading zero: emit at
                    # most the single word "0" and prune the subtree.
                    if allow_leading_zeros and target in aut.finals:
                        found.append(grown)
                        if len(found) == count:
                            return found
                    continue
                if target in aut.finals:
                    found.append(grown)
                    if len(found) == count:
                        return found
                extended.append((grown, target))
        frontier = extended
    return found


def format_digit_word(word) -> str:
    """Textual form: digits run together when all below ten, else dot-separated."""
    if not word:
        return "eps"
    if all(d < 10 for d in word):
        return "".join(str(d) for d in word)
    return ".".join(str(d) for d in word)


def parse_digit_word(text: str) -> tuple[int, ...]:
    """Inverse of :func:`format_digit_word`; "eps" reads as the empty word."""
    if text == "eps":
        return ()
    parts = text.split(".") if "." in text else list(text)
    try:
        digits = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"bad digit word {text!r}") from None
    if any(d < 0 for d in digits):
        raise ValueError(f"bad digit word {text!r}")
    return digits
