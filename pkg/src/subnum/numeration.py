"""Numeration systems from substitutions: greedy and automaton-guided expansions."""

import threading
from bisect import bisect_right
from dataclasses import dataclass

from .core import (
    Automaton,
    Substitution,
    incidence_matrix,
    is_prolongable,
    k_max,
    word_lengths,
)
from .language import CRASH, Crash, format_digit_word
from .report import AnalysisReport


class NumerationSystem:
    """Positional weights U_0 < U_1 < ... read off iterated image lengths.

    Terms are produced on demand and cached, so a system can be indexed at
    any height without deciding one up front. Extension is guarded by a lock;
    a shared instance may be indexed from several threads. Each new term is
    validated: it must exceed the previous one, and the ratio of consecutive
    terms may not exceed the largest image length.

    All arithmetic uses Python integers; terms grow geometrically and would
    overflow any fixed width almost immediately.
    """

    def __init__(self, sub: Substitution):
        if not is_prolongable(sub):
            raise ValueError(
                "numeration system needs a prolongable substitution"
            )
        self._sub = sub
        self._ratio_cap = k_max(sub) + 1
        self._lengths = word_lengths(sub)
        self._terms = [next(self._lengths)]
        self._lock = threading.Lock()

    @property
    def source(self) -> Substitution:
        return self._sub

    def _ensure(self, index: int) -> None:
        with self._lock:
            while len(self._terms) <= index:
                term = next(self._lengths)
                previous = self._terms[-1]
                if term <= previous:
                    raise ValueError(
                        f"term U_{len(self._terms)} = {term} does not increase"
                    )
                if term > previous * self._ratio_cap:
                    raise ValueError(
                        f"term U_{len(self._terms)} = {term} exceeds the "
                        f"ratio bound {self._ratio_cap} * {previous}"
                    )
                self._terms.append(term)

    def __getitem__(self, index: int) -> int:
        if index < 0:
            raise IndexError("term index must be nonnegative")
        self._ensure(index)
        return self._terms[index]

    def terms(self, count: int) -> list[int]:
        """The first ``count`` terms as a list."""
        if count < 0:
            raise ValueError("count must be nonnegative")
        if count:
            self._ensure(count - 1)
        return self._terms[:count]

    def largest_index_leq(self, n: int) -> int | None:
        """Largest i with U_i <= n, or None when n is below U_0 = 1."""
        if n < 1:
            return None
        while self._terms[-1] <= n:
            self._ensure(len(self._terms))
        return bisect_right(self._terms, n) - 1

    def __repr__(self):
        shown = ", ".join(str(t) for t in self._terms[:8])
        return f"NumerationSystem({shown}, ...)"


def numeration_system(sub: Substitution) -> NumerationSystem:
    """The numeration system whose i-th term is the i-th iterate's length."""
    return NumerationSystem(sub)


@dataclass(frozen=True)
class Expansion:
    """Digit word, most significant first, together with the value it names."""

    digits: tuple[int, ...]
    value: int

    def __str__(self):
        return format_digit_word(self.digits)


@dataclass(frozen=True)
class Leftover:
    """Remainder a capped greedy walk could not place on any position."""

    remainder: int


def value_of(U: NumerationSystem, digits) -> int:
    """Weighted digit sum: position j from the right carries weight U_j."""
    width = len(digits)
    return sum(d * U[width - 1 - j] for j, d in enumerate(digits))


def greedy_expansion(
    U: NumerationSystem, n: int, digit_cap: int
) -> Expansion | Leftover:
    """Most-significant-first greedy expansion with digits capped at ``digit_cap``.

    Starts at the largest position whose weight fits into ``n`` and takes the
    biggest allowed digit at every position on the way down. When the cap
    prevents the remainder from reaching zero the outcome is a
    :class:`Leftover` carrying what is left; zero expands to the empty word.
    """
    if digit_cap < 1:
        raise ValueError("digit_cap must be at least 1")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return Expansion((), 0)
    start = U.largest_index_leq(n)
    digits = []
    remainder = n
    for j in range(start, -1, -1):
        d = min(remainder // U[j], digit_cap)
        digits.append(d)
        remainder -= d * U[j]
    if remainder:
        return Leftover(remainder)
    return Expansion(tuple(digits), n)


def automatic_expansion(
    aut: Automaton, U: NumerationSystem, n: int
) -> Expansion | Crash:
    """Greedy expansion whose digit alphabet follows the automaton.

    Walks the automaton from its initial state; at each position the digit is
    the largest outgoing label of the current state whose weighted value fits
    into the remainder, and the matching transition is taken. The walk
    crashes (a value, not an error) when a state runs out of transitions or
    the remainder survives position zero. ``U`` must come from the same
    substitution as ``aut``, whose per-state digits are contiguous by
    construction.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return Expansion((), 0)
    start = U.largest_index_leq(n)
    state = aut.initial
    digits = []
    remainder = n
    for j in range(start, -1, -1):
        succ = aut.successors[state]
        if not succ:
            return CRASH
        d = min(remainder // U[j], len(succ) - 1)
        digits.append(d)
        remainder -= d * U[j]
        state = succ[d]
    if remainder:
        return CRASH
    return Expansion(tuple(digits), n)


@dataclass(frozen=True)
class Recurrence:
    """U_n = c_1 U_{n-1} + ... + c_r U_{n-r} with coefficients (c_1, ..., c_r)."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("recurrence needs at least one coefficient")
        if self.coefficients[-1] == 0:
            raise ValueError("trailing coefficient must be nonzero")

    @property
    def order(self) -> int:
        return len(self.coefficients)


def _mat_mul(a, b):
    size = len(a)
    return [
        [sum(a[i][k] * b[k][j] for k in range(size)) for j in range(size)]
        for i in range(size)
    ]


def _char_poly(rows) -> list[int]:
    # Faddeev-LeVerrier; every division is exact for an integer matrix.
    size = len(rows)
    matrix = [list(row) for row in rows]
    power = [row[:] for row in matrix]
    coeffs = [1, -sum(power[i][i] for i in range(size))]
    for k in range(2, size + 1):
        shifted = [row[:] for row in power]
        for i in range(size):
            shifted[i][i] += coeffs[-1]
        power = _mat_mul(matrix, shifted)
        trace = sum(power[i][i] for i in range(size))
        if trace % k:
            raise ArithmeticError("characteristic polynomial division not exact")
        coeffs.append(-(trace // k))
    return coeffs


def recurrence_from_substitution(sub: Substitution) -> Recurrence:
    """Linear recurrence satisfied by the iterate lengths.

    Taken from the characteristic polynomial of the incidence matrix,
    computed exactly over the integers; trailing zero coefficients are
    dropped. The order is at most the alphabet size.
    """
    poly = _char_poly(incidence_matrix(sub).rows)
    coefficients = [-c for c in poly[1:]]
    while len(coefficients) > 1 and coefficients[-1] == 0:
        coefficients.pop()
    return Recurrence(tuple(coefficients))


def verify_recurrence(
    U: NumerationSystem, rec: Recurrence, horizon: int
) -> AnalysisReport:
    """Check the recurrence against actual terms for order <= n <= horizon."""
    if horizon < rec.order:
        raise ValueError("horizon must be at least the recurrence order")
    for n in range(rec.order, horizon + 1):
        predicted = sum(
            c * U[n - 1 - j] for j, c in enumerate(rec.coefficients)
        )
        if U[n] != predicted:
            return AnalysisReport.failing(
                n,
                f"U_{n} = {U[n]} but the recurrence gives {predicted}",
                rec.order,
                horizon + 1,
            )
    return AnalysisReport.passing(rec.order, horizon + 1)
