"""Substitution systems and the automata they induce."""

from dataclasses import dataclass, field

RESERVED = frozenset("#->")

EPSILON = ""


def is_valid_letter(ch: str) -> bool:
    """True for a single printable, non-whitespace, non-reserved character."""
    return (
        len(ch) == 1
        and ch.isprintable()
        and not ch.isspace()
        and ch not in RESERVED
    )


class ParseError(ValueError):
    """Syntax or consistency error in a substitution file."""

    def __init__(self, message: str, line: int, column: int = 0):
        position = f"line {line}" + (f", column {column}" if column else "")
        super().__init__(f"{position}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Substitution:
    """A map sending each letter to a nonempty word over a closed alphabet.

    ``rules`` maps letters to their image words and must mention every letter
    that occurs in any image. ``initial`` is the distinguished letter whose
    iterated images drive everything built on top: the automaton, the fixed
    point, and the numeration system.

    ``alphabet`` lists the letters in canonical order: the initial letter
    first, then the rest by first occurrence scanning the images in rule
    order, then any remaining rule letters. Matrix layouts and automaton
    state order follow it.
    """

    rules: dict[str, str]
    initial: str
    alphabet: tuple[str, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "rules", dict(self.rules))
        if not self.rules:
            raise ValueError("substitution needs at least one rule")
        for letter, image in self.rules.items():
            if not is_valid_letter(letter):
                raise ValueError(f"invalid letter {letter!r}")
            if image == "":
                raise ValueError(f"empty image for {letter!r}")
            for ch in image:
                if not is_valid_letter(ch):
                    raise ValueError(f"invalid letter {ch!r} in image of {letter!r}")
                if ch not in self.rules:
                    raise ValueError(
                        f"image of {letter!r} uses {ch!r}, which has no rule"
                    )
        if self.initial not in self.rules:
            raise ValueError(f"initial letter {self.initial!r} has no rule")
        object.__setattr__(self, "alphabet", self._alphabet_order())

    def _alphabet_order(self) -> tuple[str, ...]:
        order = [self.initial]
        seen = {self.initial}
        for image in self.rules.values():
            for ch in image:
                if ch not in seen:
                    seen.add(ch)
                    order.append(ch)
        for letter in self.rules:
            if letter not in seen:
                seen.add(letter)
                order.append(letter)
        return tuple(order)


@dataclass(frozen=True)
class Automaton:
    """Deterministic automaton with contiguous digit labels and state outputs.

    ``successors[s]`` lists the targets of state ``s`` in digit order, so the
    outgoing digits of ``s`` are exactly 0 .. len(successors[s]) - 1; an empty
    tuple means no outgoing transitions. ``output`` maps each state to a
    letter, or to "" for states without output. ``origin`` optionally records
    construction provenance (source pairs for products, subset vectors for
    reversals) and is ignored by equality.
    """

    states: tuple[str, ...]
    successors: dict[str, tuple[str, ...]]
    initial: str
    finals: frozenset[str]
    output: dict[str, str]
    origin: dict[str, tuple] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "successors", {s: tuple(t) for s, t in self.successors.items()}
        )
        object.__setattr__(self, "output", dict(self.output))
        object.__setattr__(self, "finals", frozenset(self.finals))
        if self.origin is not None:
            object.__setattr__(self, "origin", dict(self.origin))
        states = set(self.states)
        if len(states) != len(self.states):
            raise ValueError("duplicate state names")
        if set(self.successors) != states:
            raise ValueError("successor table must cover exactly the states")
        for s, targets in self.successors.items():
            for t in targets:
                if t not in states:
                    raise ValueError(f"transition from {s!r} to unknown state {t!r}")
        if self.initial not in states:
            raise ValueError(f"unknown initial state {self.initial!r}")
        if not self.finals <= states:
            raise ValueError("final states must be states")
        if set(self.output) != states:
            raise ValueError("output map must cover exactly the states")
        for s, out in self.output.items():
            if out != EPSILON and not is_valid_letter(out):
                raise ValueError(f"invalid output {out!r} for state {s!r}")

    def transition(self, state: str, digit: int) -> str | None:
        """Target of ``state`` under ``digit``, or None when the digit is absent."""
        succ = self.successors[state]
        return succ[digit] if 0 <= digit < len(succ) else None

    def out_degree(self, state: str) -> int:
        return len(self.successors[state])

    @property
    def digit_count(self) -> int:
        """Size of the digit alphabet: the largest out-degree of any state."""
        return max((len(t) for t in self.successors.values()), default=0)

    def to_text(self) -> str:
        """Dump format: initial line, transition lines, then output lines."""
        lines = [f"initial: {self.initial}"]
        for s in self.states:
            for d, t in enumerate(self.successors[s]):
                lines.append(f"{s} -{d}-> {t}")
        for s in self.states:
            lines.append(f"output: {s} = {self.output[s] or 'eps'}")
        return "\n".join(lines)


def parse_substitution(text: str) -> Substitution:
    """Parse the rule-per-line substitution format.

    Each non-blank line reads ``<letter> -> <image>`` with the image a
    contiguous run of letters; ``#`` starts a comment and surrounding
    whitespace is ignored. The first rule's left-hand side becomes the
    initial letter. Raises :class:`ParseError` with a position on syntax
    errors, duplicate rules, empty images, and images that mention a letter
    without a rule.
    """
    rules: dict[str, str] = {}
    where: dict[str, tuple[int, str]] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if "->" not in line:
            raise ParseError("expected '<letter> -> <image>'", line_no, 1)
        lhs, rhs = line.split("->", 1)
        arrow_col = line.index("->") + 1
        lhs = lhs.strip()
        rhs = rhs.strip()
        lhs_col = raw.find(lhs) + 1 if lhs else 1
        if len(lhs) != 1 or not is_valid_letter(lhs):
            raise ParseError(
                f"left-hand side must be a single letter, got {lhs!r}", line_no, lhs_col
            )
        if lhs in rules:
            raise ParseError(f"duplicate rule for {lhs!r}", line_no, lhs_col)
        if not rhs:
            raise ParseError(f"empty image for {lhs!r}", line_no, arrow_col + 2)
        for ch in rhs:
            if not is_valid_letter(ch):
                col = raw.find(ch, arrow_col + 1) + 1
                raise ParseError(f"invalid image character {ch!r}", line_no, col)
        rules[lhs] = rhs
        where[lhs] = (line_no, raw)
    if not rules:
        raise ParseError("no rules found", 1)
    for letter, image in rules.items():
        for ch in image:
            if ch not in rules:
                line_no, raw = where[letter]
                col = raw.find(ch, raw.index("->") + 2) + 1
                raise ParseError(
                    f"image of {letter!r} references unknown letter {ch!r}",
                    line_no,
                    col,
                )
    return Substitution(rules, next(iter(rules)))


def format_substitution(sub: Substitution) -> str:
    """Render rules back in the file format, one rule per line."""
    return "\n".join(f"{letter} -> {image}" for letter, image in sub.rules.items())


def apply(sub: Substitution, word: str) -> str:
    """Image of ``word``: rule images concatenated in order; "" maps to ""."""
    try:
        return "".join([sub.rules[ch] for ch in word])
    except KeyError as exc:
        raise ValueError(f"unknown letter {exc.args[0]!r}") from None


def n_word(sub: Substitution, n: int) -> str:
    """The n-fold image of the initial letter; n = 0 gives the letter itself."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    word = sub.initial
    for _ in range(n):
        word = apply(sub, word)
    return word


def is_prolongable(sub: Substitution) -> bool:
    """Whether the initial letter's image starts with it and has length >= 2.

    This guarantees an infinite fixed point: each iterate extends the
    previous one.
    """
    image = sub.rules[sub.initial]
    return len(image) >= 2 and image[0] == sub.initial


def fixed_point_prefix(sub: Substitution, length: int) -> str:
    """First ``length`` letters of the fixed point of a prolongable substitution.

    Materializes iterates until they are long enough, then truncates.
    """
    if not is_prolongable(sub):
        raise ValueError("substitution is not prolongable; it has no fixed point")
    word = sub.initial
    while len(word) < length:
        grown = apply(sub, word)
        if len(grown) == len(word):
            raise ValueError("iteration stalled before reaching the requested length")
        word = grown
    return word[:length]


def k_max(sub: Substitution) -> int:
    """Largest image length minus one: the highest digit any state can carry."""
    return max(len(image) for image in sub.rules.values()) - 1


@dataclass(frozen=True)
class IncidenceMatrix:
    """Square letter-count matrix: entry (x, y) counts y in the image of x."""

    letters: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]

    def count(self, x: str, y: str) -> int:
        return self.rows[self.letters.index(x)][self.letters.index(y)]


def incidence_matrix(sub: Substitution) -> IncidenceMatrix:
    """Occurrence counts per rule, rows and columns in canonical alphabet order.

    Row convention: ``rows[i][j]`` counts letter j inside the image of letter
    i, so each row sums to that image's length.
    """
    letters = sub.alphabet
    rows = tuple(
        tuple(sub.rules[x].count(y) for y in letters) for x in letters
    )
    return IncidenceMatrix(letters, rows)


def word_lengths(sub: Substitution):
    """Yield the lengths of successive iterates of the initial letter.

    Driven by letter counts and the incidence matrix rather than the words
    themselves, so terms stay cheap and exact at any index.
    """
    letters = sub.alphabet
    rows = incidence_matrix(sub).rows
    counts = [1 if letter == sub.initial else 0 for letter in letters]
    size = len(letters)
    while True:
        yield sum(counts)
        counts = [
            sum(counts[i] * rows[i][j] for i in range(size)) for j in range(size)
        ]


def growth_is_strict(sub: Substitution, horizon: int = 64) -> bool:
    """Whether iterate lengths strictly increase for all indices up to ``horizon``."""
    gen = word_lengths(sub)
    previous = next(gen)
    for _ in range(horizon):
        current = next(gen)
        if current <= previous:
            return False
        previous = current
    return True


def to_automaton(sub: Substitution) -> Automaton:
    """Automaton in bijection with the substitution.

    States are the letters; state ``x`` goes to the i-th letter of its image
    under digit i. The initial letter is the initial state, every state is
    final, and each state outputs itself.
    """
    states = sub.alphabet
    return Automaton(
        states=states,
        successors={s: tuple(sub.rules[s]) for s in states},
        initial=sub.initial,
        finals=frozenset(states),
        output={s: s for s in states},
    )
