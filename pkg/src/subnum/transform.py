"""Automaton constructions: products, projections, reversal, DOT export."""

import string
from collections import deque
from dataclasses import replace

from .core import Automaton, EPSILON, Substitution

_NAME_POOL = string.ascii_lowercase + string.ascii_uppercase + string.digits


def _next_name(assigned: int) -> str:
    if assigned >= len(_NAME_POOL):
        raise ValueError("state name pool exhausted (more than 62 states)")
    return _NAME_POOL[assigned]


def product(aut_a: Automaton, aut_b: Automaton) -> Automaton:
    """Synchronized product over the digits both automata share.

    Runs both automata in lockstep from their initial states: a pair has a
    digit exactly when both components do, so its out-degree is the smaller
    of the two component degrees. Only reachable pairs are built. States are
    renamed to fresh letters in discovery order (breadth-first, digits
    ascending); each state's source pair is kept in ``origin`` for the
    projections.
    """
    start = (aut_a.initial, aut_b.initial)
    name_of = {start: _next_name(0)}
    order = [start]
    queue = deque([start])
    pair_successors: dict[tuple[str, str], tuple[tuple[str, str], ...]] = {}
    while queue:
        pair = queue.popleft()
        succ_a = aut_a.successors[pair[0]]
        succ_b = aut_b.successors[pair[1]]
        targets = []
        for d in range(min(len(succ_a), len(succ_b))):
            target = (succ_a[d], succ_b[d])
            if target not in name_of:
                name_of[target] = _next_name(len(name_of))
                order.append(target)
                queue.append(target)
            targets.append(target)
        pair_successors[pair] = tuple(targets)
    states = tuple(name_of[p] for p in order)
    return Automaton(
        states=states,
        successors={
            name_of[p]: tuple(name_of[t] for t in pair_successors[p]) for p in order
        },
        initial=name_of[start],
        finals=frozenset(states),
        output={s: s for s in states},
        origin={name_of[p]: p for p in order},
    )


def project(prod: Automaton, coordinate: int) -> Automaton:
    """Exit map onto one side of a product: coordinate 1 keeps the left state.

    The transition structure is untouched; only the outputs change.
    """
    if coordinate not in (1, 2):
        raise ValueError("coordinate must be 1 or 2")
    origin = prod.origin or {}
    if any(
        not isinstance(origin.get(s), tuple) or len(origin[s]) != 2
        for s in prod.states
    ):
        raise ValueError("automaton has no pair provenance; build it with product()")
    return replace(
        prod, output={s: origin[s][coordinate - 1] for s in prod.states}
    )


def automaton_to_substitution(aut: Automaton) -> Substitution:
    """Read an automaton back as rules: each state maps to its successor word."""
    for s in aut.states:
        if not aut.successors[s]:
            raise ValueError(f"state {s!r} has no outgoing transitions")
    return Substitution(
        {s: "".join(aut.successors[s]) for s in aut.states}, aut.initial
    )


def reverse(aut: Automaton) -> Automaton:
    """Deterministic reverse-reading automaton via an output-aware subset construction.

    Each new state is a vector with one subset of original states per original
    state: coordinate s holds the states from which the mirror of the word
    read so far leads to s. A digit step replaces every coordinate subset by
    its predecessors under that digit. The coordinate whose subset contains
    the original initial state determines the output; when no coordinate does
    (the mirrored word crashes from everywhere) the output is empty and the
    state is not final. Determinism of the source guarantees at most one such
    coordinate. Only reachable vectors are built, renamed to fresh letters in
    breadth-first order; the vectors themselves are kept in ``origin``.
    """
    if aut.finals != frozenset(aut.states):
        raise ValueError("reversal expects every state to be final")
    states = aut.states
    base = aut.digit_count
    predecessors = [{s: set() for s in states} for _ in range(base)]
    for source in states:
        for d, target in enumerate(aut.successors[source]):
            predecessors[d][target].add(source)
    preds = [
        {s: frozenset(back[s]) for s in states} for back in predecessors
    ]

    def step(vector, digit):
        table = preds[digit]
        return tuple(
            frozenset().union(*(table[x] for x in subset)) if subset else frozenset()
            for subset in vector
        )

    def output_of(vector) -> str:
        for s, subset in zip(states, vector):
            if aut.initial in subset:
                return s
        return EPSILON

    start = tuple(frozenset((s,)) for s in states)
    name_of = {start: _next_name(0)}
    order = [start]
    queue = deque([start])
    vector_successors = {}
    while queue:
        vector = queue.popleft()
        targets = []
        for d in range(base):
            target = step(vector, d)
            if target not in name_of:
                name_of[target] = _next_name(len(name_of))
                order.append(target)
                queue.append(target)
            targets.append(target)
        vector_successors[vector] = tuple(targets)
    output = {name_of[v]: output_of(v) for v in order}
    names = tuple(name_of[v] for v in order)
    return Automaton(
        states=names,
        successors={
            name_of[v]: tuple(name_of[t] for t in vector_successors[v])
            for v in order
        },
        initial=name_of[start],
        finals=frozenset(s for s in names if output[s] != EPSILON),
        output=output,
        origin={name_of[v]: v for v in order},
    )


def format_vector(vector) -> str:
    """Subset-vector rendering like ``{a},{},{b,c}``; coordinates keep their order."""
    return ",".join(
        "{" + ",".join(sorted(subset)) + "}" for subset in vector
    )


def to_dot(aut: Automaton) -> str:
    """DOT digraph with byte-stable ordering, diffable across runs.

    Nodes are labeled ``state/output``, edges by digit; final states get a
    double circle and an arrow from a point node marks the initial state.
    """
    lines = [
        "digraph {",
        "  init [shape=point];",
        f'  init -> "{aut.initial}";',
    ]
    for s in aut.states:
        shape = "doublecircle" if s in aut.finals else "circle"
        label = f"{s}/{aut.output[s] or 'eps'}"
        lines.append(f'  "{s}" [shape={shape}, label="{label}"];')
    for s in aut.states:
        for d, t in enumerate(aut.successors[s]):
            lines.append(f'  "{s}" -> "{t}" [label="{d}"];')
    lines.append("}")
    return "\n".join(lines)
