"""Command-line front end; one verb per invocation, plain text output.

Exit codes: 0 on success or a passing check, 1 when a check fails or an
expansion crashes, 2 on parse or usage errors.
"""

import argparse
import sys
from pathlib import Path

from .analysis import (
    check_digitwise_sum,
    check_full_condition,
    check_numeration_automatic,
    is_sigma0_form,
    sigma0_chain,
)
from .core import (
    ParseError,
    fixed_point_prefix,
    format_substitution,
    k_max,
    parse_substitution,
    to_automaton,
)
from .language import CRASH, enumerate_words, format_digit_word
from .numeration import (
    Leftover,
    automatic_expansion,
    greedy_expansion,
    numeration_system,
    recurrence_from_substitution,
    verify_recurrence,
)
from .transform import (
    automaton_to_substitution,
    format_vector,
    product,
    project,
    reverse,
    to_dot,
)

LEN_CAP = 10**6
BOUND_CAP = 10**5
TERMS_CAP = 10**4


def _load(path: str):
    return parse_substitution(Path(path).read_text(encoding="utf-8"))


def _check_cap(value: int, cap: int, what: str, force: bool) -> None:
    if value > cap and not force:
        raise ValueError(f"{what} {value} exceeds the cap {cap}; use --force to override")


def cmd_show(args) -> int:
    print(to_automaton(_load(args.sub)).to_text())
    return 0


def cmd_fixedpoint(args) -> int:
    _check_cap(args.len, LEN_CAP, "--len", args.force)
    print(fixed_point_prefix(_load(args.sub), args.len))
    return 0


def cmd_numsys(args) -> int:
    _check_cap(args.terms, TERMS_CAP, "--terms", args.force)
    terms = numeration_system(_load(args.sub)).terms(args.terms)
    print(",".join(str(t) for t in terms))
    return 0


def cmd_expand(args) -> int:
    sub = _load(args.sub)
    result = automatic_expansion(to_automaton(sub), numeration_system(sub), args.n)
    if result is CRASH:
        print("CRASH")
        return 1
    print(format_digit_word(result.digits))
    return 0


def cmd_greedy(args) -> int:
    sub = _load(args.sub)
    cap = args.cap if args.cap is not None else k_max(sub)
    result = greedy_expansion(numeration_system(sub), args.n, cap)
    if isinstance(result, Leftover):
        print(f"LEFTOVER {result.remainder}")
        return 1
    print(format_digit_word(result.digits))
    return 0


def cmd_enumerate(args) -> int:
    _check_cap(args.count, BOUND_CAP, "--count", args.force)
    words = enumerate_words(
        to_automaton(_load(args.sub)), args.count, args.leading_zeros
    )
    print("\n".join(format_digit_word(w) for w in words))
    return 0


def cmd_check(args) -> int:
    _check_cap(args.bound, BOUND_CAP, "--bound", args.force)
    report = check_numeration_automatic(_load(args.sub), args.bound)
    print(report.render())
    return 0 if report.passed else 1


def cmd_sigma0(args) -> int:
    ok, witness = is_sigma0_form(_load(args.sub))
    print("sigma0-form: yes" if ok else f"sigma0-form: no ({witness})")
    return 0 if ok else 1


def cmd_full(args) -> int:
    _check_cap(args.bound, BOUND_CAP, "--bound", args.force)
    sub = _load(args.sub)
    ok, witness = is_sigma0_form(sub)
    if not ok:
        print(f"not sigma0-form ({witness})")
        return 1
    chain = sigma0_chain(sub)
    lengths = [len(sub.rules[letter]) for letter in chain]
    holds = check_full_condition(sub)
    survey = check_digitwise_sum(sub, args.samples, args.bound, args.seed)
    verdict = "non-increasing" if holds else "not non-increasing"
    print(
        f"chain {','.join(chain)} image lengths "
        f"{','.join(str(n) for n in lengths)}: {verdict}\n" + survey.render()
    )
    return 0 if holds else 1


def cmd_recurrence(args) -> int:
    sub = _load(args.sub)
    rec = recurrence_from_substitution(sub)
    lines = ["c = " + ",".join(str(c) for c in rec.coefficients)]
    code = 0
    if args.verify is not None:
        horizon = args.verify - 1
        if horizon < rec.order:
            raise ValueError(
                f"--verify must exceed the recurrence order {rec.order}"
            )
        report = verify_recurrence(numeration_system(sub), rec, horizon)
        if report.passed:
            lines.append(f"verified n<{args.verify}")
        else:
            n, detail = report.first_counterexample
            lines.append(f"fails at n={n}: {detail}")
            code = 1
    print("\n".join(lines))
    return code


def cmd_product(args) -> int:
    prod = product(to_automaton(_load(args.sub_a)), to_automaton(_load(args.sub_b)))
    print(format_substitution(automaton_to_substitution(prod)))
    return 0


def cmd_project(args) -> int:
    _check_cap(args.len, LEN_CAP, "--len", args.force)
    prod = product(to_automaton(_load(args.sub_a)), to_automaton(_load(args.sub_b)))
    projected = project(prod, args.coord)
    lines = [f"{s} -> {projected.output[s]}" for s in projected.states]
    prefix = fixed_point_prefix(automaton_to_substitution(prod), args.len)
    lines.append("".join(projected.output[letter] for letter in prefix))
    print("\n".join(lines))
    return 0


def cmd_reverse(args) -> int:
    rev = reverse(to_automaton(_load(args.sub)))
    lines = [rev.to_text()]
    for s in rev.states:
        lines.append(f"vector: {s} = {format_vector(rev.origin[s])}")
    print("\n".join(lines))
    return 0


def cmd_dot(args) -> int:
    aut = to_automaton(_load(args.sub))
    if args.reverse:
        aut = reverse(aut)
    print(to_dot(aut))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subnum",
        description="Substitution systems, their automata, and numeration systems.",
    )
    verbs = parser.add_subparsers(dest="verb", required=True)

    def verb(name, func, help_text):
        p = verbs.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--force", action="store_true", help="override size caps")
        return p

    p = verb("show", cmd_show, "print the automaton of a substitution")
    p.add_argument("sub")

    p = verb("fixedpoint", cmd_fixedpoint, "print a fixed point prefix")
    p.add_argument("sub")
    p.add_argument("--len", type=int, default=64)

    p = verb("numsys", cmd_numsys, "print numeration system terms")
    p.add_argument("sub")
    p.add_argument("--terms", type=int, default=12)

    p = verb("expand", cmd_expand, "automatic expansion of an integer")
    p.add_argument("sub")
    p.add_argument("n", type=int)

    p = verb("greedy", cmd_greedy, "greedy expansion of an integer")
    p.add_argument("sub")
    p.add_argument("n", type=int)
    p.add_argument("--cap", type=int, default=None, help="digit cap (default: largest digit label)")

    p = verb("enumerate", cmd_enumerate, "list accepted words in radix order")
    p.add_argument("sub")
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--leading-zeros", action="store_true", dest="leading_zeros",
                   help='also list the single word "0"')

    p = verb("check", cmd_check, "survey expansions below a bound")
    p.add_argument("sub")
    p.add_argument("--bound", type=int, default=2000)

    p = verb("sigma0", cmd_sigma0, "classify the rule shapes")
    p.add_argument("sub")

    p = verb("full", cmd_full, "chain condition plus digit-wise sum survey")
    p.add_argument("sub")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--bound", type=int, default=2000)
    p.add_argument("--seed", type=int, default=0)

    p = verb("recurrence", cmd_recurrence, "recurrence of the numeration system")
    p.add_argument("sub")
    p.add_argument("--verify", type=int, default=None,
                   help="check terms below this index against the recurrence")

    p = verb("product", cmd_product, "print the product substitution")
    p.add_argument("sub_a")
    p.add_argument("sub_b")

    p = verb("project", cmd_project, "exit map and projected fixed point of a product")
    p.add_argument("sub_a")
    p.add_argument("sub_b")
    p.add_argument("--coord", type=int, choices=(1, 2), required=True)
    p.add_argument("--len", type=int, default=64)

    p = verb("reverse", cmd_reverse, "print the reverse-reading automaton")
    p.add_argument("sub")

    p = verb("dot", cmd_dot, "emit DOT for the automaton")
    p.add_argument("sub")
    p.add_argument("--reverse", action="store_true")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
