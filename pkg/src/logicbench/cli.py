"""Command-line interface.

Exit codes: 0 for an affirmative answer (tautology, valid, proof checks),
1 for a negative answer (a countermodel or the failing line is printed),
2 for malformed input or a request outside a procedure's fragment.
"""
from __future__ import annotations

import argparse
import sys

from . import hilbert, kalmar, matrices, machines, predicate, sequent, syllogistic, truth
from .errors import LogicError, NotATautology
from .formula import parse_infix, parse_polish, prop_vars, to_infix, to_polish

EXIT_YES, EXIT_NO, EXIT_INPUT = 0, 1, 2


def _read_formula(args, polish=False):
    text = args.formula if args.formula is not None else sys.stdin.read()
    text = text.strip()
    if not text:
        raise ValueError("no formula given (pass it as an argument or on standard input)")
    return parse_polish(text) if polish else parse_infix(text)


def _read_file(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _emit(text, path=None):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _show_valuation(v):
    return ", ".join(f"{k}={'T' if val else 'F'}" for k, val in v.items())


def _report(verdict, yes="valid"):
    if verdict:
        print(yes if verdict.definitive else verdict.describe())
        return EXIT_YES
    if verdict.countermodel is not None:
        cm = verdict.countermodel
        shown = _show_valuation(cm) if isinstance(cm, dict) else str(cm)
        print(f"countermodel: {shown}")
    else:
        print(f"invalid: {verdict.describe()}")
    return EXIT_NO


# --------------------------------------------------------------------------
# command handlers

def cmd_parse(args):
    f = _read_formula(args, polish=args.polish)
    print(to_infix(f))
    try:
        print(to_polish(f))
    except LogicError:
        pass
    return EXIT_YES


def cmd_table(args):
    f = _read_formula(args)
    tf = truth.truth_table(f)
    names = list(prop_vars(f))
    print(" ".join(names) + " | " + to_infix(f))
    for r, value in enumerate(tf.table):
        row = truth.row_valuation(names, r)
        print(" ".join("T" if row[n] else "F" for n in names) + " | " + ("T" if value else "F"))
    print(tf)
    return EXIT_YES


def cmd_decide(args):
    verdict = truth.is_tautology(_read_formula(args))
    if verdict:
        print("tautology")
        return EXIT_YES
    print(f"not a tautology; falsified by {_show_valuation(verdict.countermodel)}")
    return EXIT_NO


def cmd_dnf(args):
    tf = truth.TruthFunction.parse(args.table)
    names = [n for part in args.vars for n in part.split(",") if n]
    print(to_infix(truth.synthesize_dnf(tf, names)))
    return EXIT_YES


def cmd_closure(args):
    basis = [b for b in args.basis.split(",") if b]
    funcs = sorted(truth.closure_under(basis, args.arity), key=lambda t: t.as_int())
    total = 1 << (1 << args.arity)
    print(f"{len(funcs)} of {total} functions of arity {args.arity} are definable from "
          f"{{{', '.join(basis)}}}")
    if args.list:
        for tf in funcs:
            print(tf)
    return EXIT_YES


def cmd_prove(args):
    f = _read_formula(args)
    try:
        proof = kalmar.prove_tautology(f)
    except NotATautology as e:
        print(f"not a tautology; falsified by {_show_valuation(e.countermodel)}")
        return EXIT_NO
    _emit(hilbert.format_proof(proof), args.output)
    if args.output:
        print(f"wrote {len(proof)} lines to {args.output}")
    return EXIT_YES


def cmd_check(args):
    proof = hilbert.parse_proof(_read_file(args.prooffile))
    return _report(hilbert.check_proof(proof), yes=f"valid proof of {to_infix(proof.conclusion)}")


def cmd_nd_prove(args):
    f = _read_formula(args)
    try:
        proof = sequent.nd_prove_tautology(f)
    except NotATautology as e:
        print(f"not a tautology; falsified by {_show_valuation(e.countermodel)}")
        return EXIT_NO
    _emit(sequent.format_nd(proof), args.output)
    if args.output:
        print(f"wrote {len(proof)} lines to {args.output}")
    return EXIT_YES


def cmd_nd_check(args):
    proof = sequent.parse_nd(_read_file(args.prooffile))
    return _report(sequent.check_nd(proof), yes=f"valid derivation of {proof.conclusion}")


def cmd_independence(args):
    M = matrices.find_independence(args.axiom, args.max_size)
    if M is None:
        print(f"no matrix of size <= {args.max_size} separates axiom {args.axiom} from the others")
        return EXIT_NO
    ok, lines = matrices.witness_report(M, args.axiom)
    print("\n".join(lines))
    return EXIT_YES if ok else EXIT_NO


def cmd_fo_check(args):
    proof = predicate.parse_fo_proof(_read_file(args.prooffile))
    return _report(predicate.check_fo_proof(proof), yes=f"valid proof of {to_infix(proof.conclusion)}")


def cmd_fo_countermodel(args):
    verdict = predicate.valid_in_domains(_read_formula(args), args.max_domain)
    if verdict:
        note = "" if verdict.definitive else " (bounded search; not a validity proof)"
        print(f"no countermodel with at most {args.max_domain} elements{note}")
        return EXIT_YES
    print(f"countermodel: {verdict.countermodel}")
    return EXIT_NO


def cmd_monadic(args):
    return _report(predicate.monadic_decide(_read_formula(args)))


def cmd_syll_valid(args):
    f = syllogistic.parse_syll(_read_formula(args))
    nonempty = args.nonempty_classes or (args.system is not None and
                                         syllogistic.get_system(args.system).nonempty)
    verdict = syllogistic.valid_syll(f, args.max_universe, nonempty_classes=nonempty,
                                     nonempty_universe=args.nonempty_universe)
    return _report(verdict)


def cmd_syll_check(args):
    system = syllogistic.get_system(args.system)
    proof = syllogistic.parse_syll_proof(_read_file(args.prooffile))
    return _report(syllogistic.check_syll_proof(system, proof),
                   yes=f"valid derivation of {to_infix(proof.conclusion)} in {system.name}")


def cmd_syll_derive(args):
    proof = syllogistic.derive_syll(args.system, _read_formula(args))
    if proof is None:
        print(f"no derivation found in {args.system}")
        return EXIT_NO
    _emit(hilbert.format_proof(proof), args.output)
    return EXIT_YES


def cmd_syll_moods(args):
    rows = syllogistic.mood_report(args.system, derive=not args.no_derive)
    print(syllogistic.format_mood_report(rows, args.system))
    return EXIT_YES


def cmd_crank(args):
    for item in machines.crank(args.calculus, args.count):
        print(f"{item.index:>4}  [{item.cost}]  {to_infix(item.formula)}")
        if args.proofs:
            for line in item.proof.to_text().splitlines():
                print(f"        {line}")
    return EXIT_YES


def cmd_bell(args):
    f = _read_formula(args)
    try:
        verdict = machines.bell(f)
    except machines.BellRefusal as e:
        print(f"refused: {e}", file=sys.stderr)
        return EXIT_INPUT
    if verdict:
        print("ding! valid")
        return EXIT_YES
    cm = verdict.countermodel
    print("(silence) not valid; countermodel: " + (_show_valuation(cm) if isinstance(cm, dict) else str(cm)))
    return EXIT_NO


# --------------------------------------------------------------------------
# parser

def _formula_arg(p):
    p.add_argument("formula", nargs="?", help="formula (read from standard input if omitted)")


def build_parser():
    parser = argparse.ArgumentParser(prog="logicbench",
                                     description="Propositional, predicate and syllogistic logic workbench.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse a formula and print it in both notations")
    _formula_arg(p)
    p.add_argument("--polish", action="store_true", help="read the input in Polish notation")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("table", help="print the truth table")
    _formula_arg(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("decide", help="decide whether a formula is a tautology")
    _formula_arg(p)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("dnf", help="disjunctive normal form for a truth table such as 2:0110")
    p.add_argument("table")
    p.add_argument("vars", nargs="+", help="variable names (space or comma separated)")
    p.set_defaults(func=cmd_dnf)

    p = sub.add_parser("closure", help="truth functions definable from a set of connectives")
    p.add_argument("--basis", required=True, help=f"comma list from {','.join(truth.CONNECTIVES)}")
    p.add_argument("--arity", type=int, default=2)
    p.add_argument("--list", action="store_true", help="list every definable table")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("prove", help="axiomatic proof of a tautology")
    _formula_arg(p)
    p.add_argument("-o", "--output", help="write the proof to this file")
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("check", help="check an axiomatic proof file")
    p.add_argument("prooffile")
    p.set_defaults(func=cmd_check)

    nd = sub.add_parser("nd", help="natural deduction").add_subparsers(dest="nd_command", required=True)
    p = nd.add_parser("prove", help="natural-deduction proof of a tautology")
    _formula_arg(p)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_nd_prove)
    p = nd.add_parser("check", help="check a natural-deduction proof file")
    p.add_argument("prooffile")
    p.set_defaults(func=cmd_nd_check)

    p = sub.add_parser("independence", help="search for a matrix separating one axiom")
    p.add_argument("--axiom", type=int, required=True)
    p.add_argument("--max-size", type=int, default=3)
    p.set_defaults(func=cmd_independence)

    fo = sub.add_parser("fo", help="first-order logic").add_subparsers(dest="fo_command", required=True)
    p = fo.add_parser("check", help="check a first-order proof file")
    p.add_argument("prooffile")
    p.set_defaults(func=cmd_fo_check)
    p = fo.add_parser("countermodel", help="search small domains for a countermodel")
    _formula_arg(p)
    p.add_argument("--max-domain", type=int, default=3)
    p.set_defaults(func=cmd_fo_countermodel)

    p = sub.add_parser("monadic", help="decide a closed monadic formula")
    _formula_arg(p)
    p.set_defaults(func=cmd_monadic)

    syll = sub.add_parser("syll", help="syllogistic logic").add_subparsers(dest="syll_command", required=True)
    p = syll.add_parser("valid", help="class-semantics validity")
    _formula_arg(p)
    p.add_argument("--system", choices=sorted(syllogistic.SYSTEMS),
                   help="use the system's intended semantics")
    p.add_argument("--nonempty-universe", action="store_true")
    p.add_argument("--nonempty-classes", action="store_true")
    p.add_argument("--max-universe", type=int)
    p.set_defaults(func=cmd_syll_valid)
    p = syll.add_parser("check", help="check a derivation in an axiom system")
    p.add_argument("system", choices=sorted(syllogistic.SYSTEMS))
    p.add_argument("prooffile")
    p.set_defaults(func=cmd_syll_check)
    p = syll.add_parser("derive", help="search for a derivation in an axiom system")
    p.add_argument("system", choices=sorted(syllogistic.SYSTEMS))
    _formula_arg(p)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_syll_derive)
    p = syll.add_parser("moods", help="report on the 24 classical moods")
    p.add_argument("system", choices=sorted(syllogistic.SYSTEMS))
    p.add_argument("--no-derive", action="store_true", help="skip the derivation search")
    p.set_defaults(func=cmd_syll_moods)

    p = sub.add_parser("crank", help="stream theorems in order of proof size")
    p.add_argument("--calculus", choices=("prop", "fo"), default="prop")
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--proofs", action="store_true", help="print each proof too")
    p.set_defaults(func=cmd_crank)

    p = sub.add_parser("bell", help="ring if the formula is valid (propositional or monadic)")
    _formula_arg(p)
    p.set_defaults(func=cmd_bell)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (LogicError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
