"""Completeness by construction: an explicit derivation for every tautology.

For a valuation v, each subformula g of a disjunction/negation formula is
derived as g or ~g (whichever v makes true) from the literals of v.  Those
derivations are then merged over both values of each variable, using the
deduction theorem and the case-merge theorem, until no hypotheses remain.
"""
from __future__ import annotations

from .errors import FragmentError, NotATautology
from .formula import Not, Or, PropVar, expansion_steps, prop_vars, to_infix
from .hilbert import ProofBuilder, deduction_theorem
from .truth import evaluate, is_tautology


def literal(name, value):
    return PropVar(name) if value else Not(PropVar(name))


def _derive(b, g, v, hyp_index):
    """Add lines proving g (if v makes g true) or ~g; return the line number."""
    if isinstance(g, PropVar):
        return b.hyp(hyp_index[g.name])
    if isinstance(g, Not):
        inner = g.f
        if evaluate(inner, v):
            return b.mp(_derive(b, inner, v, hyp_index), b.theorem("dn-intro", p=inner))
        return _derive(b, inner, v, hyp_index)
    if isinstance(g, Or):
        l, r = g.l, g.r
        if evaluate(l, v):
            return b.mp(_derive(b, l, v, hyp_index), b.axiom(1, {"p": l, "q": r}))
        if evaluate(r, v):
            return b.mp(_derive(b, r, v, hyp_index), b.theorem("or-right", p=l, q=r))
        nl = _derive(b, l, v, hyp_index)
        nr = _derive(b, r, v, hyp_index)
        return b.mp(nr, b.mp(nl, b.theorem("or-neg", p=l, q=r)))
    raise FragmentError(f"expected a disjunction/negation formula, got {to_infix(g)}")


def _or_not_only(g):
    if isinstance(g, PropVar):
        return True
    if isinstance(g, Not):
        return _or_not_only(g.f)
    return isinstance(g, Or) and _or_not_only(g.l) and _or_not_only(g.r)


def kalmar_line(f, valuation, names=None):
    """Proof of f or ~f from the literals of `valuation`.

    `f` must use only disjunction and negation.  Hypotheses are the literals
    for `names` (default: f's variables in sorted order), in that order.
    """
    if not _or_not_only(f):
        raise FragmentError(f"{to_infix(f)} uses connectives other than | and ~; expand it first")
    names = list(prop_vars(f)) if names is None else list(names)
    hyps = [literal(n, valuation[n]) for n in names]
    b = ProofBuilder(hyps)
    return b.finish(_derive(b, f, valuation, {n: i for i, n in enumerate(names, 1)}))


def _merge(pos, neg, name, target):
    """From proofs of G, x |- A and G, ~x |- A build G |- A."""
    b = ProofBuilder(pos.hypotheses[:-1])
    n = len(b.hypotheses)
    x = PropVar(name)
    a = b.include(deduction_theorem(pos, verify=False))
    c = b.include(deduction_theorem(neg, verify=False), hyp_map={i: i for i in range(1, n + 1)})
    merged = b.theorem("case-merge", p=x, r=target)
    return b.finish(b.mp(c, b.mp(a, merged)))


def prove_tautology(f):
    """Axiomatic proof of a tautology; raises NotATautology with a countermodel."""
    verdict = is_tautology(f)
    if not verdict:
        raise NotATautology(f, verdict.countermodel)
    expanded, steps = expansion_steps(f, "or_not")
    names = list(prop_vars(expanded))

    def build(prefix):
        k = len(prefix)
        if k == len(names):
            return kalmar_line(expanded, dict(zip(names, prefix)), names)
        pos = build(prefix + (True,))
        neg = build(prefix + (False,))
        return _merge(pos, neg, names[k], expanded)

    b = ProofBuilder()
    n = b.include(build(()))
    for path, conn in reversed(steps):
        n = b.define(n, path, "fold", conn)
    return b.finish(n)
