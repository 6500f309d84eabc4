"""Two toy machines: a crank that streams theorems and a bell that rings on
valid input.

The crank runs a uniform-cost search over proofs.  A proof's cost is its
size as a tree (the sizes of all formulas it uses, shared premises counted
again), and ties are broken by the proof's text, so the stream is fully
deterministic.  Each theorem is emitted once, with the cheapest proof found.

Successor steps for the propositional calculus: replace one variable by
another variable (old or fresh), by a negated variable or by a disjunction
of two variables; rewrite one defined connective in either direction; apply
modus ponens with any theorem already emitted.  Longer substitutions are
reached through chains of these single steps.
"""
from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field

from .errors import LogicError
from .formula import (DefinitionMismatch, Forall, Impl, Not, Or, PropVar, children, free_for,
                      free_vars, is_propositional, parse_infix, predicates, prop_vars, rewrite,
                      size, substitute_prop, to_infix)
from .hilbert import AXIOMS, ProofBuilder
from .predicate import FOBuilder, monadic_decide, quantifier_axiom, universal_closure
from .truth import is_tautology


@dataclass(eq=False)
class Node:
    formula: object
    rule: tuple
    premises: tuple = ()
    cost: int = field(init=False)

    def __post_init__(self):
        self.cost = size(self.formula) + sum(p.cost for p in self.premises)


def _linearize(node, builder, apply):
    memo = {}

    def go(n):
        if id(n) in memo:
            return memo[id(n)]
        lines = [go(p) for p in n.premises]
        out = apply(builder, n, lines)
        memo[id(n)] = out
        return out

    return go(node)


# --------------------------------------------------------------------------
# propositional crank

def _prop_apply(b, n, lines):
    kind = n.rule[0]
    if kind == "ax":
        return b.axiom(n.rule[1])
    if kind == "sub":
        return b.sub(lines[0], dict(n.rule[1]))
    if kind == "def":
        return b.define(lines[0], n.rule[1], n.rule[2], n.rule[3])
    return b.mp(lines[0], lines[1])


def prop_proof(node):
    b = ProofBuilder()
    return b.finish(_linearize(node, b, _prop_apply))


_LETTERS = "pqrstuvw"


def _fresh(used):
    for c in _LETTERS:
        if c not in used:
            return c
    i = 1
    while f"v{i}" in used:
        i += 1
    return f"v{i}"


def _replacements(names):
    targets = list(names) + [_fresh(set(names))]
    out = [PropVar(t) for t in targets]
    out += [Not(PropVar(t)) for t in targets]
    out += [Or(PropVar(a), PropVar(b)) for a in targets for b in targets]
    return out


def _paths(f, prefix=()):
    yield prefix, f
    for i, c in enumerate(children(f)):
        yield from _paths(c, prefix + (i,))


def _def_steps(f, connectives):
    for path, g in _paths(f):
        for conn in connectives:
            for direction in ("expand", "fold"):
                try:
                    new = rewrite(f, path, direction, conn, "or_not")
                except (DefinitionMismatch, LogicError):
                    continue
                yield path, direction, conn, new


def _prop_successors(node, settled):
    f = node.formula
    names = prop_vars(f)
    for v in names:
        for rep in _replacements(names):
            if rep == PropVar(v):
                continue
            mapping = ((v, rep),)
            yield Node(substitute_prop(f, dict(mapping)), ("sub", mapping), (node,))
    for path, direction, conn, new in _def_steps(f, ("impl", "and", "equiv")):
        yield Node(new, ("def", path, direction, conn), (node,))
    yield from _mp_successors(node, settled)


def _mp_successors(node, settled):
    f = node.formula
    if isinstance(f, Impl) and f.l in settled:
        yield Node(f.r, ("mp",), (settled[f.l], node))
    for g, major in list(settled.items()):
        if isinstance(g, Impl) and g.l == f:
            yield Node(g.r, ("mp",), (node, major))


def _search(seeds, successors, to_proof):
    counter = itertools.count()
    heap = []

    def push(n):
        text = to_proof(n).to_text()
        heapq.heappush(heap, (n.cost, text, next(counter), n))

    for s in seeds:
        push(s)
    settled = {}
    seen = set()
    while heap:
        cost, text, _, node = heapq.heappop(heap)
        key = to_infix(node.formula)
        if key in seen:
            continue
        seen.add(key)
        settled[node.formula] = node
        yield node
        for nxt in successors(node, settled):
            if to_infix(nxt.formula) not in seen:
                push(nxt)


@dataclass(frozen=True)
class CrankItem:
    index: int
    formula: object
    cost: int
    proof: object


def crank(calculus="prop", count=10):
    """The first `count` theorems of the chosen calculus ('prop' or 'fo')."""
    if count < 1:
        raise ValueError("count must be at least 1")
    if calculus == "prop":
        seeds = [Node(ax, ("ax", k)) for k, ax in enumerate(AXIOMS, 1)]
        stream = _search(seeds, _prop_successors, prop_proof)
        to_proof = prop_proof
    elif calculus == "fo":
        stream = _search(_fo_seeds(), _fo_successors, fo_proof)
        to_proof = fo_proof
    else:
        raise ValueError(f"unknown calculus {calculus!r}; choose prop or fo")
    out = []
    for i, node in enumerate(itertools.islice(stream, count), 1):
        out.append(CrankItem(i, node.formula, node.cost, to_proof(node)))
    return out


# --------------------------------------------------------------------------
# first-order crank: the same search over AXP/AXQ/MP/GEN/DEF proofs

_FO_VARS = ("x", "y")
_FO_BODIES = ("P(x)", "P(y)", "R(x,y)", "R(y,x)")


def _fo_apply(b, n, lines):
    kind = n.rule[0]
    if kind == "axp":
        return b.axp(n.rule[1], dict(n.rule[2]))
    if kind == "axq":
        return b.axq(n.rule[1], n.rule[2], n.rule[3])
    if kind == "gen":
        return b.gen(lines[0], n.rule[1])
    if kind == "def":
        return b.define(lines[0], n.rule[1], n.rule[2], n.rule[3])
    return b.mp(lines[0], lines[1])


def fo_proof(node):
    b = FOBuilder()
    return b.finish(_linearize(node, b, _fo_apply))


def _fo_seeds():
    seeds = [Node(ax, ("axp", k, ())) for k, ax in enumerate(AXIOMS, 1)]
    for text in _FO_BODIES:
        body = parse_infix(text)
        for x in _FO_VARS:
            for y in _FO_VARS:
                if free_for(y, x, body):
                    seeds.append(Node(quantifier_axiom(x, body, y), ("axq", x, body, y)))
    return seeds


def _fo_successors(node, settled):
    f = node.formula
    if node.rule[0] == "axp":
        k, mapping = node.rule[1], dict(node.rule[2])
        base = AXIOMS[k - 1]
        atoms = [parse_infix(t) for t in _FO_BODIES]
        for v in prop_vars(base):
            current = mapping.get(v, PropVar(v))
            if not isinstance(current, PropVar):
                continue
            for rep in _replacements(prop_vars(f)) + atoms:
                if rep == current:
                    continue
                new_map = dict(mapping)
                new_map[v] = rep
                new_map = {a: b for a, b in new_map.items() if b != PropVar(a)}
                yield Node(substitute_prop(base, new_map), ("axp", k, tuple(sorted(new_map.items()))))
    if isinstance(f, Impl):
        for x in _FO_VARS:
            if x not in free_vars(f.l):
                yield Node(Impl(f.l, Forall(x, f.r)), ("gen", x), (node,))
    for path, direction, conn, new in _def_steps(f, ("impl", "and", "equiv", "exists")):
        yield Node(new, ("def", path, direction, conn), (node,))
    yield from _mp_successors(node, settled)


# --------------------------------------------------------------------------
# the bell

class BellRefusal(LogicError):
    """Input lies outside the fragments where validity is decidable."""


_ARITY_WORD = {0: "zero-place", 2: "dyadic", 3: "triadic"}


def bell(f):
    """Verdict for propositional or monadic input; BellRefusal otherwise."""
    if is_propositional(f):
        return is_tautology(f)
    sig = predicates(f)
    if "=" in sig:
        raise BellRefusal("the bell stays silent on formulas with equality: validity is decided "
                          "here only for propositional and monadic formulas, and full predicate "
                          "logic is undecidable")
    wide = sorted(n for n, a in sig.items() if a != 1)
    if wide:
        name = wide[0]
        word = _ARITY_WORD.get(sig[name], f"{sig[name]}-place")
        raise BellRefusal(f"the bell cannot decide this formula: {name} is a {word} predicate, "
                          "and validity in full predicate logic is undecidable (the bell only "
                          "works for propositional and monadic formulas)")
    return monadic_decide(universal_closure(f))
