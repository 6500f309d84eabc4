"""The a/i/e/o fragment: class semantics with empty classes allowed, axiom
systems over the propositional calculus, derivation checking and search.

Atoms are a(X,Y) (X is a subset of Y) and i(X,Y) (X and Y intersect);
e(X,Y) and o(X,Y) are read as ~i(X,Y) and ~a(X,Y) when parsed.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import product

import numpy as np

from .errors import CapExceeded, FragmentError, LogicError
from .formula import (And, Atom, Equiv, Formula, Impl, Not, Or, PropVar, QUANTIFIERS, children,
                      implies_chain, parse_infix, rebuild, substitute_prop, to_infix)
from .hilbert import AXIOMS, HilbertProof, ProofBuilder, Sub, check_proof, parse_proof, Line
from .kalmar import prove_tautology
from .truth import table_array
from .verdict import Verdict

RELATIONS = ("a", "i")
SUGAR = {"e": "i", "o": "a"}
DEFAULT_CAP = 1 << 24


# --------------------------------------------------------------------------
# syntax

def normalize(f):
    """Rewrite e/o atoms as negated i/a atoms and check the fragment."""
    if isinstance(f, Atom):
        if len(f.args) != 2 or f.pred not in RELATIONS + tuple(SUGAR):
            raise FragmentError(f"{to_infix(f)} is not a syllogistic atom")
        if f.pred in SUGAR:
            return Not(Atom(SUGAR[f.pred], f.args))
        return f
    if isinstance(f, QUANTIFIERS):
        raise FragmentError("quantifiers are not part of the syllogistic fragment")
    if isinstance(f, PropVar):
        return f
    return rebuild(f, [normalize(c) for c in children(f)])


def parse_syll(text):
    return normalize(parse_infix(text) if isinstance(text, str) else text)


def atoms(f):
    out = []

    def go(g):
        if isinstance(g, Atom):
            if g not in out:
                out.append(g)
        for c in children(g):
            go(c)

    go(f)
    return out


def term_vars(f):
    return tuple(sorted({t for a in atoms(f) for t in a.args}))


def _schema_props(f):
    out = set()

    def go(g):
        if isinstance(g, PropVar):
            out.add(g.name)
        for c in children(g):
            go(c)

    go(f)
    return out


def substitute_syll(f, mapping):
    """Simultaneous substitution of propositional and term variables.

    A key naming a term variable of f renames it (the value must be a bare
    name); a key naming a propositional variable is replaced by a formula.
    """
    terms, props = set(term_vars(f)), _schema_props(f)
    renames, prop_map = {}, {}
    for k, v in mapping.items():
        if k in terms and k in props:
            raise LogicError(f"{k} is both a term and a propositional variable")
        if k in terms:
            if not isinstance(v, PropVar):
                raise LogicError(f"term variable {k} can only be replaced by a term variable")
            renames[k] = v.name
        else:
            prop_map[k] = v

    def go(g):
        if isinstance(g, Atom):
            return Atom(g.pred, tuple(renames.get(t, t) for t in g.args))
        if isinstance(g, PropVar):
            return prop_map.get(g.name, g)
        return rebuild(g, [go(c) for c in children(g)])

    return go(f) if renames else substitute_prop(f, prop_map)


# --------------------------------------------------------------------------
# semantics

@dataclass(frozen=True)
class ClassInterpretation:
    universe: int
    assignment: dict

    def __hash__(self):
        return hash((self.universe, tuple(sorted(self.assignment.items()))))

    def __str__(self):
        def show(s):
            return "{" + ", ".join(map(str, sorted(s))) + "}" if s else "∅"
        uni = show(range(self.universe)) if self.universe else "∅"
        parts = [f"universe {uni}"]
        parts += [f"{k} = {show(v)}" for k, v in sorted(self.assignment.items())]
        return ", ".join(parts)


def eval_syll(f, interp):
    A = interp.assignment

    def get(t):
        try:
            return set(A[t])
        except KeyError:
            raise LogicError(f"term variable {t} is not assigned") from None

    def go(g):
        if isinstance(g, Atom):
            x, y = get(g.args[0]), get(g.args[1])
            return x <= y if g.pred == "a" else bool(x & y)
        if isinstance(g, Not):
            return not go(g.f)
        if isinstance(g, And):
            return go(g.l) and go(g.r)
        if isinstance(g, Or):
            return go(g.l) or go(g.r)
        if isinstance(g, Impl):
            return (not go(g.l)) or go(g.r)
        if isinstance(g, Equiv):
            return go(g.l) == go(g.r)
        raise FragmentError(f"cannot evaluate {to_infix(g)} over classes")

    return go(parse_syll(f))


def small_model_bound(f, nonempty_classes=False):
    """Universe size that suffices to find a countermodel if one exists.

    Restricting a countermodel to one witness point per false a-atom and
    per true i-atom keeps every atom's value, and points with equal
    membership can be merged; nonempty classes need a point each as well.
    """
    f = parse_syll(f)
    n = len(term_vars(f))
    if n == 0:
        return 1
    relevant = [a for a in atoms(f) if not (a.pred == "a" and a.args[0] == a.args[1])]
    bound = min((1 << n) - 1, len(relevant) + (n if nonempty_classes else 0))
    return max(1, bound)


def _vector(f, masks, u):
    def go(g):
        if isinstance(g, Atom):
            x, y = masks[g.args[0]], masks[g.args[1]]
            return (x & ~y) == 0 if g.pred == "a" else (x & y) != 0
        if isinstance(g, Not):
            return ~go(g.f)
        if isinstance(g, And):
            return go(g.l) & go(g.r)
        if isinstance(g, Or):
            return go(g.l) | go(g.r)
        if isinstance(g, Impl):
            return ~go(g.l) | go(g.r)
        if isinstance(g, Equiv):
            return go(g.l) == go(g.r)
        raise FragmentError(f"cannot evaluate {to_infix(g)} over classes")
    return go(f)


def _countermodel_at(f, names, u, nonempty_classes, cap):
    """Greatest assignment index (first variable most significant) falsifying f."""
    n = len(names)
    total = 1 << (u * n)
    if total > cap:
        raise CapExceeded(f"{total} assignments over a universe of {u} exceed the cap of {cap}")
    r = np.arange(total, dtype=np.int64)
    full = (1 << u) - 1
    masks = {name: (r >> (u * (n - 1 - j))) & full for j, name in enumerate(names)}
    values = np.broadcast_to(_vector(f, masks, u), (total,))
    bad = ~values
    if nonempty_classes:
        for m in masks.values():
            bad = bad & (m != 0)
    hits = np.flatnonzero(bad)
    if not hits.size:
        return None
    best = int(hits[-1])
    return ClassInterpretation(u, {name: frozenset(e for e in range(u) if (int(masks[name][best]) >> e) & 1)
                                   for name in names})


def valid_syll(f, max_universe=None, nonempty_classes=False, nonempty_universe=False, cap=DEFAULT_CAP):
    """Search universes of increasing size for a countermodel.

    Sizes run 1..max_universe (default: the small-model bound).  The empty
    universe is tried only when max_universe is 0: its single interpretation
    behaves like the all-empty assignment on one point.  Within a size,
    assignments are tried from the largest index down, first variable most
    significant, so fuller classes come first.
    """
    f = parse_syll(f)
    if _schema_props(f):
        raise FragmentError("propositional variables have no class reading")
    names = term_vars(f)
    bound = small_model_bound(f, nonempty_classes)
    u_max = bound if max_universe is None else max_universe
    if u_max == 0 and not nonempty_universe and not nonempty_classes:
        interp = ClassInterpretation(0, {n: frozenset() for n in names})
        if not eval_syll(f, interp):
            return Verdict(False, countermodel=interp, reason="countermodel")
        return Verdict(True, definitive=False)
    for u in range(1, u_max + 1):
        cm = _countermodel_at(f, names, u, nonempty_classes, cap)
        if cm is not None:
            return Verdict(False, countermodel=cm, reason="countermodel")
    return Verdict(True, definitive=u_max >= bound)


# --------------------------------------------------------------------------
# axiom systems

@dataclass(frozen=True)
class SyllSystem:
    name: str
    axioms: tuple
    nonempty: bool = False   # intended semantics: classes nonempty

    @property
    def all_axioms(self):
        return AXIOMS + self.axioms


REFLEXIVITY = "a(alpha,alpha)"
I_REFLEXIVITY = "i(alpha,alpha)"
BARBARA = "a(alpha,beta) & a(beta,gamma) -> a(alpha,gamma)"
DIMATIS = "i(alpha,beta) & a(beta,gamma) -> i(gamma,alpha)"
DATISI = "a(beta,gamma) & i(beta,alpha) -> i(alpha,gamma)"
SHEP_1 = "i(alpha,beta) -> i(alpha,alpha)"
SHEP_2 = "i(alpha,alpha) | a(alpha,beta)"


def _system(name, texts, nonempty=False):
    return SyllSystem(name, tuple(parse_syll(t) for t in texts), nonempty)


SYSTEMS = {
    "goedel": _system("goedel", [REFLEXIVITY, BARBARA, DIMATIS]),
    "goedel-datisi": _system("goedel-datisi", [REFLEXIVITY, BARBARA, DATISI]),
    "lukasiewicz": _system("lukasiewicz", [REFLEXIVITY, I_REFLEXIVITY, BARBARA, DATISI], nonempty=True),
    "shepherdson": _system("shepherdson", [REFLEXIVITY, BARBARA, DATISI, SHEP_1, SHEP_2]),
}


def get_system(name):
    try:
        return SYSTEMS[name]
    except KeyError:
        raise LogicError(f"unknown system {name!r}; choose from {', '.join(SYSTEMS)}") from None


def _normalize_proof(proof):
    return HilbertProof(tuple(Line(normalize(l.formula), l.justification) for l in proof.lines),
                        tuple(normalize(h) for h in proof.hypotheses))


def check_syll_proof(system, proof):
    """Hilbert checking with the system's axioms numbered after the four propositional ones."""
    if isinstance(system, str):
        system = get_system(system)
    try:
        proof = _normalize_proof(proof)
    except FragmentError as e:
        return Verdict(False, reason=str(e))
    return check_proof(proof, axioms=system.all_axioms, substitute=substitute_syll, allow_atoms=True)


def parse_syll_proof(text):
    return _normalize_proof(parse_proof(text))


# --------------------------------------------------------------------------
# derivation search
#
# A target follows from finitely many axiom instances (over the target's own
# term variables) whenever the implication from those instances to the
# target is a propositional tautology once atoms are read as propositional
# variables.  The instances are chosen greedily to rule out every atom
# valuation that falsifies the target; the tautology is proved by the
# completeness construction and then instantiated.

def _instances(system, terms):
    out = []
    for k, ax in enumerate(system.axioms, len(AXIOMS) + 1):
        tv = term_vars(ax)
        for image in product(terms, repeat=len(tv)):
            mapping = {a: PropVar(b) for a, b in zip(tv, image) if a != b}
            inst = substitute_syll(ax, mapping)
            if all(inst != other for _, _, other in out):
                out.append((k, mapping, inst))
    return out


def _abstract(formulas):
    """Replace atoms by propositional variables v01, v02, ... in first-seen order."""
    seen = {}
    for f in formulas:
        for a in atoms(f):
            seen.setdefault(a, PropVar(f"v{len(seen) + 1:02d}"))
    return seen


def _replace_atoms(f, table):
    if isinstance(f, Atom):
        return table[f]
    return rebuild(f, [_replace_atoms(c, table) for c in children(f)])


def _choose(target, pool):
    table = _abstract([target] + [inst for _, _, inst in pool])
    names = [v.name for v in table.values()]
    if len(names) > 22:
        raise CapExceeded("too many atoms for the derivation search")
    goal = table_array(_replace_atoms(target, table), names)
    rows = np.flatnonzero(~goal)
    if not rows.size:
        return []
    kills = []
    for _, _, inst in pool:
        vals = table_array(_replace_atoms(inst, table), names)
        kills.append(~vals[rows])
    kills = np.array(kills)
    uncovered = np.ones(rows.size, dtype=bool)
    chosen = []
    while uncovered.any():
        gains = (kills & uncovered).sum(axis=1)
        best = int(np.argmax(gains))
        if gains[best] == 0:
            return None
        chosen.append(best)
        uncovered &= ~kills[best]
    # drop instances the rest already cover
    for c in list(reversed(chosen)):
        rest = [d for d in chosen if d != c]
        if rest and not (~np.any(kills[rest], axis=0)).any():
            chosen = rest
    return sorted(chosen)


def derive_syll(system, target):
    """Derivation of `target` in the system, or None if the search finds none."""
    if isinstance(system, str):
        system = get_system(system)
    target = normalize(parse_infix(target) if isinstance(target, str) else target)
    terms = term_vars(target)
    pool = _instances(system, terms)
    for k, mapping, inst in pool:
        if inst == target:
            b = ProofBuilder(axioms=system.all_axioms)
            line = b.axiom(k)
            if mapping:
                line = b._add(inst, Sub.of(line, mapping), frozenset())
            return b.finish(line)
    chosen = _choose(target, pool)
    if chosen is None:
        return None
    premises = [pool[c] for c in chosen]
    glue = implies_chain([inst for _, _, inst in premises], target)
    table = _abstract([glue])
    abstract = _replace_atoms(glue, table)
    b = ProofBuilder(axioms=system.all_axioms)
    n = b.include(prove_tautology(abstract))
    n = b.sub(n, {v.name: a for a, v in table.items()})
    for k, mapping, inst in premises:
        line = b.axiom(k)
        if mapping:
            line = b._add(inst, Sub.of(line, mapping), frozenset())
        n = b.mp(line, n)
    return b.finish(n)


# --------------------------------------------------------------------------
# the classical moods

@dataclass(frozen=True)
class Mood:
    name: str
    figure: int
    formula: Formula


@lru_cache(maxsize=None)
def load_moods():
    text = resources.files("logicbench").joinpath("data/moods.txt").read_text()
    out = []
    for raw in text.splitlines():
        s = raw.split("#", 1)[0].strip()
        if not s:
            continue
        name, figure, formula = (p.strip() for p in s.split(",", 2))
        out.append(Mood(name, int(figure), parse_syll(formula)))
    return tuple(out)


@dataclass(frozen=True)
class MoodRow:
    mood: Mood
    valid: bool            # classes may be empty
    valid_nonempty: bool   # every class nonempty
    countermodel: object
    derived: bool | None   # None: no derivation attempted (semantically invalid)


def mood_report(system="goedel", derive=True):
    """Semantic status of every mood, plus a checked derivation where one is found."""
    if isinstance(system, str):
        system = get_system(system)
    rows = []
    for mood in load_moods():
        v = valid_syll(mood.formula)
        vn = valid_syll(mood.formula, nonempty_classes=True)
        intended = vn if system.nonempty else v
        derived = None
        if derive and intended:
            proof = derive_syll(system, mood.formula)
            derived = proof is not None and bool(check_syll_proof(system, proof)) \
                and proof.conclusion == mood.formula
        rows.append(MoodRow(mood, bool(v), bool(vn), v.countermodel, derived))
    return rows


def format_mood_report(rows, system_name):
    out = [f"{'mood':<10} fig  empty-allowed  nonempty  derivable in {system_name}"]
    for r in rows:
        d = "-" if r.derived is None else ("yes" if r.derived else "no")
        out.append(f"{r.mood.name:<10} {r.mood.figure:>3}  {'valid' if r.valid else 'INVALID':<13}  "
                   f"{'valid' if r.valid_nonempty else 'INVALID':<8}  {d}")
    return "\n".join(out)
