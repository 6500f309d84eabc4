"""First-order logic: proof kernel, finite-structure semantics, quantifier
transformations and the decision procedure for monadic formulas.

The kernel has the four propositional axioms as schemas instantiated by
arbitrary formulas (AXP), the quantifier axiom (x)phi -> phi[x:=y] (AXQ),
modus ponens, generalisation (from psi -> phi infer psi -> (x)phi when x is
not free in psi) and the definitional rewrites, with (Ex) abbreviating
~(x)~.  Domains are nonempty.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations, product

from .errors import CapExceeded, FragmentError, LogicError, ProofFormatError, SideConditionError
from .formula import (And, Atom, DefinitionMismatch, Equiv, Exists, Forall, Formula, Impl, Not,
                      Or, PropVar, QUANTIFIERS, children, free_for, free_vars, parse_infix,
                      predicates, prop_vars, replace_at, rewrite, subformula_at,
                      substitute_individual, substitute_prop, to_infix, variables)
from .hilbert import (AXIOMS, MP, THEOREMS, Ax, Def, Line, Sub, format_justification,
                      parse_bindings, parse_common_justification, split_numbered_lines)
from .verdict import Verdict


# --------------------------------------------------------------------------
# proof objects

@dataclass(frozen=True)
class AxP:
    k: int
    bindings: tuple = ()

    @classmethod
    def of(cls, k, mapping=None):
        return cls(k, tuple(sorted((mapping or {}).items())))

    @property
    def mapping(self):
        return dict(self.bindings)


@dataclass(frozen=True)
class AxQ:
    x: str
    body: Formula
    y: str


@dataclass(frozen=True)
class Gen:
    src: int
    x: str


@dataclass(frozen=True)
class FOProof:
    lines: tuple

    @property
    def conclusion(self):
        return self.lines[-1].formula

    def __len__(self):
        return len(self.lines)

    def to_text(self):
        return format_fo_proof(self)


def quantifier_axiom(x, body, y):
    return Impl(Forall(x, body), substitute_individual(body, x, y))


def check_fo_proof(proof):
    """Check a first-order proof line by line; the verdict names the first bad line."""
    if not proof.lines:
        return Verdict(False, reason="empty proof")
    formulas = []

    def fail(k, reason):
        return Verdict(False, line=k, reason=reason)

    for k, line in enumerate(proof.lines, 1):
        f, j = line.formula, line.justification

        def ref(n):
            if not isinstance(n, int) or not 1 <= n < k:
                raise ProofFormatError(f"line {k}: reference {n} is not an earlier line")
            return formulas[n - 1]

        if isinstance(j, AxP):
            if not 1 <= j.k <= len(AXIOMS):
                return fail(k, f"no axiom {j.k}")
            try:
                inst = substitute_prop(AXIOMS[j.k - 1], j.mapping)
            except LogicError as e:
                return fail(k, str(e))
            if inst != f:
                return fail(k, f"formula is not the stated instance of axiom {j.k}")
        elif isinstance(j, AxQ):
            if not free_for(j.y, j.x, j.body):
                return fail(k, f"{j.y} not free for {j.x} in {to_infix(j.body)}")
            if quantifier_axiom(j.x, j.body, j.y) != f:
                return fail(k, "formula is not the stated quantifier axiom")
        elif isinstance(j, MP):
            minor, major = ref(j.minor), ref(j.major)
            if not isinstance(major, Impl) or major.l != minor:
                return fail(k, "major premise shape")
            if major.r != f:
                return fail(k, "conclusion does not match the major premise")
        elif isinstance(j, Gen):
            src = ref(j.src)
            if not isinstance(src, Impl):
                return fail(k, "generalisation needs an implication")
            if j.x in free_vars(src.l):
                return fail(k, f"proviso violated: {j.x} free in antecedent")
            if f != Impl(src.l, Forall(j.x, src.r)):
                return fail(k, "formula is not the stated generalisation")
        elif isinstance(j, Def):
            src = ref(j.src)
            try:
                result = rewrite(src, j.path, j.direction, j.connective, "or_not")
            except DefinitionMismatch as e:
                return fail(k, str(e))
            except LogicError as e:
                raise ProofFormatError(f"line {k}: {e}") from None
            if result != f:
                return fail(k, "formula is not the stated definitional rewrite")
        else:
            return fail(k, f"rule {type(j).__name__} is not available in the first-order calculus")
        formulas.append(f)
    return Verdict(True)


def _compose(outer, inner):
    """Mapping equal to applying `inner` and then `outer`."""
    out = {k: substitute_prop(v, outer) for k, v in inner.items()}
    for k, v in outer.items():
        out.setdefault(k, v)
    return out


class FOBuilder:
    """Accumulates first-order proof lines, reusing formulas already derived."""

    def __init__(self):
        self.lines = []
        self._index = {}

    def formula(self, n):
        return self.lines[n - 1].formula

    def _add(self, f, j):
        hit = self._index.get(f)
        if hit is not None:
            return hit
        self.lines.append(Line(f, j))
        self._index[f] = len(self.lines)
        return len(self.lines)

    def axp(self, k, mapping=None):
        mapping = {n: v for n, v in (mapping or {}).items() if v != PropVar(n)}
        return self._add(substitute_prop(AXIOMS[k - 1], mapping), AxP.of(k, mapping))

    def axq(self, x, body, y):
        if isinstance(body, str):
            body = parse_infix(body)
        if not free_for(y, x, body):
            raise SideConditionError(f"{y} not free for {x} in {to_infix(body)}")
        return self._add(quantifier_axiom(x, body, y), AxQ(x, body, y))

    def mp(self, minor, major):
        a, b = self.formula(minor), self.formula(major)
        if not isinstance(b, Impl) or b.l != a:
            raise LogicError(f"cannot apply modus ponens to {to_infix(a)} and {to_infix(b)}")
        return self._add(b.r, MP(minor, major))

    def gen(self, src, x):
        f = self.formula(src)
        if not isinstance(f, Impl):
            raise LogicError("generalisation needs an implication")
        if x in free_vars(f.l):
            raise SideConditionError(f"proviso violated: {x} free in antecedent")
        return self._add(Impl(f.l, Forall(x, f.r)), Gen(src, x))

    def define(self, src, path, direction, connective):
        f = rewrite(self.formula(src), tuple(path), direction, connective, "or_not")
        return self._add(f, Def(src, tuple(path), direction, connective))

    def propositional(self, proof, mapping=None):
        """Replay a hypothesis-free propositional proof under an instantiation.

        Substitution steps are pushed up into the axiom instances, so the
        result uses only AXP, MP and DEF.
        """
        if proof.hypotheses:
            raise LogicError("only hypothesis-free proofs can be replayed")
        mapping = {k: (parse_infix(v) if isinstance(v, str) else v) for k, v in (mapping or {}).items()}
        memo = {}

        def line(k, sigma):
            key = (k, tuple(sorted(sigma.items())))
            if key in memo:
                return memo[key]
            j = proof.lines[k - 1].justification
            if isinstance(j, Ax):
                n = self.axp(j.k, sigma)
            elif isinstance(j, MP):
                n = self.mp(line(j.minor, sigma), line(j.major, sigma))
            elif isinstance(j, Sub):
                n = line(j.src, _compose(sigma, j.mapping))
            elif isinstance(j, Def):
                n = self.define(line(j.src, sigma), j.path, j.direction, j.connective)
            else:
                raise LogicError(f"unexpected justification {j!r}")
            memo[key] = n
            return n

        return line(len(proof.lines), mapping)

    def theorem(self, name, **mapping):
        return self.propositional(THEOREMS[name](), mapping)

    def chain(self, ab, bc):
        a_b, b_c = self.formula(ab), self.formula(bc)
        s = self.theorem("syllogism", p=a_b.l, q=a_b.r, r=b_c.r)
        return self.mp(ab, self.mp(bc, s))

    def build(self):
        return FOProof(tuple(self.lines))

    def finish(self, n):
        if n != len(self.lines):
            f = self.formula(n)
            ident = self.theorem("identity", p=f)
            self.lines.append(Line(f, MP(n, ident)))
        return self.build()


# --------------------------------------------------------------------------
# text format

def format_fo_justification(j):
    if isinstance(j, AxP):
        binds = ", ".join(f"{k}:={to_infix(v)}" for k, v in j.bindings)
        return f"AXP{j.k} {binds}".rstrip()
    if isinstance(j, AxQ):
        return f"AXQ {j.x} {j.y} {to_infix(j.body)}"
    if isinstance(j, Gen):
        return f"GEN {j.src} {j.x}"
    return format_justification(j)


def format_fo_proof(proof):
    return "".join(f"{k}: {to_infix(line.formula)} ; {format_fo_justification(line.justification)}\n"
                   for k, line in enumerate(proof.lines, 1))


def parse_fo_justification(text, where=""):
    text = text.strip()
    m = re.fullmatch(r"AXP(\d+)(?:\s+(.*))?", text)
    if m:
        return AxP.of(int(m.group(1)), parse_bindings(m.group(2), where) if m.group(2) else {})
    m = re.fullmatch(r"AXQ\s+([A-Za-z][A-Za-z0-9_]*)\s+([A-Za-z][A-Za-z0-9_]*)\s+(.+)", text)
    if m:
        return AxQ(m.group(1), parse_infix(m.group(3)), m.group(2))
    m = re.fullmatch(r"GEN\s+(\d+)\s+([A-Za-z][A-Za-z0-9_]*)", text)
    if m:
        return Gen(int(m.group(1)), m.group(2))
    j = parse_common_justification(text, where) if text else None
    if j is None:
        raise ProofFormatError(f"{where}unrecognised justification {text!r}")
    return j


def parse_fo_proof(text):
    lines = []
    try:
        for item in split_numbered_lines(text, header_keys=()):
            _, _, body, just, where = item
            lines.append(Line(parse_infix(body), parse_fo_justification(just, where)))
    except ValueError as e:
        if isinstance(e, ProofFormatError):
            raise
        raise ProofFormatError(str(e)) from None
    return FOProof(tuple(lines))


# --------------------------------------------------------------------------
# semantics over finite domains {0..d-1}

DEFAULT_CAP = 1 << 20


@dataclass(frozen=True)
class Interpretation:
    domain_size: int
    predicates: dict
    props: dict = None
    env: dict = None

    def __post_init__(self):
        if self.domain_size < 1:
            raise ValueError("domains are nonempty")
        object.__setattr__(self, "predicates",
                           {k: frozenset(tuple(t) for t in v) for k, v in self.predicates.items()})
        object.__setattr__(self, "props", dict(self.props or {}))
        object.__setattr__(self, "env", dict(self.env or {}))
        for name, ext in self.predicates.items():
            if any(not 0 <= a < self.domain_size for t in ext for a in t):
                raise ValueError(f"extension of {name} leaves the domain")

    def __hash__(self):
        return hash((self.domain_size, tuple(sorted(self.predicates.items())),
                     tuple(sorted(self.props.items())), tuple(sorted(self.env.items()))))

    def to_text(self):
        out = [f"domain: {self.domain_size}"]
        for name in sorted(self.predicates):
            tuples = sorted(self.predicates[name])
            out.append(f"{name}: " + ",".join("(" + ",".join(map(str, t)) + ")" for t in tuples))
        if self.props:
            out.append("props: " + ",".join(f"{k}={int(v)}" for k, v in sorted(self.props.items())))
        if self.env:
            out.append("env: " + ",".join(f"{k}={v}" for k, v in sorted(self.env.items())))
        return "\n".join(out) + "\n"

    def __str__(self):
        parts = [f"domain {{{', '.join(map(str, range(self.domain_size)))}}}"]
        for name in sorted(self.predicates):
            ext = sorted(self.predicates[name])
            if all(len(t) == 1 for t in ext):
                shown = "{" + ", ".join(str(t[0]) for t in ext) + "}"
            else:
                shown = "{" + ", ".join("(" + ",".join(map(str, t)) + ")" for t in ext) + "}"
            parts.append(f"{name} = {shown}")
        parts += [f"{k} = {'T' if v else 'F'}" for k, v in sorted(self.props.items())]
        parts += [f"{k} = {v}" for k, v in sorted(self.env.items())]
        return ", ".join(parts)

    @classmethod
    def from_text(cls, text):
        d, preds, props, env = None, {}, {}, {}
        for raw in text.splitlines():
            s = raw.split("#", 1)[0].strip()
            if not s:
                continue
            key, sep, value = s.partition(":")
            if not sep:
                raise ValueError(f"malformed interpretation line {raw!r}")
            key, value = key.strip(), value.strip()
            if key == "domain":
                d = int(value)
            elif key in ("props", "env"):
                target = props if key == "props" else env
                for item in filter(None, (v.strip() for v in value.split(","))):
                    name, _, v = item.partition("=")
                    target[name.strip()] = bool(int(v)) if key == "props" else int(v)
            else:
                preds[key] = {tuple(int(a) for a in m.split(",") if a.strip())
                              for m in re.findall(r"\(([^)]*)\)", value)}
        if d is None:
            raise ValueError("interpretation needs a 'domain:' line")
        return cls(d, preds, props, env)


def _compile_fo(f, d):
    """Closure evaluating f given (predicates, props, env dict)."""
    if isinstance(f, PropVar):
        name = f.name
        return lambda P, V, E: V[name]
    if isinstance(f, Atom):
        pred, args = f.pred, f.args
        if pred == "=" and len(args) == 2:
            a, b = args
            return lambda P, V, E: E[a] == E[b]
        return lambda P, V, E: tuple(E[a] for a in args) in P[pred]
    if isinstance(f, Not):
        g = _compile_fo(f.f, d)
        return lambda P, V, E: not g(P, V, E)
    if isinstance(f, (And, Or, Impl, Equiv)):
        l, r = _compile_fo(f.l, d), _compile_fo(f.r, d)
        if isinstance(f, And):
            return lambda P, V, E: l(P, V, E) and r(P, V, E)
        if isinstance(f, Or):
            return lambda P, V, E: l(P, V, E) or r(P, V, E)
        if isinstance(f, Impl):
            return lambda P, V, E: (not l(P, V, E)) or r(P, V, E)
        return lambda P, V, E: l(P, V, E) == r(P, V, E)
    body = _compile_fo(f.body, d)
    x = f.x
    test = all if isinstance(f, Forall) else any

    def quant(P, V, E):
        saved = E.get(x, _MISSING)
        try:
            return test(body(P, V, _set(E, x, a)) for a in range(d))
        finally:
            if saved is _MISSING:
                E.pop(x, None)
            else:
                E[x] = saved
    return quant


_MISSING = object()


def _set(E, x, a):
    E[x] = a
    return E


def eval_fo(f, interp):
    """Truth value of f in a finite interpretation."""
    _, free, _ = variables(f)
    for x in free:
        if x not in interp.env:
            raise LogicError(f"individual variable {x} is not assigned")
    for p in prop_vars(f):
        if p not in interp.props:
            raise LogicError(f"propositional variable {p} is not assigned")
    for name, arity in predicates(f).items():
        if name == "=":
            continue
        if name not in interp.predicates:
            raise LogicError(f"predicate {name} is not interpreted")
    return bool(_compile_fo(f, interp.domain_size)(interp.predicates, interp.props, dict(interp.env)))


def universal_closure(f):
    """Prefix universal quantifiers for the free individual variables (sorted)."""
    for x in reversed(free_vars(f)):
        f = Forall(x, f)
    return f


def _signature(f):
    sig = predicates(f)
    sig.pop("=", None)
    return dict(sorted(sig.items()))


def count_interpretations(f, d):
    sig = _signature(f)
    n = 1
    for arity in sig.values():
        n <<= d ** arity
    return n << len(prop_vars(f))


def interpretations(f, d, cap=DEFAULT_CAP):
    """All interpretations of f's signature over {0..d-1}, in enumeration order.

    Predicates in name order, the first one varying slowest; each extension
    runs through the subsets of the tuple list (product order) by ascending
    bitmask; propositional variables last, False before True.
    """
    if count_interpretations(f, d) > cap:
        raise CapExceeded(f"{count_interpretations(f, d)} interpretations at domain size {d} "
                          f"exceed the cap of {cap}")
    sig = _signature(f)
    names = list(sig)
    tuple_lists = [list(product(range(d), repeat=sig[n])) for n in names]
    pnames = list(prop_vars(f))
    ranges = [range(1 << len(t)) for t in tuple_lists]
    for masks in product(*ranges):
        preds = {n: frozenset(t for i, t in enumerate(tl) if (m >> i) & 1)
                 for n, tl, m in zip(names, tuple_lists, masks)}
        for values in product((False, True), repeat=len(pnames)):
            yield Interpretation(d, preds, dict(zip(pnames, values)))


def is_monadic(f):
    sig = predicates(f)
    return "=" not in sig and all(a == 1 for a in sig.values())


def valid_in_domains(f, max_domain, cap=DEFAULT_CAP):
    """Search every interpretation with domain size 1..max_domain for a countermodel.

    Free individual variables are read universally.  A "no countermodel"
    verdict is definitive only for monadic formulas searched up to 2^k
    elements (k predicates) and for quantifier-free propositional input.
    """
    g = universal_closure(f)
    k = len(_signature(g))
    for d in range(1, max_domain + 1):
        fn = _compile_fo(g, d)
        for interp in interpretations(g, d, cap):
            if not fn(interp.predicates, interp.props, {}):
                return Verdict(False, countermodel=interp,
                               reason=f"countermodel with {d} element{'s' if d > 1 else ''}")
    definitive = (k == 0 and not any(isinstance(s, QUANTIFIERS) for s in _subformulas(g))) or \
        (is_monadic(g) and max_domain >= (1 << k))
    return Verdict(True, definitive=definitive)


def _subformulas(f):
    yield f
    for c in children(f):
        yield from _subformulas(c)


def monadic_decide(f):
    """Decide validity of a closed monadic formula without equality.

    Truth depends only on which combinations of predicates are realised, so
    it suffices to try every nonempty set of realised types (at most 2^k
    elements for k predicates).
    """
    sig = predicates(f)
    if "=" in sig:
        raise FragmentError("equality is outside the monadic fragment")
    dyadic = sorted(n for n, a in sig.items() if a != 1)
    if dyadic:
        raise FragmentError(f"predicate {dyadic[0]} has arity {sig[dyadic[0]]}; "
                            "the monadic decision procedure needs unary predicates only")
    if free_vars(f):
        raise FragmentError(f"free individual variable {free_vars(f)[0]}; the formula must be closed")
    names = sorted(sig)
    k = len(names)
    pnames = list(prop_vars(f))
    types = list(range((1 << k) - 1, -1, -1))
    for size in range(1, (1 << k) + 1):
        fn = _compile_fo(f, size)
        for combo in combinations(types, size):
            preds = {n: frozenset((e,) for e, t in enumerate(combo) if (t >> i) & 1)
                     for i, n in enumerate(names)}
            for values in product((False, True), repeat=len(pnames)):
                props = dict(zip(pnames, values))
                if not fn(preds, props, {}):
                    return Verdict(False, countermodel=Interpretation(size, preds, props),
                                   reason="countermodel")
    return Verdict(True)


# --------------------------------------------------------------------------
# equivalence-preserving transformations

@dataclass(frozen=True)
class RenameBound:
    path: tuple
    new: str


@dataclass(frozen=True)
class PermuteLike:
    path: tuple


@dataclass(frozen=True)
class Passage:
    law: str
    path: tuple


PASSAGE_LAWS = ("forall-and", "forall-or", "exists-and", "exists-or", "not-forall", "not-exists")
_LAW_SHAPE = {
    "forall-and": (Forall, And), "forall-or": (Forall, Or),
    "exists-and": (Exists, And), "exists-or": (Exists, Or),
}


def _occurs(x, f):
    _, free, bound = variables(f)
    return x in free or x in bound


def transform(f, step):
    """Apply one equivalence step at its path; side conditions are enforced."""
    path = tuple(step.path)
    g = subformula_at(f, path)
    if isinstance(step, RenameBound):
        if not isinstance(g, QUANTIFIERS):
            raise LogicError("rename needs a quantifier at the given path")
        if step.new == g.x:
            return f
        if _occurs(step.new, g.body):
            raise SideConditionError(f"{step.new} already occurs in the scope of ({g.x})")
        new = type(g)(step.new, substitute_individual(g.body, g.x, step.new))
    elif isinstance(step, PermuteLike):
        if not (isinstance(g, QUANTIFIERS) and type(g.body) is type(g)):
            raise SideConditionError("permutation needs two adjacent quantifiers of the same kind")
        q = type(g)
        new = q(g.body.x, q(g.x, g.body.body))
    elif isinstance(step, Passage):
        new = _passage(step.law, g)
    else:
        raise TypeError(step)
    return replace_at(f, path, new)


def _passage(law, g):
    if law not in PASSAGE_LAWS:
        raise LogicError(f"unknown law {law!r}; choose from {', '.join(PASSAGE_LAWS)}")
    if law == "not-forall":
        if isinstance(g, Not) and isinstance(g.f, Forall):
            return Exists(g.f.x, Not(g.f.body))
        if isinstance(g, Exists) and isinstance(g.body, Not):
            return Not(Forall(g.x, g.body.f))
        raise LogicError("subformula is not an instance of the not-forall law")
    if law == "not-exists":
        if isinstance(g, Not) and isinstance(g.f, Exists):
            return Forall(g.f.x, Not(g.f.body))
        if isinstance(g, Forall) and isinstance(g.body, Not):
            return Not(Exists(g.x, g.body.f))
        raise LogicError("subformula is not an instance of the not-exists law")
    q, op = _LAW_SHAPE[law]
    if isinstance(g, q) and isinstance(g.body, op):
        x, phi, psi = g.x, g.body.l, g.body.r
        forward = True
    elif isinstance(g, op) and isinstance(g.l, q):
        x, phi, psi = g.l.x, g.l.body, g.r
        forward = False
    else:
        raise LogicError(f"subformula is not an instance of the {law} law")
    if x in free_vars(psi):
        raise SideConditionError(f"side condition violated: {x} is free in {to_infix(psi)}")
    return op(q(x, phi), psi) if forward else q(x, op(phi, psi))
