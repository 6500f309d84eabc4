"""Proof kernel for the four-axiom propositional calculus.

Primitive connectives are disjunction and negation; ->, & and <-> are
defined symbols that may appear in proof lines and are converted by explicit
DEF steps.  Rules: modus ponens, substitution (hypothesis-free lines only)
and the definitional rewrites.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import CaptureError, LogicError, ProofFormatError
from .formula import (DefinitionMismatch, Formula, Impl, Not, Or, PropVar, format_path,
                      is_quantifier_free, parse_infix, parse_path, rewrite,
                      substitute_prop, to_infix)
from .truth import is_tautology
from .verdict import Verdict

AXIOMS = tuple(parse_infix(t) for t in (
    "p -> p | q",
    "p | p -> p",
    "p | q -> q | p",
    "(p -> q) -> r | p -> r | q",
))

for _k, _ax in enumerate(AXIOMS, 1):
    if not is_tautology(_ax):
        raise RuntimeError(f"axiom {_k} is not a tautology")


# --------------------------------------------------------------------------
# proof objects

@dataclass(frozen=True)
class Ax:
    k: int


@dataclass(frozen=True)
class Hyp:
    i: int


@dataclass(frozen=True)
class MP:
    minor: int
    major: int


@dataclass(frozen=True)
class Sub:
    src: int
    bindings: tuple  # ((name, Formula), ...) sorted by name

    @classmethod
    def of(cls, src, mapping):
        return cls(src, tuple(sorted(mapping.items())))

    @property
    def mapping(self):
        return dict(self.bindings)


@dataclass(frozen=True)
class Def:
    src: int
    path: tuple
    direction: str
    connective: str


@dataclass(frozen=True)
class Line:
    formula: Formula
    justification: object


@dataclass(frozen=True)
class HilbertProof:
    lines: tuple
    hypotheses: tuple = ()

    @property
    def conclusion(self):
        return self.lines[-1].formula

    def __len__(self):
        return len(self.lines)

    def to_text(self):
        return format_proof(self)


def _fail(k, reason):
    return Verdict(False, line=k, reason=reason)


def check_proof(proof, *, axioms=AXIOMS, substitute=substitute_prop, allow_atoms=False):
    """Check every line of a Hilbert proof; the verdict names the first bad line.

    `axioms`, `substitute` and `allow_atoms` let the syllogistic calculus
    reuse this engine with extra axioms and term renaming.
    """
    formulas = []
    hyp_free = []
    for k, line in enumerate(proof.lines, 1):
        f, j = line.formula, line.justification
        if not is_quantifier_free(f) or (not allow_atoms and _has_atom(f)):
            return _fail(k, "line formula is not propositional")

        def ref(n):
            if not isinstance(n, int) or not 1 <= n < k:
                raise ProofFormatError(f"line {k}: reference {n} is not an earlier line")
            return formulas[n - 1]

        free = True
        if isinstance(j, Ax):
            if not 1 <= j.k <= len(axioms):
                return _fail(k, f"no axiom {j.k}")
            if f != axioms[j.k - 1]:
                return _fail(k, f"formula is not axiom {j.k}")
        elif isinstance(j, Hyp):
            if not 1 <= j.i <= len(proof.hypotheses):
                return _fail(k, f"no hypothesis {j.i}")
            if f != proof.hypotheses[j.i - 1]:
                return _fail(k, f"formula is not hypothesis {j.i}")
            free = False
        elif isinstance(j, MP):
            minor, major = ref(j.minor), ref(j.major)
            if not isinstance(major, Impl) or major.l != minor:
                return _fail(k, "major premise shape")
            if major.r != f:
                return _fail(k, "conclusion does not match the major premise")
            free = hyp_free[j.minor - 1] and hyp_free[j.major - 1]
        elif isinstance(j, Sub):
            src = ref(j.src)
            if not hyp_free[j.src - 1]:
                return _fail(k, "substitution into a line that depends on hypotheses")
            try:
                result = substitute(src, j.mapping)
            except (CaptureError, LogicError) as e:
                return _fail(k, f"substitution failed: {e}")
            if result != f:
                return _fail(k, "formula is not the stated substitution instance")
        elif isinstance(j, Def):
            src = ref(j.src)
            try:
                result = rewrite(src, j.path, j.direction, j.connective, "or_not")
            except DefinitionMismatch as e:
                return _fail(k, str(e))
            except LogicError as e:
                raise ProofFormatError(f"line {k}: {e}") from None
            if result != f:
                return _fail(k, "formula is not the stated definitional rewrite")
            free = hyp_free[j.src - 1]
        else:
            raise ProofFormatError(f"line {k}: unknown justification {j!r}")
        formulas.append(f)
        hyp_free.append(free)
    if not proof.lines:
        return Verdict(False, reason="empty proof")
    return Verdict(True)


def _has_atom(f):
    from .formula import Atom, children
    return isinstance(f, Atom) or any(_has_atom(c) for c in children(f))


# --------------------------------------------------------------------------
# building proofs

class ProofBuilder:
    """Accumulates proof lines, reusing any formula already derived.

    Each line records the set of hypothesis indices it depends on; a line is
    reused only if its dependencies are no stronger than the new one's.
    """

    def __init__(self, hypotheses=(), axioms=AXIOMS):
        self.hypotheses = tuple(hypotheses)
        self.axioms = axioms
        self.lines = []
        self.deps = []
        self._index = {}
        self._imported = {}

    def formula(self, n):
        return self.lines[n - 1].formula

    def _add(self, f, just, deps):
        hit = self._index.get(f)
        if hit is not None and self.deps[hit - 1] <= deps:
            return hit
        self.lines.append(Line(f, just))
        self.deps.append(deps)
        n = len(self.lines)
        if hit is None or deps < self.deps[hit - 1]:
            self._index[f] = n
        return n

    def axiom(self, k, mapping=None):
        n = self._add(self.axioms[k - 1], Ax(k), frozenset())
        return self.sub(n, mapping) if mapping else n

    def hyp(self, i):
        return self._add(self.hypotheses[i - 1], Hyp(i), frozenset({i}))

    def mp(self, minor, major):
        a, b = self.formula(minor), self.formula(major)
        if not isinstance(b, Impl) or b.l != a:
            raise LogicError(f"cannot apply modus ponens to {to_infix(a)} and {to_infix(b)}")
        return self._add(b.r, MP(minor, major), self.deps[minor - 1] | self.deps[major - 1])

    def sub(self, src, mapping):
        mapping = {k: v for k, v in mapping.items() if v != PropVar(k)}
        if not mapping:
            return src
        if self.deps[src - 1]:
            raise LogicError("substitution needs a hypothesis-free line")
        f = substitute_prop(self.formula(src), mapping)
        return self._add(f, Sub.of(src, mapping), frozenset())

    def define(self, src, path, direction, connective):
        f = rewrite(self.formula(src), tuple(path), direction, connective, "or_not")
        return self._add(f, Def(src, tuple(path), direction, connective), self.deps[src - 1])

    def fold(self, src, *paths, connective="impl"):
        for path in paths:
            src = self.define(src, path, "fold", connective)
        return src

    def include(self, proof, hyp_map=None):
        """Copy a proof's lines in; its Hyp(i) becomes this builder's Hyp(hyp_map[i])."""
        local = {}
        for k, line in enumerate(proof.lines, 1):
            j = line.justification
            if isinstance(j, Ax):
                n = self.axiom(j.k)
            elif isinstance(j, Hyp):
                n = self.hyp(hyp_map[j.i] if hyp_map else j.i)
            elif isinstance(j, MP):
                n = self.mp(local[j.minor], local[j.major])
            elif isinstance(j, Sub):
                n = self.sub(local[j.src], j.mapping)
            else:
                n = self.define(local[j.src], j.path, j.direction, j.connective)
            local[k] = n
        return local[len(proof.lines)]

    def theorem(self, name, **mapping):
        """Line proving an instance of a stock theorem schema."""
        key = name
        if key not in self._imported:
            self._imported[key] = self.include(THEOREMS[name]())
        return self.sub(self._imported[key], {k: _as_formula(v) for k, v in mapping.items()})

    # derived rules ---------------------------------------------------------

    def chain(self, ab, bc):
        """From A->B and B->C derive A->C."""
        a_b, b_c = self.formula(ab), self.formula(bc)
        s = self.theorem("syllogism", p=a_b.l, q=a_b.r, r=b_c.r)
        return self.mp(ab, self.mp(bc, s))

    def add_left(self, ab, r):
        """From A->B derive R|A -> R|B."""
        a_b = self.formula(ab)
        return self.mp(ab, self.axiom(4, {"p": a_b.l, "q": a_b.r, "r": r}))

    def add_right(self, ab, r):
        """From A->B derive A|R -> B|R."""
        a_b = self.formula(ab)
        first = self.axiom(3, {"p": a_b.l, "q": r})
        last = self.axiom(3, {"p": r, "q": a_b.r})
        return self.chain(self.chain(first, self.add_left(ab, r)), last)

    def cases(self, ac, bc):
        """From A->C and B->C derive A|B -> C."""
        c = self.formula(ac).r
        x = self.add_left(bc, self.formula(ac).l)
        y = self.add_right(ac, c)
        return self.chain(self.chain(x, y), self.axiom(2, {"p": c}))

    def build(self):
        return HilbertProof(tuple(self.lines), self.hypotheses)

    def finish(self, n):
        """Build the proof with line n's formula as its conclusion."""
        _move_to_end(self, n)
        return self.build()


def _as_formula(v):
    return parse_infix(v) if isinstance(v, str) else v


# --------------------------------------------------------------------------
# stock theorems, each derived from the axioms alone

def _fresh():
    return ProofBuilder()


def _thm_syllogism():
    b = _fresh()
    n = b.axiom(4, {"p": PropVar("q"), "q": PropVar("r"), "r": Not(PropVar("p"))})
    b.fold(n, (1, 0), (1, 1))
    return b.build()


def _thm_identity():
    b = _fresh()
    b.chain(b.axiom(1, {"q": PropVar("p")}), b.axiom(2))
    return b.build()


def _thm_or_right():
    b = _fresh()
    p, q = PropVar("p"), PropVar("q")
    b.chain(b.axiom(1, {"p": q, "q": p}), b.axiom(3, {"p": q, "q": p}))
    return b.build()


def _thm_weakening():
    b = _fresh()
    p, q = PropVar("p"), PropVar("q")
    n = b.chain(b.axiom(1, {"p": q, "q": Not(p)}), b.axiom(3, {"p": q, "q": Not(p)}))
    b.fold(n, (1,))
    return b.build()


def _thm_excluded_middle():
    b = _fresh()
    p = PropVar("p")
    n = b.define(b.theorem("identity"), (), "expand", "impl")
    b.mp(n, b.axiom(3, {"p": Not(p), "q": p}))
    return b.build()


def _thm_dn_intro():
    b = _fresh()
    n = b.theorem("excluded-middle", p=Not(PropVar("p")))
    b.fold(n, ())
    return b.build()


def _thm_dn_elim():
    b = _fresh()
    p = PropVar("p")
    nnnp = Not(Not(Not(p)))
    x = b.add_left(b.theorem("dn-intro", p=Not(p)), p)
    y = b.mp(b.theorem("excluded-middle"), x)
    z = b.mp(y, b.axiom(3, {"p": p, "q": nnnp}))
    b.fold(z, ())
    return b.build()


def _thm_permutation():
    b = _fresh()
    p, q, r = PropVar("p"), PropVar("q"), PropVar("r")
    x = b.chain(b.axiom(1, {"q": r}), b.theorem("or-right", p=q, q=Or(p, r)))
    y = b.add_left(b.theorem("or-right", p=p, q=r), q)
    b.cases(x, y)
    return b.build()


def _thm_association():
    b = _fresh()
    p, q, r = PropVar("p"), PropVar("q"), PropVar("r")
    pq = Or(p, q)
    to_end = b.axiom(1, {"p": pq, "q": r})
    x = b.chain(b.axiom(1), to_end)
    y1 = b.chain(b.theorem("or-right", p=p, q=q), to_end)
    y2 = b.theorem("or-right", p=pq, q=r)
    b.cases(x, b.cases(y1, y2))
    return b.build()


def _thm_commutation():
    b = _fresh()
    p, q = PropVar("p"), PropVar("q")
    n = b.theorem("permutation", p=Not(p), q=Not(q))
    b.fold(n, (0, 1), (0,), (1, 1), (1,))
    return b.build()


def _thm_contraction():
    b = _fresh()
    p, q = PropVar("p"), PropVar("q")
    a = b.theorem("association", p=Not(p), q=Not(p), r=q)
    c = b.add_right(b.axiom(2, {"p": Not(p)}), q)
    b.fold(b.chain(a, c), (0, 1), (0,), (1,))
    return b.build()


def _thm_ex_falso():
    b = _fresh()
    b.fold(b.axiom(1, {"p": Not(PropVar("p"))}), (1,))
    return b.build()


def _thm_self_refutation():
    b = _fresh()
    b.fold(b.axiom(2, {"p": Not(PropVar("p"))}), (0,))
    return b.build()


def _thm_or_neg():
    return deduction_theorem(deduction_theorem(_lemma_or_neg()))


def _thm_case_merge():
    return deduction_theorem(deduction_theorem(_lemma_case_merge()))


THEOREMS = {}
for _name, _fn in [
    ("syllogism", _thm_syllogism),            # (q -> r) -> (p -> q) -> p -> r
    ("identity", _thm_identity),              # p -> p
    ("or-right", _thm_or_right),              # q -> p | q
    ("weakening", _thm_weakening),            # q -> p -> q
    ("excluded-middle", _thm_excluded_middle),  # p | ~p
    ("dn-intro", _thm_dn_intro),              # p -> ~~p
    ("dn-elim", _thm_dn_elim),                # ~~p -> p
    ("permutation", _thm_permutation),        # p | (q | r) -> q | (p | r)
    ("association", _thm_association),        # p | (q | r) -> (p | q) | r
    ("commutation", _thm_commutation),        # (p -> q -> r) -> q -> p -> r
    ("contraction", _thm_contraction),        # (p -> p -> q) -> p -> q
    ("ex-falso", _thm_ex_falso),              # ~p -> p -> q
    ("self-refutation", _thm_self_refutation),  # (p -> ~p) -> ~p
    ("or-neg", _thm_or_neg),                  # ~p -> ~q -> ~(p | q)
    ("case-merge", _thm_case_merge),          # (p -> r) -> (~p -> r) -> r
]:
    THEOREMS[_name] = lru_cache(maxsize=None)(_fn)


# --------------------------------------------------------------------------
# deduction theorem

def _dependencies(proof):
    deps = []
    for line in proof.lines:
        j = line.justification
        if isinstance(j, Hyp):
            d = frozenset({j.i})
        elif isinstance(j, MP):
            d = deps[j.minor - 1] | deps[j.major - 1]
        elif isinstance(j, Def):
            d = deps[j.src - 1]
        else:
            d = frozenset()
        deps.append(d)
    return deps


def deduction_theorem(proof, verify=True):
    """Turn a proof of  G, P |- Q  into a proof of  G |- P -> Q  (P the last hypothesis).

    Pass verify=False for proofs already known to check (internal callers).
    """
    if not proof.hypotheses:
        raise LogicError("no hypothesis to discharge")
    if verify:
        verdict = check_proof(proof)
        if not verdict:
            raise LogicError(f"input proof is invalid: {verdict.describe()}")
    last = len(proof.hypotheses)
    P = proof.hypotheses[-1]
    b = ProofBuilder(proof.hypotheses[:-1])
    deps = _dependencies(proof)
    plain = {}   # k -> line proving A_k (when A_k does not rest on P)
    under = {}   # k -> line proving P -> A_k
    for k, line in enumerate(proof.lines, 1):
        j = line.justification
        A = line.formula
        if last not in deps[k - 1]:
            if isinstance(j, Ax):
                plain[k] = b.axiom(j.k)
            elif isinstance(j, Hyp):
                plain[k] = b.hyp(j.i)
            elif isinstance(j, MP):
                plain[k] = b.mp(plain[j.minor], plain[j.major])
            elif isinstance(j, Sub):
                plain[k] = b.sub(plain[j.src], j.mapping)
            else:
                plain[k] = b.define(plain[j.src], j.path, j.direction, j.connective)
            continue
        if isinstance(j, Hyp):
            under[k] = b.theorem("identity", p=P)
        elif isinstance(j, Def):
            under[k] = b.define(under[j.src], (1,) + j.path, j.direction, j.connective)
        else:  # MP with at least one premise resting on P
            minor_p = j.minor in under
            major_p = j.major in under
            if minor_p and not major_p:
                under[k] = b.chain(under[j.minor], plain[j.major])
            elif major_p and not minor_p:
                swapped = b.mp(under[j.major], b.theorem(
                    "commutation", p=P, q=proof.lines[j.minor - 1].formula, r=A))
                under[k] = b.mp(plain[j.minor], swapped)
            else:
                B = proof.lines[j.minor - 1].formula
                swapped = b.mp(under[j.major], b.theorem("commutation", p=P, q=B, r=A))
                twice = b.chain(under[j.minor], swapped)
                under[k] = b.mp(twice, b.theorem("contraction", p=P, q=A))
    n = len(proof.lines)
    if n not in under:
        last_line = b.mp(plain[n], b.theorem("weakening", p=P, q=proof.conclusion))
    else:
        last_line = under[n]
    return b.finish(last_line)


def _move_to_end(b, n):
    """Make line n's formula the last line of the proof."""
    if n == len(b.lines):
        return
    f = b.formula(n)
    ident = b.theorem("identity", p=f)
    # appended directly: the deduplicating _add would hand back line n
    b.lines.append(Line(f, MP(n, ident)))
    b.deps.append(b.deps[n - 1])


# --------------------------------------------------------------------------
# lemma library

@dataclass(frozen=True)
class Lemma:
    name: str
    hypotheses: tuple
    conclusion: Formula
    proof: HilbertProof

    @property
    def schema(self):
        out = self.conclusion
        for h in reversed(self.hypotheses):
            out = Impl(h, out)
        return out


def _hyp_lemma(hyps, build):
    b = ProofBuilder([parse_infix(h) for h in hyps])
    build(b)
    return b.build()


def _lemma_or_neg():
    def build(b):
        p, q = PropVar("p"), PropVar("q")
        target = Not(Or(p, q))
        left = b.mp(b.hyp(1), b.theorem("ex-falso", p=p, q=target))
        right = b.mp(b.hyp(2), b.theorem("ex-falso", p=q, q=target))
        b.mp(b.cases(left, right), b.theorem("self-refutation", p=Or(p, q)))
    return _hyp_lemma(["~p", "~q"], build)


def _lemma_case_merge():
    def build(b):
        b.mp(b.theorem("excluded-middle"), b.cases(b.hyp(1), b.hyp(2)))
    return _hyp_lemma(["p -> r", "~p -> r"], build)


def _lemma_from_theorem(hyp, name):
    def build(b):
        b.mp(b.hyp(1), b.theorem(name))
    return _hyp_lemma([hyp], build)


@lru_cache(maxsize=None)
def lemma_library():
    """Stock lemmas: hypothesis-style derived rules plus the theorem schemas."""
    out = [
        Lemma("or-intro-left", (parse_infix("p"),), parse_infix("p | q"),
              _hyp_lemma(["p"], lambda b: b.mp(b.hyp(1), b.axiom(1)))),
        Lemma("or-intro-right", (parse_infix("q"),), parse_infix("p | q"),
              _lemma_from_theorem("q", "or-right")),
        Lemma("or-neg", (parse_infix("~p"), parse_infix("~q")), parse_infix("~(p | q)"),
              _lemma_or_neg()),
        Lemma("double-negation-intro", (parse_infix("p"),), parse_infix("~~p"),
              _lemma_from_theorem("p", "dn-intro")),
        Lemma("double-negation-elim", (parse_infix("~~p"),), parse_infix("p"),
              _lemma_from_theorem("~~p", "dn-elim")),
        Lemma("case-merge-rule", (parse_infix("p -> r"), parse_infix("~p -> r")),
              parse_infix("r"), _lemma_case_merge()),
    ]
    for name, fn in THEOREMS.items():
        proof = fn()
        out.append(Lemma(name, (), proof.conclusion, proof))
    return tuple(out)


def lemma(name):
    for item in lemma_library():
        if item.name == name:
            return item
    raise KeyError(name)


def instantiate(proof, mapping):
    """Hypothesis-free instance of a schematic proof: its lines plus one SUB."""
    if proof.hypotheses:
        raise LogicError("only hypothesis-free proofs can be instantiated")
    b = ProofBuilder()
    n = b.include(proof)
    return b.finish(b.sub(n, {k: _as_formula(v) for k, v in mapping.items()}))


# --------------------------------------------------------------------------
# text format

def format_justification(j):
    if isinstance(j, Ax):
        return f"AX{j.k}"
    if isinstance(j, Hyp):
        return f"HYP {j.i}"
    if isinstance(j, MP):
        return f"MP {j.minor} {j.major}"
    if isinstance(j, Sub):
        return f"SUB {j.src} " + ", ".join(f"{k}:={to_infix(v)}" for k, v in j.bindings)
    if isinstance(j, Def):
        return f"DEF {j.src} @{format_path(j.path)} {j.direction} {j.connective}"
    raise TypeError(j)


def format_proof(proof):
    out = [f"hyp: {to_infix(h)}" for h in proof.hypotheses]
    for k, line in enumerate(proof.lines, 1):
        out.append(f"{k}: {to_infix(line.formula)} ; {format_justification(line.justification)}")
    return "\n".join(out) + "\n"


_BINDING_SPLIT = re.compile(r",\s*(?=[A-Za-z][A-Za-z0-9_]*\s*:=)")


def parse_bindings(text, where=""):
    mapping = {}
    for part in _BINDING_SPLIT.split(text.strip()):
        if ":=" not in part:
            raise ProofFormatError(f"{where}malformed binding {part!r}")
        name, rhs = part.split(":=", 1)
        name = name.strip()
        if name in mapping:
            raise ProofFormatError(f"{where}variable {name} bound twice")
        mapping[name] = parse_infix(rhs)
    return mapping


def parse_common_justification(text, where=""):
    """Parse MP and DEF, shared by the propositional and first-order formats."""
    parts = text.split()
    if parts[0] == "MP" and len(parts) == 3:
        return MP(int(parts[1]), int(parts[2]))
    if parts[0] == "DEF" and len(parts) == 5 and parts[2].startswith("@"):
        if parts[3] not in ("expand", "fold"):
            raise ProofFormatError(f"{where}direction must be expand or fold")
        try:
            path = parse_path(parts[2][1:])
        except ValueError as e:
            raise ProofFormatError(f"{where}{e}") from None
        return Def(int(parts[1]), path, parts[3], parts[4])
    return None


def parse_justification(text, where=""):
    text = text.strip()
    m = re.fullmatch(r"AX(\d+)", text)
    if m:
        return Ax(int(m.group(1)))
    m = re.fullmatch(r"HYP\s+(\d+)", text)
    if m:
        return Hyp(int(m.group(1)))
    m = re.fullmatch(r"SUB\s+(\d+)\s+(.+)", text)
    if m:
        return Sub.of(int(m.group(1)), parse_bindings(m.group(2), where))
    try:
        j = parse_common_justification(text, where) if text else None
    except ValueError as e:
        raise ProofFormatError(f"{where}{e}") from None
    if j is None:
        raise ProofFormatError(f"{where}unrecognised justification {text!r}")
    return j


def split_numbered_lines(text, header_keys=("hyp",)):
    """Yield ('header', key, value) and ('line', n, formula_text, just_text) items."""
    expected = 1
    for raw_no, raw in enumerate(text.splitlines(), 1):
        s = raw.split("#", 1)[0].strip()
        if not s:
            continue
        where = f"line {raw_no}: "
        head, sep, rest = s.partition(":")
        if not sep:
            raise ProofFormatError(f"{where}missing ':'")
        head = head.strip()
        if head in header_keys:
            yield ("header", head, rest.strip(), where)
            continue
        if not head.isdigit():
            raise ProofFormatError(f"{where}expected a line number, got {head!r}")
        if int(head) != expected:
            raise ProofFormatError(f"{where}line numbers must be dense from 1 (expected {expected})")
        expected += 1
        body, sep, just = rest.rpartition(";")
        if not sep:
            raise ProofFormatError(f"{where}missing '; <justification>'")
        yield ("line", int(head), body.strip(), just.strip(), where)


def parse_proof(text):
    hyps, lines = [], []
    try:
        for item in split_numbered_lines(text):
            if item[0] == "header":
                if lines:
                    raise ProofFormatError(f"{item[3]}hypotheses must precede proof lines")
                hyps.append(parse_infix(item[2]))
            else:
                _, _, body, just, where = item
                lines.append(Line(parse_infix(body), parse_justification(just, where)))
    except ValueError as e:
        if isinstance(e, ProofFormatError):
            raise
        raise ProofFormatError(str(e)) from None
    return HilbertProof(tuple(lines), tuple(hyps))
