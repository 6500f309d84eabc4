"""Natural deduction on sequents  D => P  with five rules plus definitions.

Rules: identity (P => P), thinning on either end of the antecedent,
implication introduction and elimination, and the strong reductio
(from D, ~P => Q and D, ~P => ~Q infer D => P).  Antecedents are sequences:
there is no exchange or contraction, and ImpE/Raa demand literally
identical antecedents.  Definitions use the implication/negation basis.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import LogicError, NotATautology, ProofFormatError
from .formula import (DefinitionMismatch, Formula, Impl, Not, PropVar, expansion_steps,
                      format_path, is_propositional, parse_infix, parse_path, prop_vars,
                      rewrite, to_infix)
from .hilbert import split_numbered_lines
from .truth import evaluate, is_tautology
from .verdict import Verdict


@dataclass(frozen=True)
class Sequent:
    antecedent: tuple
    succedent: Formula

    def __post_init__(self):
        object.__setattr__(self, "antecedent", tuple(self.antecedent))

    def __str__(self):
        left = ", ".join(to_infix(f) for f in self.antecedent)
        return f"{left} => {to_infix(self.succedent)}" if left else f"=> {to_infix(self.succedent)}"


@dataclass(frozen=True)
class Id:
    pass


@dataclass(frozen=True)
class ThinL:
    src: int
    added: Formula


@dataclass(frozen=True)
class ThinR:
    src: int
    added: Formula


@dataclass(frozen=True)
class ImpI:
    src: int


@dataclass(frozen=True)
class ImpE:
    minor: int
    major: int


@dataclass(frozen=True)
class Raa:
    left: int
    right: int


@dataclass(frozen=True)
class NDDef:
    src: int
    side: object  # "suc" or a 1-based antecedent position
    path: tuple
    direction: str
    connective: str


@dataclass(frozen=True)
class NDLine:
    sequent: Sequent
    justification: object


@dataclass(frozen=True)
class NDProof:
    lines: tuple

    @property
    def conclusion(self):
        return self.lines[-1].sequent

    def __len__(self):
        return len(self.lines)

    def to_text(self):
        return format_nd(self)


def _fail(k, reason):
    return Verdict(False, line=k, reason=reason)


def _rule_result(j, ref):
    """Sequent licensed by justification j, or a failure reason string."""
    if isinstance(j, Id):
        return None
    if isinstance(j, ThinL):
        s = ref(j.src)
        return Sequent((j.added,) + s.antecedent, s.succedent)
    if isinstance(j, ThinR):
        s = ref(j.src)
        return Sequent(s.antecedent + (j.added,), s.succedent)
    if isinstance(j, ImpI):
        s = ref(j.src)
        if not s.antecedent:
            return "implication introduction needs a nonempty antecedent"
        return Sequent(s.antecedent[:-1], Impl(s.antecedent[-1], s.succedent))
    if isinstance(j, ImpE):
        a, b = ref(j.minor), ref(j.major)
        if a.antecedent != b.antecedent:
            return "premises have different antecedents"
        if not isinstance(b.succedent, Impl) or b.succedent.l != a.succedent:
            return "major premise shape"
        return Sequent(a.antecedent, b.succedent.r)
    if isinstance(j, Raa):
        a, b = ref(j.left), ref(j.right)
        if a.antecedent != b.antecedent:
            return "premises have different antecedents"
        if not a.antecedent or not isinstance(a.antecedent[-1], Not):
            return "last antecedent formula is not a negation"
        if b.succedent != Not(a.succedent):
            return "right premise does not conclude the negation of the left"
        return Sequent(a.antecedent[:-1], a.antecedent[-1].f)
    if isinstance(j, NDDef):
        s = ref(j.src)
        try:
            if j.side == "suc":
                return Sequent(s.antecedent, rewrite(s.succedent, j.path, j.direction,
                                                     j.connective, "impl_not"))
            k = j.side
            if not isinstance(k, int) or not 1 <= k <= len(s.antecedent):
                return f"no antecedent position {k}"
            ant = list(s.antecedent)
            ant[k - 1] = rewrite(ant[k - 1], j.path, j.direction, j.connective, "impl_not")
            return Sequent(tuple(ant), s.succedent)
        except DefinitionMismatch as e:
            return str(e)
        except LogicError as e:
            raise ProofFormatError(str(e)) from None
    raise ProofFormatError(f"unknown justification {j!r}")


def check_nd(proof):
    """Check each line; the verdict names the first failing line."""
    if not proof.lines:
        return Verdict(False, reason="empty proof")
    seqs = []
    for k, line in enumerate(proof.lines, 1):
        s, j = line.sequent, line.justification
        if not all(is_propositional(f) for f in s.antecedent + (s.succedent,)):
            return _fail(k, "sequent is not propositional")

        def ref(n):
            if not isinstance(n, int) or not 1 <= n < k:
                raise ProofFormatError(f"line {k}: reference {n} is not an earlier line")
            return seqs[n - 1]

        if isinstance(j, Id):
            if s.antecedent != (s.succedent,):
                return _fail(k, "identity needs exactly the succedent as antecedent")
        else:
            try:
                result = _rule_result(j, ref)
            except ProofFormatError as e:
                if str(e).startswith("line "):
                    raise
                raise ProofFormatError(f"line {k}: {e}") from None
            if isinstance(result, str):
                return _fail(k, result)
            if result != s:
                return _fail(k, "sequent does not follow by the stated rule")
        seqs.append(s)
    return Verdict(True)


def entails(sequent):
    """Semantic check: every valuation satisfying the antecedent satisfies the succedent."""
    from .formula import conj
    if not sequent.antecedent:
        return bool(is_tautology(sequent.succedent))
    return bool(is_tautology(Impl(conj(sequent.antecedent), sequent.succedent)))


# --------------------------------------------------------------------------
# building proofs

class NDBuilder:
    def __init__(self):
        self.lines = []
        self._index = {}

    def seq(self, n):
        return self.lines[n - 1].sequent

    def _add(self, s, j):
        hit = self._index.get(s)
        if hit is not None:
            return hit
        self.lines.append(NDLine(s, j))
        self._index[s] = len(self.lines)
        return len(self.lines)

    def _derive(self, j):
        return self._add(_rule_result(j, self.seq), j)

    def identity(self, f):
        return self._add(Sequent((f,), f), Id())

    def thin_left(self, n, f):
        return self._derive(ThinL(n, f))

    def thin_right(self, n, *fs):
        for f in fs:
            n = self._derive(ThinR(n, f))
        return n

    def imp_i(self, n):
        return self._derive(ImpI(n))

    def imp_e(self, minor, major):
        r = _rule_result(ImpE(minor, major), self.seq)
        if isinstance(r, str):
            raise LogicError(r)
        return self._add(r, ImpE(minor, major))

    def raa(self, left, right):
        r = _rule_result(Raa(left, right), self.seq)
        if isinstance(r, str):
            raise LogicError(r)
        return self._add(r, Raa(left, right))

    def define(self, n, side, path, direction, connective):
        return self._derive(NDDef(n, side, tuple(path), direction, connective))

    def assume(self, context, i):
        """context => context[i] (0-based), by identity and thinning."""
        context = tuple(context)
        n = self.identity(context[i])
        for f in reversed(context[:i]):
            n = self.thin_left(n, f)
        return self.thin_right(n, *context[i + 1:])

    def dne(self, n):
        """From D => ~~A derive D => A."""
        s = self.seq(n)
        a = s.succedent.f.f
        ctx = s.antecedent + (Not(a),)
        return self.raa(self.assume(ctx, len(ctx) - 1), self.thin_right(n, Not(a)))

    def dni(self, n):
        """From D => A derive D => ~~A."""
        s = self.seq(n)
        a = s.succedent
        nnn = Not(Not(Not(a)))
        ctx = s.antecedent + (nnn,)
        not_a = self.dne(self.assume(ctx, len(ctx) - 1))
        return self.raa(self.thin_right(n, nnn), not_a)

    def finish(self, n):
        if n != len(self.lines):
            # repeat line n's sequent with the same justification so the
            # wanted sequent is the last line
            s = self.seq(n)
            self.lines.append(NDLine(s, self.lines[n - 1].justification))
        return NDProof(tuple(self.lines))


# --------------------------------------------------------------------------
# completeness construction

def _literal(name, value):
    return PropVar(name) if value else Not(PropVar(name))


def _branch(b, f, context, v):
    """Line proving  context => f  or  context => ~f  as v dictates."""
    memo = {}
    pos = {g.f.name if isinstance(g, Not) else g.name: i for i, g in enumerate(context)}

    def go(g):
        if g in memo:
            return memo[g]
        if isinstance(g, PropVar):
            n = b.assume(context, pos[g.name])
        elif isinstance(g, Not):
            inner = g.f
            n = b.dni(go(inner)) if evaluate(inner, v) else go(inner)
        elif isinstance(g, Impl):
            n = _implication(b, g, context, v, go)
        else:
            raise TypeError(f"expected an implication/negation formula, got {to_infix(g)}")
        memo[g] = n
        return n

    return go(f)


def _implication(b, g, context, v, go):
    left, right = g.l, g.r
    if evaluate(right, v):
        return b.imp_i(b.thin_right(go(right), left))
    if not evaluate(left, v):
        not_left = go(left)
        ctx = context + (left, Not(right))
        inner = b.raa(b.assume(ctx, len(context)), b.thin_right(not_left, left, Not(right)))
        return b.imp_i(inner)
    # left true, right false: refute g itself
    nn = Not(Not(g))
    ctx = context + (nn,)
    has_g = b.dne(b.assume(ctx, len(context)))
    has_right = b.imp_e(b.thin_right(go(left), nn), has_g)
    return b.raa(has_right, b.thin_right(go(right), nn))


def _merge(b, pos_line, neg_line, x, target):
    """From D, x => g and D, ~x => g derive D => g."""
    d = b.seq(pos_line).antecedent[:-1]
    if_pos = b.imp_i(pos_line)
    if_neg = b.imp_i(neg_line)
    ng = Not(target)
    nnx = Not(Not(x))
    # D, ~g, ~~x => x and then g, contradicting ~g
    ctx3 = d + (ng, nnx)
    has_x = b.dne(b.assume(ctx3, len(ctx3) - 1))
    has_g = b.imp_e(has_x, b.thin_right(if_pos, ng, nnx))
    not_x = b.raa(has_g, b.assume(ctx3, len(d)))
    # D, ~g => g from ~x, contradicting ~g
    ctx2 = d + (ng,)
    has_g2 = b.imp_e(not_x, b.thin_right(if_neg, ng))
    return b.raa(has_g2, b.assume(ctx2, len(d)))


def nd_prove_tautology(f):
    """Natural-deduction proof of  => f  for a tautology f."""
    verdict = is_tautology(f)
    if not verdict:
        raise NotATautology(f, verdict.countermodel)
    b = NDBuilder()
    if isinstance(f, Impl) and f.l == f.r:
        return b.finish(b.imp_i(b.identity(f.l)))
    expanded, steps = expansion_steps(f, "impl_not")
    names = list(prop_vars(expanded))

    def build(prefix):
        k = len(prefix)
        if k == len(names):
            context = tuple(_literal(n, val) for n, val in zip(names, prefix))
            return _branch(b, expanded, context, dict(zip(names, prefix)))
        pos = build(prefix + (True,))
        neg = build(prefix + (False,))
        return _merge(b, pos, neg, PropVar(names[k]), expanded)

    n = build(())
    for path, conn in reversed(steps):
        n = b.define(n, "suc", path, "fold", conn)
    return b.finish(n)


# --------------------------------------------------------------------------
# text format

def format_nd_justification(j):
    if isinstance(j, Id):
        return "ID"
    if isinstance(j, ThinL):
        return f"THINL {j.src} {to_infix(j.added)}"
    if isinstance(j, ThinR):
        return f"THINR {j.src} {to_infix(j.added)}"
    if isinstance(j, ImpI):
        return f"IMPI {j.src}"
    if isinstance(j, ImpE):
        return f"IMPE {j.minor} {j.major}"
    if isinstance(j, Raa):
        return f"RAA {j.left} {j.right}"
    if isinstance(j, NDDef):
        side = "suc" if j.side == "suc" else f"ant{j.side}"
        return f"DEF {j.src} {side}@{format_path(j.path)} {j.direction} {j.connective}"
    raise TypeError(j)


def format_nd(proof):
    return "".join(f"{k}: {line.sequent} ; {format_nd_justification(line.justification)}\n"
                   for k, line in enumerate(proof.lines, 1))


def split_top_level(text, sep=","):
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == sep and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return parts


def parse_sequent(text):
    left, sep, right = text.partition("=>")
    if not sep:
        raise ProofFormatError(f"sequent needs '=>': {text!r}")
    ant = tuple(parse_infix(p) for p in split_top_level(left) if p.strip()) if left.strip() else ()
    return Sequent(ant, parse_infix(right))


def parse_nd_justification(text, where=""):
    parts = text.split(None, 2)
    if not parts:
        raise ProofFormatError(f"{where}missing justification")
    rule = parts[0]
    try:
        if rule == "ID" and len(parts) == 1:
            return Id()
        if rule in ("THINL", "THINR") and len(parts) == 3:
            cls = ThinL if rule == "THINL" else ThinR
            return cls(int(parts[1]), parse_infix(parts[2]))
        if rule == "IMPI" and len(parts) == 2:
            return ImpI(int(parts[1]))
        if rule in ("IMPE", "RAA"):
            nums = text.split()[1:]
            if len(nums) == 2:
                cls = ImpE if rule == "IMPE" else Raa
                return cls(int(nums[0]), int(nums[1]))
        if rule == "DEF":
            m = re.fullmatch(r"DEF\s+(\d+)\s+(suc|ant\d+)@(\S+)\s+(expand|fold)\s+(\w+)", text.strip())
            if m:
                side = "suc" if m.group(2) == "suc" else int(m.group(2)[3:])
                return NDDef(int(m.group(1)), side, parse_path(m.group(3)), m.group(4), m.group(5))
    except ValueError as e:
        if isinstance(e, ProofFormatError):
            raise
        raise ProofFormatError(f"{where}{e}") from None
    raise ProofFormatError(f"{where}unrecognised rule {text!r}")


def parse_nd(text):
    lines = []
    try:
        for item in split_numbered_lines(text, header_keys=()):
            _, _, body, just, where = item
            lines.append(NDLine(parse_sequent(body), parse_nd_justification(just, where)))
    except ValueError as e:
        if isinstance(e, ProofFormatError):
            raise
        raise ProofFormatError(str(e)) from None
    return NDProof(tuple(lines))
