"""Formula syntax trees, the infix and Polish parsers, printing and substitution.

Nodes are immutable, hash-cached and interned: building a formula that
already exists returns the existing object, so equality tests on large
proofs usually stop at an identity check.
"""
from __future__ import annotations

import re
import weakref
from dataclasses import dataclass, field

from .errors import CaptureError, LogicError, ParseError

IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


class Formula:
    __slots__ = ()

    def __str__(self):
        return to_infix(self)


_INTERNED = weakref.WeakValueDictionary()


def _node(cls):
    """Frozen dataclass with a precomputed hash, interned on construction."""
    cls = dataclass(frozen=True, eq=False, repr=False)(cls)
    fields = [f.name for f in cls.__dataclass_fields__.values() if f.name != "_h"]
    init = cls.__init__

    def __new__(klass, *args, **kwargs):
        key = (klass,) + args + tuple(kwargs[n] for n in fields[len(args):])
        obj = _INTERNED.get(key)
        if obj is None:
            obj = object.__new__(klass)
            _INTERNED[key] = obj
        return obj

    def __init__(self, *args, **kwargs):
        if "_h" not in self.__dict__:
            init(self, *args, **kwargs)
            __post_init__(self)

    def __post_init__(self):
        object.__setattr__(
            self, "_h", hash((cls.__name__,) + tuple(getattr(self, n) for n in fields))
        )

    def __eq__(self, other):
        if self is other:
            return True
        if other.__class__ is not self.__class__ or other._h != self._h:
            return False
        return all(getattr(self, n) == getattr(other, n) for n in fields)

    def __hash__(self):
        return self._h

    def __repr__(self):
        return f"{cls.__name__}({', '.join(repr(getattr(self, n)) for n in fields)})"

    cls.__new__ = __new__
    cls.__init__ = __init__
    cls.__post_init__ = __post_init__
    cls.__eq__ = __eq__
    cls.__hash__ = __hash__
    cls.__repr__ = __repr__
    return cls


@_node
class PropVar(Formula):
    name: str
    _h: int = field(default=0, init=False)


@_node
class Not(Formula):
    f: Formula
    _h: int = field(default=0, init=False)


@_node
class And(Formula):
    l: Formula
    r: Formula
    _h: int = field(default=0, init=False)


@_node
class Or(Formula):
    l: Formula
    r: Formula
    _h: int = field(default=0, init=False)


@_node
class Impl(Formula):
    l: Formula
    r: Formula
    _h: int = field(default=0, init=False)


@_node
class Equiv(Formula):
    l: Formula
    r: Formula
    _h: int = field(default=0, init=False)


@_node
class Atom(Formula):
    pred: str
    args: tuple
    _h: int = field(default=0, init=False)


@_node
class Forall(Formula):
    x: str
    body: Formula
    _h: int = field(default=0, init=False)


@_node
class Exists(Formula):
    x: str
    body: Formula
    _h: int = field(default=0, init=False)


BINARY = (And, Or, Impl, Equiv)
QUANTIFIERS = (Forall, Exists)


def children(f):
    if isinstance(f, Not):
        return (f.f,)
    if isinstance(f, BINARY):
        return (f.l, f.r)
    if isinstance(f, QUANTIFIERS):
        return (f.body,)
    return ()


def rebuild(f, kids):
    """Return a node of the same kind as `f` with new children."""
    if isinstance(f, Not):
        return Not(kids[0])
    if isinstance(f, BINARY):
        return type(f)(kids[0], kids[1])
    if isinstance(f, QUANTIFIERS):
        return type(f)(f.x, kids[0])
    return f


def size(f):
    return 1 + sum(size(c) for c in children(f))


def is_propositional(f):
    if isinstance(f, (Atom, Forall, Exists)):
        return False
    return all(is_propositional(c) for c in children(f))


def is_quantifier_free(f):
    if isinstance(f, QUANTIFIERS):
        return False
    return all(is_quantifier_free(c) for c in children(f))


# --------------------------------------------------------------------------
# infix parser

_TOKEN = re.compile(r"\s*(<->|->|[~&|(),=]|[A-Za-z][A-Za-z0-9_]*)")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start, text)
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()
    return tokens


class _InfixParser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self, k=0):
        j = self.i + k
        return self.tokens[j][0] if j < len(self.tokens) else None

    def pos(self):
        return self.tokens[self.i][1] if self.i < len(self.tokens) else len(self.text)

    def take(self, expected=None):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", len(self.text), self.text)
        if expected is not None and tok != expected:
            raise ParseError(f"expected {expected!r}, found {tok!r}", self.pos(), self.text)
        self.i += 1
        return tok

    def ident(self):
        tok = self.peek()
        if tok is None or not IDENT.fullmatch(tok):
            raise ParseError(f"expected identifier, found {tok!r}", self.pos(), self.text)
        self.i += 1
        return tok

    def parse(self):
        if not self.tokens:
            raise ParseError("empty formula", 0, self.text)
        f = self.equiv()
        if self.peek() is not None:
            raise ParseError(f"unexpected {self.peek()!r}", self.pos(), self.text)
        return f

    def equiv(self):
        left = self.impl()
        if self.peek() == "<->":
            self.take()
            return Equiv(left, self.equiv())
        return left

    def impl(self):
        left = self.disj()
        if self.peek() == "->":
            self.take()
            return Impl(left, self.impl())
        return left

    def disj(self):
        left = self.conj()
        while self.peek() == "|":
            self.take()
            left = Or(left, self.conj())
        return left

    def conj(self):
        left = self.unary()
        while self.peek() == "&":
            self.take()
            left = And(left, self.unary())
        return left

    def _starts_unary(self, tok):
        return tok is not None and (tok in ("~", "(") or IDENT.fullmatch(tok) is not None)

    def unary(self):
        tok = self.peek()
        if tok == "~":
            self.take()
            return Not(self.unary())
        if tok == "(":
            # "(x)" / "(Ex)" / "(E x)" followed by a formula is a quantifier
            a, b, c = self.peek(1), self.peek(2), self.peek(3)
            if a is not None and IDENT.fullmatch(a):
                if b == ")" and self._starts_unary(self.peek(3)):
                    self.i += 3
                    body = self.unary()
                    if a.startswith("E") and len(a) > 1:
                        return Exists(a[1:], body)
                    return Forall(a, body)
                if (a == "E" and b is not None and IDENT.fullmatch(b) and c == ")"
                        and self._starts_unary(self.peek(4))):
                    self.i += 4
                    return Exists(b, self.unary())
            self.take("(")
            f = self.equiv()
            self.take(")")
            return f
        name = self.ident()
        if self.peek() == "(":
            self.take()
            args = [self.ident()]
            while self.peek() == ",":
                self.take()
                args.append(self.ident())
            self.take(")")
            return Atom(name, tuple(args))
        if self.peek() == "=":
            self.take()
            return Atom("=", (name, self.ident()))
        return PropVar(name)


def parse_infix(text):
    """Parse ASCII infix syntax: ~ & | -> <->, quantifiers (x) and (Ex)."""
    return _InfixParser(text).parse()


# --------------------------------------------------------------------------
# Polish notation

_POLISH_BINARY = {"K": And, "A": Or, "C": Impl, "E": Equiv}


def parse_polish(text):
    """Parse Polish prefix notation over N, K, A, C, E and lowercase letters."""
    s = "".join(text.split())
    if not s:
        raise ParseError("empty formula", 0, text)
    pos = 0

    def go():
        nonlocal pos
        if pos >= len(s):
            raise ParseError("premature end of input", pos, s)
        ch = s[pos]
        pos += 1
        if ch == "N":
            return Not(go())
        if ch in _POLISH_BINARY:
            left = go()
            return _POLISH_BINARY[ch](left, go())
        if ch.islower():
            return PropVar(ch)
        raise ParseError(f"symbol {ch!r} is not a connective or variable", pos - 1, s)

    f = go()
    if pos != len(s):
        raise ParseError("trailing symbols", pos, s)
    return f


# --------------------------------------------------------------------------
# printing

_PREC = {Equiv: 1, Impl: 2, Or: 3, And: 4}
_OPS = {Equiv: "<->", Impl: "->", Or: "|", And: "&"}


def _prec(f):
    return _PREC.get(type(f), 5)


def to_infix(f):
    """Canonical infix text with minimal parentheses."""
    if isinstance(f, PropVar):
        return f.name
    if isinstance(f, Atom):
        if f.pred == "=":
            return f"{f.args[0]} = {f.args[1]}"
        return f"{f.pred}({','.join(f.args)})"
    if isinstance(f, (Not, Forall, Exists)):
        inner = children(f)[0]
        body = to_infix(inner)
        if _prec(inner) < 5:
            body = f"({body})"
        if isinstance(f, Not):
            return "~" + body
        prefix = f"(E{f.x})" if isinstance(f, Exists) else f"({f.x})"
        return prefix + body
    p = _PREC[type(f)]
    left, right = to_infix(f.l), to_infix(f.r)
    if isinstance(f, (Impl, Equiv)):  # right-associative
        left_paren, right_paren = _prec(f.l) <= p, _prec(f.r) < p
    else:
        left_paren, right_paren = _prec(f.l) < p, _prec(f.r) <= p
    if left_paren:
        left = f"({left})"
    if right_paren:
        right = f"({right})"
    return f"{left} {_OPS[type(f)]} {right}"


_POLISH_LETTER = {Not: "N", And: "K", Or: "A", Impl: "C", Equiv: "E"}


def to_polish(f):
    if isinstance(f, PropVar):
        if len(f.name) != 1 or not f.name.islower():
            raise LogicError(f"Polish notation needs single lowercase letters, got {f.name!r}")
        return f.name
    if type(f) not in _POLISH_LETTER:
        raise LogicError("Polish notation is only available for propositional formulas")
    return _POLISH_LETTER[type(f)] + "".join(to_polish(c) for c in children(f))


def render(f, notation="infix"):
    if notation == "infix":
        return to_infix(f)
    if notation == "polish":
        return to_polish(f)
    raise ValueError(f"unknown notation {notation!r}")


# --------------------------------------------------------------------------
# variables

def variables(f):
    """Return (propositional, free individual, bound individual) names, sorted."""
    props, free, bound = set(), set(), set()

    def go(g, scope):
        if isinstance(g, PropVar):
            props.add(g.name)
        elif isinstance(g, Atom):
            for a in g.args:
                (bound if a in scope else free).add(a)
        elif isinstance(g, QUANTIFIERS):
            bound.add(g.x)
            go(g.body, scope | {g.x})
        else:
            for c in children(g):
                go(c, scope)

    go(f, frozenset())
    return tuple(sorted(props)), tuple(sorted(free)), tuple(sorted(bound))


def prop_vars(f):
    return variables(f)[0]


def free_vars(f):
    return variables(f)[1]


def predicates(f):
    """Map predicate name -> arity; inconsistent arities are an error."""
    out = {}

    def go(g):
        if isinstance(g, Atom):
            if out.setdefault(g.pred, len(g.args)) != len(g.args):
                raise LogicError(f"predicate {g.pred} used with different arities")
        for c in children(g):
            go(c)

    go(f)
    return out


# --------------------------------------------------------------------------
# substitution

def substitute_prop(f, mapping):
    """Simultaneously replace propositional variables; refuse variable capture."""
    if not mapping:
        return f
    frees = {k: set(free_vars(v)) for k, v in mapping.items()}

    def go(g, scope):
        if isinstance(g, PropVar):
            if g.name in mapping:
                clash = frees[g.name] & scope
                if clash:
                    var = sorted(clash)[0]
                    raise CaptureError(var, var)
                return mapping[g.name]
            return g
        if isinstance(g, Atom):
            return g
        if isinstance(g, QUANTIFIERS):
            return type(g)(g.x, go(g.body, scope | {g.x}))
        return rebuild(g, [go(c, scope) for c in children(g)])

    return go(f, frozenset())


def substitute_individual(f, x, y):
    """Replace the free occurrences of individual variable x by y."""
    if isinstance(f, Atom):
        return Atom(f.pred, tuple(y if a == x else a for a in f.args))
    if isinstance(f, QUANTIFIERS):
        if f.x == x:
            return f
        return type(f)(f.x, substitute_individual(f.body, x, y))
    if isinstance(f, PropVar):
        return f
    return rebuild(f, [substitute_individual(c, x, y) for c in children(f)])


def free_for(y, x, f):
    """True iff no free occurrence of x in f lies inside a quantifier on y."""
    def go(g, under_y):
        if isinstance(g, Atom):
            return not (under_y and x in g.args)
        if isinstance(g, QUANTIFIERS):
            if g.x == x:
                return True
            return go(g.body, under_y or g.x == y)
        return all(go(c, under_y) for c in children(g))

    return x == y or go(f, False)


# --------------------------------------------------------------------------
# positions

def subformula_at(f, path):
    for i in path:
        kids = children(f)
        if not 0 <= i < len(kids):
            raise LogicError(f"path {format_path(path)} does not address a subformula")
        f = kids[i]
    return f


def replace_at(f, path, new):
    if not path:
        return new
    kids = list(children(f))
    i = path[0]
    if not 0 <= i < len(kids):
        raise LogicError(f"path does not address a subformula (index {i})")
    kids[i] = replace_at(kids[i], path[1:], new)
    return rebuild(f, kids)


def format_path(path):
    return "." if not path else ".".join(str(i) for i in path)


def parse_path(text):
    if text in (".", ""):
        return ()
    if not re.fullmatch(r"\d+(\.\d+)*", text):
        raise ValueError(f"malformed path {text!r}")
    return tuple(int(i) for i in text.split("."))


# --------------------------------------------------------------------------
# defined connectives
#
# or_not:   P -> Q  := ~P | Q        impl_not:  P | Q := ~P -> Q
#           P & Q   := ~(~P | ~Q)               P & Q := ~(P -> ~Q)
#           P <-> Q := (P -> Q) & (Q -> P)  (both bases)
#           (Ex)P   := ~(x)~P        (first-order, either basis)

BASES = {"or_not": ("impl", "and", "equiv"), "impl_not": ("or", "and", "equiv")}
_ROOT = {"impl": Impl, "and": And, "equiv": Equiv, "or": Or, "exists": Exists}


class DefinitionMismatch(LogicError):
    pass


def unfold(f, connective, basis="or_not"):
    """Replace the defined connective at the root of f by its definiens."""
    if connective not in BASES[basis] and connective != "exists":
        raise DefinitionMismatch(f"{connective} is primitive in the {basis} basis")
    if not isinstance(f, _ROOT[connective]):
        raise DefinitionMismatch(f"subformula is not a {connective}")
    if connective == "exists":
        return Not(Forall(f.x, Not(f.body)))
    p, q = f.l, f.r
    if connective == "equiv":
        return And(Impl(p, q), Impl(q, p))
    if connective == "impl":
        return Or(Not(p), q)
    if connective == "or":
        return Impl(Not(p), q)
    if basis == "or_not":
        return Not(Or(Not(p), Not(q)))
    return Not(Impl(p, Not(q)))


def fold(f, connective, basis="or_not"):
    """Inverse of unfold: recognise a definiens and return the defined form."""
    if connective not in BASES[basis] and connective != "exists":
        raise DefinitionMismatch(f"{connective} is primitive in the {basis} basis")
    bad = DefinitionMismatch(f"subformula does not match the definiens of {connective}")
    if connective == "exists":
        if isinstance(f, Not) and isinstance(f.f, Forall) and isinstance(f.f.body, Not):
            return Exists(f.f.x, f.f.body.f)
        raise bad
    if connective == "equiv":
        if (isinstance(f, And) and isinstance(f.l, Impl) and isinstance(f.r, Impl)
                and f.l.l == f.r.r and f.l.r == f.r.l):
            return Equiv(f.l.l, f.l.r)
        raise bad
    if connective == "impl":
        if isinstance(f, Or) and isinstance(f.l, Not):
            return Impl(f.l.f, f.r)
        raise bad
    if connective == "or":
        if isinstance(f, Impl) and isinstance(f.l, Not):
            return Or(f.l.f, f.r)
        raise bad
    if basis == "or_not":
        if (isinstance(f, Not) and isinstance(f.f, Or) and isinstance(f.f.l, Not)
                and isinstance(f.f.r, Not)):
            return And(f.f.l.f, f.f.r.f)
        raise bad
    if (isinstance(f, Not) and isinstance(f.f, Impl) and isinstance(f.f.r, Not)):
        return And(f.f.l, f.f.r.f)
    raise bad


def rewrite(f, path, direction, connective, basis="or_not"):
    """Apply one definitional rewrite at `path`; raises DefinitionMismatch."""
    target = subformula_at(f, path)
    if direction == "expand":
        new = unfold(target, connective, basis)
    elif direction == "fold":
        new = fold(target, connective, basis)
    else:
        raise ValueError(f"direction must be expand or fold, got {direction!r}")
    return replace_at(f, path, new)


def expansion_steps(f, basis="or_not"):
    """Expand every defined connective top-down.

    Returns (expanded, steps) where steps is the list of (path, connective)
    unfoldings in application order; replaying them in reverse as folds
    restores `f` exactly.
    """
    defined = {_ROOT[c]: c for c in BASES[basis]}
    steps = []

    def go(g, path):
        while type(g) in defined:
            conn = defined[type(g)]
            steps.append((path, conn))
            g = unfold(g, conn, basis)
        kids = children(g)
        if not kids:
            return g
        return rebuild(g, [go(c, path + (i,)) for i, c in enumerate(kids)])

    return go(f, ()), steps


def expand_defined(f, basis="or_not"):
    """Rewrite f so it uses only the primitives of `basis` (plus quantifiers)."""
    return expansion_steps(f, basis)[0]


def conj(parts):
    """Left-nested conjunction of a nonempty sequence."""
    parts = list(parts)
    out = parts[0]
    for p in parts[1:]:
        out = And(out, p)
    return out


def disj(parts):
    parts = list(parts)
    out = parts[0]
    for p in parts[1:]:
        out = Or(out, p)
    return out


def implies_chain(premises, conclusion):
    """premises[0] -> (premises[1] -> ... -> conclusion)."""
    out = conclusion
    for p in reversed(list(premises)):
        out = Impl(p, out)
    return out
