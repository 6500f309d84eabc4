"""Finite logical matrices and the search for axiom-independence witnesses.

A matrix gives negation and disjunction tables over {0..m-1} plus a set of
designated values; ->, & and <-> are evaluated through their definitions in
terms of | and ~.  If the matrix designates every instance of three axioms,
preserves designation under modus ponens and refutes the fourth axiom, then
the fourth cannot be derived from the other three.  Substitution preserves
schema validity and the definitional rule is sound because defined symbols
are evaluated through their definitions.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import FragmentError, UnassignedVariable
from .formula import Not, PropVar, expand_defined, is_propositional, prop_vars
from .hilbert import AXIOMS

MAX_MATRIX_SIZE = 4


@dataclass(frozen=True)
class LogicalMatrix:
    size: int
    designated: frozenset
    neg: tuple
    or_table: tuple  # or_table[a][b]

    def __post_init__(self):
        m = self.size
        if m < 1:
            raise ValueError("matrix size must be at least 1")
        object.__setattr__(self, "designated", frozenset(self.designated))
        object.__setattr__(self, "neg", tuple(self.neg))
        object.__setattr__(self, "or_table", tuple(tuple(r) for r in self.or_table))
        if not self.designated or not self.designated <= set(range(m)):
            raise ValueError("designated values must be a nonempty subset of the carrier")
        if len(self.neg) != m or len(self.or_table) != m or any(len(r) != m for r in self.or_table):
            raise ValueError("table dimensions do not match the matrix size")
        if any(not 0 <= v < m for v in self.neg + sum(self.or_table, ())):
            raise ValueError("table entries must lie in the carrier")

    def to_text(self):
        lines = [f"size: {self.size}",
                 "designated: " + ",".join(map(str, sorted(self.designated))),
                 "neg: " + ",".join(map(str, self.neg)),
                 "or:"]
        lines += [",".join(map(str, row)) for row in self.or_table]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        rows = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
        try:
            fields = {}
            i = 0
            while i < len(rows):
                key, _, value = rows[i].partition(":")
                key = key.strip()
                if key == "or":
                    m = int(fields["size"])
                    fields["or"] = [[int(v) for v in r.split(",")] for r in rows[i + 1:i + 1 + m]]
                    i += 1 + m
                    continue
                fields[key] = value.strip()
                i += 1
            return cls(int(fields["size"]),
                       frozenset(int(v) for v in fields["designated"].split(",")),
                       tuple(int(v) for v in fields["neg"].split(",")),
                       tuple(tuple(r) for r in fields["or"]))
        except (KeyError, ValueError) as e:
            raise ValueError(f"malformed matrix text: {e}") from None


def classical_matrix():
    return LogicalMatrix(2, {1}, (1, 0), ((0, 1), (1, 1)))


def _primitive(f):
    if not is_propositional(f):
        raise FragmentError("matrices evaluate propositional formulas only")
    return expand_defined(f, "or_not")


def _value(M, g, assignment):
    if isinstance(g, PropVar):
        try:
            return assignment[g.name]
        except KeyError:
            raise UnassignedVariable(g.name) from None
    if isinstance(g, Not):
        return M.neg[_value(M, g.f, assignment)]
    return M.or_table[_value(M, g.l, assignment)][_value(M, g.r, assignment)]


def matrix_value(M, f, assignment):
    """Value of f under `assignment` (defined connectives expanded first)."""
    return _value(M, _primitive(f), assignment)


def refuting_assignment(M, f):
    """First assignment (product order over sorted variables) giving an undesignated value."""
    g = _primitive(f)
    names = prop_vars(g)
    for values in product(range(M.size), repeat=len(names)):
        a = dict(zip(names, values))
        if _value(M, g, a) not in M.designated:
            return a
    return None


def validates_schema(M, f):
    return refuting_assignment(M, f) is None


def mp_preserves(M):
    D = M.designated
    return all(b in D for a in D for b in range(M.size)
               if M.or_table[M.neg[a]][b] in D)


# --------------------------------------------------------------------------
# witness search
#
# Order: size ascending; designated sets by bitmask ascending; negation tables
# in product order; disjunction tables in row-major product order.  The
# disjunction table is filled cell by cell in that order with a depth-first
# search, so the first complete table reached is the lexicographically first
# witness.  Axiom instances are evaluated lazily: an instance whose value
# needs an unfilled cell waits on that cell and is re-examined when it is set.

def _compile(f):
    g = _primitive(f)
    names = prop_vars(g)
    index = {n: i for i, n in enumerate(names)}

    def go(h):
        if isinstance(h, PropVar):
            return ("v", index[h.name])
        if isinstance(h, Not):
            return ("n", go(h.f))
        return ("o", go(h.l), go(h.r))

    return go(g), len(names)


def _partial(expr, vals, neg, table, m):
    """Value of expr, or -(cell + 1) for the first unfilled cell it needs."""
    tag = expr[0]
    if tag == "v":
        return vals[expr[1]]
    if tag == "n":
        x = _partial(expr[1], vals, neg, table, m)
        return x if x < 0 else neg[x]
    a = _partial(expr[1], vals, neg, table, m)
    if a < 0:
        return a
    b = _partial(expr[2], vals, neg, table, m)
    if b < 0:
        return b
    v = table[a * m + b]
    return v if v >= 0 else -(a * m + b + 1)


def _search_tables(m, D, neg, keep, target):
    """First disjunction table (flat, row-major) meeting the witness conditions."""
    cells = m * m
    # modus ponens: a designated, b not, then (~a | b) must not be designated
    allowed = [list(range(m)) for _ in range(cells)]
    for a in D:
        for b in range(m):
            if b not in D:
                c = neg[a] * m + b
                allowed[c] = [v for v in allowed[c] if v not in D]
                if not allowed[c]:
                    return None
    instances = [(expr, vals) for expr, n in keep for vals in product(range(m), repeat=n)]
    table = [-1] * cells
    watch = [[] for _ in range(cells)]
    for inst in instances:
        v = _partial(inst[0], inst[1], neg, table, m)
        watch[-v - 1].append(inst)
    target_expr, target_n = target
    target_vals = list(product(range(m), repeat=target_n))

    def refuted():
        return any(_partial(target_expr, vals, neg, table, m) not in D for vals in target_vals)

    def place(c):
        if c == cells:
            return refuted()
        for value in allowed[c]:
            table[c] = value
            moved = []
            ok = True
            for inst in watch[c]:
                v = _partial(inst[0], inst[1], neg, table, m)
                if v >= 0:
                    if v not in D:
                        ok = False
                        break
                else:
                    watch[-v - 1].append(inst)
                    moved.append(-v - 1)
            if ok and place(c + 1):
                return True
            for d in moved:
                watch[d].pop()
        table[c] = -1
        return False

    return tuple(table) if place(0) else None


def find_independence(axiom_index, max_size, axioms=AXIOMS):
    """First matrix of size <= max_size refuting one axiom and validating the rest.

    Returns None when no such matrix exists within the bound.
    """
    if not 1 <= axiom_index <= len(axioms):
        raise ValueError(f"axiom index must be between 1 and {len(axioms)}")
    if max_size > MAX_MATRIX_SIZE:
        raise ValueError(f"matrix search is capped at size {MAX_MATRIX_SIZE}")
    target = _compile(axioms[axiom_index - 1])
    keep = [_compile(ax) for k, ax in enumerate(axioms, 1) if k != axiom_index]
    for m in range(1, max_size + 1):
        for mask in range(1, 1 << m):
            D = frozenset(v for v in range(m) if (mask >> v) & 1)
            for neg in product(range(m), repeat=m):
                flat = _search_tables(m, D, neg, keep, target)
                if flat is not None:
                    rows = tuple(flat[i * m:(i + 1) * m] for i in range(m))
                    return LogicalMatrix(m, D, neg, rows)
    return None


def witness_report(M, axiom_index, axioms=AXIOMS):
    """Re-check a witness with the plain evaluator; returns (ok, lines of text)."""
    lines = [M.to_text().rstrip()]
    ok = True
    for k, ax in enumerate(axioms, 1):
        bad = refuting_assignment(M, ax)
        if k == axiom_index:
            ok &= bad is not None
            lines.append(f"axiom {k}: refuted by {bad}" if bad else f"axiom {k}: NOT refuted")
        else:
            ok &= bad is None
            lines.append(f"axiom {k}: valid" if bad is None else f"axiom {k}: fails at {bad}")
    mp = mp_preserves(M)
    ok &= mp
    lines.append("modus ponens preserves designation" if mp else "modus ponens does NOT preserve designation")
    return ok, lines
