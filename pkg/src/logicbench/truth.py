"""Valuations, truth tables, tautology decision and functional completeness.

Row convention: for variables v_0 < v_1 < ... (lexicographic), row r assigns
v_j the value of bit j of r, so the first variable alternates fastest.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import CapExceeded, FragmentError, LogicError, UnassignedVariable
from .formula import (And, Equiv, Impl, Not, Or, PropVar, conj, disj, expand_defined,
                      is_propositional, prop_vars)
from .verdict import Verdict

MAX_ARITY = 20
MAX_CLOSURE_ARITY = 4


@dataclass(frozen=True)
class TruthFunction:
    arity: int
    table: tuple

    def __post_init__(self):
        if len(self.table) != 1 << self.arity:
            raise ValueError(f"table of arity {self.arity} needs {1 << self.arity} entries")
        object.__setattr__(self, "table", tuple(bool(v) for v in self.table))

    def __str__(self):
        return f"{self.arity}:" + "".join("1" if v else "0" for v in self.table)

    @classmethod
    def parse(cls, text):
        try:
            n, bits = text.strip().split(":")
            n = int(n)
        except ValueError:
            raise ValueError(f"truth table spec must look like '2:0001', got {text!r}") from None
        if set(bits) - {"0", "1"}:
            raise ValueError(f"table entries must be 0 or 1: {bits!r}")
        return cls(n, tuple(c == "1" for c in bits))

    @classmethod
    def from_int(cls, arity, bits):
        return cls(arity, tuple((bits >> r) & 1 for r in range(1 << arity)))

    def as_int(self):
        return sum(1 << r for r, v in enumerate(self.table) if v)


def _require_propositional(f):
    if not is_propositional(f):
        raise FragmentError("formula is not propositional")


def evaluate(f, valuation):
    """Classical value of a propositional formula under a dict valuation."""
    if isinstance(f, PropVar):
        try:
            return bool(valuation[f.name])
        except KeyError:
            raise UnassignedVariable(f.name) from None
    if isinstance(f, Not):
        return not evaluate(f.f, valuation)
    if isinstance(f, And):
        return evaluate(f.l, valuation) and evaluate(f.r, valuation)
    if isinstance(f, Or):
        return evaluate(f.l, valuation) or evaluate(f.r, valuation)
    if isinstance(f, Impl):
        return (not evaluate(f.l, valuation)) or evaluate(f.r, valuation)
    if isinstance(f, Equiv):
        return evaluate(f.l, valuation) == evaluate(f.r, valuation)
    raise FragmentError(f"cannot evaluate {type(f).__name__} truth-functionally")


def _columns(names):
    rows = np.arange(1 << len(names), dtype=np.int64)
    return {name: ((rows >> j) & 1).astype(bool) for j, name in enumerate(names)}


def _vector_eval(f, cols):
    memo = {}

    def go(g):
        hit = memo.get(g)
        if hit is not None:
            return hit
        if isinstance(g, PropVar):
            out = cols[g.name]
        elif isinstance(g, Not):
            out = ~go(g.f)
        elif isinstance(g, And):
            out = go(g.l) & go(g.r)
        elif isinstance(g, Or):
            out = go(g.l) | go(g.r)
        elif isinstance(g, Impl):
            out = ~go(g.l) | go(g.r)
        elif isinstance(g, Equiv):
            out = go(g.l) == go(g.r)
        else:
            raise FragmentError(f"cannot evaluate {type(g).__name__} truth-functionally")
        memo[g] = out
        return out

    return go(f)


def table_array(f, var_names=None, max_arity=MAX_ARITY):
    """Boolean numpy vector of f's values in row order."""
    _require_propositional(f)
    names = list(prop_vars(f)) if var_names is None else list(var_names)
    missing = set(prop_vars(f)) - set(names)
    if missing:
        raise UnassignedVariable(sorted(missing)[0])
    if len(names) > max_arity:
        raise CapExceeded(f"{len(names)} variables exceeds the truth-table cap of {max_arity}")
    out = _vector_eval(f, _columns(names))
    return np.broadcast_to(out, (1 << len(names),))


def truth_table(f, var_names=None, max_arity=MAX_ARITY):
    """TruthFunction of f; `var_names` fixes the variable order (default: sorted)."""
    names = list(prop_vars(f)) if var_names is None else list(var_names)
    arr = table_array(f, names, max_arity)
    return TruthFunction(len(names), tuple(arr.tolist()))


def row_valuation(names, r):
    return {name: bool((r >> j) & 1) for j, name in enumerate(names)}


def is_tautology(f, max_arity=MAX_ARITY):
    """Verdict; on failure the countermodel is the least falsifying row."""
    names = prop_vars(f)
    arr = table_array(f, names, max_arity)
    if arr.all():
        return Verdict(True)
    r = int(np.argmin(arr))
    return Verdict(False, countermodel=row_valuation(names, r),
                   reason="falsified by the valuation shown")


def synthesize_dnf(tf, var_names):
    """Disjunctive normal form read off a truth table, one minterm per true row."""
    names = list(var_names)
    if len(names) != tf.arity:
        raise ValueError(f"need {tf.arity} variable names, got {len(names)}")
    if not names:
        raise ValueError("at least one variable name is required")
    order = sorted(range(len(names)), key=lambda j: names[j])
    minterms = []
    for r, value in enumerate(tf.table):
        if value:
            lits = [PropVar(names[j]) if (r >> j) & 1 else Not(PropVar(names[j])) for j in order]
            minterms.append(conj(lits))
    if not minterms:
        first = PropVar(names[0])
        return And(first, Not(first))
    return disj(minterms)


def to_or_not(f):
    """Rewrite f over disjunction and negation only."""
    _require_propositional(f)
    return expand_defined(f, "or_not")


def anf_coefficients(tf):
    """Coefficients of the algebraic normal form over GF(2) (Moebius transform)."""
    a = np.array(tf.table, dtype=np.uint8)
    step = 1
    while step < len(a):
        a = a.reshape(-1, 2 * step)
        a[:, step:] ^= a[:, :step]
        a = a.reshape(-1)
        step *= 2
    return a


def is_affine(tf):
    coeffs = anf_coefficients(tf)
    return all(bin(m).count("1") <= 1 for m in np.flatnonzero(coeffs))


# connective name -> (arity, operation on table bitmasks)
def _ops(mask):
    return {
        "not": (1, lambda a: ~a & mask),
        "or": (2, lambda a, b: a | b),
        "and": (2, lambda a, b: a & b),
        "impl": (2, lambda a, b: (~a | b) & mask),
        "equiv": (2, lambda a, b: ~(a ^ b) & mask),
        "xor": (2, lambda a, b: a ^ b),
        "nand": (2, lambda a, b: ~(a & b) & mask),
        "nor": (2, lambda a, b: ~(a | b) & mask),
    }


CONNECTIVES = tuple(_ops(1))


def closure_under(basis, arity):
    """Least set of `arity`-ary functions holding the projections, closed under basis.

    `basis` is an iterable of connective names from CONNECTIVES.
    """
    if not 0 < arity <= MAX_CLOSURE_ARITY:
        raise CapExceeded(f"closure arity must be between 1 and {MAX_CLOSURE_ARITY}")
    rows = 1 << arity
    mask = (1 << rows) - 1
    table = _ops(np.uint32(mask))
    unknown = set(basis) - set(table)
    if unknown:
        raise LogicError(f"unknown connective(s): {', '.join(sorted(unknown))}")
    ops = [table[name] for name in sorted(set(basis))]
    total = 1 << rows
    seen = np.zeros(total, dtype=bool)
    proj = np.array([sum(1 << r for r in range(rows) if (r >> j) & 1) for j in range(arity)],
                    dtype=np.uint32)
    seen[proj] = True
    frontier = np.unique(proj)
    while frontier.size and not seen.all():
        known = np.flatnonzero(seen).astype(np.uint32)
        before = seen.copy()
        for n_args, op in ops:
            if n_args == 1:
                seen[op(frontier)] = True
                continue
            # frontier x known, both argument orders
            step = max(1, (1 << 22) // known.size)
            for start in range(0, frontier.size, step):
                chunk = frontier[start:start + step]
                seen[op(chunk[:, None], known[None, :]).ravel()] = True
                seen[op(known[None, :], chunk[:, None]).ravel()] = True
                if seen.all():
                    break
        frontier = np.flatnonzero(seen & ~before).astype(np.uint32)
    return {TruthFunction.from_int(arity, int(b)) for b in np.flatnonzero(seen)}


def affine_functions(arity):
    """Every affine function of the given arity (constant xor a subset of variables)."""
    rows = range(1 << arity)
    out = set()
    for const in (0, 1):
        for k in range(arity + 1):
            for subset in combinations(range(arity), k):
                out.add(TruthFunction(arity, tuple(
                    (const + sum((r >> j) & 1 for j in subset)) % 2 for r in rows)))
    return out
