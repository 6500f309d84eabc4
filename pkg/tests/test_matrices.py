from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings

from logicbench.errors import UnassignedVariable
from logicbench.formula import Impl, Not, Or, PropVar, parse_infix
from logicbench.hilbert import AXIOMS
from logicbench.matrices import (LogicalMatrix, classical_matrix, find_independence, matrix_value,
                                 mp_preserves, refuting_assignment, validates_schema, witness_report)

from oracles import matrix_eval, matrix_valid, prop_formulas, pvars

P = parse_infix
LUKASIEWICZ3 = LogicalMatrix(3, {2}, (2, 1, 0), tuple(tuple(max(a, b) for b in range(3)) for a in range(3)))


def test_matrix_value_examples():
    M = classical_matrix()
    for v in (0, 1):
        assert matrix_value(M, P("p | ~p"), {"p": v}) == 1
    for k in range(3):
        assert matrix_value(LUKASIEWICZ3, P("p"), {"p": k}) == k
    assert matrix_value(LUKASIEWICZ3, P("p -> q"), {"p": 1, "q": 0}) == 1
    with pytest.raises(UnassignedVariable):
        matrix_value(M, P("p | q"), {"p": 1})


@settings(max_examples=200, deadline=None)
@given(prop_formulas(max_leaves=8, names=("p", "q", "r")))
def test_matrix_value_matches_reference(f):
    M = LUKASIEWICZ3
    for vals in product(range(3), repeat=3):
        a = dict(zip("pqr", vals))
        assert matrix_value(M, f, a) == matrix_eval(3, M.neg, M.or_table, f, a)


def test_validates_schema_examples():
    M = classical_matrix()
    assert all(validates_schema(M, ax) for ax in AXIOMS)
    everything = LogicalMatrix(2, {0, 1}, (1, 0), ((0, 1), (1, 1)))
    assert validates_schema(everything, P("p & ~p"))
    assert not validates_schema(M, P("p"))


def test_mp_preserves_examples():
    assert mp_preserves(classical_matrix())
    assert mp_preserves(LogicalMatrix(3, {0, 1, 2}, (0, 1, 2), ((0,) * 3,) * 3))
    # designated 1 and 1 -> 0 designated (~1 | 0 = 1), but 0 is not
    assert not mp_preserves(LogicalMatrix(2, {1}, (1, 0), ((1, 1), (1, 1))))


def test_matrix_text_round_trip():
    M = LUKASIEWICZ3
    assert LogicalMatrix.from_text(M.to_text()) == M
    with pytest.raises(ValueError):
        LogicalMatrix.from_text("size: 2\ndesignated: 1\nneg: 1,0\nor:\n0,1\n")
    with pytest.raises(ValueError):
        LogicalMatrix(2, {3}, (1, 0), ((0, 1), (1, 1)))


def _check_witness(M, k):
    """The four witness conditions, re-verified with the reference evaluator."""
    for j, ax in enumerate(AXIOMS, 1):
        valid = matrix_valid(M.size, M.designated, M.neg, M.or_table, ax)
        assert valid == (j != k), (j, M.to_text())
    for a in M.designated:
        for b in range(M.size):
            if matrix_eval(M.size, M.neg, M.or_table, Impl(PropVar("x"), PropVar("y")),
                           {"x": a, "y": b}) in M.designated:
                assert b in M.designated


def test_axiom_two_witness():
    M = find_independence(2, 3)
    assert M is not None
    _check_witness(M, 2)
    bad = refuting_assignment(M, AXIOMS[1])
    assert bad is not None
    assert matrix_eval(M.size, M.neg, M.or_table, AXIOMS[1], bad) not in M.designated
    ok, lines = witness_report(M, 2)
    assert ok
    assert any(line.startswith("axiom 2: refuted by") for line in lines)
    assert not validates_schema(M, AXIOMS[1])


def test_degenerate_and_small_sizes():
    assert find_independence(2, 1) is None
    # frozen golden value: no two-valued matrix separates any axiom
    for k in (1, 2, 3, 4):
        assert find_independence(k, 2) is None


def test_search_is_deterministic():
    assert find_independence(2, 3) == find_independence(2, 3)


def test_search_rejects_out_of_range():
    with pytest.raises(ValueError):
        find_independence(5, 2)
    with pytest.raises(ValueError):
        find_independence(1, 5)


# --------------------------------------------------------------------------
# numpy brute-force oracle: the first witness of size <= 3 in the same
# enumeration order, found by evaluating every disjunction table at once

def _compile(f):
    """Formula over | and ~ with ->, & and <-> unfolded by their definitions."""
    if isinstance(f, PropVar):
        return f
    if isinstance(f, Not):
        return Not(_compile(f.f))
    l, r = _compile(f.l), _compile(f.r)
    if isinstance(f, Or):
        return Or(l, r)
    if isinstance(f, Impl):
        return Or(Not(l), r)
    raise AssertionError("axioms only use | and ->")


def _values(g, a, neg, tables, m):
    if isinstance(g, PropVar):
        return np.full(tables.shape[0], a[g.name])
    if isinstance(g, Not):
        return neg[_values(g.f, a, neg, tables, m)]
    x = _values(g.l, a, neg, tables, m)
    y = _values(g.r, a, neg, tables, m)
    return tables[np.arange(tables.shape[0]), x * m + y]


def _brute_first_witness(k, m):
    cells = m * m
    # tables in product order: first cell most significant
    idx = np.arange(m ** cells)
    tables = np.stack([(idx // m ** (cells - 1 - c)) % m for c in range(cells)], axis=1)
    axioms = [_compile(ax) for ax in AXIOMS]
    for mask in range(1, 1 << m):
        D = np.array([(mask >> v) & 1 for v in range(m)], dtype=bool)
        for neg in product(range(m), repeat=m):
            neg = np.array(neg)
            ok = np.ones(len(idx), dtype=bool)
            refuted = np.zeros(len(idx), dtype=bool)
            for j, ax in enumerate(axioms, 1):
                names = pvars(ax)
                for vals in product(range(m), repeat=len(names)):
                    des = D[_values(ax, dict(zip(names, vals)), neg, tables, m)]
                    if j == k:
                        refuted |= ~des
                    else:
                        ok &= des
            for a in range(m):
                for b in range(m):
                    if D[a] and not D[b]:
                        ok &= ~D[tables[:, neg[a] * m + b]]
            hits = np.flatnonzero(ok & refuted)
            if hits.size:
                t = tables[hits[0]]
                rows = tuple(tuple(int(v) for v in t[i * m:(i + 1) * m]) for i in range(m))
                return LogicalMatrix(m, {v for v in range(m) if D[v]}, tuple(int(v) for v in neg), rows)
    return None


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_search_matches_brute_force_up_to_three(k):
    expected = None
    for m in (1, 2, 3):
        expected = _brute_first_witness(k, m)
        if expected is not None:
            break
    found = find_independence(k, 3)
    assert found == expected
    if found is not None:
        _check_witness(found, k)


def test_axiom_four_needs_four_values():
    M = find_independence(4, 4)
    assert M is not None and M.size == 4
    _check_witness(M, 4)
