from pathlib import Path

import pytest

from logicbench.cli import main
from logicbench.formula import is_propositional, parse_infix, predicates
from logicbench.hilbert import AXIOMS, check_proof
from logicbench.machines import BellRefusal, bell, crank
from logicbench.predicate import AxQ, check_fo_proof

from oracles import fo_valid_upto, ref_tautology

P = parse_infix
DATA = Path(__file__).parent / "data"

# frozen golden bound: all four axioms appear among the first GOLDEN_PREFIX theorems
GOLDEN_PREFIX = 9


def test_first_theorem_is_an_axiom():
    items = crank("prop", 1)
    assert len(items) == 1
    assert items[0].formula in AXIOMS


def test_axioms_within_golden_prefix():
    items = crank("prop", GOLDEN_PREFIX)
    formulas = [it.formula for it in items]
    assert all(ax in formulas for ax in AXIOMS)
    assert crank("prop", GOLDEN_PREFIX - 1)[-1].formula != AXIOMS[3]


def test_crank_is_deterministic():
    a = [(it.formula, it.cost, it.proof.to_text()) for it in crank("prop", 30)]
    b = [(it.formula, it.cost, it.proof.to_text()) for it in crank("prop", 30)]
    assert a == b


def test_crank_prefix_matches_golden(capsys):
    assert main(["crank", "--count", "12"]) == 0
    assert capsys.readouterr().out == (DATA / "crank_prop_prefix.txt").read_text()


def test_crank_output_is_sound_and_deduplicated():
    items = crank("prop", 40)
    seen = set()
    costs = [it.cost for it in items]
    assert costs == sorted(costs)
    for it in items:
        assert check_proof(it.proof)
        assert not it.proof.hypotheses and it.proof.conclusion == it.formula
        assert ref_tautology(it.formula)
        assert it.formula not in seen
        seen.add(it.formula)


def test_bell_crank_coherence():
    for it in crank("prop", 40):
        assert bell(it.formula)


def test_fo_crank():
    items = crank("fo", 25)
    assert any(isinstance(line.justification, AxQ) for it in items for line in it.proof.lines)
    for it in items:
        assert check_fo_proof(it.proof)
        assert it.proof.conclusion == it.formula
        assert fo_valid_upto(it.formula, 2)
        sig = predicates(it.formula)
        if is_propositional(it.formula) or all(a == 1 for a in sig.values()):
            assert bell(it.formula)


def test_crank_arguments():
    with pytest.raises(ValueError):
        crank("prop", 0)
    with pytest.raises(ValueError):
        crank("modal", 3)


def test_bell_examples():
    assert bell(P("(p -> q) | (q -> p)"))
    v = bell(P("p -> q"))
    assert not v and v.countermodel == {"p": True, "q": False}
    v = bell(P("((Ex)P(x)) -> (x)P(x)"))
    assert not v and str(v.countermodel) == "domain {0, 1}, P = {0}"
    assert bell(P("(x)P(x) -> P(y)"))


def test_bell_refusals():
    with pytest.raises(BellRefusal) as info:
        bell(P("(x)(Ey)R(x,y)"))
    msg = str(info.value)
    assert "R is a dyadic predicate" in msg and "undecidable" in msg
    with pytest.raises(BellRefusal):
        bell(P("(x)(x = x)"))
    with pytest.raises(BellRefusal) as info:
        bell(P("(x)(y)(z)S(x,y,z)"))
    assert "triadic" in str(info.value)
