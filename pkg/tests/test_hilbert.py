import random

import pytest

from logicbench.errors import LogicError, ProofFormatError
from logicbench.formula import Impl, Not, PropVar, parse_infix, rewrite
from logicbench.hilbert import (AXIOMS, MP, THEOREMS, Ax, Def, HilbertProof, Hyp, Line, ProofBuilder,
                                Sub, check_proof, deduction_theorem, format_proof, instantiate,
                                lemma, lemma_library, parse_proof)
from logicbench.truth import is_tautology

from oracles import ref_tautology

P = parse_infix


def proof(lines, hyps=()):
    return HilbertProof(tuple(Line(P(f) if isinstance(f, str) else f, j) for f, j in lines),
                        tuple(P(h) for h in hyps))


def entails(hyps, conclusion):
    f = conclusion
    for h in reversed(hyps):
        f = Impl(h, f)
    return ref_tautology(f)


def test_axioms_are_tautologies():
    assert len(AXIOMS) == 4
    for ax in AXIOMS:
        assert is_tautology(ax)
    assert AXIOMS[3] == P("(p -> q) -> ((r | p) -> (r | q))")


def test_check_examples():
    ok = proof([("p -> (p|q)", Ax(1)), ("p -> (p|p)", Sub.of(1, {"q": P("p")}))])
    assert check_proof(ok)
    unfold = proof([("p -> (p|q)", Ax(1)), ("~p | (p|q)", Def(1, (), "expand", "impl"))])
    assert check_proof(unfold)
    bad = proof([("(p|p) -> p", Ax(2)), ("q", MP(1, 1))])
    v = check_proof(bad)
    assert not v and v.line == 2 and v.reason == "major premise shape"


def test_failure_reasons():
    wrong_ax = proof([("p -> q", Ax(1))])
    assert check_proof(wrong_ax).line == 1
    wrong_hyp = proof([("q", Hyp(1))], hyps=["p"])
    assert not check_proof(wrong_hyp)
    wrong_sub = proof([("p -> (p|q)", Ax(1)), ("q -> (p|q)", Sub.of(1, {"q": P("p")}))])
    assert check_proof(wrong_sub).line == 2
    wrong_mp = proof([("p", Hyp(1)), ("p -> p | q", Ax(1)), ("q", MP(1, 2))], hyps=["p"])
    v = check_proof(wrong_mp)
    assert v.line == 3 and "conclusion" in v.reason
    wrong_def = proof([("p -> (p|q)", Ax(1)), ("~p | (p|q)", Def(1, (), "fold", "impl"))])
    assert check_proof(wrong_def).line == 2


def test_sub_on_hypothesis_dependent_line_fails():
    bad = proof([("p", Hyp(1)), ("q", Sub.of(1, {"p": P("q")}))], hyps=["p"])
    v = check_proof(bad)
    assert not v and v.line == 2 and "hypotheses" in v.reason


def test_forward_reference_and_bad_path_are_format_errors():
    with pytest.raises(ProofFormatError):
        check_proof(proof([("p -> (p|q)", MP(1, 2))]))
    with pytest.raises(ProofFormatError):
        check_proof(proof([("p -> (p|q)", Ax(1)), ("p", Def(1, (0, 0, 0), "expand", "impl"))]))


def test_quantified_lines_rejected():
    v = check_proof(proof([("(x)P(x)", Hyp(1))], hyps=["(x)P(x)"]))
    assert not v


def test_theorems_check():
    for name, fn in THEOREMS.items():
        pr = fn()
        assert check_proof(pr), name
        assert not pr.hypotheses
        assert ref_tautology(pr.conclusion), name


def test_library_contents():
    names = {item.name for item in lemma_library()}
    for needed in ("or-intro-left", "or-intro-right", "or-neg", "double-negation-intro",
                   "double-negation-elim", "case-merge"):
        assert needed in names
    for item in lemma_library():
        assert check_proof(item.proof), item.name
        assert item.proof.conclusion == item.conclusion
        assert list(item.proof.hypotheses) == list(item.hypotheses)
        assert entails(item.hypotheses, item.conclusion), item.name
    assert lemma("case-merge").conclusion == P("(p -> r) -> (~p -> r) -> r")


def test_library_instances():
    left = lemma("or-intro-left")
    discharged = deduction_theorem(left.proof)
    inst = instantiate(discharged, {"p": P("p"), "q": P("q")})
    assert check_proof(inst) and inst.conclusion == P("p -> p | q")
    cm = instantiate(lemma("case-merge").proof, {"p": P("p"), "r": P("p | ~p")})
    assert check_proof(cm)
    assert cm.conclusion == P("(p -> p | ~p) -> (~p -> p | ~p) -> p | ~p")


def test_deduction_theorem_examples():
    single = proof([("p", Hyp(1))], hyps=["p"])
    out = deduction_theorem(single)
    assert check_proof(out) and out.conclusion == P("p -> p") and not out.hypotheses
    two = proof([("p", Hyp(1))], hyps=["p", "q"])
    out = deduction_theorem(two)
    assert check_proof(out) and out.conclusion == P("q -> p")
    assert out.hypotheses == (P("p"),)
    with pytest.raises(LogicError):
        deduction_theorem(proof([("p -> (p|q)", Ax(1))]))


def test_deduction_theorem_three_hypotheses():
    b = ProofBuilder([P("p -> q"), P("q -> r"), P("p")])
    b.mp(b.mp(b.hyp(3), b.hyp(1)), b.hyp(2))
    pr = b.build()
    assert check_proof(pr)
    for expected in ("p -> r", "(q -> r) -> p -> r", "(p -> q) -> (q -> r) -> p -> r"):
        pr = deduction_theorem(pr)
        assert check_proof(pr)
        assert pr.conclusion == P(expected)


def test_text_round_trip():
    for fn in THEOREMS.values():
        pr = fn()
        assert parse_proof(format_proof(pr)) == pr
    pr = lemma("or-neg").proof
    text = format_proof(pr)
    assert text.startswith("hyp: ~p\nhyp: ~q\n")
    assert parse_proof(text) == pr


def test_text_examples():
    text = "1: p -> (p | q) ; AX1\n2: p -> (p | p) ; SUB 1 q:=p\n3: ~p | (p | p) ; DEF 2 @. expand impl\n"
    pr = parse_proof(text)
    assert check_proof(pr)
    assert pr.lines[2].justification == Def(2, (), "expand", "impl")


@pytest.mark.parametrize("text", [
    "1: p ; AX",
    "1: p -> (p | q) ; AX1\n3: p ; MP 1 1",
    "1: p -> (p | q) ; FOO 1",
    "1: p -> (p | q)",
    "1: p -> (p | q) ; AX1\n2: p ; SUB 1 q=p",
    "1: p -> (p | q) ; AX1\n2: p ; DEF 1 @x expand impl",
    "1: p -> (p | q ; AX1",
])
def test_malformed_text(text):
    with pytest.raises((ProofFormatError, LogicError)):
        parse_proof(text)


# --------------------------------------------------------------------------
# random proofs: every line of a kernel-valid proof is a tautology, and every
# line of a proof with hypotheses is entailed by them

_SMALL = [P(t) for t in ("p", "q", "r", "~p", "p | q", "~q | r", "p -> q", "q & r")]


def _random_step(rng, b, with_hyps):
    n = len(b.lines)
    kind = rng.choice(["axiom", "sub", "mp", "def", "def", "mp"] + (["hyp"] if with_hyps else []))
    if kind == "axiom" or n == 0:
        k = rng.randint(1, 4)
        mapping = {v: rng.choice(_SMALL + [b.formula(rng.randint(1, n))] if n else _SMALL)
                   for v in "pqr" if rng.random() < 0.6}
        return b.axiom(k, mapping or None)
    if kind == "hyp":
        return b.hyp(rng.randint(1, len(b.hypotheses)))
    if kind == "sub":
        free = [i for i in range(1, n + 1) if not b.deps[i - 1]]
        if free:
            return b.sub(rng.choice(free), {rng.choice("pqr"): rng.choice(_SMALL)})
        return None
    if kind == "mp":
        majors = [(i, j) for j in range(1, n + 1) if isinstance(b.formula(j), Impl)
                  for i in range(1, n + 1) if b.formula(i) == b.formula(j).l]
        if majors:
            return b.mp(*rng.choice(majors))
        # manufacture one: an axiom 1 instance whose antecedent is an existing line
        i = rng.randint(1, n)
        major = b.axiom(1, {"p": b.formula(i), "q": rng.choice(_SMALL)})
        return b.mp(i, major)
    src = rng.randint(1, n)
    f = b.formula(src)
    paths = _paths(f)
    path = rng.choice(paths)
    conn = rng.choice(["impl", "and", "equiv"])
    direction = rng.choice(["expand", "fold"])
    try:
        rewrite(f, path, direction, conn, "or_not")
    except LogicError:
        return None
    return b.define(src, path, direction, conn)


def _paths(f, prefix=()):
    out = [prefix]
    if isinstance(f, Not):
        out += _paths(f.f, prefix + (0,))
    elif not isinstance(f, PropVar):
        out += _paths(f.l, prefix + (0,)) + _paths(f.r, prefix + (1,))
    return out


def _random_proof(rng, hyps=(), steps=12):
    b = ProofBuilder(hyps)
    for _ in range(steps):
        _random_step(rng, b, bool(hyps))
    return b.build()


def test_random_hypothesis_free_proofs_are_sound():
    rng = random.Random(1939)
    checked = 0
    for _ in range(1000):
        pr = _random_proof(rng)
        assert check_proof(pr)
        for line in pr.lines:
            assert ref_tautology(line.formula), format_proof(pr)
        checked += 1
    assert checked == 1000


def test_random_proofs_with_hypotheses_are_sound():
    rng = random.Random(6)
    for _ in range(300):
        hyps = tuple(rng.sample(_SMALL, rng.randint(1, 3)))
        pr = _random_proof(rng, hyps)
        assert check_proof(pr)
        for line in pr.lines:
            assert entails(hyps, line.formula), format_proof(pr)


def test_random_deduction_theorem_outputs_recheck():
    rng = random.Random(77)
    for _ in range(60):
        hyps = tuple(rng.sample(_SMALL, rng.randint(1, 2)))
        pr = _random_proof(rng, hyps, steps=8)
        out = deduction_theorem(pr)
        assert check_proof(out)
        assert len(out.hypotheses) == len(pr.hypotheses) - 1
        assert out.conclusion == Impl(hyps[-1], pr.conclusion)


def test_builder_rejects_bad_steps():
    b = ProofBuilder([P("p")])
    h = b.hyp(1)
    with pytest.raises(LogicError):
        b.sub(h, {"p": P("q")})
    with pytest.raises(LogicError):
        b.mp(h, h)
