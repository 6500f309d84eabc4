import random
from pathlib import Path

import pytest

from logicbench.errors import NotATautology, ProofFormatError
from logicbench.formula import Impl, Not, parse_infix
from logicbench.sequent import (Id, ImpE, ImpI, NDDef, NDLine, NDProof, Raa, Sequent, ThinL, ThinR,
                                check_nd, entails, format_nd, nd_prove_tautology, parse_nd,
                                parse_sequent)

from oracles import corpus, ref_tautology

P = parse_infix
DATA = Path(__file__).parent / "data"


def seq(text):
    return parse_sequent(text)


def nd(*lines):
    return NDProof(tuple(NDLine(seq(s), j) for s, j in lines))


def ref_entails(s):
    f = s.succedent
    for a in reversed(s.antecedent):
        f = Impl(a, f)
    return ref_tautology(f)


def test_two_line_example():
    pr = nd(("p => p", Id()), ("=> p -> p", ImpI(1)))
    assert check_nd(pr)


def test_golden_ex_falso():
    pr = parse_nd((DATA / "ex_falso.nd").read_text())
    assert check_nd(pr)
    assert pr.conclusion == seq("=> ~p -> (p -> q)")
    for line in pr.lines:
        assert ref_entails(line.sequent)


def test_raa_needs_negated_assumption():
    pr = nd(("p => p", Id()), ("q => q", Id()),
            ("p, q => p", ThinR(1, P("q"))), ("p, q => q", ThinL(2, P("p"))),
            ("p => p", Raa(3, 4)))
    v = check_nd(pr)
    assert not v and v.line == 5 and "negation" in v.reason


def test_rule_failures():
    assert not check_nd(nd(("p, q => p", Id())))
    bad_thin = nd(("p => p", Id()), ("p, q => p", ThinL(1, P("q"))))
    assert check_nd(bad_thin).line == 2
    bad_impe = nd(("p => p", Id()), ("p -> q => p -> q", Id()), ("p => q", ImpE(1, 2)))
    v = check_nd(bad_impe)
    assert v.line == 3 and "antecedents" in v.reason
    bad_impi = nd(("p => p", Id()), ("=> q -> p", ImpI(1)))
    assert check_nd(bad_impi).line == 2


def test_no_exchange():
    # the checker never permutes the interior of an antecedent
    pr = nd(("p => p", Id()), ("p, q => p", ThinR(1, P("q"))), ("q, p => p", ThinR(1, P("q"))))
    assert check_nd(pr).line == 3


def test_definition_steps():
    pr = nd(("~p -> q => ~p -> q", Id()),
            ("p | q => ~p -> q", NDDef(1, 1, (), "fold", "or")),
            ("p | q => p | q", NDDef(2, "suc", (), "fold", "or")))
    assert check_nd(pr)
    wrong = nd(("p => p", Id()), ("p => p | q", NDDef(1, "suc", (), "fold", "or")))
    assert not check_nd(wrong)


def test_forward_reference_is_format_error():
    with pytest.raises(ProofFormatError):
        check_nd(nd(("=> p -> p", ImpI(2)), ("p => p", Id())))


def test_synthesis_examples():
    pr = nd_prove_tautology(P("p -> p"))
    assert len(pr) == 2 and check_nd(pr)
    for text in ("(p -> q) | (q -> p)", "q -> (p -> q)", "p & q -> q & p", "(p <-> q) <-> (q <-> p)"):
        pr = nd_prove_tautology(P(text))
        assert check_nd(pr)
        assert pr.conclusion == Sequent((), P(text))
    with pytest.raises(NotATautology):
        nd_prove_tautology(P("p -> q"))


def test_text_round_trip():
    pr = nd_prove_tautology(P("(p -> q) | (q -> p)"))
    assert parse_nd(format_nd(pr)) == pr
    assert str(seq("p, q -> r => r")) == "p, q -> r => r"
    assert seq("=> p").antecedent == ()


@pytest.mark.parametrize("text", [
    "1: p => p",
    "1: p => p ; NOPE",
    "1: p p => p ; ID",
    "2: p => p ; ID",
    "1: p => p ; ID\n2: p => p | q ; DEF 1 middle@. fold or",
])
def test_malformed_text(text):
    with pytest.raises(ProofFormatError):
        parse_nd(text)


def test_entails_matches_reference():
    for text in ("p, p -> q => q", "p => q", "~p, p => q", "=> p | ~p"):
        s = seq(text)
        assert bool(entails(s)) == ref_entails(s)


def test_corpus_completeness_and_soundness():
    failures = []
    for f in corpus(7):
        if not ref_tautology(f):
            continue
        pr = nd_prove_tautology(f)
        if not (check_nd(pr) and pr.conclusion == Sequent((), f)):
            failures.append(f)
    assert failures == []


# --------------------------------------------------------------------------
# fuzzed derivations: every line of a valid proof is a semantic entailment

_POOL = [P(t) for t in ("p", "q", "~p", "~q", "p -> q", "~(p -> q)", "q -> p")]


def _random_nd(rng, steps=14):
    lines = []

    def add(s, j):
        lines.append(NDLine(s, j))

    for _ in range(steps):
        kind = rng.choice(["id", "thinl", "thinr", "impi", "impe", "raa"])
        if kind == "id" or not lines:
            f = rng.choice(_POOL)
            add(Sequent((f,), f), Id())
            continue
        n = rng.randint(1, len(lines))
        s = lines[n - 1].sequent
        if kind == "thinl" and len(s.antecedent) < 4:
            add(Sequent((rng.choice(_POOL),) + s.antecedent, s.succedent), ThinL(n, None))
        elif kind == "thinr" and len(s.antecedent) < 4:
            add(Sequent(s.antecedent + (rng.choice(_POOL),), s.succedent), ThinR(n, None))
        elif kind == "impi" and s.antecedent:
            add(Sequent(s.antecedent[:-1], Impl(s.antecedent[-1], s.succedent)), ImpI(n))
        elif kind == "impe":
            for m, other in enumerate(lines, 1):
                o = other.sequent
                if (o.antecedent == s.antecedent and isinstance(o.succedent, Impl)
                        and o.succedent.l == s.succedent):
                    add(Sequent(s.antecedent, o.succedent.r), ImpE(n, m))
                    break
        elif kind == "raa" and s.antecedent and isinstance(s.antecedent[-1], Not):
            for m, other in enumerate(lines, 1):
                o = other.sequent
                if o.antecedent == s.antecedent and o.succedent == Not(s.succedent):
                    add(Sequent(s.antecedent[:-1], s.antecedent[-1].f), Raa(n, m))
                    break
    # thinning justifications carry the added formula
    fixed = []
    for line in lines:
        j = line.justification
        if isinstance(j, ThinL):
            j = ThinL(j.src, line.sequent.antecedent[0])
        elif isinstance(j, ThinR):
            j = ThinR(j.src, line.sequent.antecedent[-1])
        fixed.append(NDLine(line.sequent, j))
    return NDProof(tuple(fixed))


def test_fuzzed_proofs_are_sound():
    rng = random.Random(9)
    for _ in range(500):
        pr = _random_nd(rng)
        assert check_nd(pr)
        for line in pr.lines:
            assert ref_entails(line.sequent)
