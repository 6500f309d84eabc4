"""Shared first-order corpora for the predicate-logic tests and the acceptance suite."""
from logicbench.predicate import Passage, PermuteLike, RenameBound

PROVISO_MUTANTS = [
    # Gen with the variable free in the antecedent
    ("1: P(x) -> P(x) | Q(x) ; AXP1 p:=P(x), q:=Q(x)\n"
     "2: P(x) -> (x)(P(x) | Q(x)) ; GEN 1 x\n", "proviso violated: x free in antecedent"),
    ("1: (y)R(x,y) -> R(x,x) ; AXQ y x R(x,y)\n"
     "2: (y)R(x,y) -> (x)R(x,x) ; GEN 1 x\n", "proviso violated: x free in antecedent"),
    # AxQ with y not free for x
    ("1: (x)(Ey)R(x,y) -> (Ey)R(y,y) ; AXQ x y (Ey)R(x,y)\n", "y not free for x in (Ey)R(x,y)"),
    ("1: (x)(y)(P(x) -> Q(y)) -> (y)(P(y) -> Q(y)) ; AXQ x y (y)(P(x) -> Q(y))\n",
     "y not free for x in (y)(P(x) -> Q(y))"),
    ("1: (z)(x)R(z,x) -> (x)R(x,x) ; AXQ z x (x)R(z,x)\n", "x not free for z in (x)R(z,x)"),
]


MONADIC_CORPUS = [
    "((x)P(x)) -> (Ex)P(x)",
    "((Ex)P(x)) -> (x)P(x)",
    "(x)(P(x) | Q(x)) -> ((x)P(x) | (x)Q(x))",
    "((x)P(x) | (x)Q(x)) -> (x)(P(x) | Q(x))",
    "(x)(P(x) & Q(x)) <-> ((x)P(x) & (x)Q(x))",
    "(Ex)(P(x) & Q(x)) -> ((Ex)P(x) & (Ex)Q(x))",
    "((Ex)P(x) & (Ex)Q(x)) -> (Ex)(P(x) & Q(x))",
    "(x)(P(x) -> Q(x)) -> ((x)P(x) -> (x)Q(x))",
    "((x)P(x) -> (x)Q(x)) -> (x)(P(x) -> Q(x))",
    "(Ex)(P(x) -> (y)P(y))",
    "(x)P(x) | (Ex)~P(x)",
    "(Ex)P(x) | (x)~P(x)",
    "~(x)P(x) <-> (Ex)~P(x)",
    "(x)(P(x) -> Q(x)) & (x)(Q(x) -> ~P(x)) -> (x)~P(x)",
    "(x)(P(x) -> Q(x)) & (Ex)P(x) -> (Ex)Q(x)",
    "(x)(P(x) -> Q(x)) & (Ex)Q(x) -> (Ex)P(x)",
    "(Ex)(P(x) & ~Q(x)) | (x)(P(x) -> Q(x))",
    "(p -> (x)P(x)) <-> (x)(p -> P(x))",
    "((Ex)P(x) -> p) <-> (x)(P(x) -> p)",
    "(x)(Ey)(P(x) <-> P(y))",
]


TRANSFORM_CASES = [
    ("(x)P(x)", RenameBound((), "z")),
    ("(Ex)(P(x) & Q(y))", RenameBound((), "z")),
    ("(x)(y)R(x,y)", RenameBound((0,), "z")),
    ("p -> (x)R(x,y)", RenameBound((1,), "w")),
    ("(x)((Ey)R(x,y) | P(x))", RenameBound((0, 0), "z")),
    ("(x)(y)R(x,y)", PermuteLike(())),
    ("(Ex)(Ey)R(x,y)", PermuteLike(())),
    ("~(x)(y)(P(x) -> Q(y))", PermuteLike((0,))),
    ("(x)(y)(z)(P(x) -> R(y,z))", PermuteLike((0,))),
    ("(Ex)(Ey)R(y,x) & p", PermuteLike((0,))),
    ("(x)(P(x) & Q(y))", Passage("forall-and", ())),
    ("(x)P(x) & Q(y)", Passage("forall-and", ())),
    ("(x)(P(x) | p)", Passage("forall-or", ())),
    ("(x)R(x,x) | p", Passage("forall-or", ())),
    ("(Ex)(P(x) & Q(y))", Passage("exists-and", ())),
    ("(Ex)P(x) & p", Passage("exists-and", ())),
    ("(Ex)(P(x) | Q(y))", Passage("exists-or", ())),
    ("(Ex)R(x,y) | p", Passage("exists-or", ())),
    ("~(x)P(x)", Passage("not-forall", ())),
    ("(Ex)~P(x)", Passage("not-forall", ())),
    ("~(Ex)P(x)", Passage("not-exists", ())),
    ("(x)~R(x,y)", Passage("not-exists", ())),
    ("p -> ~(x)P(x)", Passage("not-forall", (1,))),
    ("(y)~(Ex)R(x,y)", Passage("not-exists", (0,))),
    ("(y)(x)(P(x) | Q(y))", Passage("forall-or", (0,))),
    ("~((Ex)P(x) & Q(y))", Passage("exists-and", (0,))),
    ("(x)(P(x) & (y)R(y,y))", Passage("forall-and", ())),
    ("(Ex)(R(x,x) | (Ey)P(y))", Passage("exists-or", ())),
    ("(y)((x)P(x) & Q(y))", Passage("forall-and", (0,))),
    ("~(x)(Ey)R(x,y)", Passage("not-forall", ())),
]


VIOLATIONS = [
    ("(x)R(x,y)", RenameBound((), "y")),
    ("(x)(P(x) & (Ez)R(x,z))", RenameBound((), "z")),
    ("(x)(Ey)R(x,y)", PermuteLike(())),
    ("(x)P(x)", PermuteLike(())),
    ("(x)(P(x) & Q(x))", Passage("forall-and", ())),
    ("(x)P(x) | Q(x)", Passage("forall-or", ())),
    ("(Ex)(P(x) & R(x,y))", Passage("exists-and", ())),
    ("(Ex)P(x) | (Ey)R(x,y)", Passage("exists-or", ())),
]
