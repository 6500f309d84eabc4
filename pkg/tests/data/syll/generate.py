"""Regenerates the stored syllogistic derivations in this directory."""
import os

from logicbench.hilbert import format_proof
from logicbench.syllogistic import DATISI, DIMATIS, check_syll_proof, derive_syll, get_system

HERE = os.path.dirname(os.path.abspath(__file__))

TARGETS = [
    ("i_symmetry_goedel", "goedel", "i(alpha,beta) -> i(beta,alpha)"),
    ("datisi_goedel", "goedel", DATISI),
    ("dimatis_goedel_datisi", "goedel-datisi", DIMATIS),
    ("i_reflexivity_lukasiewicz", "lukasiewicz", "i(alpha,alpha)"),
]

for name, system, target in TARGETS:
    proof = derive_syll(system, target)
    assert check_syll_proof(get_system(system), proof)
    with open(os.path.join(HERE, name + ".proof"), "w") as fh:
        fh.write(f"# system: {system}\n" + format_proof(proof))
    print(name, len(proof))
