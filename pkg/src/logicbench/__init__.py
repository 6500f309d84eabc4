"""logicbench: decision procedures, proof systems and proof checkers for
propositional, first-order and syllogistic logic."""
from .errors import (CapExceeded, CaptureError, FragmentError, LogicError, NotATautology,
                     ParseError, ProofFormatError, SideConditionError, UnassignedVariable)
from .formula import parse_infix, parse_polish, to_infix, to_polish
from .hilbert import AXIOMS, check_proof, deduction_theorem, format_proof, parse_proof
from .kalmar import prove_tautology
from .matrices import LogicalMatrix, find_independence
from .predicate import check_fo_proof, monadic_decide, valid_in_domains
from .sequent import check_nd, nd_prove_tautology
from .syllogistic import derive_syll, valid_syll
from .truth import TruthFunction, is_tautology, synthesize_dnf, truth_table
from .verdict import Verdict

__version__ = "0.1.0"
