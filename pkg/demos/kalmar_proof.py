"""Generate a Hilbert proof of a tautology from its truth table and re-check it.

    python3 demos/kalmar_proof.py "(p|(q|r)) -> (q|(p|r))"
"""
import argparse

from logicbench.formula import parse_infix
from logicbench.hilbert import check_proof, format_proof
from logicbench.kalmar import prove_tautology


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("formula", nargs="?", default="q -> (p -> q)")
    ap.add_argument("--full", action="store_true", help="print every proof line")
    args = ap.parse_args()
    proof = prove_tautology(parse_infix(args.formula))
    text = format_proof(proof)
    lines = text.splitlines()
    if args.full or len(lines) <= 20:
        print(text, end="")
    else:
        print("\n".join(lines[:8] + ["..."] + lines[-4:]))
    print(f"{len(proof.lines)} lines; kernel verdict: {'valid' if check_proof(proof) else 'INVALID'}")


if __name__ == "__main__":
    main()
