"""Search for a matrix witnessing the independence of each axiom and print the report."""
import argparse

from logicbench.matrices import find_independence, witness_report


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-size", type=int, default=4)
    args = ap.parse_args()
    for k in range(1, 5):
        M = find_independence(k, args.max_size)
        print(f"== axiom {k}")
        if M is None:
            print(f"no witness of size <= {args.max_size}")
            continue
        ok, lines = witness_report(M, k)
        print("\n".join(lines))
        print("re-check:", "ok" if ok else "FAILED")


if __name__ == "__main__":
    main()
