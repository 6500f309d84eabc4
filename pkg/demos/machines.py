"""Turn the crank for a few theorems, then ring the bell on each of them and on a few others."""
import argparse

from logicbench.formula import parse_infix, to_infix
from logicbench.machines import BellRefusal, bell, crank

OTHERS = ["(p -> q) | (q -> p)", "p -> q", "((Ex)P(x)) -> (x)P(x)", "(x)(Ey)R(x,y)"]


def ring(f):
    try:
        v = bell(f)
    except BellRefusal as exc:
        return f"refused: {exc}"
    return "ding!" if v else f"silence; countermodel {v.countermodel}"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=10)
    args = ap.parse_args()
    for i, item in enumerate(crank("prop", args.count), 1):
        print(f"{i:>3} [{item.cost}] {to_infix(item.formula)}  -> {ring(item.formula)}")
    for text in OTHERS:
        print(f"{text}  -> {ring(parse_infix(text))}")


if __name__ == "__main__":
    main()
