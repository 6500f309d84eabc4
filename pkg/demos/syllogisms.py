"""Print the mood report for one syllogistic system: semantic status and derivability."""
import argparse

from logicbench.syllogistic import SYSTEMS, format_mood_report, mood_report


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("system", nargs="?", default="goedel", choices=sorted(SYSTEMS))
    args = ap.parse_args()
    print(format_mood_report(mood_report(args.system), args.system))


if __name__ == "__main__":
    main()
