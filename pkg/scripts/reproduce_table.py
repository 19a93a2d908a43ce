"""Print the R table for small coefficient lists and check it against the older special-case formulas."""
import argparse
import sys

from rado.cli import render_table


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max", type=int, default=5)
    parser.add_argument("--m", type=int, nargs="+", default=[2, 3, 4])
    args = parser.parse_args()
    bad = 0
    for m in args.m:
        text = render_table(args.max, m)
        sys.stdout.write(text if m == args.m[0] else text.split("\n", 1)[1])
        bad += text.count("MISMATCH")
    print(f"# special-case mismatches: {bad}", file=sys.stderr)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
