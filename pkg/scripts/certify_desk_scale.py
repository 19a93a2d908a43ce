"""Certify R exactly (witness at R-1, exhaustive UNSAT at R) for every spec in a range, with timings."""
import argparse
import itertools
import sys

from rado.formula import rado_number
from rado.solver import SearchOptions
from rado.witness import CONFIRMED, certify_pair


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max", type=int, default=4, help="largest coefficient")
    parser.add_argument("--m", type=int, nargs="+", default=[2, 3])
    parser.add_argument("--max-R", type=int, default=120, help="skip specs whose R is larger")
    parser.add_argument("--lemma21", action="store_true")
    parser.add_argument("--timeout", type=float, default=600.0)
    args = parser.parse_args()
    options = SearchOptions(lemma21=args.lemma21, timeout=args.timeout)

    print("coefficients\tR\tstatus\tnodes\tpropagations\tseconds")
    failures = 0
    for m in args.m:
        for coeffs in itertools.combinations_with_replacement(range(1, args.max + 1), m):
            if rado_number(coeffs).value > args.max_R:
                continue
            cert = certify_pair(coeffs, via_search=True, options=options)
            s = cert.search.stats
            print(f"{','.join(map(str, coeffs))}\t{cert.R}\t{cert.status}\t{s.nodes}\t{s.propagations}\t{s.elapsed:.4f}")
            failures += cert.status != CONFIRMED
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
