"""Command-line front end.

Exit codes: 0 success or confirmed, 1 validation error or rejected model,
2 witness-only certificate, 3 inconclusive search.
"""
from __future__ import annotations

import argparse
import os
import sys
import tempfile
from itertools import combinations_with_replacement

from .cache import CacheRecord, ResultCache
from .cnf import DimacsError, ModelParseError, ModelRejected, encode, verify_model
from .equation import EquationSpec, SpecError, canonicalize
from .formula import rado_number, special_case_value
from .solver import CapExceeded, SearchInconclusive, SearchOptions, minimal_rado_by_search
from .witness import CONFIRMED, INCONCLUSIVE, WITNESS_ONLY, certify_pair, extremal_coloring

EXIT_OK, EXIT_INVALID, EXIT_WITNESS_ONLY, EXIT_INCONCLUSIVE = 0, 1, 2, 3
STATUS_EXIT = {CONFIRMED: EXIT_OK, WITNESS_ONLY: EXIT_WITNESS_ONLY, INCONCLUSIVE: EXIT_INCONCLUSIVE}
TSV_COLUMNS = ["coefficients", "a", "b", "v", "R", "special_case_name", "special_case_value", "status"]


def _options(args) -> SearchOptions:
    return SearchOptions(lemma21=args.lemma21, max_nodes=args.nodes, timeout=args.timeout)


def _write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", text=True)
    try:
        with os.fdopen(fd, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _split_tail(values: list[str], tail: int, what: str):
    if len(values) < tail + 2:
        raise SpecError(f"expected at least two coefficients followed by {what}")
    return EquationSpec([int(x) for x in values[:-tail]]), values[-tail:]


def cmd_compute(args) -> int:
    spec = EquationSpec(args.coeffs)
    rv = rado_number(spec)
    c = rv.canonical
    print(f"R = {rv.value}")
    print(f"a = {c.a}, b = {c.b}, v = {c.v}, m = {c.m}")
    special = special_case_value(spec)
    if special:
        print(f"special case {special[0]}: {special[1]}")
    return EXIT_OK


def _record(spec, status, confirmed_at=None, stats=None) -> CacheRecord:
    c = canonicalize(spec)
    return CacheRecord(
        coeffs=spec.coeffs,
        canonical=(c.a, c.b, c.v),
        R=rado_number(spec).value,
        status=status,
        confirmed_at=confirmed_at,
        stats=stats or {},
    )


def cmd_certify(args) -> int:
    spec = EquationSpec(args.coeffs)
    cache = ResultCache(args.cache)
    cached = cache.get(spec.coeffs)
    if cached is not None and cached.status == CONFIRMED:
        print(f"R={cached.R} CONFIRMED (witness n={cached.R - 1} valid, UNSAT n={cached.confirmed_at}; cached)")
        return EXIT_OK
    cert = certify_pair(spec, via_search=args.search, options=_options(args))
    stats = {}
    if cert.search is not None:
        s = cert.search.stats
        stats = {
            "nodes": s.nodes,
            "propagations": s.propagations,
            "lemma21_firings": s.lemma21_firings,
            "elapsed": round(s.elapsed, 6),
        }
    rec = cache.put(_record(spec, cert.status, cert.R if cert.status == CONFIRMED else None, stats))
    if rec.status == CONFIRMED and cert.status != CONFIRMED:
        print(f"R={rec.R} CONFIRMED (witness n={rec.R - 1} valid, UNSAT n={rec.confirmed_at}; cached)")
        return EXIT_OK
    print(cert.summary())
    return STATUS_EXIT[cert.status]


def cmd_search(args) -> int:
    spec = EquationSpec(args.coeffs)
    R = rado_number(spec).value
    start = 1
    if args.from_witness:
        extremal_coloring(spec)
        start = R - 1
    results = []
    try:
        found = minimal_rado_by_search(spec, args.cap, _options(args), start=start, results=results)
    except SearchInconclusive as exc:
        print(f"INCONCLUSIVE: {exc}")
        return EXIT_INCONCLUSIVE
    except CapExceeded as exc:
        print(f"INCONCLUSIVE: {exc}")
        return EXIT_INCONCLUSIVE
    nodes = sum(r.stats.nodes for r in results)
    elapsed = sum(r.stats.elapsed for r in results)
    agree = "agree" if found == R else "DISAGREE"
    print(f"least UNSAT n = {found} (formula R = {R}, {agree}; {len(results)} searches, {nodes} nodes, {elapsed:.3f}s)")
    if found != R:
        return EXIT_INVALID
    cache = ResultCache(args.cache)
    cache.put(_record(spec, CONFIRMED, found, {"nodes": nodes, "elapsed": round(elapsed, 6)}))
    return EXIT_OK


def table_rows(max_coefficient: int, m: int) -> list[list[str]]:
    rows = []
    for coeffs in combinations_with_replacement(range(1, max_coefficient + 1), m):
        spec = EquationSpec(coeffs)
        rv = rado_number(spec)
        c = rv.canonical
        special = special_case_value(spec)
        if special is None:
            name, value, status = "-", "-", "-"
        else:
            name, value = special[0], str(special[1])
            status = "agree" if special[1] == rv.value else "MISMATCH"
        rows.append([",".join(map(str, coeffs)), str(c.a), str(c.b), str(c.v), str(rv.value), name, value, status])
    return rows


def render_table(max_coefficient: int, m: int) -> str:
    lines = ["\t".join(TSV_COLUMNS)]
    lines.extend("\t".join(row) for row in table_rows(max_coefficient, m))
    return "\n".join(lines) + "\n"


def cmd_table(args) -> int:
    if args.m < 2 or args.max < 1:
        raise SpecError("need --m >= 2 and --max >= 1")
    text = render_table(args.max, args.m)
    if args.out:
        _write_atomic(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_INVALID if "MISMATCH" in text else EXIT_OK


def cmd_cnf(args) -> int:
    spec, (n, path) = _split_tail(args.args, 2, "n and an output path")
    doc = encode(spec, int(n), symmetry=not args.no_symmetry)
    try:
        _write_atomic(path, doc.to_dimacs())
    except OSError as exc:
        print(f"error: cannot write {path}: {exc.strerror}", file=sys.stderr)
        return EXIT_INVALID
    print(f"wrote {path}: {doc.num_vars} variables, {len(doc.clauses)} clauses")
    return EXIT_OK


def cmd_check_model(args) -> int:
    spec, (n, path) = _split_tail(args.args, 2, "n and a model path")
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: cannot read {path}: {exc.strerror}", file=sys.stderr)
        return EXIT_INVALID
    try:
        coloring = verify_model(text, spec, int(n))
    except ModelRejected as exc:
        print(f"REJECTED: {exc.solution}")
        return EXIT_INVALID
    print(f"ACCEPTED: {coloring}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cache", default=os.environ.get("RADO_CACHE", "rado-cache.jsonl"))
    common.add_argument("--nodes", type=int, default=int(os.environ.get("RADO_NODES", 10**8)))
    common.add_argument("--timeout", type=float, default=float(os.environ.get("RADO_TIMEOUT", 600)))
    common.add_argument("--lemma21", action="store_true", help="enable the interval propagation rule (m = 2 only)")
    parser = argparse.ArgumentParser(prog="rado", description="Two-color Rado numbers for a1*x1+...+am*xm = x0.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="closed-form R and canonical form")
    p.add_argument("coeffs", nargs="+", type=int)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("certify", parents=[common], help="validate the extremal witness, optionally prove UNSAT at R")
    p.add_argument("coeffs", nargs="+", type=int)
    p.add_argument("--search", action="store_true")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("search", parents=[common], help="least UNSAT n by exhaustive search")
    p.add_argument("coeffs", nargs="+", type=int)
    p.add_argument("--cap", type=int, default=200)
    p.add_argument("--from-witness", action="store_true", help="start the scan at R-1 after validating the witness")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("table", parents=[common], help="TSV of R over all coefficient multisets")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("cnf", parents=[common], help="write DIMACS CNF: COEFFS... N OUT")
    p.add_argument("args", nargs="+")
    p.add_argument("--no-symmetry", action="store_true")
    p.set_defaults(func=cmd_cnf)

    p = sub.add_parser("check-model", parents=[common], help="check a solver model: COEFFS... N MODEL")
    p.add_argument("args", nargs="+")
    p.set_defaults(func=cmd_check_model)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SpecError, ModelParseError, DimacsError, OverflowError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
