"""DIMACS export of the coloring problem and checking of models returned by SAT solvers.

Variable i is true iff integer i gets color 1. Each not-all-equal constraint S
becomes the pair of clauses (OR of +i for i in S) and (OR of -i for i in S).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .equation import Coloring, SolutionTuple, as_spec, enumerate_solutions, find_monochromatic
from .solver import SearchOptions, SearchResult, solve_nae


class DimacsError(ValueError):
    pass


class ModelParseError(ValueError):
    pass


class ModelRejected(Exception):
    def __init__(self, solution: SolutionTuple, coloring: Coloring):
        super().__init__(f"monochromatic solution {solution}")
        self.solution = solution
        self.coloring = coloring


@dataclass
class CnfDocument:
    num_vars: int
    clauses: list[list[int]]
    comments: list[str] = field(default_factory=list)

    def to_dimacs(self) -> str:
        lines = [f"c {c}" if c else "c" for c in self.comments]
        lines.append(f"p cnf {self.num_vars} {len(self.clauses)}")
        lines.extend(" ".join(map(str, clause + [0])) for clause in self.clauses)
        return "\n".join(lines) + "\n"


def encode(spec, n: int, symmetry: bool = True) -> CnfDocument:
    spec = as_spec(spec)
    constraints = enumerate_solutions(spec, n)
    clauses = []
    for members in constraints:
        clauses.append(list(members))
        clauses.append([-i for i in members])
    if symmetry:
        clauses.append([-1])
    comments = [
        f"equation: {spec}",
        f"coeffs: {' '.join(map(str, spec.coeffs))}",
        f"n: {n}",
        f"constraints: {len(constraints)}",
        f"symmetry: {'on' if symmetry else 'off'}",
    ]
    return CnfDocument(n, clauses, comments)


def parse_dimacs(text: str) -> CnfDocument:
    comments, clauses, header = [], [], None
    current: list[int] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("c"):
            comments.append(line[1:].strip())
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsError(f"line {lineno}: bad header {line!r}")
            header = int(parts[2]), int(parts[3])
            continue
        if header is None:
            raise DimacsError(f"line {lineno}: clause before header")
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(current)
                current = []
            else:
                if abs(lit) > header[0]:
                    raise DimacsError(f"line {lineno}: literal {lit} exceeds {header[0]} variables")
                current.append(lit)
    if header is None:
        raise DimacsError("missing 'p cnf' header")
    if current:
        raise DimacsError("last clause is not terminated by 0")
    if len(clauses) != header[1]:
        raise DimacsError(f"header announces {header[1]} clauses, found {len(clauses)}")
    return CnfDocument(header[0], clauses, comments)


def decode_constraints(doc: CnfDocument) -> tuple[list[tuple[int, ...]], list[tuple[int, int]]]:
    """Recover not-all-equal constraints and unit assignments from a document.

    Accepts only the shape :func:`encode` produces: positive/negative clause
    pairs over the same variables, plus unit clauses.
    """
    positive, negative, fixed = [], set(), []
    for clause in doc.clauses:
        if len(clause) == 1:
            lit = clause[0]
            fixed.append((abs(lit), 1 if lit > 0 else 0))
        elif all(lit > 0 for lit in clause):
            positive.append(tuple(sorted(clause)))
        elif all(lit < 0 for lit in clause):
            negative.add(tuple(sorted(-lit for lit in clause)))
        else:
            raise DimacsError(f"mixed-sign clause {clause} is not a not-all-equal half")
    if set(positive) != negative:
        raise DimacsError("positive and negative clauses do not pair up")
    return positive, fixed


def solve_document(doc: CnfDocument, options: SearchOptions = SearchOptions(pin_first=False)) -> SearchResult:
    """Decide a document with the internal search; no symmetry is assumed beyond its own unit clauses."""
    constraints, fixed = decode_constraints(doc)
    return solve_nae(doc.num_vars, constraints, options, fixed=fixed)


def parse_model(model: str | Iterable[int], n: int) -> dict[int, bool]:
    """Variable assignment from 'v' lines, a bare literal list, or integers.

    Reading stops at the first 0. Every variable in [1, n] must appear exactly once.
    """
    if isinstance(model, str):
        tokens = []
        for line in model.splitlines():
            line = line.strip()
            if not line or line[0] in "cs":
                continue
            if line.startswith("v"):
                line = line[1:]
            tokens.extend(line.split())
        try:
            lits = [int(t) for t in tokens]
        except ValueError as exc:
            raise ModelParseError(f"non-integer token in model: {exc}") from None
    else:
        lits = [int(x) for x in model]
    values: dict[int, bool] = {}
    for lit in lits:
        if lit == 0:
            break
        var = abs(lit)
        if var > n:
            raise ModelParseError(f"variable {var} outside [1,{n}]")
        if var in values:
            raise ModelParseError(f"variable {var} assigned twice")
        values[var] = lit > 0
    missing = [i for i in range(1, n + 1) if i not in values]
    if missing:
        raise ModelParseError(f"variables missing from model: {missing[:10]}")
    return values


def verify_model(model: str | Sequence[int], spec, n: int) -> Coloring:
    """Decode ``model`` and return its coloring; raises ModelRejected on a monochromatic solution."""
    values = parse_model(model, n)
    coloring = Coloring(n, tuple(int(values[i]) for i in range(1, n + 1)))
    bad = find_monochromatic(coloring, spec)
    if bad is not None:
        raise ModelRejected(bad, coloring)
    return coloring
