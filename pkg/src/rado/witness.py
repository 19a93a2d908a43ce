"""Extremal colorings of [1, R-1] and certificates pinning R exactly."""
from __future__ import annotations

from dataclasses import dataclass

from .equation import Coloring, as_spec, canonicalize, find_monochromatic
from .formula import rado_number
from .solver import SearchOptions, SearchResult, Verdict, exists_valid_coloring


class WitnessError(AssertionError):
    """The interval coloring failed validation; this is a bug, not bad input."""


@dataclass(frozen=True)
class IntervalColoring:
    n: int
    zero_blocks: tuple[tuple[int, int], tuple[int, int]]
    one_block: tuple[int, int]

    def to_coloring(self) -> Coloring:
        return Coloring.from_blocks(self.n, [self.one_block])


def interval_layout(spec) -> IntervalColoring:
    canon = canonicalize(spec)
    v = canon.v
    n = rado_number(spec).value - 1
    if not (v - 1 >= 1 and v * v <= n):
        raise WitnessError(f"blocks do not fit in [1,{n}] for v={v}")
    return IntervalColoring(n, ((1, v - 1), (v * v, n)), (v, v * v - 1))


def extremal_coloring(spec) -> Coloring:
    """Color 0 on [1, v-1] and [v^2, R-1], color 1 on [v, v^2-1].

    The result is checked against every solution before it is returned.
    """
    spec = as_spec(spec)
    coloring = interval_layout(spec).to_coloring()
    bad = find_monochromatic(coloring, spec)
    if bad is not None:
        raise WitnessError(f"interval coloring for {spec.coeffs} has monochromatic solution {bad}")
    return coloring


CONFIRMED = "confirmed"
WITNESS_ONLY = "witness-only"
INCONCLUSIVE = "inconclusive"


@dataclass
class Certificate:
    coeffs: tuple[int, ...]
    R: int
    witness_n: int
    witness_valid: bool
    status: str
    search: SearchResult | None = None

    def summary(self) -> str:
        parts = [f"witness n={self.witness_n} valid"]
        if self.status == CONFIRMED:
            parts.append(f"UNSAT n={self.R}")
        elif self.status == INCONCLUSIVE:
            parts.append(f"search at n={self.R} inconclusive: {self.search.reason}")
        label = {CONFIRMED: "CONFIRMED", WITNESS_ONLY: "WITNESS-ONLY", INCONCLUSIVE: "INCONCLUSIVE"}
        return f"R={self.R} {label[self.status]} ({', '.join(parts)})"


def certify_pair(spec, via_search: bool = False, options: SearchOptions = SearchOptions()) -> Certificate:
    """Witness at R-1 (always) plus, optionally, an UNSAT search verdict at R."""
    spec = as_spec(spec)
    R = rado_number(spec).value
    extremal_coloring(spec)
    if not via_search:
        return Certificate(spec.coeffs, R, R - 1, True, WITNESS_ONLY)
    res = exists_valid_coloring(spec, R, options)
    if res.verdict is Verdict.SAT:
        raise AssertionError(f"search found a valid coloring of [1,{R}] for {spec.coeffs}: {res.witness}")
    status = CONFIRMED if res.unsat else INCONCLUSIVE
    return Certificate(spec.coeffs, R, R - 1, True, status, res)


def is_maximal(spec, options: SearchOptions = SearchOptions()) -> bool:
    """True when no coloring of [1, R] avoids monochromatic solutions."""
    spec = as_spec(spec)
    return exists_valid_coloring(spec, rado_number(spec).value, options).unsat

