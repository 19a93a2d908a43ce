"""Exact search for 2-colorings of [1, n] with no monochromatic solution.

Each solution inside [1, n] becomes a not-all-equal constraint over its
distinct values. The search branches on the lowest unassigned integer
(color 0 first) with 1 pinned to color 0, and propagates:

* the unit rule: when every assigned member of a constraint shares one color
  and exactly one member is unassigned, that member takes the other color;
* optionally, for two-coefficient equations ax + by = z, the interval rule
  below (``propagate_lemma21``), which pushes colors along residue chains.

Verdicts never depend on the propagation level; only speed does.
"""
from __future__ import annotations

import enum
import sys
import time
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass, field, replace
from itertools import product
from typing import Iterable, Sequence

from .equation import (
    CanonicalForm,
    Coloring,
    as_spec,
    canonicalize,
    enumerate_solutions,
    find_monochromatic,
)

UNASSIGNED = -1


class Verdict(enum.Enum):
    SAT = "SAT"
    UNSAT = "UNSAT"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class SearchOptions:
    lemma21: bool = False
    max_nodes: int = 10**8
    timeout: float = 600.0
    pin_first: bool = True


@dataclass
class SearchStats:
    nodes: int = 0
    propagations: int = 0
    lemma21_firings: int = 0
    elapsed: float = 0.0

    def merge(self, other: SearchStats) -> None:
        self.nodes += other.nodes
        self.propagations += other.propagations
        self.lemma21_firings += other.lemma21_firings
        self.elapsed = max(self.elapsed, other.elapsed)


@dataclass
class SearchResult:
    verdict: Verdict
    n: int
    witness: Coloring | None = None
    stats: SearchStats = field(default_factory=SearchStats)
    reason: str = ""

    @property
    def sat(self) -> bool:
        return self.verdict is Verdict.SAT

    @property
    def unsat(self) -> bool:
        return self.verdict is Verdict.UNSAT


class SearchInconclusive(RuntimeError):
    def __init__(self, result: SearchResult):
        super().__init__(f"search at n={result.n} inconclusive: {result.reason}")
        self.result = result


class CapExceeded(RuntimeError):
    pass


class _Budget(Exception):
    pass


class PartialColoring:
    """Assignment of [1, n] to {0, 1, unassigned} with per-constraint color counts.

    ``trail`` lists assigned integers in order; undoing to a mark pops it.
    """

    def __init__(self, n: int, constraints: Iterable[Sequence[int]]):
        self.n = n
        self.color = [UNASSIGNED] * (n + 1)
        self.trail: list[int] = []
        self.members = [tuple(c) for c in constraints]
        self.size = [len(c) for c in self.members]
        self.count = [[0] * len(self.members), [0] * len(self.members)]
        self.occurs: list[list[int]] = [[] for _ in range(n + 1)]
        for cid, members in enumerate(self.members):
            for i in members:
                if not 1 <= i <= n:
                    raise ValueError(f"constraint member {i} outside [1,{n}]")
                self.occurs[i].append(cid)
        self.pending: list[int] = []
        self.propagations = 0

    def assign(self, i: int, col: int) -> bool:
        """Set color of ``i``; False if some constraint became monochromatic."""
        if self.color[i] != UNASSIGNED:
            return self.color[i] == col
        self.color[i] = col
        self.trail.append(i)
        same, other = self.count[col], self.count[1 - col]
        ok = True
        for cid in self.occurs[i]:
            same[cid] += 1
            size = self.size[cid]
            if same[cid] == size:
                ok = False
            elif same[cid] == size - 1 and other[cid] == 0:
                self.pending.append(cid)
        return ok

    def mark(self) -> int:
        return len(self.trail)

    def undo(self, mark: int) -> None:
        self.pending.clear()
        while len(self.trail) > mark:
            i = self.trail.pop()
            cnt = self.count[self.color[i]]
            for cid in self.occurs[i]:
                cnt[cid] -= 1
            self.color[i] = UNASSIGNED

    def replay(self) -> list[int]:
        """Colors rebuilt from the trail alone (for consistency checks)."""
        color = [UNASSIGNED] * (self.n + 1)
        for i in self.trail:
            color[i] = self.color[i]
        return color

    def first_unassigned(self, start: int = 1) -> int | None:
        for i in range(start, self.n + 1):
            if self.color[i] == UNASSIGNED:
                return i
        return None

    def to_coloring(self) -> Coloring:
        if UNASSIGNED in self.color[1:]:
            raise ValueError("partial coloring is not total")
        return Coloring(self.n, tuple(self.color[1:]))


def propagate_unit(state: PartialColoring) -> bool:
    """Run the unit rule to a fixpoint. Returns False on conflict."""
    pending = state.pending
    color = state.color
    while pending:
        cid = pending.pop()
        c0, c1 = state.count[0][cid], state.count[1][cid]
        size = state.size[cid]
        if c0 + c1 != size - 1 or (c0 and c1):
            continue
        forced = 1 if c0 else 0
        for i in state.members[cid]:
            if color[i] == UNASSIGNED:
                state.propagations += 1
                if not state.assign(i, forced):
                    pending.clear()
                    return False
                break
    return True


@dataclass(frozen=True)
class Lemma21Params:
    """An observed color flip u -> u + l, with delta the color of u.

    For a coloring free of monochromatic kx + ly = z solutions, color delta
    spreads downward in steps of k from any delta-colored w <= bound, and
    color 1 - delta spreads upward in steps of k up to ``bound``, where
    ``bound = (n - k*u) // l``.
    """

    k: int
    l: int
    u: int
    delta: int
    bound: int


def find_lemma21_params(state: PartialColoring, canonical: CanonicalForm) -> list[Lemma21Params]:
    """One active flip per (k, l) role: the smallest u, which gives the widest bound."""
    if canonical.m != 2:
        return []
    n, color = state.n, state.color
    out = []
    for k, l in dict.fromkeys([(canonical.a, canonical.b), (canonical.b, canonical.a)]):
        if l >= n:
            continue
        for u in range(1, n - l + 1):
            cu = color[u]
            if cu != UNASSIGNED and color[u + l] == 1 - cu:
                bound = (n - k * u) // l
                if bound >= 1:
                    out.append(Lemma21Params(k, l, u, cu, bound))
                break
    return out


def propagate_lemma21(
    state: PartialColoring, canonical: CanonicalForm, params: Lemma21Params
) -> list[tuple[int, int]] | None:
    """Assignments forced by one flip, or None if they contradict the state.

    The forced assignments are returned, not applied. Only two-coefficient
    equations are handled; for m > 2 nothing is forced.
    """
    if canonical.m != 2:
        return []
    color = state.color
    k, delta, bound = params.k, params.delta, params.bound
    forced: dict[int, int] = {}

    def push(x: int, want: int) -> bool | None:
        # True: keep walking, False: chain already covered, None: conflict
        have = color[x]
        if have == want:
            return False
        if have != UNASSIGNED or forced.get(x, want) != want:
            return None
        forced[x] = want
        return True

    for w in range(1, state.n + 1):
        cw = color[w]
        if cw == delta and w <= bound:
            x = w - k
            while x >= 1:
                step = push(x, delta)
                if step is None:
                    return None
                if not step:
                    break
                x -= k
        elif cw == 1 - delta:
            x = w + k
            while x <= bound:
                step = push(x, 1 - delta)
                if step is None:
                    return None
                if not step:
                    break
                x += k
    return sorted(forced.items())


class _Search:
    def __init__(self, n, constraints, options: SearchOptions, canonical=None, fixed=()):
        self.n = n
        self.options = options
        self.canonical = canonical if options.lemma21 else None
        self.state = PartialColoring(n, constraints)
        self.fixed = list(fixed)
        self.stats = SearchStats()
        self.deadline = None

    def propagate(self) -> bool:
        state = self.state
        while True:
            if not propagate_unit(state):
                return False
            if self.canonical is None:
                return True
            changed = False
            for params in find_lemma21_params(state, self.canonical):
                forced = propagate_lemma21(state, self.canonical, params)
                if forced is None:
                    self.stats.lemma21_firings += 1
                    return False
                if forced:
                    self.stats.lemma21_firings += 1
                    for i, col in forced:
                        if not state.assign(i, col):
                            return False
                    changed = True
                    break
            if not changed:
                return True

    def recurse(self, start: int) -> bool:
        self.stats.nodes += 1
        if self.stats.nodes > self.options.max_nodes:
            raise _Budget(f"node cap {self.options.max_nodes} reached")
        if self.stats.nodes & 1023 == 0 and time.perf_counter() > self.deadline:
            raise _Budget(f"time cap {self.options.timeout}s reached")
        i = self.state.first_unassigned(start)
        if i is None:
            return True
        for col in (0, 1):
            mark = self.state.mark()
            if self.state.assign(i, col) and self.propagate():
                if self.recurse(i + 1):
                    return True
            self.state.undo(mark)
        return False

    def run(self) -> SearchResult:
        t0 = time.perf_counter()
        self.deadline = t0 + self.options.timeout
        # one frame per branching level
        sys.setrecursionlimit(max(sys.getrecursionlimit(), 2 * self.n + 1000))
        verdict, witness, reason = Verdict.UNSAT, None, ""
        try:
            fixed = list(self.fixed)
            if self.options.pin_first and self.n >= 1:
                fixed.insert(0, (1, 0))
            ok = all(self.state.assign(i, col) for i, col in fixed) and self.propagate()
            if ok and self.recurse(1):
                verdict = Verdict.SAT
                witness = self.state.to_coloring()
        except _Budget as exc:
            verdict, reason = Verdict.INCONCLUSIVE, str(exc)
        self.stats.propagations = self.state.propagations
        self.stats.elapsed = time.perf_counter() - t0
        return SearchResult(verdict, self.n, witness, self.stats, reason)


def solve_nae(
    n: int,
    constraints: Iterable[Sequence[int]],
    options: SearchOptions = SearchOptions(),
    fixed: Sequence[tuple[int, int]] = (),
    canonical: CanonicalForm | None = None,
) -> SearchResult:
    """Decide whether [1, n] has a 2-coloring making no constraint monochromatic.

    ``canonical`` enables the interval rule when ``options.lemma21`` is set;
    it is only sound when the constraints are exactly the solutions of the
    matching two-coefficient equation.
    """
    return _Search(n, constraints, options, canonical, fixed).run()


def exists_valid_coloring(spec, n: int, options: SearchOptions = SearchOptions()) -> SearchResult:
    """Is there a coloring of [1, n] without a monochromatic solution of ``spec``?"""
    spec = as_spec(spec)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    constraints = enumerate_solutions(spec, n)
    result = solve_nae(n, constraints, options, canonical=canonicalize(spec))
    if result.sat:
        bad = find_monochromatic(result.witness, spec)
        if bad is not None:
            raise AssertionError(f"search returned a witness with monochromatic solution {bad}")
    return result


def _solve_branch(args):
    spec, n, options, fixed = args
    constraints = enumerate_solutions(spec, n)
    return solve_nae(n, constraints, options, fixed=fixed, canonical=canonicalize(spec))


def exists_valid_coloring_parallel(
    spec, n: int, options: SearchOptions = SearchOptions(), split: int = 4, workers: int | None = None
) -> SearchResult:
    """Same verdict as :func:`exists_valid_coloring`, with integers 2..split fixed per worker."""
    spec = as_spec(spec)
    if not options.pin_first:
        raise ValueError("the parallel driver relies on 1 being pinned to color 0")
    split = max(1, min(split, n))
    jobs = [
        (spec, n, options, tuple(zip(range(2, split + 1), cols)))
        for cols in product((0, 1), repeat=split - 1)
    ]
    stats = SearchStats()
    inconclusive = None
    with ProcessPoolExecutor(max_workers=workers) as pool:
        pending = {pool.submit(_solve_branch, job) for job in jobs}
        while pending:
            done, pending = wait(pending, return_when=FIRST_COMPLETED)
            for fut in done:
                res = fut.result()
                stats.merge(res.stats)
                if res.sat:
                    for other in pending:
                        other.cancel()
                    if find_monochromatic(res.witness, spec) is not None:
                        raise AssertionError("parallel branch returned an invalid witness")
                    return SearchResult(Verdict.SAT, n, res.witness, stats)
                if res.verdict is Verdict.INCONCLUSIVE:
                    inconclusive = res.reason
    if inconclusive is not None:
        return SearchResult(Verdict.INCONCLUSIVE, n, None, stats, inconclusive)
    return SearchResult(Verdict.UNSAT, n, None, stats)


def minimal_rado_by_search(
    spec,
    cap: int,
    options: SearchOptions = SearchOptions(),
    start: int = 1,
    results: list[SearchResult] | None = None,
) -> int:
    """Least n whose search verdict is UNSAT, scanning n = start, start+1, ..., cap.

    Callers passing ``start > 1`` vouch that every n < start is satisfiable
    (for instance through a validated witness coloring of [1, start]).
    Each step's result is appended to ``results`` when given.
    """
    spec = as_spec(spec)
    for n in range(max(1, start), cap + 1):
        res = exists_valid_coloring(spec, n, options)
        if results is not None:
            results.append(res)
        if res.verdict is Verdict.INCONCLUSIVE:
            raise SearchInconclusive(res)
        if res.unsat:
            return n
    raise CapExceeded(f"no UNSAT verdict for {spec} up to n={cap}")


def with_caps(options: SearchOptions, max_nodes=None, timeout=None) -> SearchOptions:
    changes = {}
    if max_nodes is not None:
        changes["max_nodes"] = int(max_nodes)
    if timeout is not None:
        changes["timeout"] = float(timeout)
    return replace(options, **changes)
