"""Equations a1*x1 + ... + am*xm = x0, their solutions, and colorings of [1, n].

Everything downstream (formula checks, the search, witnesses, CNF export)
treats :func:`find_monochromatic` as ground truth. It is written against
bitsets of the color classes and never looks at :func:`enumerate_solutions`,
so the two can be checked against each other.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

INT64_MAX = 2**63 - 1


class SpecError(ValueError):
    """Raised for an invalid coefficient list."""


def check_int64(value: int, what: str) -> int:
    if value > INT64_MAX:
        raise OverflowError(f"{what} = {value} does not fit in a signed 64-bit integer")
    return value


@dataclass(frozen=True)
class EquationSpec:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Sequence[int]):
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) < 2:
            raise SpecError(f"need at least two coefficients, got {len(coeffs)}")
        if any(c < 1 for c in coeffs):
            raise SpecError(f"coefficients must be positive integers, got {coeffs}")
        check_int64(sum(coeffs), "coefficient sum")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def m(self) -> int:
        return len(self.coeffs)

    def __str__(self) -> str:
        lhs = " + ".join(f"{c}*x{i}" for i, c in enumerate(self.coeffs, 1))
        return f"{lhs} = x0"


@dataclass(frozen=True)
class CanonicalForm:
    a: int
    b: int
    v: int
    m: int


def as_spec(spec) -> EquationSpec:
    return spec if isinstance(spec, EquationSpec) else EquationSpec(spec)


def canonicalize(spec) -> CanonicalForm:
    """Reduce a spec to (a, b, v, m): the minimum coefficient, the rest of the sum, and the total."""
    spec = as_spec(spec)
    a = min(spec.coeffs)
    v = sum(spec.coeffs)
    return CanonicalForm(a=a, b=v - a, v=v, m=spec.m)


@dataclass(frozen=True)
class Coloring:
    """A total 2-coloring of [1, n]; ``bits[i - 1]`` is the color of ``i``."""

    n: int
    bits: tuple[int, ...]

    def __post_init__(self):
        if len(self.bits) != self.n:
            raise ValueError(f"coloring of [1,{self.n}] needs {self.n} colors, got {len(self.bits)}")
        if any(c not in (0, 1) for c in self.bits):
            raise ValueError("colors must be 0 or 1")

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> Coloring:
        return cls(len(bits), tuple(int(c) for c in bits))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> Coloring:
        """Bit ``i - 1`` of ``mask`` is the color of ``i``."""
        return cls(n, tuple((mask >> i) & 1 for i in range(n)))

    @classmethod
    def from_blocks(cls, n: int, ones: Sequence[tuple[int, int]]) -> Coloring:
        """Color 1 on the given closed intervals, color 0 elsewhere."""
        bits = [0] * n
        for lo, hi in ones:
            for i in range(max(lo, 1), min(hi, n) + 1):
                bits[i - 1] = 1
        return cls(n, tuple(bits))

    def __getitem__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError(f"{i} is outside [1,{self.n}]")
        return self.bits[i - 1]

    def flipped(self) -> Coloring:
        return Coloring(self.n, tuple(1 - c for c in self.bits))

    def class_mask(self, color: int) -> int:
        """Bitset of the integers with ``color``; bit ``i`` stands for ``i``."""
        mask = 0
        for i, c in enumerate(self.bits, 1):
            if c == color:
                mask |= 1 << i
        return mask

    def to_literals(self) -> list[int]:
        """DIMACS-style literals: +i when i has color 1, -i otherwise."""
        return [i if c else -i for i, c in enumerate(self.bits, 1)]

    def __str__(self) -> str:
        return "".join(map(str, self.bits))


@dataclass(frozen=True)
class SolutionTuple:
    xs: tuple[int, ...]
    x0: int

    def values(self) -> frozenset[int]:
        return frozenset(self.xs) | {self.x0}

    def __str__(self) -> str:
        return f"({','.join(map(str, self.xs))})->{self.x0}"


@dataclass(frozen=True)
class ConstraintSet:
    """Distinct-value sets of all solutions inside [1, n], as not-all-equal constraints."""

    n: int
    constraints: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.constraints)

    def __iter__(self):
        return iter(self.constraints)

    def as_sets(self) -> set[frozenset[int]]:
        return {frozenset(c) for c in self.constraints}


def iter_solutions(spec, n: int) -> Iterator[SolutionTuple]:
    """All solutions with every value in [1, n], lexicographic in (x1, ..., xm).

    A branch is cut as soon as the partial sum plus the smallest possible
    completion (every remaining variable equal to 1) exceeds ``n``.
    """
    coeffs = as_spec(spec).coeffs
    m = len(coeffs)
    # rest[k]: minimal contribution of variables k..m-1
    rest = [0] * (m + 1)
    for k in range(m - 1, -1, -1):
        rest[k] = rest[k + 1] + coeffs[k]
    xs = [0] * m

    def walk(k: int, partial: int):
        if k == m:
            yield SolutionTuple(tuple(xs), partial)
            return
        c = coeffs[k]
        x = 1
        while partial + c * x + rest[k + 1] <= n:
            xs[k] = x
            yield from walk(k + 1, partial + c * x)
            x += 1

    yield from walk(0, 0)


def enumerate_solutions(spec, n: int) -> ConstraintSet:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    seen = set()
    out = []
    for sol in iter_solutions(spec, n):
        key = tuple(sorted(sol.values()))
        if len(key) < 2:
            raise AssertionError(f"solution {sol} has a single distinct value")
        if key not in seen:
            seen.add(key)
            out.append(key)
    return ConstraintSet(n, tuple(out))


def _reachable_sums(coeffs: Sequence[int], members: int, n: int) -> list[int]:
    """``reach[k]`` is the bitset of sums c_k*x_k + ... + c_m*x_m <= n with all x in ``members``."""
    full = (1 << (n + 1)) - 1
    elems = [i for i in range(1, n + 1) if (members >> i) & 1]
    reach = [0] * (len(coeffs) + 1)
    reach[-1] = 1
    for k in range(len(coeffs) - 1, -1, -1):
        acc = 0
        nxt = reach[k + 1]
        if nxt:
            for x in elems:
                shift = coeffs[k] * x
                if shift > n:
                    break
                acc |= nxt << shift
        reach[k] = acc & full
    return reach


def _least_in_class(coeffs: Sequence[int], members: int, n: int) -> SolutionTuple | None:
    reach = _reachable_sums(coeffs, members, n)
    if not reach[0] & members:
        return None
    xs = []
    partial = 0
    for k, c in enumerate(coeffs):
        x = 1
        while True:
            if (members >> x) & 1:
                s = partial + c * x
                if s > n:
                    raise AssertionError("lost track of a reachable solution")
                if (reach[k + 1] << s) & members:
                    xs.append(x)
                    partial = s
                    break
            x += 1
    return SolutionTuple(tuple(xs), partial)


def find_monochromatic(coloring: Coloring, spec) -> SolutionTuple | None:
    """Lexicographically least monochromatic solution under ``coloring``, or None."""
    coeffs = as_spec(spec).coeffs
    n = coloring.n
    found = [
        sol
        for color in (0, 1)
        if (sol := _least_in_class(coeffs, coloring.class_mask(color), n)) is not None
    ]
    return min(found, key=lambda s: s.xs) if found else None


def is_valid_coloring(coloring: Coloring, spec) -> bool:
    return find_monochromatic(coloring, spec) is None
