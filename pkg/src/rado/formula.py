"""Closed-form two-color Rado numbers and the older special-case formulas."""
from __future__ import annotations

from dataclasses import dataclass

from .equation import CanonicalForm, EquationSpec, as_spec, canonicalize, check_int64


@dataclass(frozen=True)
class RadoValue:
    value: int
    canonical: CanonicalForm

    def __int__(self) -> int:
        return self.value


def rado_from_canonical(a: int, b: int) -> int:
    v = a + b
    av2 = check_int64(a * v * v, "a*v^2")
    value = check_int64(av2 + b, "a*v^2 + b")
    # the second algebraic form, a*v^2 + v - a, must agree
    if value != av2 + v - a:
        raise AssertionError(f"closed forms disagree for a={a}, b={b}")
    return value


def rado_number(spec) -> RadoValue:
    """R = a(a+b)^2 + b where a is the smallest coefficient and b the rest of the sum.

    Holds for every coefficient list of length >= 2, with no divisibility
    side condition.
    """
    canon = canonicalize(spec)
    return RadoValue(rado_from_canonical(canon.a, canon.b), canon)


def special_case_value(spec) -> tuple[str, int] | None:
    """Value from the earlier special-case results, or None if none applies.

    ``BB``: all ones, m^2 + m - 1.  ``Abbott``: all equal to a, a^3 m^2 + am - a.
    ``JS``: minimum coefficient 1, b^2 + 3b + 1 with b = sum - 1.
    """
    spec = as_spec(spec)
    coeffs, m = spec.coeffs, spec.m
    if all(c == 1 for c in coeffs):
        return "BB", m * m + m - 1
    if len(set(coeffs)) == 1:
        a = coeffs[0]
        return "Abbott", a**3 * m * m + a * m - a
    if min(coeffs) == 1:
        b = sum(coeffs) - 1
        return "JS", b * b + 3 * b + 1
    return None


def sandwich_bounds(spec) -> tuple[int, int]:
    """(lower, upper) with lower = a(a+b)^2 + b and upper = R(a, b).

    The two coincide for every valid spec; a mismatch raises.
    """
    canon = canonicalize(spec)
    lower = check_int64(canon.a * (canon.a + canon.b) ** 2 + canon.b, "lower bound")
    upper = rado_number(EquationSpec((canon.a, canon.b))).value
    if lower != upper:
        raise AssertionError(f"bounds do not collapse for {spec}: {lower} != {upper}")
    return lower, upper
