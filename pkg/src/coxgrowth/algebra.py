"""Exact polynomial / rational power-series arithmetic over the integers.

Everything in this module is exact: coefficients are Python ints (or
Fractions internally), never floats.  Growth series of groups with a
regular geodesic language are rational, so the whole pipeline bottoms
out in three operations implemented here:

* expanding a rational function into its Taylor coefficients,
* counting paths in a nonnegative integer transfer matrix, and
* recovering the rational function from enough exact series terms
  (a minimal linear recurrence fit with a hard degree bound).

Polynomials are stored lowest-degree first with no trailing zeros, so
``IntPolynomial((1, 1, 2))`` is ``1 + z + 2z^2`` and the zero
polynomial has an empty coefficient tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence


class NoRecurrenceError(Exception):
    """No linear recurrence of order <= bound fits the sequence."""


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients lowest degree first, trimmed."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(
            tuple(self.coefficient(k) + other.coefficient(k) for k in range(n))
        )

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(
            tuple(self.coefficient(k) - other.coefficient(k) for k in range(n))
        )

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def scale_argument(self, factor: int) -> "IntPolynomial":
        """Return p(factor * t); used e.g. to double vertex multiplicities."""
        return IntPolynomial(tuple(c * factor**k for k, c in enumerate(self.coeffs)))

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_str(self, var: str = "z") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                sign = "-" if c < 0 else ""
                term = f"{sign}{mag}{var}" if k == 1 else f"{sign}{mag}{var}^{k}"
                parts.append(term)
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __str__(self) -> str:
        return self.to_str()


# -- gcd over Z[z] via the primitive PRS (content + pseudo-remainders) --

def _content(coeffs: Sequence[int]) -> int:
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    return g


def _primitive(coeffs: Sequence[int]) -> list[int]:
    g = _content(coeffs)
    if g == 0:
        return []
    return [c // g for c in coeffs]


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    # remainder of lc(b)^k * a modulo b, integer arithmetic only
    a = list(a)
    lb = b[-1]
    while len(a) >= len(b) and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        shift = len(a) - len(b)
        la = a[-1]
        a = [c * lb for c in a]
        for i, c in enumerate(b):
            a[i + shift] -= la * c
        while a and a[-1] == 0:
            a.pop()
    return a


def poly_gcd(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Greatest common divisor in Z[z], primitive with positive lead."""
    a, b = list(p.coeffs), list(q.coeffs)
    if not a:
        a, b = b, a
    if not b:
        g = _primitive(a)
        if g and g[-1] < 0:
            g = [-c for c in g]
        return IntPolynomial(tuple(g)) if g else IntPolynomial((1,) if not a else ())
    a, b = _primitive(a), _primitive(b)
    while b:
        r = _pseudo_rem(a, b)
        a, b = b, _primitive(r)
    if a[-1] < 0:
        a = [-c for c in a]
    return IntPolynomial(tuple(a))


def _exact_div(p: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Divide p by g, which must divide exactly (checked)."""
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if p.is_zero():
        return IntPolynomial(())
    rem = [Fraction(c) for c in p.coeffs]
    den = [Fraction(c) for c in g.coeffs]
    out = [Fraction(0)] * (len(rem) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = rem[k + len(den) - 1] / den[-1]
        out[k] = c
        if c:
            for i, d in enumerate(den):
                rem[k + i] -= c * d
    if any(rem):
        raise ValueError("inexact polynomial division")
    if any(c.denominator != 1 for c in out):
        raise ValueError("quotient is not an integer polynomial")
    return IntPolynomial(tuple(int(c) for c in out))


@dataclass(frozen=True)
class RationalSeries:
    """A rational generating function num/den in lowest terms.

    Normal form: gcd(num, den) = 1 over Q and den has constant term +1,
    so the Taylor coefficients are integers whenever the series is
    integral (which all growth series are).
    """

    num: IntPolynomial
    den: IntPolynomial

    def __post_init__(self) -> None:
        num, den = self.num, self.den
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(num, den)
        if g.degree > 0 or (g.coeffs and g.coeffs[0] not in (1, -1)):
            num = _exact_div(num, g)
            den = _exact_div(den, g)
        c = _content(num.coeffs + den.coeffs)
        if c > 1:
            num = IntPolynomial(tuple(x // c for x in num.coeffs))
            den = IntPolynomial(tuple(x // c for x in den.coeffs))
        d0 = den.coefficient(0)
        if d0 == 0:
            raise ZeroDivisionError("denominator vanishes at 0")
        if d0 < 0:
            num = IntPolynomial(tuple(-x for x in num.coeffs))
            den = IntPolynomial(tuple(-x for x in den.coeffs))
            d0 = -d0
        if d0 != 1:
            raise ValueError(
                "series is not integral: reduced denominator has constant "
                f"term {d0}"
            )
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def to_json_dict(self) -> dict:
        return {"num": list(self.num.coeffs), "den": list(self.den.coeffs)}

    @classmethod
    def from_json_dict(cls, d: dict) -> "RationalSeries":
        return cls(IntPolynomial(tuple(d["num"])), IntPolynomial(tuple(d["den"])))

    def __str__(self) -> str:
        return f"({self.num}) / ({self.den})"


def series(num: Sequence[int], den: Sequence[int]) -> RationalSeries:
    """Convenience constructor from raw coefficient lists."""
    return RationalSeries(IntPolynomial(tuple(num)), IntPolynomial(tuple(den)))


def expand(rs: RationalSeries, n: int) -> list[int]:
    """First n+1 Taylor coefficients of num/den, exactly."""
    if n < 0:
        return []
    out = []
    den = rs.den.coeffs  # den[0] == 1 by the normal form
    for k in range(n + 1):
        c = rs.num.coefficient(k)
        for i in range(1, min(k, len(den) - 1) + 1):
            c -= den[i] * out[k - i]
        out.append(c)
    return out


def rational_equal(a: RationalSeries, b: RationalSeries) -> bool:
    """Exact equality as rational functions (cross multiplication)."""
    return a.num * b.den == b.num * a.den


@dataclass(frozen=True)
class CountMatrix:
    """Nonnegative integer transfer system: counts[k] = initial * M^k * accepting."""

    matrix: tuple[tuple[int, ...], ...]
    initial: tuple[int, ...]
    accepting: tuple[int, ...]

    def __post_init__(self) -> None:
        d = len(self.initial)
        if len(self.accepting) != d or len(self.matrix) != d:
            raise ValueError("dimension mismatch")
        for row in self.matrix:
            if len(row) != d:
                raise ValueError("matrix is not square")


def transfer_count(cm: CountMatrix, n: int) -> list[int]:
    """Exact word counts by length 0..n via iterated vector-matrix products."""
    v = list(cm.initial)
    counts = []
    for _ in range(n + 1):
        counts.append(sum(x * a for x, a in zip(v, cm.accepting)))
        v = [
            sum(v[i] * cm.matrix[i][j] for i in range(len(v)) if v[i])
            for j in range(len(v))
        ]
    return counts


def _solve_affine(rows: list[list[Fraction]], rhs: list[Fraction]):
    """One exact solution of rows*x = rhs, or None if inconsistent.

    Free variables are set to zero; exact Gaussian elimination over Q.
    """
    m = len(rows)
    ncols = len(rows[0]) if rows else 0
    aug = [row[:] + [r] for row, r in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][ncols] != 0:
            return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = aug[i][ncols]
    return x


def fit_recurrence(seq: Sequence[int], bound: int) -> RationalSeries:
    """Recover the rational function behind an exact integer sequence.

    Searches for the least order r <= bound such that some recurrence
    c_n = q_1 c_{n-1} + ... + q_r c_{n-r} holds for every n > bound in
    the given window; equivalently num/den with deg den <= r and
    deg num <= bound reproducing every provided term.  Requires at
    least 2*bound + 1 terms so that the answer is unique as a rational
    function; the result is re-expanded and checked against the whole
    input before being returned.

    Raises NoRecurrenceError when nothing of order <= bound fits.
    """
    seq = list(seq)
    L = len(seq)
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    if L < 2 * bound + 1:
        raise ValueError(
            f"need at least {2 * bound + 1} terms for bound {bound}, got {L}"
        )
    targets = range(bound + 1, L)
    for r in range(bound + 1):
        rows = [[Fraction(seq[n - i]) for i in range(1, r + 1)] for n in targets]
        rhs = [Fraction(seq[n]) for n in targets]
        sol = _solve_affine(rows, rhs)
        if sol is None:
            continue
        lcm = 1
        for q in sol:
            lcm = lcm * q.denominator // gcd(lcm, q.denominator)
        den_coeffs = [lcm] + [int(-q * lcm) for q in sol]
        den = IntPolynomial(tuple(den_coeffs))
        num_coeffs = [
            sum(den.coefficient(i) * seq[k - i] for i in range(min(k, r) + 1))
            for k in range(bound + 1)
        ]
        result = RationalSeries(IntPolynomial(tuple(num_coeffs)), den)
        if expand(result, L - 1) != seq:
            raise NoRecurrenceError(
                f"order-{r} solution failed re-verification; sequence is "
                "not generated by a rational function within the bound"
            )
        return result
    raise NoRecurrenceError(
        f"no linear recurrence of order <= {bound} fits the {L} given terms"
    )
