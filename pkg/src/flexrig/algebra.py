"""Exact arithmetic in one variable ``t`` over the rationals.

Everything here is immutable. Rationals are :class:`fractions.Fraction`;
polynomials and rational functions are built on top and kept in a
canonical form, so ``==`` is exact equality of functions.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import DegenerateCoupling, DimensionMismatch

Number = Union[int, Fraction]

__all__ = [
    "Poly",
    "RatFunc",
    "Point",
    "UnitCurve",
    "LinearSolution",
    "as_fraction",
    "ratfunc_arith",
    "ratfunc_is_constant",
    "halfangle_unit",
    "coupled_unit",
    "linear_solve",
    "rational_sqrt",
]


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and strings like ``"3/4"`` to a Fraction.

    Floats are rejected; they would silently leak rounding into exact code.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def rational_sqrt(value: Fraction) -> Optional[Fraction]:
    """Exact square root of a non-negative rational, or None if irrational."""
    if value < 0:
        return None
    n, d = value.numerator, value.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


class Poly:
    """Univariate polynomial with rational coefficients, ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple = tuple(cs)

    @classmethod
    def const(cls, c: Number) -> "Poly":
        return cls((c,))

    @classmethod
    def t(cls) -> "Poly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        # zero polynomial has degree -1
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Poly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Poly.const(1)
        for _ in range(k):
            result = result * self
        return result

    def scale(self, c: Number) -> "Poly":
        c = as_fraction(c)
        return Poly(c * x for x in self.coeffs)

    def divmod(self, other: "Poly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        if len(rem) - 1 < dq:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - dq)
        inv = 1 / other.lead
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] * inv
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Poly(quot), Poly(rem[:dq])

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(1 / self.lead)

    def __call__(self, x):
        if isinstance(x, float):
            acc = 0.0
            for c in reversed(self.coeffs):
                acc = acc * x + float(c)
            return acc
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def _as_poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    return Poly.const(as_fraction(value))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) is 0."""
    while not b.is_zero():
        _, r = a.divmod(b)
        a, b = b, r
    return a.monic()


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: Poly, var: str = "t") -> str:
    """Render like ``3*t^2 - 3``: descending powers, unit coefficients dropped."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        neg = c < 0
        a = -c if neg else c
        if k == 0:
            body = _fmt_coeff(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{_fmt_coeff(a)}*{mono}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    return "".join(parts)


def _term_count(p: Poly) -> int:
    return sum(1 for c in p.coeffs if c != 0)


class RatFunc:
    """Reduced quotient ``num/den`` with monic denominator.

    >>> t = RatFunc.t()
    >>> str(1 / (t + 1) + 1 / (t - 1))
    '2*t/(t^2 - 1)'
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_poly(num)
        den = Poly.const(1) if den is None else _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            den = Poly.const(1)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, _ = num.divmod(g)
                den, _ = den.divmod(g)
            lead = den.lead
            if lead != 1:
                num = num.scale(1 / lead)
                den = den.scale(1 / lead)
        self.num: Poly = num
        self.den: Poly = den

    @classmethod
    def t(cls) -> "RatFunc":
        return cls(Poly.t())

    @classmethod
    def const(cls, c: Number) -> "RatFunc":
        return cls(Poly.const(c))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def constant_value(self) -> Optional[Fraction]:
        if self.num.degree <= 0 and self.den.degree == 0:
            return self.num.lead  # den is monic, so den == 1
        return None

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc({str(self)!r})"

    def __str__(self):
        return format_ratfunc(self)

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __add__(self, other):
        other = _as_ratfunc(other)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_ratfunc(other))

    def __rsub__(self, other):
        return _as_ratfunc(other) - self

    def __mul__(self, other):
        other = _as_ratfunc(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_ratfunc(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _as_ratfunc(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return RatFunc.const(1) / (self ** -k)
        return RatFunc(self.num ** k, self.den ** k)

    def __call__(self, x):
        """Evaluate at a Fraction (exact) or float; None means t -> infinity."""
        if x is None:
            return self.at_infinity()
        if isinstance(x, (int, Fraction)):
            d = self.den(Fraction(x))
            if d == 0:
                raise ZeroDivisionError(f"pole at t = {x}")
            return self.num(Fraction(x)) / d
        return self.num(float(x)) / self.den(float(x))

    def at_infinity(self) -> Fraction:
        if self.num.degree > self.den.degree:
            raise ZeroDivisionError("unbounded as t -> infinity")
        if self.num.degree < self.den.degree:
            return Fraction(0)
        return self.num.lead  # monic den

    def integer_form(self):
        """Scale num and den to coprime integer coefficients, den leading positive."""
        denoms = [c.denominator for c in self.num.coeffs + self.den.coeffs]
        m = math.lcm(*denoms) if denoms else 1
        num = [int(c * m) for c in self.num.coeffs]
        den = [int(c * m) for c in self.den.coeffs]
        g = math.gcd(*(num + den))
        if g > 1:
            num = [c // g for c in num]
            den = [c // g for c in den]
        return num, den


def _as_ratfunc(value) -> RatFunc:
    if isinstance(value, RatFunc):
        return value
    return RatFunc(value)


def format_ratfunc(f: RatFunc, var: str = "t") -> str:
    """Render as e.g. ``(3*t^2 - 3)/(t^2 + 1)`` or ``-6*t/(t^2 + 1)``."""
    if f.den.degree == 0:
        return format_poly(f.num, var)
    num_i, den_i = f.integer_form()
    num, den = Poly(num_i), Poly(den_i)
    ns = format_poly(num, var)
    ds = format_poly(den, var)
    if _term_count(num) > 1:
        ns = f"({ns})"
    if _term_count(den) > 1 or den.lead != 1:
        ds = f"({ds})"
    return f"{ns}/{ds}"


def ratfunc_arith(a: RatFunc, b: RatFunc, op: str):
    """Named-operation wrapper over the operators: add, sub, mul, div, eq."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "eq":
        return a == b
    raise ValueError(f"unknown operation {op!r}")


def ratfunc_is_constant(f: RatFunc) -> Optional[Fraction]:
    return f.constant_value()


@dataclass(frozen=True)
class Point:
    """Planar point whose coordinates are rational functions of ``t``.

    Also used as a complex number ``x + i*y`` for rotation algebra.
    """

    x: RatFunc
    y: RatFunc

    @classmethod
    def of(cls, x, y) -> "Point":
        return cls(_as_ratfunc(x), _as_ratfunc(y))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Point":
        return Point(-self.x, -self.y)

    def scale(self, c) -> "Point":
        return Point(self.x * c, self.y * c)

    def cmul(self, other: "Point") -> "Point":
        return Point(self.x * other.x - self.y * other.y, self.x * other.y + self.y * other.x)

    def cdiv(self, other: "Point") -> "Point":
        n2 = other.norm2()
        if n2.is_zero():
            raise ZeroDivisionError("complex division by zero")
        return Point(
            (self.x * other.x + self.y * other.y) / n2,
            (self.y * other.x - self.x * other.y) / n2,
        )

    def norm2(self) -> RatFunc:
        return self.x * self.x + self.y * self.y

    def is_zero(self) -> bool:
        return self.x.is_zero() and self.y.is_zero()

    def constant(self) -> Optional[tuple]:
        cx, cy = self.x.constant_value(), self.y.constant_value()
        if cx is None or cy is None:
            return None
        return cx, cy

    def __call__(self, t):
        return self.x(t), self.y(t)


@dataclass(frozen=True)
class UnitCurve:
    """Rational parametrisation of a point moving on the unit circle.

    ``speed`` is the signed half-angle scale ``a`` of ``(t - a*i)/(t + a*i)``;
    it is 0 for a constant curve.
    """

    x: RatFunc
    y: RatFunc
    speed: Fraction

    @property
    def point(self) -> Point:
        return Point(self.x, self.y)

    def identity_residual(self) -> RatFunc:
        return self.x * self.x + self.y * self.y - 1


def halfangle_unit(a: Number) -> UnitCurve:
    """Return ``((t^2 - a^2)/(t^2 + a^2), -2at/(t^2 + a^2))``."""
    a = as_fraction(a)
    if a <= 0:
        raise ValueError("half-angle scale must be positive")
    t = Poly.t()
    den = t * t + a * a
    return UnitCurve(RatFunc(t * t - a * a, den), RatFunc(t.scale(-2 * a), den), a)


def coupled_unit(z: UnitCurve, L: Number) -> UnitCurve:
    """Unit curve ``z' = (L*z - 1)/(L - z)``.

    The four vectors ``1, -L*z, L*z', -z*z'`` then sum to zero identically.
    """
    L = as_fraction(L)
    if abs(L) == 1:
        raise DegenerateCoupling(f"coupling constant |L| = 1 collapses the curve (L={L})")
    zp = z.point
    one = Point.of(1, 0)
    Lp = Point.of(L, 0)
    out = (zp.scale(L) - one).cdiv(Lp - zp)
    speed = z.speed * (L + 1) / (L - 1)
    return UnitCurve(out.x, out.y, speed)


@dataclass(frozen=True)
class LinearSolution:
    particular: tuple
    nullspace: tuple  # tuple of basis vectors


def linear_solve(rows: Sequence[Sequence], rhs: Sequence) -> Optional[LinearSolution]:
    """Solve ``rows @ x = rhs`` exactly by Gauss-Jordan elimination.

    Returns None when the system is inconsistent. Free variables are the
    non-pivot columns; the particular solution sets them to zero and each
    nullspace vector sets exactly one of them to one.
    """
    m = len(rows)
    if len(rhs) != m:
        raise DimensionMismatch(f"{m} rows but {len(rhs)} right-hand sides")
    n = len(rows[0]) if m else 0
    if any(len(r) != n for r in rows):
        raise DimensionMismatch("ragged coefficient matrix")
    A = [[as_fraction(v) for v in r] + [as_fraction(b)] for r, b in zip(rows, rhs)]

    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = 1 / A[r][c]
        A[r] = [v * inv for v in A[r]]
        for i in range(m):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                Ai, Ar = A[i], A[r]
                A[i] = [a - f * b for a, b in zip(Ai, Ar)]
        pivots.append(c)
        r += 1
        if r == m:
            break

    if any(A[i][n] != 0 for i in range(r, m)):
        return None

    particular = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        particular[c] = A[i][n]
    pivot_set = set(pivots)
    basis = []
    for f in range(n):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -A[i][f]
        basis.append(tuple(v))
    return LinearSolution(tuple(particular), tuple(basis))
