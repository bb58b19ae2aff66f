"""Exact scalar and small-matrix arithmetic.

Everything downstream computes over arbitrary-precision rationals; no
floating point enters any classification path.  Angles never appear as
numbers: rotations and circle-valued chart data are carried by rational
points (c, s) on the unit circle, and every trigonometric expression is
expanded into a polynomial in (c, s).

First derivatives of the polynomial parametrizations are propagated with
forward-mode jets (:class:`JetScalar`), which keeps tangent-rank
certificates exact as well.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class ArityMismatch(ValueError):
    """A polynomial map was evaluated at a point of the wrong dimension."""


def rational(value) -> Fraction:
    """Coerce an int, Fraction or string like ``"3/5"`` to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {value!r}") from exc
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


def rational_str(value: Fraction) -> str:
    """Canonical serialization: ``"n/d"``, or ``"n"`` when the denominator is 1."""
    return str(value)


def sqrt_rational(value: Fraction) -> Fraction | None:
    """Exact non-negative square root, or None when ``value`` is not a square."""
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def primitive_covector(pair) -> tuple[int, int]:
    """Scale a nonzero rational pair to a primitive integer pair.

    The sign is normalized so the first nonzero entry is positive, making the
    result canonical for the line it spans.
    """
    x, y = Fraction(pair[0]), Fraction(pair[1])
    if x == 0 and y == 0:
        raise ValueError("zero pair has no primitive representative")
    scale = Fraction(math.lcm(x.denominator, y.denominator))
    ix, iy = int(x * scale), int(y * scale)
    g = math.gcd(ix, iy)
    ix, iy = ix // g, iy // g
    if ix < 0 or (ix == 0 and iy < 0):
        ix, iy = -ix, -iy
    return ix, iy


# ---------------------------------------------------------------------------
# 2x2 matrices


@dataclass(frozen=True)
class Mat2:
    """A 2x2 matrix over exact scalars; invertibility is checked on demand."""

    rows: tuple[tuple, tuple]

    @staticmethod
    def of(a, b, c, d) -> "Mat2":
        return Mat2(((a, b), (c, d)))

    @staticmethod
    def identity() -> "Mat2":
        return Mat2(((ONE, ZERO), (ZERO, ONE)))

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def det(self):
        (a, b), (c, d) = self.rows
        return a * d - b * c

    def trace(self):
        return self.rows[0][0] + self.rows[1][1]

    def transpose(self) -> "Mat2":
        (a, b), (c, d) = self.rows
        return Mat2(((a, c), (b, d)))

    def inverse(self) -> "Mat2":
        (a, b), (c, d) = self.rows
        det = a * d - b * c
        if det == 0:
            raise ZeroDivisionError("matrix is singular")
        return Mat2(((d / det, -b / det), (-c / det, a / det)))

    def __matmul__(self, other: "Mat2") -> "Mat2":
        (a, b), (c, d) = self.rows
        (e, f), (g, h) = other.rows
        return Mat2(((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h)))

    def __neg__(self) -> "Mat2":
        (a, b), (c, d) = self.rows
        return Mat2(((-a, -b), (-c, -d)))

    def apply(self, vec):
        """Matrix-vector product on a pair."""
        (a, b), (c, d) = self.rows
        return (a * vec[0] + b * vec[1], c * vec[0] + d * vec[1])

    def col(self, j):
        return (self.rows[0][j], self.rows[1][j])

    def row(self, i):
        return self.rows[i]

    def to_strings(self) -> list[list[str]]:
        return [[rational_str(x) for x in row] for row in self.rows]


def mat2_from_cols(col0, col1) -> Mat2:
    return Mat2(((col0[0], col1[0]), (col0[1], col1[1])))


def mat2_from_rows(row0, row1) -> Mat2:
    return Mat2(((row0[0], row0[1]), (row1[0], row1[1])))


# ---------------------------------------------------------------------------
# Rational circle points


@dataclass(frozen=True)
class CirclePoint:
    """A rational point (c, s) with c^2 + s^2 = 1, standing in for an angle."""

    c: Fraction
    s: Fraction

    def __post_init__(self):
        if self.c * self.c + self.s * self.s != 1:
            raise ValueError(f"({self.c}, {self.s}) is not on the unit circle")

    def antipode(self) -> "CirclePoint":
        """The half-turn: (c, s) -> (-c, -s)."""
        return CirclePoint(-self.c, -self.s)

    def compose(self, other: "CirclePoint") -> "CirclePoint":
        """Angle addition expressed on circle points."""
        return CirclePoint(
            self.c * other.c - self.s * other.s,
            self.s * other.c + self.c * other.s,
        )

    def is_lex_positive(self) -> bool:
        return self.c > 0 or (self.c == 0 and self.s > 0)

    def rotation(self) -> Mat2:
        """The rotation (x1, x2) -> (c*x1 + s*x2, -s*x1 + c*x2)."""
        return Mat2(((self.c, self.s), (-self.s, self.c)))


CIRCLE_ONE = CirclePoint(ONE, ZERO)

#: The point (-1, 0); not reachable through :func:`circle_from_slope`.
CIRCLE_ANTIPODE = CirclePoint(-ONE, ZERO)


def circle_from_slope(t: Fraction) -> CirclePoint:
    """Rational circle point ((1-t^2)/(1+t^2), 2t/(1+t^2)) for slope ``t``."""
    t = Fraction(t)
    den = 1 + t * t
    return CirclePoint((1 - t * t) / den, 2 * t / den)


# ---------------------------------------------------------------------------
# Quadratic field extensions
#
# Equivalence solvers sometimes meet a forced scale sqrt(k) with k not a
# rational square.  Arithmetic in the field of u + v*sqrt(k) decides exactly
# whether the remaining equations hold at that scale: an element vanishes at
# one real embedding of the field exactly when it vanishes at both.


class QuadExt:
    """An element u + v*sqrt(k) of a real quadratic extension."""

    __slots__ = ("u", "v", "k")

    def __init__(self, u, v, k):
        self.u = Fraction(u)
        self.v = Fraction(v)
        self.k = k

    def _lift(self, other) -> "QuadExt":
        if isinstance(other, QuadExt):
            return other
        return QuadExt(other, 0, self.k)

    def __add__(self, other):
        o = self._lift(other)
        return QuadExt(self.u + o.u, self.v + o.v, self.k)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.u, -self.v, self.k)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        return QuadExt(
            self.u * o.u + self.k * self.v * o.v,
            self.u * o.v + self.v * o.u,
            self.k,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        norm = o.u * o.u - self.k * o.v * o.v  # nonzero when k is not a square
        if norm == 0:
            raise ZeroDivisionError("division by zero in the quadratic extension")
        return QuadExt(
            (self.u * o.u - self.k * self.v * o.v) / norm,
            (self.v * o.u - self.u * o.v) / norm,
            self.k,
        )

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __eq__(self, other):
        o = self._lift(other) if not isinstance(other, QuadExt) else other
        return self.u == o.u and self.v == o.v

    def __repr__(self):
        return f"QuadExt({self.u} + {self.v}*sqrt({self.k}))"


# ---------------------------------------------------------------------------
# Forward-mode jets


class JetScalar:
    """A scalar paired with exact first partials w.r.t. the active parameters.

    Supports +, -, *, / against other jets and against plain rationals; that
    is enough to differentiate every parametrization in this package, all of
    which are polynomial or have polynomial numerators and denominators.
    """

    __slots__ = ("value", "partials")

    def __init__(self, value, partials):
        self.value = value
        self.partials = tuple(partials)

    @staticmethod
    def variable(value, index: int, n: int) -> "JetScalar":
        return JetScalar(Fraction(value), tuple(ONE if k == index else ZERO for k in range(n)))

    @staticmethod
    def constant(value, n: int) -> "JetScalar":
        return JetScalar(Fraction(value), (ZERO,) * n)

    def _lift(self, other) -> "JetScalar":
        if isinstance(other, JetScalar):
            return other
        return JetScalar.constant(other, len(self.partials))

    def __add__(self, other):
        o = self._lift(other)
        return JetScalar(self.value + o.value, tuple(a + b for a, b in zip(self.partials, o.partials)))

    __radd__ = __add__

    def __neg__(self):
        return JetScalar(-self.value, tuple(-a for a in self.partials))

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        return JetScalar(
            self.value * o.value,
            tuple(a * o.value + self.value * b for a, b in zip(self.partials, o.partials)),
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        v = self.value / o.value
        return JetScalar(
            v,
            tuple((a - v * b) / o.value for a, b in zip(self.partials, o.partials)),
        )

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __eq__(self, other):
        o = self._lift(other) if not isinstance(other, JetScalar) else other
        return self.value == o.value and self.partials == o.partials

    def __repr__(self):
        return f"JetScalar({self.value}, {list(self.partials)})"


def jacobian(
    fn: Callable[[Sequence], Sequence],
    point: Sequence[Fraction],
    arity: int | None = None,
) -> list[list[Fraction]]:
    """Exact Jacobian of a polynomial map at ``point`` via jet propagation.

    Returns the n x m matrix whose (i, j) entry is the partial of output i
    with respect to input j.
    """
    if arity is not None and len(point) != arity:
        raise ArityMismatch(f"map expects {arity} inputs, point has {len(point)}")
    n = len(point)
    jets = [JetScalar.variable(x, k, n) for k, x in enumerate(point)]
    outputs = fn(jets)
    rows = []
    for out in outputs:
        if isinstance(out, JetScalar):
            rows.append([Fraction(p) for p in out.partials])
        else:
            rows.append([ZERO] * n)
    return rows


# ---------------------------------------------------------------------------
# Exact linear algebra on small rectangular systems


def mat_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank of an exact rational matrix by Gaussian elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def solve_linear(
    rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> tuple[list[Fraction], list[list[Fraction]]] | None:
    """Solve A x = b exactly.

    Returns (particular solution, kernel basis) or None when inconsistent.
    """
    n_eq = len(rows)
    n_var = len(rows[0]) if n_eq else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = []
    rank = 0
    for col in range(n_var):
        pivot = next((r for r in range(rank, n_eq) if aug[r][col] != 0), None)
        if pivot is None:
            continue
        aug[rank], aug[pivot] = aug[pivot], aug[rank]
        inv = 1 / aug[rank][col]
        aug[rank] = [x * inv for x in aug[rank]]
        for r in range(n_eq):
            if r != rank and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[rank])]
        pivots.append(col)
        rank += 1
    for r in range(rank, n_eq):
        if aug[r][n_var] != 0:
            return None
    particular = [ZERO] * n_var
    for r, col in enumerate(pivots):
        particular[col] = aug[r][n_var]
    free_cols = [c for c in range(n_var) if c not in pivots]
    kernel = []
    for free in free_cols:
        vec = [ZERO] * n_var
        vec[free] = ONE
        for r, col in enumerate(pivots):
            vec[col] = -aug[r][free]
        kernel.append(vec)
    return particular, kernel
