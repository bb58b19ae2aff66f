"""Ricci tensors, symmetric/alternating split, rank and signature, and the
stratum flags that drive classification.

For Type B models the stored matrix is the cleared form (x^1)^2 * rho, which
is polynomial in the six coefficients; every stratum predicate used here is
invariant under that positive rescaling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import ZERO, rational_str
from .models import Model, TypeAModel, TypeBModel

RANK_ZERO = "zero"
RANK1_POS = "positive_semidefinite"
RANK1_NEG = "negative_semidefinite"
RANK2_POS = "positive_definite"
RANK2_NEG = "negative_definite"
RANK2_INDEF = "indefinite"


class NotSymmetricError(ValueError):
    """rank_signature received a matrix that is not symmetric."""


@dataclass(frozen=True)
class Ricci2:
    """2x2 exact Ricci matrix; ``cleared`` marks the (x^1)^2-scaled form."""

    rows: tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]
    cleared: bool = False

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)

    def is_symmetric(self) -> bool:
        return self.rows[0][1] == self.rows[1][0]

    def to_strings(self):
        return [[rational_str(x) for x in row] for row in self.rows]


@dataclass(frozen=True)
class RicciSplit:
    """Symmetric part plus the single entry of the alternating part."""

    sym: tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]
    alt: Fraction

    def sym_is_zero(self) -> bool:
        return all(x == 0 for row in self.sym for x in row)


@dataclass(frozen=True)
class RankSig:
    rank: int
    label: str


@dataclass(frozen=True)
class StratumFlags:
    is_cone_point: bool
    is_flat: bool
    is_rank1_pos: bool
    is_rank1_neg: bool
    is_alt_only: bool
    is_rank2: bool

    @property
    def primary(self) -> str:
        if self.is_cone_point:
            return "cone_point"
        if self.is_flat:
            return "flat"
        if self.is_alt_only:
            return "alternating_only"
        if self.is_rank1_pos:
            return "rank1_positive"
        if self.is_rank1_neg:
            return "rank1_negative"
        return "rank2"

    def to_dict(self) -> dict:
        return {
            "cone_point": self.is_cone_point,
            "flat": self.is_flat,
            "rank1_positive": self.is_rank1_pos,
            "rank1_negative": self.is_rank1_neg,
            "alternating_only": self.is_alt_only,
            "rank2": self.is_rank2,
            "primary": self.primary,
        }


def ricci_type_a(m: TypeAModel) -> Ricci2:
    """Ricci tensor of a constant-coefficient model; always symmetric."""
    a, b, c, d, e, f = m.coeffs
    r11 = (a - d) * d + b * (f - c)
    r12 = c * d - b * e
    r22 = c * (f - c) + (a - d) * e
    return Ricci2(((r11, r12), (r12, r22)), cleared=False)


def ricci_type_b(m: TypeBModel) -> Ricci2:
    """Cleared Ricci tensor (x^1)^2 * rho of a 1/x^1-profile model."""
    a, b, c, d, e, f = m.coeffs
    r11 = (a - d + 1) * d + b * (f - c)
    r12 = c * d - b * e + f
    r21 = c * (d - 1) - b * e
    r22 = -c * c + f * c + (a - d - 1) * e
    return Ricci2(((r11, r12), (r21, r22)), cleared=True)


def ricci(m: Model) -> Ricci2:
    return ricci_type_a(m) if m.kind == "A" else ricci_type_b(m)


def split_ricci(r: Ricci2) -> RicciSplit:
    """sym = (r + r^T)/2; alt = the (1,2) entry of the alternating part."""
    (r11, r12), (r21, r22) = r.rows
    off = (r12 + r21) / 2
    return RicciSplit(((r11, off), (off, r22)), (r12 - r21) / 2)


def rank_signature(sym) -> RankSig:
    """Rank and definiteness of an exact symmetric 2x2 matrix.

    Rank-one definiteness is read off the sign of a nonzero diagonal entry
    (a symmetric rank-one matrix always has one); rank-two signs come from
    the determinant and a diagonal entry.
    """
    if isinstance(sym, Ricci2):
        sym = sym.rows
    (s11, s12), (s21, s22) = sym
    if s12 != s21:
        raise NotSymmetricError("rank_signature expects a symmetric matrix")
    if s11 == 0 and s12 == 0 and s22 == 0:
        return RankSig(0, RANK_ZERO)
    det = s11 * s22 - s12 * s12
    if det == 0:
        diag = s11 if s11 != 0 else s22
        if diag == 0:
            raise NotSymmetricError("symmetric rank-one matrix with zero diagonal")
        return RankSig(1, RANK1_POS if diag > 0 else RANK1_NEG)
    if det < 0:
        return RankSig(2, RANK2_INDEF)
    return RankSig(2, RANK2_POS if s11 > 0 else RANK2_NEG)


def stratum_flags(m: Model) -> StratumFlags:
    """Mutually consistent stratum flags; exactly one primary stratum."""
    r = ricci(m)
    split = split_ricci(r)
    sig = rank_signature(split.sym)
    cone = m.is_zero()
    flat = r.is_zero()
    alt_only = split.sym_is_zero() and split.alt != 0
    return StratumFlags(
        is_cone_point=cone,
        is_flat=flat,
        is_rank1_pos=(not flat) and (not alt_only) and sig.rank == 1 and sig.label == RANK1_POS,
        is_rank1_neg=(not flat) and (not alt_only) and sig.rank == 1 and sig.label == RANK1_NEG,
        is_alt_only=alt_only,
        is_rank2=(not flat) and sig.rank == 2,
    )


def rank1_scale(r: Ricci2) -> Fraction:
    """The nonzero eigenvalue of a symmetric rank-one matrix (its trace)."""
    return r.rows[0][0] + r.rows[1][1]


def trace_form(m: TypeAModel) -> tuple[Fraction, Fraction]:
    """The contraction G_ji^i as a covector; equivariant under pullback."""
    a, b, c, d, e, f = m.coeffs
    return (a + d, c + f)


def binary_cubic(m: TypeAModel) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Coefficients of det(x, G(x, x)), a binary cubic invariant of the orbit.

    Returned in the order X^3, X^2 Y, X Y^2, Y^3 for x = (X, Y).
    """
    a, b, c, d, e, f = m.coeffs
    return (b, 2 * d - a, f - 2 * c, -e)


def coefficient_rank(m: TypeAModel) -> int:
    """Rank of the 2x3 coefficient matrix [[a, c, e], [b, d, f]].

    Equals the dimension of the span of G(u, v) over all u, v, hence is an
    orbit invariant.
    """
    a, b, c, d, e, f = m.coeffs
    pairs = [(a, b), (c, d), (e, f)]
    nonzero = [p for p in pairs if p != (ZERO, ZERO)]
    if not nonzero:
        return 0
    x0, y0 = nonzero[0]
    for x1, y1 in nonzero[1:]:
        if x0 * y1 - y0 * x1 != 0:
            return 2
    return 1
