"""Coordinate-change actions on the two model families and the solvers built
on them: infinitesimal orbit dimension, isotropy groups, and linear
equivalence with exact witnesses.

Type A models are acted on by all invertible linear maps; Type B models only
by the shears (x1, x2) -> (x1, a x2 + b x1), which preserve the 1/x1 profile.
Both actions share one coefficient transformation law: for y = T x the
coefficients in y-coordinates are G'^m_ab = T^m_k G^k_ij S^i_a S^j_b with
S = T^{-1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .exact import (
    ONE,
    ZERO,
    JetScalar,
    Mat2,
    QuadExt,
    mat2_from_cols,
    mat_rank,
    primitive_covector,
    sqrt_rational,
)
from .curvature import rank_signature, ricci_type_a, stratum_flags
from .models import Model, TypeAModel, TypeBModel
from . import polys


class UndecidedError(Exception):
    """An operation declined to answer; carries the honest reason."""


@dataclass(frozen=True)
class LinearMap2:
    """An invertible linear coordinate change on the plane."""

    matrix: Mat2

    def __post_init__(self):
        if self.matrix.det() == 0:
            raise ValueError("linear map must be invertible")

    @staticmethod
    def identity() -> "LinearMap2":
        return LinearMap2(Mat2.identity())

    def inverse(self) -> "LinearMap2":
        return LinearMap2(self.matrix.inverse())

    def compose(self, first: "LinearMap2") -> "LinearMap2":
        """The map 'apply ``first``, then self'."""
        return LinearMap2(self.matrix @ first.matrix)

    def to_json(self):
        return self.matrix.to_strings()


@dataclass(frozen=True)
class ShearMap:
    """(x1, x2) -> (x1, a x2 + b x1) with a != 0."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        if self.a == 0:
            raise ValueError("shear scale must be nonzero")

    @staticmethod
    def identity() -> "ShearMap":
        return ShearMap(ONE, ZERO)

    @property
    def matrix(self) -> Mat2:
        return Mat2(((ONE, ZERO), (self.b, self.a)))

    def inverse(self) -> "ShearMap":
        return ShearMap(1 / self.a, -self.b / self.a)

    def compose(self, first: "ShearMap") -> "ShearMap":
        return ShearMap(self.a * first.a, self.b + self.a * first.b)

    def to_json(self):
        return {"a": str(self.a), "b": str(self.b), "matrix": self.matrix.to_strings()}


def transform_coeffs(coeffs: Sequence, t_rows) -> tuple:
    """Connection coefficients in y = T x coordinates; generic over the
    scalar ring so the same code path drives exact jets."""
    (t11, t12), (t21, t22) = t_rows
    det = t11 * t22 - t12 * t21
    s11, s12 = t22 / det, -t12 / det
    s21, s22 = -t21 / det, t11 / det
    a, b, c, d, e, f = coeffs

    def gamma(x1, x2, y1, y2):
        head = x1 * y1
        cross = x1 * y2 + x2 * y1
        tail = x2 * y2
        return (a * head + c * cross + e * tail, b * head + d * cross + f * tail)

    g11 = gamma(s11, s21, s11, s21)
    g12 = gamma(s11, s21, s12, s22)
    g22 = gamma(s12, s22, s12, s22)

    def push(g):
        return (t11 * g[0] + t12 * g[1], t21 * g[0] + t22 * g[1])

    p11, p12, p22 = push(g11), push(g12), push(g22)
    return (p11[0], p11[1], p12[0], p12[1], p22[0], p22[1])


def pullback_type_a(m: TypeAModel, t: LinearMap2) -> TypeAModel:
    """The model representing the same connection in coordinates y = T x."""
    return TypeAModel(*transform_coeffs(m.coeffs, t.matrix.rows))


def pullback_type_b(m: TypeBModel, phi: ShearMap) -> TypeBModel:
    """Shear reparametrization; preserves the 1/x1 coefficient profile."""
    return TypeBModel(*transform_coeffs(m.coeffs, phi.matrix.rows))


def pullback(m: Model, transform):
    if m.kind == "A":
        return pullback_type_a(m, transform)
    return pullback_type_b(m, transform)


def orbit_dimension_a(m: TypeAModel) -> int:
    """Rank of the derivative at the identity of T -> pullback(m, T).

    This is the dimension of the orbit through ``m``; for canonical models it
    equals 4 minus the isotropy dimension.
    """
    offsets = [JetScalar.variable(ZERO, k, 4) for k in range(4)]
    one = JetScalar.constant(ONE, 4)
    rows = ((one + offsets[0], offsets[1]), (offsets[2], one + offsets[3]))
    out = transform_coeffs(m.coeffs, rows)
    return mat_rank([list(o.partials) for o in out])


# ---------------------------------------------------------------------------
# Rank-one frame reduction
#
# A rank-one symmetric Ricci matrix is lambda * w w^T for a rational covector
# w.  Any invertible S whose first column spans ker(w) and whose second
# column pairs to 1 against w carries the Ricci matrix to lambda * diag(0, 1),
# so the transformed model has b = d = 0.  Unlike a rotation this frame is
# always rational.


def rank1_frame(m: TypeAModel) -> tuple[LinearMap2, TypeAModel]:
    """Rational change of frame making the Ricci tensor a multiple of
    dx2 (x) dx2; returns (T, pullback of m under T) with reduced b = d = 0."""
    r = ricci_type_a(m)
    sig = rank_signature(r)
    if sig.rank != 1:
        raise ValueError("rank1_frame expects a model with rank-one Ricci tensor")
    if m.b == 0 and m.d == 0:
        return LinearMap2.identity(), m
    row = r.rows[0] if r.rows[0] != (ZERO, ZERO) else r.rows[1]
    w = primitive_covector(row)
    if w[0] != 0:
        u = (Fraction(1, w[0]), ZERO)
    else:
        u = (ZERO, Fraction(1, w[1]))
    s = mat2_from_cols((Fraction(-w[1]), Fraction(w[0])), u)
    t = LinearMap2(s.inverse())
    reduced = pullback_type_a(m, t)
    if reduced.b != 0 or reduced.d != 0:
        raise AssertionError("frame reduction failed to clear b, d")
    return t, reduced


def _solve_reduced_pair(n1: TypeAModel, n2: TypeAModel):
    """Witnesses T with pullback(n1, T) = n2 for reduced (b = d = 0) rank-one
    models.  Any such T is upper triangular because it must preserve the
    dx2 (x) dx2 line, which collapses the problem to rational case analysis.

    Returns (status, matrices, note).
    """
    a1, _, c1, _, e1, f1 = n1.coeffs
    a2, _, c2, _, e2, f2 = n2.coeffs
    lam1 = -c1 * c1 + a1 * e1 + c1 * f1
    lam2 = -c2 * c2 + a2 * e2 + c2 * f2
    if lam1 * lam2 < 0:
        return ("not_equivalent", [], "Ricci signs differ")
    sols: list[tuple[Fraction, Fraction, Fraction]] = []
    if (a1 == 0) != (a2 == 0):
        return ("not_equivalent", [], "vanishing of G_11^1 differs between reduced frames")
    if a1 != 0:
        alpha = a1 / a2
        if (f1 == 0) != (f2 == 0):
            return ("not_equivalent", [], "vanishing of G_22^2 differs between reduced frames")
        if f1 != 0:
            delta = f1 / f2
            if delta * delta * lam2 != lam1:
                return ("not_equivalent", [], "Ricci scale incompatible with the G_22^2 ratio")
            sols.append((alpha, alpha * (c1 - delta * c2) / a1, delta))
        else:
            ratio = lam1 / lam2
            root = sqrt_rational(ratio)
            if root is None:
                return (
                    "undecided",
                    [],
                    f"equivalent over the reals, but the frame scale is the irrational sqrt({ratio})",
                )
            for delta in (root, -root):
                sols.append((alpha, alpha * (c1 - delta * c2) / a1, delta))
    else:
        # on this stratum a = 0 forces c != 0
        delta = c1 / c2
        if f1 != delta * f2:
            return ("not_equivalent", [], "the invariant ratio f/c differs")
        rhs = delta * delta * e2
        coef = f1 - 2 * c1
        if e1 != 0:
            if coef != 0:
                alpha, beta = rhs / e1, ZERO
                if alpha == 0:
                    beta = ONE
                    alpha = (rhs - coef) / e1
                sols.append((alpha, beta, delta))
            else:
                if e2 == 0:
                    return ("not_equivalent", [], "vanishing of G_22^1 differs on the f = 2c subfamily")
                sols.append((rhs / e1, ZERO, delta))
        else:
            if coef != 0:
                sols.append((ONE, rhs / coef, delta))
            else:
                if e2 != 0:
                    return ("not_equivalent", [], "vanishing of G_22^1 differs on the f = 2c subfamily")
                sols.append((ONE, ZERO, delta))
    mats = [
        Mat2(((alpha, beta), (ZERO, delta)))
        for alpha, beta, delta in sols
        if alpha != 0 and delta != 0
    ]
    if not mats:
        return ("not_equivalent", [], "triangular system has no invertible solution")
    return ("equivalent", mats, None)


# ---------------------------------------------------------------------------
# Isotropy groups


@dataclass(frozen=True)
class IsotropyFamily:
    """A parametrized family of isotropy elements.

    ``build`` maps a tuple of rational parameters to the matrix; ``template``
    and ``constraints`` are the human-readable description used in reports.
    """

    dimension: int
    param_names: tuple[str, ...]
    constraints: tuple[str, ...]
    template: str
    build: Callable[..., Mat2]

    def instantiate(self, params) -> LinearMap2:
        if len(params) != self.dimension:
            raise ValueError(f"family takes {self.dimension} parameter(s)")
        return LinearMap2(self.build(*[Fraction(p) for p in params]))

    def to_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "params": list(self.param_names),
            "constraints": list(self.constraints),
            "template": self.template,
        }


@dataclass(frozen=True)
class IsotropyGroup:
    """Every listed element and family member fixes the model under pullback."""

    finite_elements: tuple[LinearMap2, ...]
    families: tuple[IsotropyFamily, ...]

    @property
    def dimension(self) -> int:
        return max((fam.dimension for fam in self.families), default=0)

    def to_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "elements": [el.to_json() for el in self.finite_elements],
            "families": [fam.to_dict() for fam in self.families],
        }


_IDENTITY = LinearMap2.identity()

_SPOT_PARAMS = [Fraction(2), Fraction(-3), Fraction(1, 2), Fraction(5), Fraction(-1, 4)]


def _spot_check(group: IsotropyGroup, m: TypeAModel) -> IsotropyGroup:
    """Cheap construction-time verification that the group fixes the model."""
    for el in group.finite_elements:
        if pullback_type_a(m, el) != m:
            raise AssertionError("isotropy element does not fix the model")
    for fam in group.families:
        for k in range(3):
            params = [_SPOT_PARAMS[(k + i) % len(_SPOT_PARAMS)] for i in range(fam.dimension)]
            try:
                el = fam.instantiate(params)
            except (ValueError, ZeroDivisionError):
                continue
            if pullback_type_a(m, el) != m:
                raise AssertionError("isotropy family member does not fix the model")
    return group


def _gl2_family() -> IsotropyFamily:
    return IsotropyFamily(
        dimension=4,
        param_names=("p", "q", "r", "s"),
        constraints=("p*s - q*r != 0",),
        template="[[p, q], [r, s]]",
        build=lambda p, q, r, s: Mat2(((p, q), (r, s))),
    )


def _flat_catalog_isotropy(orbit_id: str) -> IsotropyGroup:
    if orbit_id == "M0_0":
        return IsotropyGroup((), (_gl2_family(),))
    if orbit_id == "M1_0":
        fam = IsotropyFamily(
            1, ("a",), ("a != 0",), "[[1, 0], [0, a]]",
            lambda a: Mat2(((ONE, ZERO), (ZERO, a))),
        )
        return IsotropyGroup((_IDENTITY,), (fam,))
    if orbit_id == "M2_0":
        swap = LinearMap2(Mat2(((ZERO, -ONE), (-ONE, ZERO))))
        return IsotropyGroup((_IDENTITY, swap), ())
    if orbit_id == "M3_0":
        fam = IsotropyFamily(
            1, ("a",), ("a != 0",), "[[a, 0], [0, 1]]",
            lambda a: Mat2(((a, ZERO), (ZERO, ONE))),
        )
        return IsotropyGroup((_IDENTITY,), (fam,))
    if orbit_id == "M4_0":
        fam = IsotropyFamily(
            2, ("a", "b"), ("a != 0",), "[[a^2, b], [0, a]]",
            lambda a, b: Mat2(((a * a, b), (ZERO, a))),
        )
        return IsotropyGroup((_IDENTITY,), (fam,))
    if orbit_id == "M5_0":
        flip = LinearMap2(Mat2(((ONE, ZERO), (ZERO, -ONE))))
        return IsotropyGroup((_IDENTITY, flip), ())
    raise ValueError(f"no stored isotropy group for {orbit_id}")


def _isotropy_reduced(m: TypeAModel) -> IsotropyGroup:
    """Isotropy of a nonflat reduced (b = d = 0) model, by solving within the
    upper-triangular maps T(x1, x2) = (v^{-1}(x1 - w x2), eps x2)."""
    a, _, c, _, e, f = m.coeffs
    elements = [_IDENTITY]
    families: list[IsotropyFamily] = []
    if a != 0:
        if f == 0:
            w = -2 * c / a
            elements.append(LinearMap2(Mat2(((ONE, -w), (ZERO, -ONE)))))
    else:
        coef = 2 * c - f
        if e != 0:
            if coef == 0:
                families.append(
                    IsotropyFamily(
                        1, ("w",), (), "[[1, -w], [0, 1]]",
                        lambda w: Mat2(((ONE, -w), (ZERO, ONE))),
                    )
                )
            else:
                ratio = coef / e

                def tilted(w, _ratio=ratio):
                    v = 1 + w * _ratio
                    if v == 0:
                        raise ValueError("parameter outside the family domain")
                    return Mat2(((1 / v, -w / v), (ZERO, ONE)))

                families.append(
                    IsotropyFamily(
                        1, ("w",), (f"1 + w*({ratio}) != 0",),
                        f"[[1/v, -w/v], [0, 1]] with v = 1 + w*({ratio})",
                        tilted,
                    )
                )
        else:
            if coef != 0:
                families.append(
                    IsotropyFamily(
                        1, ("v",), ("v != 0",), "[[1/v, 0], [0, 1]]",
                        lambda v: Mat2(((1 / v, ZERO), (ZERO, ONE))),
                    )
                )
            else:
                families.append(
                    IsotropyFamily(
                        2, ("v", "w"), ("v != 0",), "[[1/v, -w/v], [0, 1]]",
                        lambda v, w: Mat2(((1 / v, -w / v), (ZERO, ONE))),
                    )
                )
    return IsotropyGroup(tuple(elements), tuple(families))


def _conjugate_group(group: IsotropyGroup, witness: LinearMap2) -> IsotropyGroup:
    w = witness.matrix
    w_inv = w.inverse()
    elements = tuple(
        LinearMap2(w @ el.matrix @ w_inv) for el in group.finite_elements
    )
    families = tuple(
        IsotropyFamily(
            fam.dimension,
            fam.param_names,
            fam.constraints,
            f"W @ {fam.template} @ W^-1 with W = {w.to_strings()}",
            (lambda *ps, _b=fam.build, _w=w, _wi=w_inv: _w @ _b(*ps) @ _wi),
        )
        for fam in group.families
    )
    return IsotropyGroup(elements, families)


def isotropy_type_a(m: TypeAModel) -> IsotropyGroup:
    """The subgroup of linear maps fixing ``m`` under pullback.

    Supported inputs: the zero model, flat models (through the canonical
    orbit match), and rank-one models already in reduced form b = d = 0.
    Anything else raises :class:`UndecidedError`.
    """
    if m.is_zero():
        return IsotropyGroup((), (_gl2_family(),))
    r = ricci_type_a(m)
    if r.is_zero():
        from .strata import match_flat_a_orbit

        orbit_id, witness = match_flat_a_orbit(m)
        base = _flat_catalog_isotropy(orbit_id)
        if witness.matrix == Mat2.identity():
            return _spot_check(base, m)
        return _spot_check(_conjugate_group(base, witness), m)
    sig = rank_signature(r)
    if sig.rank == 1 and m.b == 0 and m.d == 0:
        return _spot_check(_isotropy_reduced(m), m)
    if sig.rank == 1:
        raise UndecidedError(
            "isotropy is only solved for rank-one models in reduced form b = d = 0"
        )
    raise UndecidedError("isotropy is not solved for rank-two models")


# ---------------------------------------------------------------------------
# Linear equivalence


@dataclass(frozen=True)
class EquivalenceWitnesses:
    """Outcome of an equivalence query.

    ``status`` is one of ``equivalent`` (with at least one exactly verified
    intertwining map), ``not_equivalent`` (with the violated invariant or the
    exhausted case analysis as obstruction), or ``undecided`` (with a
    reason; never silently coerced).
    """

    status: str
    maps: tuple = ()
    obstruction: str | None = None
    reason: str | None = None

    @property
    def is_equivalent(self) -> bool:
        return self.status == "equivalent"

    def to_dict(self) -> dict:
        out = {"status": self.status}
        if self.status == "equivalent":
            out["witnesses"] = [w.to_json() for w in self.maps]
        elif self.status == "not_equivalent":
            out["obstruction"] = self.obstruction
        else:
            out["reason"] = self.reason
        return out


def _verified_a(m1, m2, mats) -> list[LinearMap2]:
    out = []
    for mat in mats:
        t = LinearMap2(mat) if isinstance(mat, Mat2) else mat
        if pullback_type_a(m1, t) != m2:
            raise AssertionError("equivalence witness failed exact verification")
        out.append(t)
    return out


def _screen_a(m1: TypeAModel, m2: TypeAModel) -> str | None:
    fl1, fl2 = stratum_flags(m1), stratum_flags(m2)
    if fl1.primary != fl2.primary:
        return f"stratum flags differ: {fl1.primary} vs {fl2.primary}"
    s1 = rank_signature(ricci_type_a(m1))
    s2 = rank_signature(ricci_type_a(m2))
    if (s1.rank, s1.label) != (s2.rank, s2.label):
        return f"Ricci rank/signature differ: {s1.label} vs {s2.label}"
    d1, d2 = orbit_dimension_a(m1), orbit_dimension_a(m2)
    if d1 != d2:
        return f"orbit dimensions differ: {d1} vs {d2}"
    return None


def solve_equivalence_a(m1: TypeAModel, m2: TypeAModel) -> EquivalenceWitnesses:
    """Decide linear equivalence of two Type A models.

    Pipeline: invariant screening, then a stratified solve (flat models via
    canonical-orbit matching, rank-one via the rational frame reduction and
    the triangular residual system, rank-two via the symmetry group of the
    Ricci form).  Every witness is re-verified by exact pullback.
    """
    obstruction = _screen_a(m1, m2)
    if obstruction is not None:
        return EquivalenceWitnesses("not_equivalent", obstruction=obstruction)
    if m1.is_zero() and m2.is_zero():
        return EquivalenceWitnesses("equivalent", (LinearMap2.identity(),))
    r1 = ricci_type_a(m1)
    if r1.is_zero():
        return _solve_flat_pair(m1, m2)
    sig = rank_signature(r1)
    if sig.rank == 1:
        frame1, red1 = rank1_frame(m1)
        frame2, red2 = rank1_frame(m2)
        status, mats, note = _solve_reduced_pair(red1, red2)
        if status == "equivalent":
            f2_inv = frame2.matrix.inverse()
            witnesses = [f2_inv @ mat @ frame1.matrix for mat in mats]
            return EquivalenceWitnesses(
                "equivalent", tuple(_verified_a(m1, m2, witnesses))
            )
        if status == "not_equivalent":
            return EquivalenceWitnesses("not_equivalent", obstruction=note)
        return EquivalenceWitnesses("undecided", reason=note)
    return _solve_rank2_pair(m1, m2)


def _solve_flat_pair(m1, m2) -> EquivalenceWitnesses:
    from .strata import UnmatchedOrbitError, match_flat_a_orbit

    try:
        id1, w1 = match_flat_a_orbit(m1)
        id2, w2 = match_flat_a_orbit(m2)
    except UnmatchedOrbitError as exc:
        return EquivalenceWitnesses("undecided", reason=f"flat orbit matcher failed: {exc}")
    if id1 != id2:
        return EquivalenceWitnesses(
            "not_equivalent", obstruction=f"different flat orbits: {id1} vs {id2}"
        )
    t = w2.matrix @ w1.matrix.inverse()
    return EquivalenceWitnesses("equivalent", tuple(_verified_a(m1, m2, [t])))


# -- rank two -----------------------------------------------------------------


def _diagonalizations(rho_rows):
    """Several rational congruences P with P^T rho P diagonal.

    Different pivots and pre-shears give different diagonal forms, which
    multiplies the chances of the bounded representation search below.
    """
    shears = (
        Mat2.identity(),
        Mat2(((ONE, ZERO), (ONE, ONE))),
        Mat2(((ONE, ONE), (ZERO, ONE))),
        Mat2(((ONE, ZERO), (-ONE, ONE))),
    )
    out = []
    for u in shears:
        m = u.transpose() @ Mat2(rho_rows) @ u
        (r11, r12), (_, r22) = m.rows
        det = r11 * r22 - r12 * r12
        if r11 != 0:
            p = Mat2(((ONE, -r12 / r11), (ZERO, ONE)))
            out.append((u @ p, (r11, det / r11)))
        if r22 != 0:
            p = Mat2(((ONE, ZERO), (-r12 / r22, ONE)))
            out.append((u @ p, (det / r22, r22)))
        if r11 == 0 and r22 == 0 and r12 != 0:
            p = Mat2(((ONE, ONE), (ONE, -ONE)))
            out.append((u @ p, (2 * r12, -2 * r12)))
    return out


def _represent(d1: Fraction, d2: Fraction, target: Fraction, bound: int = 40):
    """Bounded search for rational (x, y) with d1 x^2 + d2 y^2 = target."""
    if d1 == 0 or d2 == 0:
        return None
    for den in range(1, bound + 1):
        rhs_scale = target * den * den
        for p in range(0, bound + 1):
            q2 = (rhs_scale - d1 * p * p) / d2
            if q2 >= 0:
                q = sqrt_rational(q2)
                if q is not None:
                    return (Fraction(p, den), q / den)
            x2 = (rhs_scale - d2 * p * p) / d1
            if x2 >= 0:
                x = sqrt_rational(x2)
                if x is not None:
                    return (x / den, Fraction(p, den))
    return None


def _diag_congruence(d1, d2, e1, e2):
    """Q with Q^T diag(d1, d2) Q = diag(e1, e2), or None.

    When any rational congruence exists the scale on the complementary
    column is automatically a square, so only the representation search can
    fail.
    """
    rep = _represent(d1, d2, e1)
    if rep is not None:
        x, y = rep
        w = (-d2 * y, d1 * x)
        qw = d1 * w[0] * w[0] + d2 * w[1] * w[1]
        if qw != 0:
            t = sqrt_rational(e2 / qw)
            if t is not None:
                q = mat2_from_cols((x, y), (t * w[0], t * w[1]))
                if q.det() != 0:
                    return q
    rep = _represent(d1, d2, e2)
    if rep is not None:
        x, y = rep
        w = (-d2 * y, d1 * x)
        qw = d1 * w[0] * w[0] + d2 * w[1] * w[1]
        if qw != 0:
            s = sqrt_rational(e1 / qw)
            if s is not None:
                q = mat2_from_cols((s * w[0], s * w[1]), (x, y))
                if q.det() != 0:
                    return q
    return None


def _congruence(rho1_rows, rho2_rows):
    """Some rational S0 with S0^T rho1 S0 = rho2, or None."""
    for p1, (d1, d2) in _diagonalizations(rho1_rows):
        for p2, (e1, e2) in _diagonalizations(rho2_rows):
            q = _diag_congruence(d1, d2, e1, e2)
            if q is not None:
                s0 = p1 @ q @ p2.inverse()
                if (s0.transpose() @ Mat2(rho1_rows) @ s0) == Mat2(rho2_rows):
                    return s0
    return None


def _cayley_denominator(a_mat: Mat2, tau: Fraction) -> Fraction:
    return (1 - tau * a_mat[0, 0]) * (1 - tau * a_mat[1, 1]) - (tau * a_mat[0, 1]) * (
        tau * a_mat[1, 0]
    )


def _sweep_matrix(a_mat: Mat2, tau: Fraction, s0: Mat2, reflect: Mat2 | None, negate: bool) -> Mat2 | None:
    """One member of the Ricci-symmetry coset: +/- Cayley(tau) [@ reflect] @ s0."""
    if _cayley_denominator(a_mat, tau) == 0:
        return None
    eye_minus = Mat2(
        ((1 - tau * a_mat[0, 0], -tau * a_mat[0, 1]), (-tau * a_mat[1, 0], 1 - tau * a_mat[1, 1]))
    )
    eye_plus = Mat2(
        ((1 + tau * a_mat[0, 0], tau * a_mat[0, 1]), (tau * a_mat[1, 0], 1 + tau * a_mat[1, 1]))
    )
    s = eye_minus.inverse() @ eye_plus
    if reflect is not None:
        s = s @ reflect
    s = s @ s0
    if negate:
        s = -s
    return s if s.det() != 0 else None


def _rank2_residual_polys(m1, m2, s0: Mat2, a_mat: Mat2, reflect: Mat2 | None, negate: bool):
    """Residual numerator polynomials in the sweep parameter for one component
    of the Ricci-symmetry group, built by exact interpolation (degree <= 6)."""
    nodes: list[Fraction] = []
    k = 0
    while len(nodes) < 9:
        tau = Fraction(k)
        k += 1
        if _cayley_denominator(a_mat, tau) != 0:
            nodes.append(tau)
    samples = []
    for tau in nodes:
        s = _sweep_matrix(a_mat, tau, s0, reflect, negate)
        if s is None:
            return None
        t = s.inverse()
        out = transform_coeffs(m1.coeffs, t.rows)
        den = _cayley_denominator(a_mat, tau)
        scale = den * den * den
        samples.append((tau, [(o - g) * scale for o, g in zip(out, m2.coeffs)]))
    residuals = []
    for i in range(6):
        pts = [(tau, vals[i]) for tau, vals in samples]
        residuals.append(polys.interpolate(pts))
    return residuals


def _solve_rank2_pair(m1, m2) -> EquivalenceWitnesses:
    rho1 = ricci_type_a(m1).rows
    rho2 = ricci_type_a(m2).rows
    det1 = rho1[0][0] * rho1[1][1] - rho1[0][1] * rho1[1][0]
    det2 = rho2[0][0] * rho2[1][1] - rho2[0][1] * rho2[1][0]
    ratio = det2 / det1
    if ratio < 0:
        # the determinant scales by det(S)^2 under any real congruence
        return EquivalenceWitnesses(
            "not_equivalent", obstruction="Ricci determinant signs differ"
        )
    if sqrt_rational(ratio) is None:
        return EquivalenceWitnesses(
            "undecided",
            reason=f"Ricci determinant ratio {ratio} is not a rational square, "
            "so no rational witness exists",
        )
    s0 = _congruence(rho1, rho2)
    if s0 is None:
        return EquivalenceWitnesses(
            "undecided", reason="no rational congruence between the Ricci forms was found (bounded search)"
        )
    # A = rho1^{-1} J is rho1-skew; its Cayley transforms sweep the identity
    # component of the symmetry group of rho1
    rho1_mat = Mat2(rho1)
    j = Mat2(((ZERO, ONE), (-ONE, ZERO)))
    a_mat = rho1_mat.inverse() @ j
    reflect = None
    for n in ((ONE, ZERO), (ZERO, ONE), (ONE, ONE)):
        qn = rho1[0][0] * n[0] * n[0] + 2 * rho1[0][1] * n[0] * n[1] + rho1[1][1] * n[1] * n[1]
        if qn != 0:
            rn0 = rho1[0][0] * n[0] + rho1[0][1] * n[1]
            rn1 = rho1[1][0] * n[0] + rho1[1][1] * n[1]
            # x -> x - 2 rho(x, n)/rho(n, n) * n
            reflect = Mat2(
                (
                    (1 - 2 * n[0] * rn0 / qn, -2 * n[0] * rn1 / qn),
                    (-2 * n[1] * rn0 / qn, 1 - 2 * n[1] * rn1 / qn),
                )
            )
            break
    witnesses = []
    saw_irrational = False
    saw_overflow = False
    for refl in (None, reflect):
        for negate in (False, True):
            residuals = _rank2_residual_polys(m1, m2, s0, a_mat, refl, negate)
            if residuals is None:
                continue
            nonzero = [p for p in residuals if p]
            if not nonzero:
                taus = [ZERO]
            else:
                g = nonzero[0]
                for p in nonzero[1:]:
                    g = polys.pgcd(g, p)
                if polys.pdeg(g) < 1:
                    continue
                try:
                    roots = polys.rational_roots(g)
                except OverflowError:
                    saw_overflow = True
                    continue
                if polys.count_real_roots(g) > len(roots):
                    saw_irrational = True
                taus = [root for root, _ in roots]
            for tau in taus:
                s = _sweep_matrix(a_mat, tau, s0, refl, negate)
                if s is None:
                    continue
                t = s.inverse()
                if transform_coeffs(m1.coeffs, t.rows) == m2.coeffs:
                    witnesses.append(LinearMap2(t))
    if witnesses:
        return EquivalenceWitnesses("equivalent", tuple(_verified_a(m1, m2, witnesses)))
    if saw_irrational or saw_overflow:
        return EquivalenceWitnesses(
            "undecided",
            reason="a real witness parameter exists but is irrational"
            if saw_irrational
            else "residual root scan exceeded its bound",
        )
    return EquivalenceWitnesses(
        "not_equivalent",
        obstruction="the Ricci-symmetry sweep has no real solution",
    )


# -- Type B -------------------------------------------------------------------


def _verified_b(m1, m2, shears) -> list[ShearMap]:
    out = []
    for phi in shears:
        if pullback_type_b(m1, phi) != m2:
            raise AssertionError("equivalence witness failed exact verification")
        out.append(phi)
    return out


def solve_equivalence_b(m1: TypeBModel, m2: TypeBModel) -> EquivalenceWitnesses:
    """Decide shear equivalence of two Type B models by exact elimination of
    the two unknowns (a, b) from the six coefficient equations."""
    fl1, fl2 = stratum_flags(m1), stratum_flags(m2)
    if fl1.primary != fl2.primary:
        return EquivalenceWitnesses(
            "not_equivalent", obstruction=f"stratum flags differ: {fl1.primary} vs {fl2.primary}"
        )
    a1, b1, c1, d1, e1, f1 = m1.coeffs
    a2, b2, c2, d2, e2, f2 = m2.coeffs
    candidates: list[tuple[Fraction, Fraction]] = []

    if e1 != 0 or e2 != 0:
        if (e1 == 0) != (e2 == 0):
            return EquivalenceWitnesses("not_equivalent", obstruction="vanishing of G_22^1 differs")
        ratio = e1 / e2
        if ratio < 0:
            return EquivalenceWitnesses("not_equivalent", obstruction="signs of G_22^1 differ")
        root = sqrt_rational(ratio)
        if root is None:
            # decide the forced irrational scale exactly in Q(sqrt(ratio));
            # vanishing there covers both real embeddings
            alpha = QuadExt(0, 1, ratio)
            beta = (c1 * alpha - c2 * alpha * alpha) / e1
            t_rows = ((QuadExt(1, 0, ratio), QuadExt(0, 0, ratio)), (beta, alpha))
            out = transform_coeffs(m1.coeffs, t_rows)
            if all(o == QuadExt(g, 0, ratio) for o, g in zip(out, m2.coeffs)):
                return EquivalenceWitnesses(
                    "undecided",
                    reason="equivalent over the reals, but every intertwining shear "
                    f"has the irrational scale sqrt({ratio})",
                )
            return EquivalenceWitnesses(
                "not_equivalent",
                obstruction="the equations fail at the forced scale sqrt of the G_22^1 ratio",
            )
        for alpha in (root, -root):
            candidates.append((alpha, (c1 * alpha - c2 * alpha * alpha) / e1))
    elif c1 != 0 or c2 != 0:
        if (c1 == 0) != (c2 == 0):
            return EquivalenceWitnesses("not_equivalent", obstruction="vanishing of G_12^1 differs")
        alpha = c1 / c2
        if c1 - f1 != 0:
            candidates.append((alpha, alpha * (d2 - d1) / (c1 - f1)))
        else:
            # f1 = c1 makes the G_12^2 equation vacuous; use the G_11^1 one
            if f1 / alpha != f2:
                return EquivalenceWitnesses("not_equivalent", obstruction="G_22^2 ratio differs")
            candidates.append((alpha, alpha * (a1 - a2) / (2 * c1)))
    elif f1 != 0 or f2 != 0:
        if (f1 == 0) != (f2 == 0):
            return EquivalenceWitnesses("not_equivalent", obstruction="vanishing of G_22^2 differs")
        alpha = f1 / f2
        candidates.append((alpha, alpha * (d1 - d2) / f1))
    else:
        # c = e = f = 0 on both sides; a and d are then shear invariants
        if a1 != a2 or d1 != d2:
            return EquivalenceWitnesses(
                "not_equivalent", obstruction="G_11^1 or G_12^2 differ on the invariant subfamily"
            )
        coef = a1 - 2 * d1
        if b1 != 0:
            for beta in (ZERO, ONE):
                num = b2 - beta * coef
                if num != 0:
                    candidates.append((num / b1, beta))
        else:
            if coef != 0:
                candidates.append((ONE, b2 / coef))
            elif b2 == 0:
                candidates.append((ONE, ZERO))
            else:
                return EquivalenceWitnesses(
                    "not_equivalent", obstruction="G_11^2 cannot be produced by any shear"
                )

    shears = []
    for alpha, beta in candidates:
        if alpha == 0:
            continue
        phi = ShearMap(alpha, beta)
        if pullback_type_b(m1, phi) == m2:
            shears.append(phi)
    if shears:
        return EquivalenceWitnesses("equivalent", tuple(_verified_b(m1, m2, shears)))
    return EquivalenceWitnesses(
        "not_equivalent", obstruction="the shear elimination has no solution"
    )
