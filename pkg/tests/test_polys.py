from fractions import Fraction as F

import pytest

from affinestrata.polys import (
    binary_cubic_pattern,
    count_real_roots,
    interpolate,
    pdivmod,
    peval,
    pgcd,
    pmul,
    quadratic_rational_roots,
    rational_roots,
)


def P(*coeffs):
    return [F(c) for c in coeffs]


def test_division_and_gcd():
    # (x - 1)(x - 2) = x^2 - 3x + 2
    p = P(2, -3, 1)
    q, r = pdivmod(p, P(-1, 1))
    assert q == P(-2, 1) and r == []
    g = pgcd(pmul(P(-1, 1), P(2, 1)), pmul(P(-1, 1), P(5, 1)))
    assert g == P(-1, 1)


def test_rational_roots_with_multiplicity():
    # (2x - 1)^2 (x + 3)
    p = pmul(pmul(P(-1, 2), P(-1, 2)), P(3, 1))
    roots = dict(rational_roots(p))
    assert roots == {F(1, 2): 2, F(-3): 1}


def test_count_real_roots_sturm():
    assert count_real_roots(P(-2, 0, 1)) == 2  # x^2 - 2
    assert count_real_roots(P(1, 0, 1)) == 0  # x^2 + 1
    assert count_real_roots(P(0, -1, 0, 1)) == 3  # x^3 - x


def test_quadratic_rational_roots():
    roots, irr = quadratic_rational_roots(F(1), F(-3), F(2))
    assert sorted(roots) == [1, 2] and not irr
    roots, irr = quadratic_rational_roots(F(1), F(0), F(-2))
    assert roots == [] and irr
    roots, irr = quadratic_rational_roots(F(1), F(0), F(2))
    assert roots == [] and not irr


def test_interpolation():
    pts = [(F(0), F(2)), (F(1), F(0)), (F(2), F(0))]
    p = interpolate(pts)
    assert all(peval(p, x) == y for x, y in pts)


@pytest.mark.parametrize(
    "cubic,pattern",
    [
        # canonical flat models' invariant cubics
        ((F(0), F(1), F(0), F(0)), "double_simple"),  # X^2 Y
        ((F(0), F(1), F(1), F(0)), "three_simple"),  # X^2 Y + X Y^2 = XY(X+Y)
        ((F(0), F(0), F(1), F(0)), "double_simple"),  # X Y^2
        ((F(0), F(0), F(0), F(-1)), "triple"),  # -Y^3
        ((F(0), F(1), F(0), F(1)), "one_real"),  # Y(X^2 + Y^2)
        ((F(0), F(0), F(0), F(0)), "zero"),
    ],
)
def test_binary_cubic_patterns(cubic, pattern):
    assert binary_cubic_pattern(cubic) == pattern
