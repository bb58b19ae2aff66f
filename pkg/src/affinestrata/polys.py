"""Small exact univariate polynomial toolkit.

Coefficient lists are dense, ascending in degree, over Fraction.  Used for
the binary-cubic invariant of the flat orbit screen and for the univariate
sweeps in the rank-2 equivalence solver; degrees stay tiny.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .exact import ZERO, ONE, sqrt_rational

Poly = list[Fraction]


def ptrim(p: Poly) -> Poly:
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def pdeg(p: Poly) -> int:
    p = ptrim(p)
    return len(p) - 1 if p else -1


def padd(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return ptrim([(p[i] if i < len(p) else ZERO) + (q[i] if i < len(q) else ZERO) for i in range(n)])


def pscale(p: Poly, c: Fraction) -> Poly:
    return ptrim([c * x for x in p])


def pmul(p: Poly, q: Poly) -> Poly:
    p, q = ptrim(p), ptrim(q)
    if not p or not q:
        return []
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return ptrim(out)


def pdivmod(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    p, q = ptrim(p), ptrim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    quo = [ZERO] * max(0, len(p) - len(q) + 1)
    rem = list(p)
    while len(rem) >= len(q) and ptrim(rem):
        shift = len(rem) - len(q)
        factor = rem[-1] / q[-1]
        quo[shift] = factor
        for i, b in enumerate(q):
            rem[shift + i] -= factor * b
        rem = rem[:-1]
    return ptrim(quo), ptrim(rem)


def pmonic(p: Poly) -> Poly:
    p = ptrim(p)
    if not p:
        return []
    lead = p[-1]
    return [x / lead for x in p]


def pgcd(p: Poly, q: Poly) -> Poly:
    p, q = ptrim(p), ptrim(q)
    while q:
        _, r = pdivmod(p, q)
        p, q = q, r
    return pmonic(p)


def pderiv(p: Poly) -> Poly:
    return ptrim([Fraction(i) * p[i] for i in range(1, len(p))])


def peval(p: Poly, x: Fraction) -> Fraction:
    acc = ZERO
    for coeff in reversed(ptrim(p)):
        acc = acc * x + coeff
    return acc


def interpolate(points: list[tuple[Fraction, Fraction]]) -> Poly:
    """Lagrange interpolation through distinct exact nodes."""
    result: Poly = []
    for i, (xi, yi) in enumerate(points):
        term = [yi]
        for j, (xj, _) in enumerate(points):
            if i == j:
                continue
            term = pscale(pmul(term, [-xj, ONE]), 1 / (xi - xj))
        result = padd(result, term)
    return result


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(p: Poly, search_limit: int = 10**7) -> list[tuple[Fraction, int]]:
    """All rational roots with multiplicities.

    Candidate enumeration is the classic numerator/denominator divisor test on
    the primitive integer form; ``search_limit`` bounds the divisor scan so a
    huge leading or trailing coefficient cannot stall a solver (callers treat
    an overflow as "give up", which downstream surfaces as an honest
    undecided/unmatched outcome rather than a wrong answer).
    """
    p = ptrim(p)
    if not p:
        raise ValueError("zero polynomial has every root")
    roots: list[tuple[Fraction, int]] = []
    mult0 = 0
    while p and p[0] == 0:
        mult0 += 1
        p = p[1:]
    if mult0:
        roots.append((ZERO, mult0))
    if pdeg(p) < 1:
        return roots
    scale = math.lcm(*[c.denominator for c in p])
    ip = [int(c * scale) for c in p]
    g = math.gcd(*ip)
    ip = [c // g for c in ip]
    if abs(ip[0]) > search_limit or abs(ip[-1]) > search_limit:
        raise OverflowError("rational root scan bound exceeded")
    for num in _divisors(ip[0]):
        for den in _divisors(ip[-1]):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if peval(p, cand) == 0:
                    mult = 0
                    q = p
                    while True:
                        quo, rem = pdivmod(q, [-cand, ONE])
                        if rem:
                            break
                        q, mult = quo, mult + 1
                    if all(r != cand for r, _ in roots):
                        roots.append((cand, mult))
    return roots


def sturm_chain(p: Poly) -> list[Poly]:
    chain = [ptrim(p), pderiv(p)]
    while chain[-1]:
        _, rem = pdivmod(chain[-2], chain[-1])
        if not rem:
            break
        chain.append(pscale(rem, Fraction(-1)))
    return [c for c in chain if c]


def _sign_changes(values: list[Fraction]) -> int:
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p: Poly) -> int:
    """Number of distinct real roots, by Sturm's theorem over the whole line."""
    p = ptrim(p)
    if pdeg(p) < 1:
        return 0
    g = pgcd(p, pderiv(p))
    if pdeg(g) >= 1:
        p, _ = pdivmod(p, g)  # squarefree part carries the same distinct roots
    chain = sturm_chain(p)
    at_minus = [c[-1] * (1 if (len(c) - 1) % 2 == 0 else -1) for c in chain]
    at_plus = [c[-1] for c in chain]
    return _sign_changes(at_minus) - _sign_changes(at_plus)


def quadratic_rational_roots(a: Fraction, b: Fraction, c: Fraction) -> tuple[list[Fraction], bool]:
    """Roots of a x^2 + b x + c.

    Returns (rational roots, has_irrational_real_root).
    """
    if a == 0:
        if b == 0:
            return ([], False)
        return ([-c / b], False)
    disc = b * b - 4 * a * c
    if disc < 0:
        return ([], False)
    root = sqrt_rational(disc)
    if root is None:
        return ([], True)
    if root == 0:
        return ([-b / (2 * a)], False)
    return ([(-b + root) / (2 * a), (-b - root) / (2 * a)], False)


def binary_cubic_pattern(cubic: tuple[Fraction, Fraction, Fraction, Fraction]) -> str:
    """Root-multiplicity pattern of a binary cubic given by its coefficients.

    ``cubic`` holds the coefficients of X^3, X^2 Y, X Y^2, Y^3.  A root is a
    direction in the projective line over the reals, so the direction (0:1)
    (degree drop in the dehomogenized polynomial) is counted too.  Patterns:

    - "zero"          identically zero
    - "triple"        one direction of multiplicity 3
    - "double_simple" multiplicities [2, 1]
    - "three_simple"  three distinct real directions
    - "one_real"      one real direction plus a complex pair
    """
    k3, k2, k1, k0 = cubic
    if k3 == 0 and k2 == 0 and k1 == 0 and k0 == 0:
        return "zero"
    # dehomogenize on slope m: p(m) = k3 + k2 m + k1 m^2 + k0 m^3,
    # with the direction (0:1) a root of multiplicity 3 - deg(p)
    p = ptrim([k3, k2, k1, k0])
    d = pdeg(p)
    if d == 0:
        return "triple"
    if d == 1:
        return "double_simple"  # simple finite root, double root at (0:1)
    repeated = pdeg(pgcd(p, pderiv(p)))
    if d == 2:
        if repeated >= 1:
            return "double_simple"  # double finite root, simple root at (0:1)
        return "three_simple" if count_real_roots(p) == 2 else "one_real"
    if repeated == 2:
        return "triple"
    if repeated == 1:
        return "double_simple"
    return "three_simple" if count_real_roots(p) == 3 else "one_real"
