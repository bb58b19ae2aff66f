import random
from fractions import Fraction as F

import pytest

from affinestrata.curvature import (
    NotSymmetricError,
    Ricci2,
    binary_cubic,
    coefficient_rank,
    rank_signature,
    ricci_type_a,
    ricci_type_b,
    split_ricci,
    stratum_flags,
    trace_form,
)
from affinestrata.models import canonical_model, type_a, type_b
from affinestrata.sampling import rand_model_b


def test_ricci_type_a_examples():
    assert ricci_type_a(type_a(1, 0, 0, 1, 0, 0)).is_zero()
    assert ricci_type_a(canonical_model("M0_0")).is_zero()
    r = ricci_type_a(canonical_model("M2_1", [F(2)]))
    assert r.rows == ((0, 0), (0, F(6)))  # c1 (1 + c1) at c1 = 2


def test_ricci_type_a_is_symmetric():
    rng = random.Random(11)
    for _ in range(200):
        coeffs = [F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(6)]
        r = ricci_type_a(type_a(*coeffs))
        assert r.rows[0][1] == r.rows[1][0]


def test_ricci_type_b_examples():
    r = ricci_type_b(type_b(0, 3, 1, 0, 0, 1))  # first alternating family
    assert r.rows == ((0, 1), (-1, 0))
    assert ricci_type_b(type_b(2, -2, 1, -1, 1, -1)).is_zero()  # a flat sample
    assert ricci_type_b(canonical_model("N0_0")).is_zero()


def test_ricci_type_b_antisymmetry_identity():
    # the difference of the off-diagonal entries is c + f identically
    rng = random.Random(13)
    for _ in range(300):
        m = rand_model_b(rng)
        r = ricci_type_b(m)
        assert r.rows[0][1] - r.rows[1][0] == m.c + m.f


def test_split_ricci():
    s = split_ricci(Ricci2(((F(0), F(1)), (F(-1), F(0)))))
    assert s.sym_is_zero() and s.alt == 1
    s = split_ricci(Ricci2(((F(1), F(2)), (F(0), F(3)))))
    assert s.sym == ((1, 1), (1, 3)) and s.alt == 1
    # reconstruction
    assert s.sym[0][1] + s.alt == 2 and s.sym[1][0] - s.alt == 0


def test_rank_signature():
    assert rank_signature(((F(0), F(0)), (F(0), F(0)))).rank == 0
    sig = rank_signature(((F(0), F(0)), (F(0), F(1))))
    assert (sig.rank, sig.label) == (1, "positive_semidefinite")
    sig = rank_signature(((F(0), F(0)), (F(0), F(-1, 4))))
    assert (sig.rank, sig.label) == (1, "negative_semidefinite")
    assert rank_signature(((F(1), F(0)), (F(0), F(1)))).label == "positive_definite"
    assert rank_signature(((F(-2), F(0)), (F(0), F(-1)))).label == "negative_definite"
    assert rank_signature(((F(1), F(0)), (F(0), F(-1)))).label == "indefinite"
    with pytest.raises(NotSymmetricError):
        rank_signature(((F(0), F(1)), (F(-1), F(0))))


def test_stratum_flags_examples():
    flags = stratum_flags(canonical_model("M5_1", [0]))
    assert flags.is_rank1_pos and flags.primary == "rank1_positive"
    flags = stratum_flags(type_b(1, 0, 1, 0, 0, 1))
    assert flags.is_alt_only and flags.primary == "alternating_only"
    flags = stratum_flags(canonical_model("M0_0"))
    assert flags.is_cone_point and flags.is_flat and flags.primary == "cone_point"
    flags = stratum_flags(canonical_model("M2_1", [F(-1, 2)]))
    assert flags.is_rank1_neg
    flags = stratum_flags(type_a(0, 1, 0, 0, 1, 0))
    assert flags.is_rank2


def test_type_a_never_alternating():
    rng = random.Random(17)
    for _ in range(200):
        coeffs = [F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(6)]
        assert split_ricci(ricci_type_a(type_a(*coeffs))).alt == 0


def test_orbit_invariants_of_flat_catalog():
    # screening invariants used by the flat orbit matcher
    assert coefficient_rank(canonical_model("M3_0")) == 1
    assert coefficient_rank(canonical_model("M4_0")) == 1
    assert coefficient_rank(canonical_model("M1_0")) == 2
    assert trace_form(canonical_model("M1_0")) == (2, 0)
    assert trace_form(canonical_model("M4_0")) == (0, 0)
    assert binary_cubic(canonical_model("M4_0")) == (0, 0, 0, -1)
