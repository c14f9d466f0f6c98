import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from thetachi.mukai import (
    LatticeError,
    MukaiVector,
    NSClass,
    c1_tensor,
    check_assumptions,
    dv,
    euler_chi_tensor,
    fm_vector,
    fm_vector_via_engine,
    is_positive,
    is_primitive,
    mukai_pairing,
    parse_vector,
)


def test_ns_class_squares():
    h = NSClass(1, 2)
    assert h.square() == 4
    assert NSClass(3, 1).square() == 18
    assert NSClass(2, 2).dot(NSClass(3, 2)) == 24
    with pytest.raises(LatticeError):
        h.dot(NSClass(1, 3))


def test_pairing_examples():
    # ideal sheaves of n' points: <v, v> = 2n' in any ambient lattice
    for n in (1, 2, 5):
        v = MukaiVector(1, 0, -3, n)
        assert mukai_pairing(v, v) == 6
    # rank-zero classes pair through the surface form only
    assert mukai_pairing(MukaiVector(0, 1, 4, 1), MukaiVector(0, 1, -2, 1)) == 2
    # isotropic example: (2, H, 1) at n = 2
    v = MukaiVector(2, 1, 1, 2)
    assert mukai_pairing(v, v) == 0 and dv(v) == 0


def test_pairing_requires_matching_lattices():
    with pytest.raises(LatticeError):
        mukai_pairing(MukaiVector(1, 0, 0, 1), MukaiVector(1, 0, 0, 2))
    with pytest.raises(LatticeError):
        mukai_pairing(MukaiVector(1, 0, 0, 1), MukaiVector(1, 0, 0, 1, "Ah"))


def test_dv_examples():
    assert dv(MukaiVector(1, 0, -4, 7)) == 4
    assert dv(MukaiVector(1, 0, -1, 1)) == 1
    for k in range(-3, 4):
        assert dv(MukaiVector(2, k, 2, 1)) == k * k - 4


def test_euler_chi_tensor_examples():
    v = MukaiVector(1, 0, -1, 1)
    w = MukaiVector(2, 3, 2, 1)
    assert euler_chi_tensor(v, w) == 0
    assert euler_chi_tensor(MukaiVector(1, 0, 0, 1), MukaiVector(1, 0, 0, 1)) == 0
    assert euler_chi_tensor(MukaiVector(2, 1, 1, 2), MukaiVector(2, 1, -3, 2)) == 0
    assert euler_chi_tensor(v, MukaiVector(2, 4, 3, 1)) == 1


def test_c1_tensor_examples():
    v = MukaiVector(1, 0, -1, 1)
    w = MukaiVector(2, 3, 2, 1)
    c1 = c1_tensor(v, w)
    assert (c1.k, c1.square()) == (3, 18)
    zero = c1_tensor(MukaiVector(0, 2, 1, 1), MukaiVector(0, 5, 3, 1))
    assert zero.k == 0
    c1 = c1_tensor(MukaiVector(2, 1, 1, 2), MukaiVector(2, 1, -3, 2))
    assert (c1.k, c1.square()) == (4, 64)


def test_tensor_invariants_random():
    import random

    rng = random.Random(0)
    for _ in range(200):
        n = rng.randint(1, 4)
        v = MukaiVector(rng.randint(-6, 6), rng.randint(-6, 6), rng.randint(-6, 6), n)
        w = MukaiVector(rng.randint(-6, 6), rng.randint(-6, 6), rng.randint(-6, 6), n)
        assert euler_chi_tensor(v, w) == -mukai_pairing(v.dual(), w)
        assert euler_chi_tensor(v, w) == euler_chi_tensor(w, v)
        assert mukai_pairing(v, w) == mukai_pairing(w, v)
        assert c1_tensor(v, w) == c1_tensor(w, v)


def test_fm_vector_examples():
    assert fm_vector(MukaiVector(1, 0, 0, 1)) == MukaiVector(0, 0, 1, 1, "Ah")
    assert fm_vector(MukaiVector(0, 0, 1, 1)) == MukaiVector(1, 0, 0, 1, "Ah")
    v = MukaiVector(2, -3, 5, 2)
    assert fm_vector(fm_vector(v)) == v  # frozen global sign: +identity


def test_fm_vector_engine_agreement_small_box():
    for n in (1, 2):
        for r in range(-3, 4):
            for k in range(-3, 4):
                for chi in range(-3, 4):
                    v = MukaiVector(r, k, chi, n)
                    assert fm_vector(v) == fm_vector_via_engine(v)
                    back = MukaiVector(r, k, chi, n, "Ah")
                    assert fm_vector(back) == fm_vector_via_engine(back)


@given(st.integers(-10, 10), st.integers(-10, 10), st.integers(-10, 10),
       st.integers(1, 4))
def test_fm_vector_is_an_isometry(r, k, chi, n):
    v = MukaiVector(r, k, chi, n)
    w = MukaiVector(k, chi if chi else 1, r, n)
    assert dv(fm_vector(v)) == dv(v)
    assert mukai_pairing(fm_vector(v), fm_vector(w)) == mukai_pairing(v, w)


def test_admissibility_examples():
    rep = check_assumptions(MukaiVector(2, 3, 2, 1))
    assert rep.primitive and rep.positive
    assert not check_assumptions(MukaiVector(2, 2, 2, 1)).primitive
    # rank zero, k > 0, chi != 0, pairing 2 not in {0, 4}: positive
    v = MukaiVector(0, 1, 3, 1)
    assert mukai_pairing(v, v) == 2
    assert check_assumptions(v).positive
    # rank zero with pairing 4 fails the positivity clause
    v4 = MukaiVector(0, 1, 3, 2)
    assert mukai_pairing(v4, v4) == 4
    assert not is_positive(v4)
    assert not is_positive(MukaiVector(0, -1, 3, 1))  # ineffective c1
    assert not is_positive(MukaiVector(0, 1, 0, 3))  # chi = 0
    assert not is_positive(MukaiVector(-1, 0, 0, 1))  # negative rank
    assert is_primitive(MukaiVector(0, 1, 0, 1))
    assert not is_primitive(MukaiVector(0, 0, 0, 1))


def test_h2_direction_sign():
    v = MukaiVector(1, 0, -1, 1)
    w = MukaiVector(2, 3, 2, 1)
    assert check_assumptions(v, w).h2_vanishing_direction == 1
    assert check_assumptions(v, MukaiVector(2, -3, 2, 1)).h2_vanishing_direction == -1
    assert check_assumptions(v, MukaiVector(2, 0, 2, 1)).h2_vanishing_direction == 0


def test_text_and_json_round_trip():
    v = parse_vector(" 2, -3 , 5", 4)
    assert v == MukaiVector(2, -3, 5, 4)
    assert v.text() == "2,-3,5"
    blob = json.dumps(v.to_json_dict())
    assert MukaiVector.from_json(blob) == v
    with pytest.raises(ValueError):
        parse_vector("1,2", 1)
    with pytest.raises(ValueError):
        parse_vector("a,b,c", 1)
    with pytest.raises(ValueError):
        MukaiVector(1, 0, 0, 0)


def test_hilbert_scheme_convention():
    # Pic0 x Hilb^n carries v = (1, 0, -n): d_v = n for every ambient lattice
    for n_points in (1, 2, 3, 7):
        assert dv(MukaiVector(1, 0, -n_points, 1)) == n_points
        assert dv(MukaiVector(1, 0, -n_points, 3)) == n_points
