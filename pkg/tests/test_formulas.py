from fractions import Fraction

import pytest

from thetachi.formulas import (
    FormulaError,
    KummerClass,
    beauville_bogomolov,
    binom,
    chi_albanese_fiber,
    chi_arbitrary_det,
    chi_fixed_det,
    chi_fixed_fm_det,
    chi_from_bb,
    chi_hilbert,
    chi_k3_reference,
    chi_kummer,
    etale_cover_residual,
)
from thetachi.mukai import MukaiVector, dv, euler_chi_tensor
from thetachi.poly import Poly


def test_binom_values():
    assert binom(5, 2) == 10
    for k in (-7, -1, 0, 3, 11):
        assert binom(k, 0) == 1
    assert binom(-1, 2) == 1  # (-1)(-2)/2
    assert binom(-9, 4) == 495
    assert binom(Fraction(1, 2), 2) == Fraction(-1, 8)
    with pytest.raises(FormulaError):
        binom(3, -1)


def test_binom_polynomial_top():
    a = Poly.var("a")
    p = binom(a, 2)
    assert p == (a * a - a) / 2
    assert p.subs({"a": 5}) == 10
    assert p.subs({"a": -1}) == 1


V1 = MukaiVector(1, 0, -1, 1)


def w_family(k):
    return MukaiVector(2, k, 2, 1)


def test_chi_fixed_det_worked_family():
    for k in (3, 5, 7, 9):
        result = chi_fixed_det(V1, w_family(k))
        assert result.value == k * k
        assert result.integral and result.branch == "generic"


def test_chi_fixed_det_symmetry():
    left = chi_fixed_det(V1, w_family(3))
    right = chi_fixed_det(w_family(3), V1)
    assert left.value == right.value == 9


def test_chi_fixed_det_degenerate_branch():
    v = MukaiVector(2, 1, 1, 2)
    w = MukaiVector(2, 1, -3, 2)
    result = chi_fixed_det(v, w)
    assert result.value == 4  # r^2
    assert result.branch == "special_dv0"
    assert result.cross_check == {"r^2": 4}
    # symmetric call hits the d_w = 0 side with the same value
    assert chi_fixed_det(w, v).value == 4


def test_chi_fixed_det_errors():
    with pytest.raises(FormulaError):
        chi_fixed_det(V1, MukaiVector(2, 4, 3, 1))  # not orthogonal
    iso_v = MukaiVector(1, 1, 1, 1)
    iso_w = MukaiVector(1, -1, 1, 1)
    assert dv(iso_v) == dv(iso_w) == 0
    with pytest.raises(FormulaError):
        chi_fixed_det(iso_v, iso_w)  # d_v + d_w = 0
    neg = MukaiVector(1, 0, 5, 1)  # d_v = -5
    partner = MukaiVector(1, 1, -5, 1)
    with pytest.raises(FormulaError):
        chi_fixed_det(neg, partner)


def test_chi_fixed_fm_det_values():
    assert chi_fixed_fm_det(V1, w_family(3)).value == 9
    v = MukaiVector(2, 1, 1, 2)
    w = MukaiVector(2, 1, -3, 2)
    result = chi_fixed_fm_det(v, w)
    assert result.value == 1  # chi^2
    assert result.branch == "special_dv0"
    assert result.cross_check == {"chi^2": 1}
    assert chi_fixed_fm_det(w, v).value == chi_fixed_fm_det(v, w).value
    assert chi_fixed_fm_det(w_family(5), V1).value == 25


def test_chi_albanese_fiber_values():
    for dw in (0, 1, 5, 12):
        assert chi_albanese_fiber(1, dw).value == 1
    assert chi_albanese_fiber(2, 3).value == 8
    assert chi_albanese_fiber(5, 3).value == 175
    with pytest.raises(FormulaError):
        chi_albanese_fiber(0, 3)
    with pytest.raises(FormulaError):
        chi_albanese_fiber(2, -1)


def test_albanese_k3_match_in_dimension_two():
    # a two-dimensional fiber is a K3 surface: value must be 2 d_w + 2
    for dw in range(0, 15):
        assert chi_albanese_fiber(2, dw).value == 2 * dw + 2


def test_chi_kummer_values():
    for chiD, r in ((7, 5), (0, 0), (-3, 2)):
        assert chi_kummer(KummerClass(chiD, r, 1)).value == 1
    assert chi_kummer(KummerClass(3, 0, 2)).value == 8
    assert chi_kummer(KummerClass(4, 1, 2)).value == 6
    assert chi_kummer(KummerClass(7, 2, 5)).value == 5 * binom(-9, 4)
    with pytest.raises(FormulaError):
        KummerClass(3, 0, 0)


def test_chi_hilbert_values():
    for chiD in (-2, 1, 9):
        assert chi_hilbert(1, chiD, 3).value == chiD
    assert chi_hilbert(2, 4, 0).value == 10
    assert chi_hilbert(2, 3, 0).value == 6  # (3/2) * binom(4, 1)


def test_etale_cover_consistency():
    for n in range(1, 6):
        for r in range(0, 3):
            for chiD in range(-4, 12):
                assert etale_cover_residual(n, chiD, r) == 0


def test_kummer_albanese_crosswalk():
    for n in range(1, 8):
        for r in range(0, 4):
            for chiD in range(r * r * n + 1, r * r * n + 12):
                kum = chi_kummer(KummerClass(chiD, r, n)).value
                alb = chi_albanese_fiber(n, chiD - r * r * n).value
                assert kum == alb


def test_chi_k3_reference_values():
    assert chi_k3_reference(0, 3).value == 5
    assert chi_k3_reference(1, 1).value == 6
    assert chi_k3_reference(2, 5).value == chi_k3_reference(5, 2).value


def test_chi_arbitrary_det_branches():
    v = MukaiVector(-2, 0, 1, 2)  # d_v = 2
    w0 = MukaiVector(2, 1, 1, 2)  # d_w = 0
    assert euler_chi_tensor(v, w0) == 0
    result = chi_arbitrary_det(v, w0)
    assert result.value == 2 and result.branch == "special_dw0"
    assert result.cross_check == {"generic": 2}

    w = w_family(3)
    generic = chi_arbitrary_det(V1, w)
    assert generic.value == chi_albanese_fiber(1, 5).value == 1
    with pytest.raises(FormulaError):
        chi_arbitrary_det(V1, MukaiVector(2, 4, 3, 1))
    # d_v = 0 with d_w > 0 is outside the formula's domain
    iso = MukaiVector(2, 1, 1, 2)
    with pytest.raises(FormulaError):
        chi_arbitrary_det(iso, MukaiVector(2, 1, -3, 2))


def test_degenerate_branch_counts_on_constructed_instances():
    """Isotropic-side values: r^2 for the determinant side, chi^2 for the
    transform side, across 100+ constructed orthogonal instances."""
    checked = 0
    for n in (1, 2, 3):
        for k in range(1, 5):
            square = n * k * k
            for r in (t for t in range(1, square + 1) if square % t == 0):
                v = MukaiVector(r, k, square // r, n)  # <v, v> = 0
                for rw in range(-3, 4):
                    for kw in range(-3, 4):
                        numer = -(rw * v.chi + 2 * n * v.k * kw)
                        if numer % v.r:
                            continue
                        w = MukaiVector(rw, kw, numer // v.r, n)
                        if dv(w) <= 0:
                            continue
                        assert chi_fixed_det(v, w).value == v.r**2
                        assert chi_fixed_fm_det(v, w).value == v.chi**2
                        checked += 1
    assert checked >= 100


def test_beauville_bogomolov():
    assert beauville_bogomolov(KummerClass(5, 0, 3)) == 10  # 2 chiD
    assert beauville_bogomolov(KummerClass(4, 1, 3)) == 2
    with pytest.raises(FormulaError):
        beauville_bogomolov(KummerClass(4, 1, 2))
    for n in range(3, 13):
        for r in range(-3, 4):
            for chiD in range(-20, 21):
                assert chi_from_bb(KummerClass(chiD, r, n)).value == chi_kummer(
                    KummerClass(chiD, r, n)
                ).value


def test_chi_result_serialization():
    result = chi_fixed_det(V1, w_family(3))
    blob = result.to_json_dict()
    assert blob["value"] == "9"
    assert blob["integral"] is True
    assert blob["inputs"]["n"] == "1"
    # hilbert values are integral across a wide junk-input sweep
    for n in range(1, 6):
        for chiD in range(-6, 10):
            for r in range(0, 4):
                assert chi_hilbert(n, chiD, r).integral


def test_non_integral_values_survive_exactly():
    from thetachi.formulas import ChiResult

    res = ChiResult("probe", Fraction(10, 3), {})
    assert not res.integral
    assert res.to_json_dict()["value"] == "10/3"
