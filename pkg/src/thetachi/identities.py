"""Registry of the displayed cohomological identities, re-derived mechanically.

Every identity is evaluated by the exterior-algebra engine and compared to
its closed form with an exact residual; a check passes only when the
residual is identically zero.  Each identity runs in two modes:

* symbolic - the parameters are polynomial variables; linear orthogonality
  constraints are eliminated by exact rational substitution with the
  denominator cleared (never by ideal reduction);
* numeric - seeded pseudo-random integer parameters in [-9, 9], with
  degenerate values excluded and orthogonality solved exactly.

The same identity code serves both modes; only the scalars differ.
Registry keys (sec4_table, ..., assembly_three) are the stable interface
tokens used by the command-line ``verify --only`` filter.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import abelian as ab
from .abelian import (
    Polarization,
    SP_A,
    SP_AH,
    SP_AHxAH,
    SP_AxA,
    SP_AxAH,
    SP_AxAHxAH,
    SP_AxAxAH,
    addition,
    f_map,
    factorwise,
    fm_transform,
    hat_of,
    lambda_hat,
    make_phi,
    mukai_class,
    mukai_pair,
    one_times_phi,
    point_class,
    poincare_class,
    polarization_class,
    projection,
    two_form,
    unit,
)
from .exterior import (
    ExteriorClass,
    exp_even,
    fiber_integrate,
    integrate,
    relabel,
    wedge,
)
from .formulas import chi_albanese_fiber, chi_arbitrary_det, chi_fixed_det, chi_fixed_fm_det
from .mukai import MukaiVector, dv as vector_dv, euler_chi_tensor
from .poly import Poly, eliminate_linear, scalar_div, scalar_is_zero


class UnknownIdentity(KeyError):
    pass


class SideCondition(ValueError):
    """Unsatisfiable side condition (e.g. r = 0 where division is needed)."""


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    mode: str
    instantiation: dict
    residual: str
    passed: bool
    trial: int | None = None

    def to_json_dict(self) -> dict:
        out = {
            "identity": self.identity_id,
            "mode": self.mode,
            "instantiation": {k: str(v) for k, v in sorted(self.instantiation.items())},
            "residual": self.residual,
            "pass": self.passed,
        }
        if self.trial is not None:
            out["trial"] = str(self.trial)
        return out


# -- residual bookkeeping -----------------------------------------------------


class _Residuals:
    """Collects labeled residuals; a run passes when all are exactly zero."""

    def __init__(self, constraint=None):
        # constraint = (var, numerator, denominator) for the symbolic locus
        self.constraint = constraint
        self.items = []

    def _reduce(self, scalar):
        if self.constraint is None or not isinstance(scalar, Poly):
            return scalar
        var, num, den = self.constraint
        return eliminate_linear(scalar, var, num, den)

    def add_scalar(self, label: str, value):
        value = self._reduce(value)
        self.items.append((label, scalar_is_zero(value), repr(value)))

    def add_class(self, label: str, cls: ExteriorClass):
        reduced = {k: self._reduce(c) for k, c in cls.terms.items()}
        nonzero = ExteriorClass(cls.space, reduced)
        self.items.append((label, nonzero.is_zero, repr(nonzero)))

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.items)

    def summary(self) -> str:
        for label, ok, rep in self.items:
            if not ok:
                return f"{label}: {rep}"
        return "0"


# -- shared builders ----------------------------------------------------------


def _alpha_class(coeffs: dict) -> ExteriorClass:
    """General degree-two class on A from six coefficients a12..a34."""
    return two_form(
        SP_A,
        0,
        {
            (0, 1): coeffs["a12"],
            (0, 2): coeffs["a13"],
            (0, 3): coeffs["a14"],
            (1, 2): coeffs["a23"],
            (1, 3): coeffs["a24"],
            (2, 3): coeffs["a34"],
        },
    )


def _push_second_A(c: ExteriorClass) -> ExteriorClass:
    """Fiber-integrate a class on AxA over the first factor, land on A."""
    return relabel(fiber_integrate(c, 0), SP_A)


def _lambda_on(sp, pol: Polarization) -> ExteriorClass:
    return polarization_class(sp, 0, pol)


def _sym_alpha() -> dict:
    return {name: Poly.var(name) for name in ("a12", "a13", "a14", "a23", "a24", "a34")}


def _rand_alpha(rng) -> dict:
    return {name: rng.randint(-9, 9) for name in ("a12", "a13", "a14", "a23", "a24", "a34")}


def _rand_nonzero(rng) -> int:
    while True:
        value = rng.randint(-9, 9)
        if value:
            return value


def _orthogonality_constraint(r, rp, chi, lam_dot_lamp):
    """chi' := -(r' chi + lambda.lambda')/r, as (numerator, denominator)."""
    if scalar_is_zero(r):
        raise SideCondition("cannot eliminate chi' when r = 0")
    return -(rp * chi + lam_dot_lamp), r


# -- individual identities ----------------------------------------------------
# Each check function takes a params dict and returns a _Residuals.


def _check_sec4_table(params) -> _Residuals:
    """Six pushforwards over the first factor of AxA for m and m_r."""
    pol = Polarization(params["d"], params["e"])
    r = params["r"]
    lam = _lambda_on(SP_A, pol)
    alpha = _alpha_class(params)
    m = addition(SP_AxA, 0, 1, SP_A)
    mr = addition(SP_AxA, 0, 1, SP_A, r)
    p1 = projection(SP_AxA, (0,), SP_A)
    omega = point_class(SP_A, 0)

    res = _Residuals()
    rows = [
        ("m_lam.p1_omega", m.pullback(lam), p1.pullback(omega), lam),
        ("mr_lam.p1_omega", mr.pullback(lam), p1.pullback(omega), lam.scaled(r * r)),
        ("mr_omega.m_lam", mr.pullback(omega), m.pullback(lam), lam.scaled((r - 1) ** 2)),
        ("mr_lam.m_omega", mr.pullback(lam), m.pullback(omega), lam.scaled((r - 1) ** 2)),
        ("m_omega.p1_alpha", m.pullback(omega), p1.pullback(alpha), alpha),
        ("mr_omega.p1_alpha", mr.pullback(omega), p1.pullback(alpha), alpha.scaled(r * r)),
    ]
    for label, left, right, expected in rows:
        res.add_class(label, _push_second_A(wedge(left, right)) - expected)
    return res


def _check_sec4_lemma(params) -> _Residuals:
    """p2!(mr*lam . m*lam . p1*alpha) = (r-1)^2 (∫alpha lam) lam + r lam^2 alpha."""
    pol = Polarization(params["d"], params["e"])
    r = params["r"]
    lam = _lambda_on(SP_A, pol)
    alpha = _alpha_class(params)
    m = addition(SP_AxA, 0, 1, SP_A)
    mr = addition(SP_AxA, 0, 1, SP_A, r)
    p1 = projection(SP_AxA, (0,), SP_A)

    pushed = _push_second_A(
        wedge(wedge(mr.pullback(lam), m.pullback(lam)), p1.pullback(alpha))
    )
    int_alpha_lam = integrate(wedge(alpha, lam))
    lam_sq = integrate(wedge(lam, lam))
    expected = lam.scaled(int_alpha_lam * (r - 1) ** 2) + alpha.scaled(r * lam_sq)
    res = _Residuals()
    res.add_class("lemma", pushed - expected)
    return res


def _check_mstar(params) -> _Residuals:
    """Addition pullback of lambda splits as p1 + p2 + Poincare pullback."""
    pol = Polarization(params["d"], params["e"])
    r = params["r"]
    lam = _lambda_on(SP_A, pol)
    m = addition(SP_AxA, 0, 1, SP_A)
    mr = addition(SP_AxA, 0, 1, SP_A, r)
    p1 = projection(SP_AxA, (0,), SP_A)
    p2 = projection(SP_AxA, (1,), SP_A)
    poincare_pulled = one_times_phi(pol).pullback(poincare_class(SP_AxAH, 0, 1))

    res = _Residuals()
    res.add_class(
        "m_star",
        m.pullback(lam) - p1.pullback(lam) - p2.pullback(lam) - poincare_pulled,
    )
    res.add_class(
        "mr_star",
        mr.pullback(lam)
        - p1.pullback(lam)
        - p2.pullback(lam).scaled(r * r)
        - poincare_pulled.scaled(r),
    )
    return res


def _check_fmp(params) -> _Residuals:
    """Phi* of the half-square Poincare pushforward of alpha."""
    pol = Polarization(params["d"], params["e"])
    lam = _lambda_on(SP_A, pol)
    alpha = _alpha_class(params)
    phi = make_phi(pol, "A->Ah")
    cP = poincare_class(SP_AxAH, 0, 1)
    p1 = projection(SP_AxAH, (0,), SP_A)

    pushed = fiber_integrate(wedge(p1.pullback(alpha), wedge(cP, cP) / 2), 0)
    left = phi.pullback(pushed)
    int_alpha_lam = integrate(wedge(alpha, lam))
    half_lam_sq = scalar_div(integrate(wedge(lam, lam)), 2)
    expected = lam.scaled(-int_alpha_lam) + alpha.scaled(half_lam_sq)
    res = _Residuals()
    res.add_class("fmp", left - expected)
    return res


def _check_phis(params) -> _Residuals:
    """Both composites of the polarization morphisms are multiplication by -de."""
    pol = Polarization(params["d"], params["e"])
    phi = make_phi(pol, "A->Ah")
    phi_hat = make_phi(pol, "Ah->A")
    chi = pol.chi

    res = _Residuals()
    on_ah = phi.after(phi_hat)  # Ah -> A -> Ah
    on_a = phi_hat.after(phi)  # A -> Ah -> A
    for j in range(4):
        gen = ExteriorClass.generator(SP_AH, j)
        res.add_class(f"ah_gen{j}", on_ah.pullback(gen) + gen.scaled(chi))
    for j in range(4):
        gen = ExteriorClass.generator(SP_A, j)
        res.add_class(f"a_gen{j}", on_a.pullback(gen) + gen.scaled(chi))
    return res


def _check_prop_split(params) -> _Residuals:
    """First Chern class of the translation-correlation bundle on A.

    The engine evaluates -p2![m_r*v . m*exp(-lam) . p1*(exp(lam) w)]_(3);
    under orthogonality this equals +d_v c1(v (x) w).  The overall sign is
    fixed by the engine's regression pins; only the square of this class
    feeds the Euler characteristics, so downstream values are insensitive
    to it.
    """
    pol = Polarization(params["d"], params["e"])
    r, chi = params["r"], params["chi"]
    rp, chip = params["rp"], params["chip"]
    lam = _lambda_on(SP_A, pol)
    lamp = _alpha_class(params)  # general two-form as c1 of the partner

    v_cls = mukai_class(SP_A, 0, r, lam, chi)
    w_cls = mukai_class(SP_A, 0, rp, lamp, chip)
    m = addition(SP_AxA, 0, 1, SP_A)
    mr = addition(SP_AxA, 0, 1, SP_A, r)
    p1 = projection(SP_AxA, (0,), SP_A)

    inner = wedge(
        wedge(mr.pullback(v_cls), m.pullback(exp_even(-lam))),
        p1.pullback(wedge(exp_even(lam), w_cls)),
    )
    c1_bundle = -_push_second_A(inner.part(6))
    d_v = scalar_div(integrate(wedge(lam, lam)), 2) - r * chi
    c1_tensor_cls = lamp.scaled(r) + lam.scaled(rp)
    res = _Residuals(constraint=params.get("constraint"))
    res.add_class("prop_split", c1_bundle - c1_tensor_cls.scaled(d_v))
    return res


def _sec5_context(params):
    pol = Polarization(params["d"], params["e"])
    lam = _lambda_on(SP_A, pol)
    lamp = _alpha_class(params) if "a12" in params else None
    f = f_map(pol)
    p1 = projection(SP_AxAH, (0,), SP_A)
    cP = poincare_class(SP_AxAH, 0, 1)
    omega = point_class(SP_A, 0)
    lam_hat = lambda_hat(pol)
    lamp_hat = hat_of(lamp) if lamp is not None else None
    return pol, lam, lamp, f, p1, cP, omega, lam_hat, lamp_hat


def _check_sec5_a(params) -> _Residuals:
    pol, lam, lamp, f, p1, cP, omega, lam_hat, lamp_hat = _sec5_context(params)
    lam_sq = integrate(wedge(lam, lam))
    lam_dot = integrate(wedge(lam, lamp))
    pushed = fiber_integrate(wedge(f.pullback(omega), p1.pullback(lamp)), 0)
    half = scalar_div(lam_sq, 2)
    res = _Residuals()
    res.add_class("push_f_omega", pushed - lamp_hat.scaled(half) + lam_hat.scaled(lam_dot))
    res.add_class(
        "hat_definition",
        fiber_integrate(wedge(wedge(cP, cP) / 2, p1.pullback(lamp)), 0) - lamp_hat,
    )
    return res


def _check_sec5_b(params) -> _Residuals:
    pol, lam, lamp, f, p1, cP, omega, lam_hat, lamp_hat = _sec5_context(params)
    lam_sq = integrate(wedge(lam, lam))
    half = scalar_div(lam_sq, 2)
    pushed = fiber_integrate(wedge(f.pullback(lam), p1.pullback(omega)), 0)
    res = _Residuals()
    res.add_class("push_f_lam", pushed + lam_hat.scaled(half))
    res.add_class(
        "hat_via_f",
        fiber_integrate(wedge(wedge(cP, cP) / 2, f.pullback(lam)), 0) - lam_hat,
    )
    return res


def _check_sec5_c(params) -> _Residuals:
    _, lam, _, f, _, cP, omega, lam_hat, _ = _sec5_context(params)
    pushed = fiber_integrate(wedge(f.pullback(omega), cP), 0)
    res = _Residuals()
    res.add_class("push_f_omega_cP", pushed + lam_hat.scaled(2))
    return res


def _check_sec5_d(params) -> _Residuals:
    _, lam, lamp, f, p1, cP, _, _, lamp_hat = _sec5_context(params)
    lam_sq = integrate(wedge(lam, lam))
    pushed = fiber_integrate(
        wedge(wedge(f.pullback(lam), p1.pullback(lamp)), cP), 0
    )
    res = _Residuals()
    res.add_class("push_f_lam_lamp_cP", pushed + lamp_hat.scaled(lam_sq))
    return res


def _check_fmtl(params) -> _Residuals:
    """Coordinate value of the dual-polarization class.

    p2!(f*omega . c1(P)) must equal 2d f3^f4 + 2e f1^f2 on the dual side,
    and that class must be -2 lambda_hat for the transform-defined hat.
    """
    pol = Polarization(params["d"], params["e"])
    f = f_map(pol)
    cP = poincare_class(SP_AxAH, 0, 1)
    omega = point_class(SP_A, 0)
    value = fiber_integrate(wedge(f.pullback(omega), cP), 0)
    explicit = two_form(SP_AH, 0, {(2, 3): 2 * pol.d, (0, 1): 2 * pol.e})
    res = _Residuals()
    res.add_class("coordinates", value - explicit)
    res.add_class("hat_relation", value + lambda_hat(pol).scaled(2))
    return res


def _check_prop_split1(params) -> _Residuals:
    """Dual-side analogue of prop_split, with the same engine-fixed sign."""
    pol = Polarization(params["d"], params["e"])
    r, chi = params["r"], params["chi"]
    rp, chip = params["rp"], params["chip"]
    lam = _lambda_on(SP_A, pol)
    lamp = _alpha_class(params)
    v_cls = mukai_class(SP_A, 0, r, lam, chi)
    w_cls = mukai_class(SP_A, 0, rp, lamp, chip)
    f = f_map(pol)
    p1 = projection(SP_AxAH, (0,), SP_A)
    cP = poincare_class(SP_AxAH, 0, 1)

    inner = wedge(
        wedge(f.pullback(v_cls), p1.pullback(w_cls)), exp_even(cP.scaled(chi))
    )
    c1_bundle = -fiber_integrate(inner.part(6), 0)
    lam_hat = lambda_hat(pol)
    lamp_hat = hat_of(lamp)
    d_v = scalar_div(integrate(wedge(lam, lam)), 2) - r * chi
    c1_tensor_hat = lamp_hat.scaled(chi) + lam_hat.scaled(chip)
    res = _Residuals(constraint=params.get("constraint"))
    res.add_class("prop_split1", c1_bundle - c1_tensor_hat.scaled(d_v))
    return res


def _check_llp(params) -> _Residuals:
    """lam . lam_hat . c1(P)^2/2 integrates to lam^2 over the product."""
    pol = Polarization(params["d"], params["e"])
    lam_prod = polarization_class(SP_AxAH, 0, pol)
    lam_hat = projection(SP_AxAH, (1,), SP_AH).pullback(lambda_hat(pol))
    cP = poincare_class(SP_AxAH, 0, 1)
    lam_sq = integrate(wedge(_lambda_on(SP_A, pol), _lambda_on(SP_A, pol)))
    value = integrate(wedge(wedge(lam_prod, lam_hat), wedge(cP, cP) / 2))
    res = _Residuals()
    res.add_scalar("llp", value - lam_sq)
    return res


def _check_bl(params) -> _Residuals:
    """Double-Poincare pushforward pulled back along Phi x 1."""
    pol = Polarization(params["d"], params["e"])
    q1 = projection(SP_AxAHxAH, (0,), SP_A)
    q12 = projection(SP_AxAHxAH, (0, 1), SP_AxAH)
    q13 = projection(SP_AxAHxAH, (0, 2), SP_AxAH)
    cP = poincare_class(SP_AxAH, 0, 1)
    lam = _lambda_on(SP_A, pol)

    inner = wedge(wedge(q12.pullback(cP), q13.pullback(cP)), q1.pullback(lam))
    pushed = fiber_integrate(inner, 0)  # lives on Ah1 x Ah2
    phi_times_one = factorwise(
        SP_AxAH, SP_AHxAH, [(0, ab._phi_rows(pol)), (1, None)]
    )
    left = phi_times_one.pullback(pushed)
    half = scalar_div(integrate(wedge(lam, lam)), 2)
    res = _Residuals()
    res.add_class("bl", left + cP.scaled(half))
    return res


def _check_prop_split2(params) -> _Residuals:
    """chi of the two-parameter correlation bundle equals (d_v d_w)^2.

    Verified in the two rank-one reductions: lambda' = 0 and
    lambda = a lambda'.
    """
    d, e = params["d"], params["e"]
    dp, ep = params["dp"], params["ep"]
    r, chi = params["r"], params["chi"]
    rp, chip = params["rp"], params["chip"]
    pol_v = Polarization(d, e)
    lam = _lambda_on(SP_A, pol_v)
    lamp = two_form(SP_A, 0, {(0, 1): dp, (2, 3): ep})

    v_cls = mukai_class(SP_A, 0, r, lam, chi)
    w_cls = mukai_class(SP_A, 0, rp, lamp, chip)
    m12 = addition(SP_AxAxAH, 0, 1, SP_A)
    p1 = projection(SP_AxAxAH, (0,), SP_A)
    p13 = projection(SP_AxAxAH, (0, 2), SP_AxAH)
    kernel = exp_even(poincare_class(SP_AxAH, 0, 1))

    inner = wedge(
        wedge(m12.pullback(v_cls), p13.pullback(kernel)), p1.pullback(w_cls)
    )
    c1_bundle = -relabel(fiber_integrate(inner.part(6), 0), SP_AxAH)
    square = wedge(c1_bundle, c1_bundle)
    chi_bundle = integrate(wedge(square, square) / 24)

    lam_sq = integrate(wedge(lam, lam))
    lamp_sq = integrate(wedge(lamp, lamp))
    d_v = scalar_div(lam_sq, 2) - r * chi
    d_w = scalar_div(lamp_sq, 2) - rp * chip
    res = _Residuals(constraint=params.get("constraint"))
    res.add_scalar("prop_split2", chi_bundle - (d_v * d_w) ** 2)
    return res


def _check_dw0_chern(params) -> _Residuals:
    """Chern class of the pulled-back theta bundle on the isogeny cover.

    c1 = -(chi' lam + chi lam'), and chi(A, c1) = chi'^2 d_v + chi^2 d_w
    under orthogonality; with d_w = 0 this gives the finite-cover count
    chi'^2 d_v, i.e. the quotient value d_v.
    """
    pol = Polarization(params["d"], params["e"])
    r, chi = params["r"], params["chi"]
    rp, chip = params["rp"], params["chip"]
    lam = _lambda_on(SP_A, pol)
    lamp = two_form(SP_A, 0, {(0, 1): params["dp"], (2, 3): params["ep"]})
    v_cls = mukai_class(SP_A, 0, r, lam, chi)
    w_cls = mukai_class(SP_A, 0, rp, lamp, chip)
    m = addition(SP_AxA, 0, 1, SP_A)
    p1 = projection(SP_AxA, (0,), SP_A)

    inner = wedge(m.pullback(w_cls), p1.pullback(v_cls))
    c1 = -_push_second_A(inner.part(6))
    expected = -(lam.scaled(chip) + lamp.scaled(chi))
    d_v = scalar_div(integrate(wedge(lam, lam)), 2) - r * chi
    d_w = scalar_div(integrate(wedge(lamp, lamp)), 2) - rp * chip
    chi_of_c1 = scalar_div(integrate(wedge(c1, c1)), 2)

    res = _Residuals(constraint=params.get("constraint"))
    res.add_class("chern_class", c1 - expected)
    res.add_scalar("euler_value", chi_of_c1 - (chip * chip * d_v + chi * chi * d_w))
    if params.get("check_quotient"):
        res.add_scalar(
            "quotient_value", Fraction(chi_of_c1, chip * chip) - d_v
        )
    return res


def _check_fm_isometry(params) -> _Residuals:
    """The transform preserves the Mukai pairing of even classes."""
    def build(prefix):
        coeffs = {key: params[f"{prefix}{key}"] for key in
                  ("0", "12", "13", "14", "23", "24", "34", "top")}
        cls = unit(SP_A, coeffs["0"]) + two_form(
            SP_A,
            0,
            {
                (0, 1): coeffs["12"],
                (0, 2): coeffs["13"],
                (0, 3): coeffs["14"],
                (1, 2): coeffs["23"],
                (1, 3): coeffs["24"],
                (2, 3): coeffs["34"],
            },
        ) + point_class(SP_A, 0).scaled(coeffs["top"])
        return cls

    x, y = build("x"), build("y")
    fx, fy = fm_transform(x), fm_transform(y)
    res = _Residuals()
    res.add_scalar("pairing", mukai_pair(fx, fy) - mukai_pair(x, y))
    return res


# -- assembly checks (numeric only) -------------------------------------------


def _assemble_vectors(params):
    n = params["n"]
    v = MukaiVector(params["r"], params["k"], params["chi"], n)
    w = MukaiVector(params["rp"], params["kp"], params["chip"], n)
    pol_h = Polarization(params["d0"], params["e0"])
    return v, w, pol_h


def _tensor_square_from_engine(c1_cls: ExteriorClass) -> Fraction:
    return Fraction(integrate(wedge(c1_cls, c1_cls)), 2)


def _check_assembly_main(params) -> _Residuals:
    """Theorem-level assembly: Albanese value x chi(A, L+) / d_v^4."""
    v, w, pol_h = _assemble_vectors(params)
    pol_v = Polarization(pol_h.d * v.k, pol_h.e * v.k)
    lam = _lambda_on(SP_A, pol_v)
    lamp = _lambda_on(SP_A, Polarization(pol_h.d * w.k, pol_h.e * w.k))
    v_cls = mukai_class(SP_A, 0, v.r, lam, v.chi)
    w_cls = mukai_class(SP_A, 0, w.r, lamp, w.chi)
    m = addition(SP_AxA, 0, 1, SP_A)
    mr = addition(SP_AxA, 0, 1, SP_A, v.r)
    p1 = projection(SP_AxA, (0,), SP_A)
    inner = wedge(
        wedge(mr.pullback(v_cls), m.pullback(exp_even(-lam) if not lam.is_zero else unit(SP_A))),
        p1.pullback(wedge(exp_even(lam) if not lam.is_zero else unit(SP_A), w_cls)),
    )
    c1_bundle = -_push_second_A(inner.part(6))
    chi_bundle = _tensor_square_from_engine(c1_bundle)

    d_v, d_w = vector_dv(v), vector_dv(w)
    assembled = chi_albanese_fiber(d_v, d_w).value * chi_bundle / d_v**4
    res = _Residuals()
    res.add_scalar("assembly_main", assembled - chi_fixed_det(v, w).value)
    return res


def _check_assembly_two(params) -> _Residuals:
    v, w, pol_h = _assemble_vectors(params)
    pol_v = Polarization(pol_h.d * v.k, pol_h.e * v.k)
    lam = _lambda_on(SP_A, pol_v)
    lamp = _lambda_on(SP_A, Polarization(pol_h.d * w.k, pol_h.e * w.k))
    v_cls = mukai_class(SP_A, 0, v.r, lam, v.chi)
    w_cls = mukai_class(SP_A, 0, w.r, lamp, w.chi)
    f = f_map(pol_v)
    p1 = projection(SP_AxAH, (0,), SP_A)
    cP = poincare_class(SP_AxAH, 0, 1)
    inner = wedge(
        wedge(f.pullback(v_cls), p1.pullback(w_cls)), exp_even(cP.scaled(v.chi))
    )
    c1_bundle = -fiber_integrate(inner.part(6), 0)
    chi_bundle = _tensor_square_from_engine(c1_bundle)

    d_v, d_w = vector_dv(v), vector_dv(w)
    assembled = chi_albanese_fiber(d_v, d_w).value * chi_bundle / d_v**4
    res = _Residuals()
    res.add_scalar("assembly_two", assembled - chi_fixed_fm_det(v, w).value)
    return res


def _check_assembly_three(params) -> _Residuals:
    v, w, pol_h = _assemble_vectors(params)
    lam = _lambda_on(SP_A, Polarization(pol_h.d * v.k, pol_h.e * v.k))
    lamp = _lambda_on(SP_A, Polarization(pol_h.d * w.k, pol_h.e * w.k))
    v_cls = mukai_class(SP_A, 0, v.r, lam, v.chi)
    w_cls = mukai_class(SP_A, 0, w.r, lamp, w.chi)
    m12 = addition(SP_AxAxAH, 0, 1, SP_A)
    p1 = projection(SP_AxAxAH, (0,), SP_A)
    p13 = projection(SP_AxAxAH, (0, 2), SP_AxAH)
    kernel = exp_even(poincare_class(SP_AxAH, 0, 1))
    inner = wedge(
        wedge(m12.pullback(v_cls), p13.pullback(kernel)), p1.pullback(w_cls)
    )
    c1_bundle = -relabel(fiber_integrate(inner.part(6), 0), SP_AxAH)
    square = wedge(c1_bundle, c1_bundle)
    chi_bundle = Fraction(integrate(wedge(square, square)), 24)

    d_v, d_w = vector_dv(v), vector_dv(w)
    assembled = chi_albanese_fiber(d_w, d_v).value * chi_bundle / d_w**4
    res = _Residuals()
    res.add_scalar("assembly_three", assembled - chi_arbitrary_det(v, w).value)
    return res


# -- samplers ------------------------------------------------------------------


def _sample_de(rng):
    return {"d": _rand_nonzero(rng), "e": _rand_nonzero(rng)}


def _sample_de_alpha_r(rng):
    params = _sample_de(rng)
    params.update(_rand_alpha(rng))
    params["r"] = rng.randint(-9, 9)
    return params


def _sample_orthogonal(rng, general_alpha: bool):
    """Draw v/w scalar data with chi' solved exactly from orthogonality."""
    params = _sample_de(rng)
    if general_alpha:
        params.update(_rand_alpha(rng))
        lam_dot = params["d"] * params["a34"] + params["e"] * params["a12"]
    else:
        params["dp"], params["ep"] = rng.randint(-9, 9), rng.randint(-9, 9)
        lam_dot = params["d"] * params["ep"] + params["e"] * params["dp"]
    params["r"] = _rand_nonzero(rng)
    params["rp"] = rng.randint(-9, 9)
    params["chi"] = rng.randint(-9, 9)
    params["chip"] = Fraction(-(params["rp"] * params["chi"] + lam_dot), params["r"])
    return params


def _sample_split2(rng):
    """Rank-one reduction: lambda' = 0 or lambda = a lambda', equal odds."""
    params = {"r": _rand_nonzero(rng), "rp": rng.randint(-9, 9)}
    params["chi"] = rng.randint(-9, 9)
    if rng.random() < 0.5:
        params["case"] = "lambda_prime_zero"
        params.update(_sample_de(rng))
        params["dp"] = params["ep"] = 0
        lam_dot = 0
    else:
        params["case"] = "lambda_multiple"
        params["dp"], params["ep"] = _rand_nonzero(rng), _rand_nonzero(rng)
        a = rng.randint(-9, 9)
        params["a"] = a
        params["d"], params["e"] = a * params["dp"], a * params["ep"]
        lam_dot = params["d"] * params["ep"] + params["e"] * params["dp"]
    params["chip"] = Fraction(-(params["rp"] * params["chi"] + lam_dot), params["r"])
    return params


def _sample_dw0(rng):
    """Orthogonal data with d_w = 0 and chi' != 0 for the quotient check."""
    while True:
        rp, chip = _rand_nonzero(rng), _rand_nonzero(rng)
        dp = _rand_nonzero(rng)
        if (rp * chip) % dp == 0 and -9 <= (rp * chip) // dp <= 9:
            ep = (rp * chip) // dp  # d_w = dp*ep - rp*chip = 0
            break
    params = _sample_de(rng)
    params.update({"dp": dp, "ep": ep, "rp": rp, "chip": chip})
    lam_dot = params["d"] * ep + params["e"] * dp
    r = _rand_nonzero(rng)
    # orthogonality fixes chi once r is drawn; solve exactly
    params["r"] = r
    params["chi"] = Fraction(-(lam_dot + r * chip), rp)
    params["check_quotient"] = True
    return params


def _sample_isometry(rng):
    params = {}
    for prefix in ("x", "y"):
        for key in ("0", "12", "13", "14", "23", "24", "34", "top"):
            params[f"{prefix}{key}"] = rng.randint(-9, 9)
    return params


def _sample_vector_pair(rng, need_dw_positive: bool, need_k_nonzero: bool = False):
    """Integer orthogonal Mukai vectors with d_v >= 1 (and d_w if asked)."""
    while True:
        n = rng.randint(1, 4)
        divisors = [t for t in range(1, n + 1) if n % t == 0]
        d0 = rng.choice(divisors)
        e0 = n // d0
        r = _rand_nonzero(rng)
        k = rng.randint(-3, 3)
        if need_k_nonzero and k == 0:
            continue
        chi = rng.randint(-9, 9)
        rp = rng.randint(-9, 9)
        kp = rng.randint(-3, 3)
        numer = -(rp * chi + 2 * n * k * kp)
        if numer % r != 0:
            continue
        chip = numer // r
        v = MukaiVector(r, k, chi, n)
        w = MukaiVector(rp, kp, chip, n)
        if euler_chi_tensor(v, w) != 0:
            continue
        d_v, d_w = vector_dv(v), vector_dv(w)
        if d_v < 1 or d_w < 0 or (need_dw_positive and d_w < 1):
            continue
        return {
            "n": n, "d0": d0, "e0": e0,
            "r": r, "k": k, "chi": chi,
            "rp": rp, "kp": kp, "chip": chip,
        }


# -- symbolic parameter builders ------------------------------------------------


def _sym_de():
    return {"d": Poly.var("d"), "e": Poly.var("e")}


def _sym_de_alpha_r():
    params = _sym_de()
    params.update(_sym_alpha())
    params["r"] = Poly.var("r")
    return params


def _sym_orthogonal(general_alpha: bool):
    params = _sym_de()
    if general_alpha:
        params.update(_sym_alpha())
        lam_dot = params["d"] * params["a34"] + params["e"] * params["a12"]
    else:
        params["dp"], params["ep"] = Poly.var("dp"), Poly.var("ep")
        lam_dot = params["d"] * params["ep"] + params["e"] * params["dp"]
    params["r"] = Poly.var("r")
    params["rp"] = Poly.var("rp")
    params["chi"] = Poly.var("chi")
    params["chip"] = Poly.var("chip")
    params["constraint"] = (
        "chip",
        *_orthogonality_constraint(params["r"], params["rp"], params["chi"], lam_dot),
    )
    return params


def _sym_split2(case: str):
    params = {
        "r": Poly.var("r"),
        "rp": Poly.var("rp"),
        "chi": Poly.var("chi"),
        "chip": Poly.var("chip"),
        "case": case,
    }
    if case == "lambda_prime_zero":
        params.update(_sym_de())
        params["dp"] = params["ep"] = 0
        lam_dot = 0
    else:
        params["dp"], params["ep"] = Poly.var("dp"), Poly.var("ep")
        a = Poly.var("a")
        params["a"] = a
        params["d"], params["e"] = a * params["dp"], a * params["ep"]
        lam_dot = params["d"] * params["ep"] + params["e"] * params["dp"]
    params["constraint"] = (
        "chip",
        *_orthogonality_constraint(params["r"], params["rp"], params["chi"], lam_dot),
    )
    return params


def _sym_isometry():
    params = {}
    for prefix in ("x", "y"):
        for key in ("0", "12", "13", "14", "23", "24", "34", "top"):
            params[f"{prefix}{key}"] = Poly.var(f"{prefix}{key}")
    return params


# -- registry -------------------------------------------------------------------


@dataclass(frozen=True)
class Identity:
    identity_id: str
    check: callable
    sample: callable
    symbolic_params: callable | None  # None: numeric-only identity


def _split2_symbolic_runs():
    return [_sym_split2("lambda_prime_zero"), _sym_split2("lambda_multiple")]


REGISTRY: dict = {}


def _register(identity_id, check, sample, symbolic_params):
    REGISTRY[identity_id] = Identity(identity_id, check, sample, symbolic_params)


_register("sec4_table", _check_sec4_table, _sample_de_alpha_r, _sym_de_alpha_r)
_register("sec4_lemma", _check_sec4_lemma, _sample_de_alpha_r, _sym_de_alpha_r)
_register("mstar", _check_mstar, _sample_de_alpha_r, _sym_de_alpha_r)
_register("fmp", _check_fmp, lambda rng: {**_sample_de(rng), **_rand_alpha(rng)},
          lambda: {**_sym_de(), **_sym_alpha()})
_register("phis", _check_phis, _sample_de, _sym_de)
_register("prop_split", _check_prop_split,
          lambda rng: _sample_orthogonal(rng, general_alpha=True),
          lambda: _sym_orthogonal(general_alpha=True))
_register("sec5_a", _check_sec5_a,
          lambda rng: {**_sample_de(rng), **_rand_alpha(rng)},
          lambda: {**_sym_de(), **_sym_alpha()})
_register("sec5_b", _check_sec5_b, _sample_de, _sym_de)
_register("sec5_c", _check_sec5_c, _sample_de, _sym_de)
_register("sec5_d", _check_sec5_d,
          lambda rng: {**_sample_de(rng), **_rand_alpha(rng)},
          lambda: {**_sym_de(), **_sym_alpha()})
_register("fmtl", _check_fmtl, _sample_de, _sym_de)
_register("prop_split1", _check_prop_split1,
          lambda rng: _sample_orthogonal(rng, general_alpha=True),
          lambda: _sym_orthogonal(general_alpha=True))
_register("llp", _check_llp, _sample_de, _sym_de)
_register("bl", _check_bl, _sample_de, _sym_de)
_register("prop_split2", _check_prop_split2, _sample_split2, _split2_symbolic_runs)
_register("dw0_chern", _check_dw0_chern, _sample_dw0,
          lambda: _sym_orthogonal(general_alpha=False))
_register("fm_isometry", _check_fm_isometry, _sample_isometry, _sym_isometry)
_register("assembly_main", _check_assembly_main,
          lambda rng: _sample_vector_pair(rng, need_dw_positive=False), None)
_register("assembly_two", _check_assembly_two,
          lambda rng: _sample_vector_pair(rng, need_dw_positive=False,
                                          need_k_nonzero=True), None)
_register("assembly_three", _check_assembly_three,
          lambda rng: _sample_vector_pair(rng, need_dw_positive=True), None)

ALL_IDENTITIES = tuple(REGISTRY)


# -- drivers --------------------------------------------------------------------


def _describe_instantiation(params) -> dict:
    out = {}
    for key, value in params.items():
        if key == "constraint":
            var, num, den = value
            out["eliminated"] = f"{var} := ({num!r})/({den!r})"
            continue
        if isinstance(value, Poly):
            out[key] = "symbolic"
        elif isinstance(value, Fraction):
            out[key] = f"{value.numerator}/{value.denominator}" if value.denominator != 1 else str(value.numerator)
        else:
            out[key] = value
    return out


def run_identity(identity_id: str, params: dict | None = None,
                 mode: str = "symbolic", trial: int | None = None) -> IdentityReport:
    """Run one registered identity and report the exact residual."""
    if identity_id not in REGISTRY:
        raise UnknownIdentity(identity_id)
    identity = REGISTRY[identity_id]
    if mode == "symbolic":
        if identity.symbolic_params is None:
            raise SideCondition(f"{identity_id} has no symbolic mode")
        if params is None:
            params = identity.symbolic_params()
            if isinstance(params, list):
                # several symbolic cases: all must pass; report combined
                reports = [
                    run_identity(identity_id, p, "symbolic") for p in params
                ]
                passed = all(rep.passed for rep in reports)
                residual = next(
                    (rep.residual for rep in reports if not rep.passed), "0"
                )
                inst = {"cases": ";".join(str(p.get("case")) for p in params)}
                return IdentityReport(identity_id, "symbolic", inst, residual, passed)
    elif mode == "numeric":
        if params is None:
            raise ValueError("numeric mode needs sampled parameters")
    else:
        raise ValueError(f"unknown mode {mode!r}")
    residuals = identity.check(params)
    return IdentityReport(
        identity_id,
        mode,
        _describe_instantiation(params),
        residuals.summary(),
        residuals.passed,
        trial,
    )


def run_suite(seed: int, trials: int, only=None) -> list:
    """Run every selected identity symbolically once and numerically `trials` times.

    Deterministic for a fixed seed: each identity draws from its own
    seeded generator, and reports are sorted before returning.
    """
    if trials < 0:
        raise ValueError("trials must be nonnegative")
    selected = ALL_IDENTITIES if only is None else tuple(only)
    for identity_id in selected:
        if identity_id not in REGISTRY:
            raise UnknownIdentity(identity_id)
    reports = []
    for identity_id in selected:
        identity = REGISTRY[identity_id]
        if identity.symbolic_params is not None:
            reports.append(run_identity(identity_id, None, "symbolic"))
        rng = random.Random(f"{seed}:{identity_id}")
        for trial in range(trials):
            params = identity.sample(rng)
            reports.append(run_identity(identity_id, params, "numeric", trial))
    reports.sort(
        key=lambda rep: (
            rep.identity_id,
            0 if rep.mode == "symbolic" else 1,
            rep.trial if rep.trial is not None else -1,
        )
    )
    return reports


def suite_passed(reports) -> bool:
    return all(rep.passed for rep in reports)


def explore_split2_general(seed: int, trials: int) -> list:
    """Counterexample search for the two-parameter bundle identity beyond
    the rank-one reduction: independent (non-proportional) diagonal forms.

    Exploratory only; not part of the registered suite and no acceptance
    claim is made.  Returns one report per draw.
    """
    rng = random.Random(f"{seed}:explore_split2")
    reports = []
    trial = 0
    while trial < trials:
        d, e = _rand_nonzero(rng), _rand_nonzero(rng)
        dp, ep = _rand_nonzero(rng), _rand_nonzero(rng)
        if d * ep == e * dp:
            continue  # proportional: already covered by the registry
        r = _rand_nonzero(rng)
        chi, rp = rng.randint(-9, 9), rng.randint(-9, 9)
        chip = Fraction(-(rp * chi + d * ep + e * dp), r)
        params = {"d": d, "e": e, "dp": dp, "ep": ep,
                  "r": r, "chi": chi, "rp": rp, "chip": chip,
                  "case": "independent_forms"}
        residuals = _check_prop_split2(params)
        reports.append(
            IdentityReport(
                "explore_split2_general", "numeric",
                _describe_instantiation(params),
                residuals.summary(), residuals.passed, trial,
            )
        )
        trial += 1
    return reports
