"""Atlas for a polarized abelian surface and its dual.

Builds the standard spaces (A, Ah, AxA, AxAh, AxAxAh, AxAhxAh, AhxAh and
the reversed AhxA), the named classes (polarization, point class, Poincare
class), the morphism library (addition and scaled addition, multiplication
by N, the polarization morphisms in both directions and their products),
and the cohomological Fourier-Mukai transform.

Conventions pinned here and enforced by the regression tests:

* ``lambda_hat`` is *defined* as the degree-two part of the Fourier-Mukai
  transform of ``lambda``; in coordinates it equals
  ``-(d f3^f4 + e f1^f2)``.
* The dual polarization generator ``H_hat`` is ``-lambda_hat(H)``, so its
  coefficient pattern is positive and its self-intersection is ``2de``.
* The pullback of the morphism A -> Ah attached to a polarization is
  contraction of degree-one generators with ``lambda``; for the opposite
  direction Ah -> A it is contraction with ``H_hat`` (sign set by
  ``PHI_HAT_SIGN``), which makes both composites equal multiplication by
  ``-chi(lambda) = -de`` on degree one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exterior import (
    ExteriorClass,
    Factor,
    MorphismH1,
    Space,
    exp_even,
    fiber_integrate,
    integrate,
    wedge,
)
from .poly import Scalar, scalar_is_zero

# Flip to -1 to corrupt the dual-direction contraction; the identity suite
# (fmtl, phis) must then fail.  Used as a negative control in tests.
PHI_HAT_SIGN = 1


# -- spaces ----------------------------------------------------------------


def _factor(kind: str, label: str) -> Factor:
    return Factor(kind, label)


@lru_cache(maxsize=None)
def space(*factors) -> Space:
    """Memoized space from (kind, label) pairs, left factor first."""
    return Space(tuple(_factor(k, l) for k, l in factors))


SP_A = space(("A", "A"))
SP_AH = space(("Ah", "Ah"))
SP_AxA = space(("A", "A1"), ("A", "A2"))
SP_AxAH = space(("A", "A"), ("Ah", "Ah"))
SP_AHxA = space(("Ah", "Ah"), ("A", "A"))
SP_AxAxAH = space(("A", "A1"), ("A", "A2"), ("Ah", "Ah"))
SP_AxAHxAH = space(("A", "A"), ("Ah", "Ah1"), ("Ah", "Ah2"))
SP_AHxAH = space(("Ah", "Ah1"), ("Ah", "Ah2"))


@dataclass(frozen=True)
class Polarization:
    """Diagonal polarization d*f1v^f2v + e*f3v^f4v; chi = d*e.

    Numeric instances take positive integers with d*e = n; symbolic
    instances may carry polynomial entries.
    """

    d: Scalar
    e: Scalar

    @property
    def chi(self) -> Scalar:
        return self.d * self.e

    @property
    def degenerate(self) -> bool:
        return scalar_is_zero(self.d * self.e)


# -- named classes ----------------------------------------------------------


def unit(sp: Space, coeff: Scalar = 1) -> ExteriorClass:
    return ExteriorClass.unit(sp, coeff)


def two_form(sp: Space, position: int, coeffs: dict) -> ExteriorClass:
    """Degree-two class on one factor from local-index coefficients."""
    off = sp.factor_range(position).start
    terms = {}
    for (i, j), c in coeffs.items():
        if not 0 <= i < j < 4:
            raise ValueError(f"bad local index pair {(i, j)}")
        terms[(off + i, off + j)] = c
    return ExteriorClass(sp, terms)


def polarization_class(sp: Space, position: int, pol: Polarization) -> ExteriorClass:
    return two_form(sp, position, {(0, 1): pol.d, (2, 3): pol.e})


def dual_polarization_class(sp: Space, position: int, pol: Polarization) -> ExteriorClass:
    """H_hat = -lambda_hat = d*f3^f4 + e*f1^f2 on an Ah factor."""
    return two_form(sp, position, {(2, 3): pol.d, (0, 1): pol.e})


def point_class(sp: Space, position: int) -> ExteriorClass:
    return ExteriorClass.monomial(sp, sp.factor_range(position))


def poincare_class(sp: Space, first: int, second: int) -> ExteriorClass:
    """Sum over i of (first-factor generator i) ^ (second-factor generator i)."""
    off1 = sp.factor_range(first).start
    off2 = sp.factor_range(second).start
    out = ExteriorClass.zero(sp)
    for i in range(4):
        out = out + ExteriorClass.monomial(sp, (off1 + i, off2 + i))
    return out


def mukai_class(sp: Space, position: int, rank: Scalar, c1: ExteriorClass, chi: Scalar) -> ExteriorClass:
    """rank + c1 + chi * (point class); c1 must already live on sp."""
    return unit(sp, rank) + c1 + point_class(sp, position).scaled(chi)


# -- morphisms ---------------------------------------------------------------


def projection(source: Space, positions: tuple, target: Space) -> MorphismH1:
    """Pullback along the projection of a product onto chosen factors."""
    rows = []
    for t_pos in range(len(target.factors)):
        s_off = source.factor_range(positions[t_pos]).start
        for i in range(4):
            rows.append([(s_off + i, 1)])
    return MorphismH1(source, target, rows)


def addition(source: Space, pos1: int, pos2: int, target: Space, scale: Scalar = 1) -> MorphismH1:
    """Pullback of (a, b) -> a + scale*b between matching factors."""
    off1 = source.factor_range(pos1).start
    off2 = source.factor_range(pos2).start
    rows = [[(off1 + i, 1), (off2 + i, scale)] for i in range(4)]
    return MorphismH1(source, target, rows)


def mult_by(sp: Space, n: Scalar) -> MorphismH1:
    return MorphismH1(sp, sp, [[(i, n)] for i in range(sp.ngens)])


def _phi_rows(pol: Polarization):
    # contraction of f1..f4 with lambda = d f1v^f2v + e f3v^f4v
    d, e = pol.d, pol.e
    return ([(1, d)], [(0, -d)], [(3, e)], [(2, -e)])


def _phi_hat_rows(pol: Polarization):
    # contraction of f1v..f4v with H_hat = d f3^f4 + e f1^f2, times the pin
    d, e = pol.d * PHI_HAT_SIGN, pol.e * PHI_HAT_SIGN
    return ([(1, e)], [(0, -e)], [(3, d)], [(2, -d)])


def make_phi(pol: Polarization, direction: str) -> MorphismH1:
    """Polarization morphism on degree one.

    ``direction`` is "A->Ah" (contraction with lambda) or "Ah->A"
    (contraction with the dual generator).  Composing the two directions
    gives multiplication by -chi(lambda) on degree one.
    """
    if pol.degenerate:
        raise ValueError("degenerate polarization: d*e = 0")
    if direction == "A->Ah":
        return MorphismH1(SP_A, SP_AH, _phi_rows(pol))
    if direction == "Ah->A":
        return MorphismH1(SP_AH, SP_A, _phi_hat_rows(pol))
    raise ValueError(f"unknown direction {direction!r}")


def factorwise(source: Space, target: Space, assignments) -> MorphismH1:
    """Product of per-factor maps.

    ``assignments[t]`` is ``(source_position, local_rows_or_None)``; None
    means the identity between matching factors, otherwise four local rows
    of ``(local_source_index, scalar)`` pairs.
    """
    rows = []
    for t_pos in range(len(target.factors)):
        s_pos, local = assignments[t_pos]
        s_off = source.factor_range(s_pos).start
        if local is None:
            for i in range(4):
                rows.append([(s_off + i, 1)])
        else:
            for row in local:
                rows.append([(s_off + i, c) for i, c in row])
    return MorphismH1(source, target, rows)


def one_times_phi(pol: Polarization) -> MorphismH1:
    """(1 x Phi_lambda): AxA -> AxAh, identity on the first factor."""
    return factorwise(SP_AxA, SP_AxAH, [(0, None), (1, _phi_rows(pol))])


def one_times_phi_hat(pol: Polarization) -> MorphismH1:
    """(1 x Phi_hat): AxAh -> AxA, identity on the first factor."""
    return factorwise(SP_AxAH, SP_AxA, [(0, None), (1, _phi_hat_rows(pol))])


def f_map(pol: Polarization) -> MorphismH1:
    """f = m o (1 x Phi_hat): AxAh -> A, (x, y) -> x + Phi_hat(y)."""
    m = addition(SP_AxA, 0, 1, SP_A)
    return m.after(one_times_phi_hat(pol))


# -- Fourier-Mukai transform --------------------------------------------------


@lru_cache(maxsize=None)
def _fm_kernel(reverse: bool) -> ExteriorClass:
    sp = SP_AHxA if reverse else SP_AxAH
    return exp_even(poincare_class(sp, 0, 1))


def fm_transform(c: ExteriorClass) -> ExteriorClass:
    """Cohomological Fourier-Mukai transform of an even class on A.

    Computes the fiber integral over A of (pullback of c) ^ exp(c1(P)).
    Degree 0 goes to degree 4, degree 4 to degree 0, degree 2 to degree 2.
    """
    if c.space != SP_A:
        raise ValueError("fm_transform expects a class on the A space")
    _require_even(c)
    pulled = projection(SP_AxAH, (0,), SP_A).pullback(c)
    return fiber_integrate(wedge(pulled, _fm_kernel(False)), 0)


def fm_transform_back(c: ExteriorClass) -> ExteriorClass:
    """Transform with the transposed Poincare kernel, from Ah back to A."""
    if c.space != SP_AH:
        raise ValueError("fm_transform_back expects a class on the Ah space")
    _require_even(c)
    pulled = projection(SP_AHxA, (0,), SP_AH).pullback(c)
    return fiber_integrate(wedge(pulled, _fm_kernel(True)), 0)


def _require_even(c: ExteriorClass):
    for deg in c.degrees():
        if deg % 2:
            raise ValueError("transform defined on even classes only")


def lambda_hat(pol: Polarization) -> ExteriorClass:
    """Degree-two part of fm(lambda); equals -(d f3^f4 + e f1^f2)."""
    return fm_transform(polarization_class(SP_A, 0, pol)).part(2)


def hat_of(c2: ExteriorClass) -> ExteriorClass:
    """Degree-two Fourier-Mukai image of a degree-two class on A."""
    return fm_transform(c2).part(2)


# -- pairing ------------------------------------------------------------------


def mukai_pair(x: ExteriorClass, y: ExteriorClass) -> Scalar:
    """Mukai pairing of even classes: ∫(x2 y2 - x0 y4 - x4 y0)."""
    if x.space != y.space or len(x.space.factors) != 1:
        raise ValueError("pairing needs two classes on one four-torus")
    x0, y0 = x.coefficient(()), y.coefficient(())
    x4, y4 = integrate(x), integrate(y)
    mid = integrate(wedge(x.part(2), y.part(2)))
    return mid - x0 * y4 - x4 * y0
