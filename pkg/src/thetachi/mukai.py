"""Mukai-lattice arithmetic for a polarized abelian surface of Picard rank one.

Vectors are triples (rank, k, chi) with first Chern class k*H, where H is
the ample generator with H^2 = 2n.  The pairing of x and y is
``2n kx ky - rx chi_y - chi_x ry``; half the self-pairing of v is the
dimension invariant d_v.

Conventions (also printed by the CLI banner):

* the product of the dual surface and the Hilbert scheme of n' points is
  represented by v = (1, 0, -n'), so d_v = n';
* the Fourier-Mukai transform of (r, k, chi) is (chi, -k, r) in the basis
  given by the dual polarization H_hat = -lambda_hat(H); the closed form
  is checked against the exterior-algebra engine transform.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd

from . import abelian
from .abelian import Polarization, SP_A, SP_AH


class LatticeError(ValueError):
    """Incompatible vectors (side or ambient lattice mismatch)."""


SIDE_A = "A"
SIDE_AH = "Ah"


@dataclass(frozen=True)
class NSClass:
    """k times the polarization generator H, with H^2 = 2n."""

    k: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("ambient n must be a positive integer")

    def square(self) -> int:
        return 2 * self.n * self.k * self.k

    def dot(self, other: "NSClass") -> int:
        if self.n != other.n:
            raise LatticeError("NS classes in different lattices")
        return 2 * self.n * self.k * other.k


@dataclass(frozen=True)
class MukaiVector:
    r: int
    k: int
    chi: int
    n: int
    side: str = SIDE_A

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("ambient n must be a positive integer")
        if self.side not in (SIDE_A, SIDE_AH):
            raise ValueError(f"side must be {SIDE_A!r} or {SIDE_AH!r}")

    @property
    def c1(self) -> NSClass:
        return NSClass(self.k, self.n)

    def dual(self) -> "MukaiVector":
        return MukaiVector(self.r, -self.k, self.chi, self.n, self.side)

    def text(self) -> str:
        return f"{self.r},{self.k},{self.chi}"

    def to_json_dict(self) -> dict:
        return {
            "r": str(self.r),
            "k": str(self.k),
            "chi": str(self.chi),
            "n": str(self.n),
        }

    @staticmethod
    def from_json(blob: str, side: str = SIDE_A) -> "MukaiVector":
        data = json.loads(blob)
        return MukaiVector(
            int(data["r"]), int(data["k"]), int(data["chi"]), int(data["n"]), side
        )


def parse_vector(text: str, n: int, side: str = SIDE_A) -> MukaiVector:
    """Parse "r,k,chi" with the ambient n supplied separately."""
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"expected 'r,k,chi', got {text!r}")
    r, k, chi = (int(p.strip()) for p in parts)
    return MukaiVector(r, k, chi, n, side)


def _check_compatible(x: MukaiVector, y: MukaiVector):
    if x.side != y.side:
        raise LatticeError(f"vectors on different sides: {x.side} vs {y.side}")
    if x.n != y.n:
        raise LatticeError(f"vectors with different ambient n: {x.n} vs {y.n}")


def mukai_pairing(x: MukaiVector, y: MukaiVector) -> int:
    _check_compatible(x, y)
    return 2 * x.n * x.k * y.k - x.r * y.chi - x.chi * y.r


def dv(v: MukaiVector) -> int:
    """Half the self-pairing; always an integer here."""
    pairing = mukai_pairing(v, v)
    assert pairing % 2 == 0
    return pairing // 2


def euler_chi_tensor(v: MukaiVector, w: MukaiVector) -> int:
    """Euler pairing of a tensor product: rw*chi_v + 2n kv kw + rv*chi_w.

    Equals -<v_dual, w> where v_dual negates the first Chern class.
    """
    _check_compatible(v, w)
    return w.r * v.chi + 2 * v.n * v.k * w.k + v.r * w.chi


def c1_tensor(v: MukaiVector, w: MukaiVector) -> NSClass:
    _check_compatible(v, w)
    return NSClass(v.r * w.k + w.r * v.k, v.n)


def fm_vector(v: MukaiVector) -> MukaiVector:
    """Closed-form Fourier-Mukai transform: (r, k, chi) -> (chi, -k, r).

    The sign of the middle component reflects the H_hat convention; it is
    validated componentwise against the engine transform.
    """
    other = SIDE_AH if v.side == SIDE_A else SIDE_A
    return MukaiVector(v.chi, -v.k, v.r, v.n, other)


def fm_vector_via_engine(v: MukaiVector) -> MukaiVector:
    """Engine oracle: transform r + k*lambda + chi*omega and read it back."""
    pol = Polarization(1, v.n)
    if v.side == SIDE_A:
        sp, transform = SP_A, abelian.fm_transform
        c1 = abelian.polarization_class(sp, 0, pol)
    else:
        sp, transform = SP_AH, abelian.fm_transform_back
        c1 = abelian.dual_polarization_class(sp, 0, pol)
    cls = abelian.mukai_class(sp, 0, v.r, c1.scaled(v.k), v.chi)
    image = transform(cls)

    other = SIDE_AH if v.side == SIDE_A else SIDE_A
    r_hat = image.coefficient(())
    chi_hat = abelian.integrate(image)
    if other == SIDE_AH:
        generator = abelian.dual_polarization_class(SP_AH, 0, pol)
    else:
        generator = abelian.polarization_class(SP_A, 0, pol)
    two = image.part(2)
    # solve two == k_hat * generator, requiring an exact integer match
    k_hat = two.coefficient((2, 3)) if other == SIDE_AH else two.coefficient((0, 1))
    if not isinstance(k_hat, int) or two != generator.scaled(k_hat):
        raise LatticeError(f"transform of {v} left the rank-one lattice: {two}")
    if not isinstance(r_hat, int) or not isinstance(chi_hat, int):
        raise LatticeError(f"non-integer transform components for {v}")
    return MukaiVector(r_hat, k_hat, chi_hat, v.n, other)


@dataclass(frozen=True)
class AdmissibilityReport:
    """Primitivity and positivity of a vector, plus the pairing sign with w.

    ``h2_vanishing_direction`` is the sign of c1(v (x) w) . H, the quantity
    whose positivity guarantees vanishing of the top cohomology of the
    tensor product; None when no second vector was supplied.
    """

    primitive: bool
    positive: bool
    h2_vanishing_direction: int | None = None

    def to_json_dict(self) -> dict:
        out = {
            "primitive": self.primitive,
            "positive": self.positive,
        }
        if self.h2_vanishing_direction is not None:
            out["h2_vanishing_direction"] = str(self.h2_vanishing_direction)
        return out


def is_primitive(v: MukaiVector) -> bool:
    return gcd(gcd(abs(v.r), abs(v.k)), abs(v.chi)) == 1


def is_positive(v: MukaiVector) -> bool:
    """Positive rank, or rank zero with effective c1, chi != 0, <v,v> not 0 or 4."""
    if v.r > 0:
        return True
    if v.r != 0:
        return False
    return v.k > 0 and v.chi != 0 and mukai_pairing(v, v) not in (0, 4)


def check_assumptions(v: MukaiVector, w: MukaiVector | None = None) -> AdmissibilityReport:
    direction = None
    if w is not None:
        dot = 2 * v.n * (v.r * w.k + w.r * v.k)
        direction = (dot > 0) - (dot < 0)
    return AdmissibilityReport(is_primitive(v), is_positive(v), direction)
