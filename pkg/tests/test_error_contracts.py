"""Error clauses of the public contracts: wrong spaces, bad factors,
degenerate inputs, and malformed construction all fail loudly."""

import pytest

from thetachi.abelian import (
    Polarization,
    SP_A,
    SP_AH,
    fm_transform,
    fm_transform_back,
    make_phi,
    two_form,
)
from thetachi.exterior import (
    ExteriorClass,
    Factor,
    MorphismH1,
    Space,
    SpaceMismatch,
)
from thetachi.formulas import FormulaError, chi_k3_reference
from thetachi.mukai import NSClass
from thetachi.poly import Poly


def test_poly_error_paths():
    x = Poly.var("x")
    with pytest.raises(ValueError):
        x ** -1
    with pytest.raises(TypeError):
        x / (x + 1)
    # dividing by a constant polynomial is allowed
    assert (2 * x) / Poly.const(2) == x


def test_space_construction_errors():
    with pytest.raises(ValueError):
        Space((Factor("A", "X"), Factor("A", "X")))
    with pytest.raises(ValueError):
        Factor("B", "X").generator_names()


def test_class_construction_errors():
    with pytest.raises(IndexError):
        ExteriorClass.generator(SP_A, 4)
    with pytest.raises(SpaceMismatch):
        ExteriorClass(SP_A, {(0, 9): 1})
    assert ExteriorClass.monomial(SP_A, (1, 1)).is_zero  # repeated index


def test_morphism_construction_errors():
    with pytest.raises(SpaceMismatch):
        MorphismH1(SP_A, SP_AH, [[(0, 1)]])  # wrong row count
    with pytest.raises(SpaceMismatch):
        MorphismH1(SP_A, SP_AH, [[(9, 1)], [(1, 1)], [(2, 1)], [(3, 1)]])
    phi = make_phi(Polarization(1, 1), "A->Ah")
    psi = make_phi(Polarization(1, 1), "A->Ah")
    with pytest.raises(SpaceMismatch):
        phi.after(psi)  # Ah target cannot feed an A source


def test_atlas_errors():
    with pytest.raises(ValueError):
        make_phi(Polarization(1, 1), "sideways")
    with pytest.raises(ValueError):
        two_form(SP_A, 0, {(1, 0): 1})
    with pytest.raises(ValueError):
        fm_transform(ExteriorClass.unit(SP_AH))
    with pytest.raises(ValueError):
        fm_transform_back(ExteriorClass.unit(SP_A))


def test_lattice_and_formula_guards():
    with pytest.raises(ValueError):
        NSClass(1, 0)
    with pytest.raises(FormulaError):
        chi_k3_reference(-2, 5)
