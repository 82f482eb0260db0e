import pytest

from cgslice.linalg import IntMatrix
from cgslice.surgery import (
    FramedLinkPresentation,
    admissible_framings,
    boundary_presentation,
    cokernel,
    framing_constraint,
    h1_of_presentation,
    slice_exterior_h1,
)


def test_framing_constraint():
    assert framing_constraint(5, 1) == -10
    assert framing_constraint(3, -2) == 12


@pytest.mark.parametrize("w, f, factors, mu_order", [
    (5, -10, (5, 5), 5),
    (5, 1, (25,), 5),
    (1, -2, (), 1),
    (6, 0, (6, 6), 6),
])
def test_boundary_h1(w, f, factors, mu_order):
    G = h1_of_presentation(boundary_presentation(w, f))
    assert G.factors == factors
    assert G.generator_order("mu_K") == mu_order


def test_boundary_h1_generators():
    G = h1_of_presentation(boundary_presentation(5, -10))
    assert G.expressions == {"mu_K": (1, 0), "H": (0, 1)}
    assert str(G) == "Z/5 + Z/5"
    assert h1_of_presentation(boundary_presentation(1, -2)).is_trivial


def test_sweep_all_windings():
    for w in range(1, 51):
        for lam in range(-5, 6):
            G = h1_of_presentation(boundary_presentation(w, framing_constraint(w, lam)))
            assert G.factors == (() if w == 1 else (w, w))
            assert G.generator_order("mu_K") == w and G.generator_order("H") == w


def test_free_part():
    G = cokernel(IntMatrix.from_rows([[0]]), ["x"])
    assert G.factors == (0,) and G.order == 0
    assert str(G) == "Z"


def test_presentation_validation():
    with pytest.raises(ValueError):
        FramedLinkPresentation(IntMatrix.from_rows([[1, 2], [3, 4]]), ("a", "b"))
    with pytest.raises(ValueError):
        FramedLinkPresentation(IntMatrix.from_rows([[1]]), ("a", "b"))
    with pytest.raises(ValueError):
        boundary_presentation(0, 1)


def test_admissible_framings_and_exterior():
    assert admissible_framings(5, [0, 1, 5], 5) == [(0, 0, "gcd!=1"), (1, -10, "gcd=1"), (5, -50, "gcd!=1")]
    E = slice_exterior_h1(5)
    assert E.factors == (5,) and E.generator_order("mu_K") == 5
    assert slice_exterior_h1(1).is_trivial
