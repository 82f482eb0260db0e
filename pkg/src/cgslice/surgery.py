"""First homology of surgered 3-manifolds from linking-framing matrices."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .linalg import IntMatrix, smith_normal_form


@dataclass(frozen=True)
class FramedLinkPresentation:
    """Symmetric linking-framing matrix; diagonal = framings, off-diagonal = linking numbers."""

    L: IntMatrix
    labels: tuple[str, ...]

    def __post_init__(self):
        if self.L.rows < 1 or not self.L.is_square:
            raise ValueError("linking-framing matrix must be square with dimension >= 1")
        if self.L != self.L.T:
            raise ValueError("linking-framing matrix must be symmetric")
        if len(self.labels) != self.L.rows or len(set(self.labels)) != len(self.labels):
            raise ValueError("need one distinct label per component")


@dataclass(frozen=True)
class AbelianGroupWithGens:
    """A finitely generated abelian group Z/d_1 + ... + Z/d_k (0 meaning Z).

    ``expressions[g]`` gives the coordinates of generator ``g`` in the
    invariant-factor basis, reduced modulo each finite factor.
    """

    factors: tuple[int, ...]
    expressions: dict[str, tuple[int, ...]]

    @property
    def order(self) -> int:
        """Group order, 0 when infinite."""
        out = 1
        for f in self.factors:
            out *= f
        return out

    @property
    def is_trivial(self) -> bool:
        return not self.factors

    @property
    def is_cyclic(self) -> bool:
        return len(self.factors) <= 1

    def element_order(self, coords: Sequence[int]) -> int:
        """Order of the element with the given coordinates (0 if infinite)."""
        out = 1
        for c, f in zip(coords, self.factors):
            if f == 0:
                if c:
                    return 0
                continue
            k = f // gcd(f, c)
            out = out * k // gcd(out, k)
        return out

    def generator_order(self, label: str) -> int:
        return self.element_order(self.expressions[label])

    def __str__(self) -> str:
        if not self.factors:
            return "0"
        return " + ".join("Z" if f == 0 else f"Z/{f}" for f in self.factors)


def cokernel(M: IntMatrix, labels: Iterable[str] | None = None) -> AbelianGroupWithGens:
    """Z^rows / image(M) with each standard generator expressed in the Smith basis."""
    labels = tuple(labels) if labels is not None else tuple(f"e{i}" for i in range(M.rows))
    snf = smith_normal_form(M)
    n = M.rows
    diag = snf.diagonal + [0] * (n - min(M.rows, M.cols))
    keep = [i for i, f in enumerate(diag) if f != 1]
    factors = tuple(diag[i] for i in keep)
    expressions = {}
    for g, label in enumerate(labels):
        coords = []
        for i in keep:
            c = snf.U[i, g]
            coords.append(c % diag[i] if diag[i] else c)
        expressions[label] = tuple(coords)
    return AbelianGroupWithGens(factors, expressions)


def h1_of_presentation(P: FramedLinkPresentation) -> AbelianGroupWithGens:
    return cokernel(P.L, P.labels)


def boundary_presentation(w: int, f: int) -> FramedLinkPresentation:
    """f-surgery on K together with 0-surgery on alpha, lk(K, alpha) = w.

    The relations read f*mu_K + w*H = 0 and w*mu_K = 0.
    """
    if w == 0:
        raise ValueError("winding number must be nonzero")
    return FramedLinkPresentation(IntMatrix.from_rows([[f, w], [w, 0]]), ("mu_K", "H"))


def framing_constraint(w: int, lam: int) -> int:
    """Framing induced by a slice disk whose Hopf-disk intersection number is lam."""
    return -2 * w * lam


def admissible_framings(w: int, lambdas: Iterable[int], d: int | None = None) -> list[tuple[int, int, str | None]]:
    """(lam, f, branch) for each lam; branch is 'gcd=1' / 'gcd!=1' relative to d."""
    if w == 0:
        raise ValueError("winding number must be nonzero")
    out = []
    for lam in lambdas:
        branch = None
        if d is not None:
            branch = "gcd=1" if gcd(lam, d) == 1 else "gcd!=1"
        out.append((lam, framing_constraint(w, lam), branch))
    return out


def slice_exterior_h1(w: int) -> AbelianGroupWithGens:
    """H_1 of a slice-disk exterior: Z/w generated by mu_K."""
    if w == 0:
        raise ValueError("winding number must be nonzero")
    w = abs(w)
    if w == 1:
        return AbelianGroupWithGens((), {"mu_K": ()})
    return AbelianGroupWithGens((w,), {"mu_K": (1,)})
