"""Double branched covers: determinant, H_1, linking form and the Moebius-band test."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .knots import SeifertMatrix
from .linalg import IntMatrix, smith_normal_form
from .surgery import AbelianGroupWithGens, cokernel


class Inapplicable(ValueError):
    pass


class MoebiusVerdict(enum.Enum):
    OBSTRUCTED = "Obstructed"
    NOT_OBSTRUCTED = "NotObstructed"
    INAPPLICABLE = "Inapplicable"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class LinkingFormData:
    """Cyclic H_1 of order n with lk(g, g) mod 1 for the generator ``g``.

    ``generator`` holds the coordinates of g in the basis of Z^{2g} that
    A + A^T presents.
    """

    order: int
    self_link: Fraction
    generator: tuple[int, ...]
    cyclic: bool = True

    def __post_init__(self):
        if not 0 <= self.self_link < 1:
            raise ValueError("self_link must lie in [0, 1)")
        if (self.self_link * self.order).denominator != 1:
            raise ValueError("self_link must be a multiple of 1/n")

    def values(self) -> set[Fraction]:
        """lk(u g, u g) over all units u mod n."""
        n = self.order
        return {(u * u * self.self_link) % 1 for u in range(1, n) if gcd(u, n) == 1}


def determinant(J: SeifertMatrix) -> int:
    return abs(J.symmetrized().det())


def dbc_homology(J: SeifertMatrix) -> AbelianGroupWithGens:
    """H_1 of the double branched cover, presented by A + A^T."""
    return cokernel(J.symmetrized())


def _rational_inverse(M: IntMatrix) -> list[list[Fraction]]:
    n = M.rows
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(M.to_rows())]
    for c in range(n):
        p = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


def _unimodular_inverse(U: IntMatrix) -> IntMatrix:
    inv = _rational_inverse(U)
    assert all(x.denominator == 1 for row in inv for x in row)
    return IntMatrix.from_rows([[int(x) for x in row] for row in inv], U.rows)


def linking_form_on(G: IntMatrix) -> LinkingFormData:
    """Linking form -G^{-1} mod 1 on coker(G), G symmetric with cyclic cokernel."""
    snf = smith_normal_form(G)
    diag = snf.diagonal
    nontrivial = [i for i, f in enumerate(diag) if f != 1]
    if len(nontrivial) != 1:
        raise Inapplicable(f"H_1 is not cyclic of finite order > 1 (factors {[diag[i] for i in nontrivial]})")
    k = nontrivial[0]
    n = diag[k]
    if n == 0:
        raise Inapplicable("H_1 is infinite")
    # generator: U^{-1} e_k, since U carries the standard basis to Smith coordinates
    Uinv = _unimodular_inverse(snf.U)
    g = [Uinv[i, k] for i in range(G.rows)]
    Ginv = _rational_inverse(G)
    val = -sum(g[i] * Ginv[i][j] * g[j] for i in range(G.rows) for j in range(G.rows))
    return LinkingFormData(n, val % 1, tuple(g))


def linking_form(J: SeifertMatrix) -> LinkingFormData:
    return linking_form_on(J.symmetrized())


def prime_factorization(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    q = 2
    while q * q <= n:
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
        q += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def moebius_obstruction(J: SeifertMatrix) -> MoebiusVerdict:
    """Obstructed certifies that J bounds no locally flat Moebius band in B^4."""
    try:
        form = linking_form(J)
    except Inapplicable:
        return MoebiusVerdict.INAPPLICABLE
    n = form.order
    if any(e % 2 == 0 for e in prime_factorization(n).values()):
        return MoebiusVerdict.INAPPLICABLE
    targets = {Fraction(1, n), Fraction(n - 1, n)}
    if form.values() & targets:
        return MoebiusVerdict.NOT_OBSTRUCTED
    return MoebiusVerdict.OBSTRUCTED


def nonorientable_genus_upper_bound(w: int) -> int:
    """Upper bound k on the (topological) nonorientable 4-genus when |w| = 2k + 1."""
    if w % 2 == 0:
        raise ValueError(f"winding number must be odd, got {w}")
    return (abs(w) - 1) // 2
