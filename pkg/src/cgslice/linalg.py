"""Exact integer and cyclotomic linear algebra.

Smith normal form with unimodular transforms, and the signature/nullity of
Hermitian matrices over cyclotomic fields with every sign decision certified.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .cyclotomic import Cyc, CyclotomicField, CyclotomicRepresentationError


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix, row-major, arbitrary precision."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{len(self.entries)} entries given for a {self.rows}x{self.cols} matrix")
        if not all(isinstance(e, int) and not isinstance(e, bool) for e in self.entries):
            raise TypeError("IntMatrix entries must be integers")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(e for r in rows for e in r))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def diagonal(cls, diag: Sequence[int], rows: int | None = None, cols: int | None = None) -> "IntMatrix":
        rows = len(diag) if rows is None else rows
        cols = len(diag) if cols is None else cols
        e = [0] * (rows * cols)
        for i, v in enumerate(diag):
            e[i * cols + i] = v
        return cls(rows, cols, tuple(e))

    @classmethod
    def block_diagonal(cls, blocks: Iterable["IntMatrix"]) -> "IntMatrix":
        blocks = list(blocks)
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        out = [[0] * m for _ in range(n)]
        r = c = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[r + i][c + j] = b[i, j]
            r += b.rows
            c += b.cols
        return cls(n, m, tuple(e for row in out for e in row))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows,
                         tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(-e for e in self.entries))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_shape(other)
        return IntMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_shape(other)
        return IntMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        a, b = self.to_rows(), other.to_rows()
        out = []
        for i in range(self.rows):
            ai = a[i]
            for j in range(other.cols):
                out.append(sum(ai[k] * b[k][j] for k in range(self.cols)))
        return IntMatrix(self.rows, other.cols, tuple(out))

    def _same_shape(self, other: "IntMatrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if not self.is_square:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = self.to_rows()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def __str__(self) -> str:
        return str(self.to_rows())


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ M @ V == D`` with U, V unimodular and D in Smith form."""

    D: IntMatrix
    U: IntMatrix
    V: IntMatrix

    @property
    def source_shape(self) -> tuple[int, int]:
        return self.D.rows, self.D.cols

    @property
    def diagonal(self) -> list[int]:
        return [self.D[i, i] for i in range(min(self.D.rows, self.D.cols))]


def smith_normal_form(M: IntMatrix) -> SmithDecomposition:
    """Smith normal form with transforms, minimal-|pivot| strategy."""
    n, m = M.rows, M.cols
    A = M.to_rows()
    U = IntMatrix.identity(n).to_rows()
    V = IntMatrix.identity(m).to_rows()

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for t in range(min(n, m)):
        while True:
            best = None
            for i in range(t, n):
                for j in range(t, m):
                    v = A[i][j]
                    if v and (best is None or abs(v) < abs(A[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = A[t][t]
            dirty = False
            for i in range(t + 1, n):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    dirty = dirty or A[i][t] != 0
            for j in range(t + 1, m):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    dirty = dirty or A[t][j] != 0
            if dirty:
                continue
            bad = next(((i, j) for i in range(t + 1, n) for j in range(t + 1, m)
                        if A[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if t < n and A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]

    return SmithDecomposition(
        D=IntMatrix.from_rows(A, m),
        U=IntMatrix.from_rows(U, n),
        V=IntMatrix.from_rows(V, m),
    )


@dataclass(frozen=True)
class CyclotomicHermitian:
    """Hermitian matrix over Q(zeta_d); conjugation is zeta -> zeta**(d-1)."""

    d: int
    entries: tuple[tuple[Cyc, ...], ...]

    def __post_init__(self):
        field = CyclotomicField(self.d)
        n = len(self.entries)
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise CyclotomicRepresentationError("matrix is not square")
            for e in row:
                if not isinstance(e, Cyc) or e.field is not field:
                    raise CyclotomicRepresentationError(
                        f"entry {e!r} is not an element of Q(zeta_{self.d})")
                if len(e.num) != field.degree:
                    raise CyclotomicRepresentationError(
                        f"entry {e!r} is not a residue modulo Phi_{self.d}")
        for i in range(n):
            for j in range(i, n):
                if self.entries[i][j].conjugate() != self.entries[j][i]:
                    raise CyclotomicRepresentationError(f"matrix is not Hermitian at ({i}, {j})")

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def field(self) -> CyclotomicField:
        return CyclotomicField(self.d)

    @classmethod
    def from_residues(cls, d: int, rows) -> "CyclotomicHermitian":
        """Build from entries given as coefficient lists or ``(coeffs, den)`` pairs.

        Coefficients are checked, not reduced: a residue of degree >= phi(d)
        raises :class:`CyclotomicRepresentationError`.
        """
        field = CyclotomicField(d)
        out = []
        for row in rows:
            r = []
            for e in row:
                if isinstance(e, int):
                    r.append(field.from_int(e))
                elif isinstance(e, tuple) and len(e) == 2 and not isinstance(e[0], int):
                    r.append(field.from_residue(e[0], e[1]))
                else:
                    r.append(field.from_residue(e))
            out.append(tuple(r))
        return cls(d, tuple(out))

    @classmethod
    def from_integers(cls, d: int, rows: Sequence[Sequence[int]]) -> "CyclotomicHermitian":
        field = CyclotomicField(d)
        return cls(d, tuple(tuple(field.from_int(int(e)) for e in row) for row in rows))

    def __neg__(self) -> "CyclotomicHermitian":
        return CyclotomicHermitian(self.d, tuple(tuple(-e for e in row) for row in self.entries))

    def congruent(self, P: Sequence[Sequence[Cyc]]) -> "CyclotomicHermitian":
        """``P^H @ H @ P``."""
        n = self.n
        H = self.entries
        zero = self.field.zero()
        HP = [[sum((H[i][k] * P[k][j] for k in range(n)), zero) for j in range(n)] for i in range(n)]
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                row.append(sum((P[k][i].conjugate() * HP[k][j] for k in range(n)), zero))
            out.append(tuple(row))
        return CyclotomicHermitian(self.d, tuple(out))

    def to_complex(self, dps: int = 30):
        return [[e.to_complex(dps) for e in row] for row in self.entries]


def certified_signature(H: CyclotomicHermitian) -> tuple[int, int]:
    """Signature and nullity of H via Hermitian congruence diagonalization.

    Pivots are real field elements; each sign is decided by an exact
    zero-test on the canonical residue followed by a rigorous interval
    enclosure (see :meth:`Cyc.sign`).
    """
    pivots, nullity = congruence_pivots(H)
    return sum(p.sign() for p in pivots), nullity


def congruence_pivots(H: CyclotomicHermitian) -> tuple[tuple[Cyc, ...], int]:
    """Nonzero real pivots of a congruence diagonalization of H, and the nullity.

    Pivot choices depend only on exact zero-tests, which every Galois map
    preserves, so ``p.galois(k)`` are the pivots of ``H.galois(k)``.
    """
    return _pivot_rows([list(r) for r in H.entries])


def _pivot_rows(A: list[list[Cyc]]) -> tuple[tuple[Cyc, ...], int]:
    pivots = []
    size = len(A)
    while size:
        k = next((i for i in range(size) if not A[i][i].is_zero()), None)
        if k is None:
            pair = next(((i, j) for i in range(size) for j in range(i + 1, size)
                         if not A[i][j].is_zero()), None)
            if pair is None:
                break
            i, j = pair
            # v_i <- v_i + c v_j with c = a_ij gives diagonal 2|a_ij|^2 > 0
            c = A[i][j]
            cbar = c.conjugate()
            A[i] = [a + c * b for a, b in zip(A[i], A[j])]
            for row in A:
                row[i] = row[i] + row[j] * cbar
            k = i
        # move pivot to the end of the active block
        last = size - 1
        A[k], A[last] = A[last], A[k]
        for row in A:
            row[k], row[last] = row[last], row[k]
        piv = A[last][last]
        pivots.append(piv)
        inv = piv.inverse()
        col = [A[i][last] for i in range(last)]
        prow = A[last]
        for i in range(last):
            ci = col[i]
            if ci.is_zero():
                continue
            f = ci * inv
            Ai = A[i]
            for j in range(last):
                if not prow[j].is_zero():
                    Ai[j] = Ai[j] - f * prow[j]
        size = last
    return tuple(pivots), size


def block_components(M: IntMatrix) -> list[list[int]]:
    """Index sets of the connected components of the support graph of M + M^T."""
    n = M.rows
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(n):
        for j in range(i + 1, n):
            if M[i, j] or M[j, i]:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def submatrix(M: IntMatrix, idx: Sequence[int]) -> IntMatrix:
    return IntMatrix.from_rows([[M[i, j] for j in idx] for i in idx], len(idx))

