"""Seifert-matrix model of knots in S^3, the generator catalog, and knot operations.

Sign convention: the right-handed trefoil has Seifert matrix [[-1, 1], [0, -1]]
and classical signature -2.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .linalg import IntMatrix, block_components, submatrix


class UnknownKnotError(ValueError):
    pass


@dataclass(frozen=True)
class SeifertMatrix:
    A: IntMatrix
    name: str | None = None

    def __post_init__(self):
        if not self.A.is_square or self.A.rows % 2:
            raise ValueError(f"Seifert matrix must be square of even size, got {self.A.rows}x{self.A.cols}")
        skew = self.A - self.A.T
        det = 1
        for idx in block_components(self.A):
            det *= submatrix(skew, idx).det()
        if det != 1:
            raise ValueError("not a knot Seifert matrix: det(A - A^T) != 1")

    @classmethod
    def from_rows(cls, rows, name: str | None = None) -> "SeifertMatrix":
        rows = list(rows)
        return cls(IntMatrix.from_rows(rows, len(rows)), name)

    @property
    def genus(self) -> int:
        return self.A.rows // 2

    @property
    def size(self) -> int:
        return self.A.rows

    def symmetrized(self) -> IntMatrix:
        """A + A^T."""
        return self.A + self.A.T

    def same_matrix(self, other: "SeifertMatrix") -> bool:
        return self.A == other.A

    def __str__(self) -> str:
        return self.name or f"SeifertMatrix({self.A.to_rows()})"


def _band(n: int) -> IntMatrix:
    """(n-1)x(n-1) upper bidiagonal: 1 on the diagonal, -1 above it."""
    m = n - 1
    return IntMatrix.from_rows(
        [[1 if i == j else -1 if j == i + 1 else 0 for j in range(m)] for i in range(m)], m)


def _kron(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    rows = []
    for i in range(a.rows):
        for k in range(b.rows):
            rows.append([a[i, j] * b[k, l] for j in range(a.cols) for l in range(b.cols)])
    return IntMatrix.from_rows(rows, a.cols * b.cols)


def _torus(p: int, q: int) -> IntMatrix:
    # Seifert form of the Milnor fibre of x^p + y^q, negated to the fixed convention
    return -_kron(_band(p), _band(q))


def unknot() -> SeifertMatrix:
    return SeifertMatrix(IntMatrix.zeros(0, 0), "unknot")


def torus_knot_2k(k: int, handedness: str = "right") -> SeifertMatrix:
    """Standard (k-1)x(k-1) Seifert matrix of the (2, k) torus knot."""
    if isinstance(k, bool) or not isinstance(k, int) or k < 3 or k % 2 == 0:
        raise ValueError(f"T(2,k) needs odd k >= 3, got {k!r}")
    hand = _handedness(handedness)
    right = SeifertMatrix(_torus(2, k), f"T(2,{k})_r")
    if hand == "r":
        return right
    return SeifertMatrix(mirror(right).A, f"T(2,{k})_l")


def figure_eight() -> SeifertMatrix:
    return SeifertMatrix.from_rows([[1, 1], [0, -1]], "fig8")


def knot_10_124(handedness: str = "right") -> SeifertMatrix:
    """10_124, realized as the (3, 5) torus knot (8x8 Seifert matrix)."""
    hand = _handedness(handedness)
    right = SeifertMatrix(_torus(3, 5), "10_124_r")
    if hand == "r":
        return right
    return SeifertMatrix(mirror(right).A, "10_124_l")


def mirror(J: SeifertMatrix) -> SeifertMatrix:
    return SeifertMatrix(-J.A.T, f"m({J.name})" if J.name else None)


def reverse(J: SeifertMatrix) -> SeifertMatrix:
    return SeifertMatrix(J.A.T, f"r({J.name})" if J.name else None)


def connected_sum(*knots: SeifertMatrix) -> SeifertMatrix:
    parts = [J for J in knots if J.size]
    names = [J.name for J in knots]
    name = " # ".join(n for n in names if n) if all(names) else None
    if not parts:
        return unknot() if name is None else SeifertMatrix(IntMatrix.zeros(0, 0), name)
    if len(parts) == 1 and len(knots) > 1 and parts[0].name:
        name = parts[0].name
    return SeifertMatrix(IntMatrix.block_diagonal(J.A for J in parts), name)


def multiple(J: SeifertMatrix, m: int) -> SeifertMatrix:
    """Connected sum of m copies of J."""
    if m < 0:
        raise ValueError("multiple needs m >= 0")
    if m == 0:
        return unknot()
    K = SeifertMatrix(IntMatrix.block_diagonal([J.A] * m))
    return SeifertMatrix(K.A, f"{m}*{J.name}" if J.name else None)


def _handedness(h: str) -> str:
    h = h.lower()
    if h in ("r", "right"):
        return "r"
    if h in ("l", "left"):
        return "l"
    raise ValueError(f"handedness must be right/left, got {h!r}")


CATALOG_NAMES = ("unknot", "trefoil_r", "trefoil_l", "fig8", "10_124_r", "10_124_l")


def catalog() -> dict[str, SeifertMatrix]:
    """Every named knot, plus T(2,k) for k in 5, 7, 9 of both handednesses."""
    out = {name: resolve_knot(name) for name in CATALOG_NAMES}
    for k in (5, 7, 9):
        for h in "rl":
            out[f"t2k:{k}:{h}"] = torus_knot_2k(k, h)
    return out


_T2K = re.compile(r"^t2k:(\d+):([rl])$")
_TERM = re.compile(r"^(?:(\d+)\*)?(.+)$")


def resolve_knot(spec: str) -> SeifertMatrix:
    """Resolve a catalog name, ``t2k:<k>:<r|l>``, a ``sum:`` expression or a JSON matrix."""
    spec = spec.strip()
    if spec == "unknot":
        return unknot()
    if spec == "trefoil_r":
        return SeifertMatrix(torus_knot_2k(3, "r").A, "trefoil_r")
    if spec == "trefoil_l":
        return SeifertMatrix(torus_knot_2k(3, "l").A, "trefoil_l")
    if spec == "fig8":
        return figure_eight()
    if spec == "10_124_r":
        return knot_10_124("r")
    if spec == "10_124_l":
        return knot_10_124("l")
    m = _T2K.match(spec)
    if m:
        k = int(m.group(1))
        try:
            K = torus_knot_2k(k, m.group(2))
        except ValueError as exc:
            raise UnknownKnotError(str(exc)) from None
        return SeifertMatrix(K.A, spec)
    if spec.startswith("sum:"):
        terms = [t.strip() for t in spec[4:].split("+") if t.strip()]
        if not terms:
            raise UnknownKnotError(f"empty sum expression {spec!r}")
        parts = []
        for t in terms:
            tm = _TERM.match(t)
            count = int(tm.group(1)) if tm.group(1) else 1
            if tm.group(2).startswith("sum:"):
                raise UnknownKnotError("nested sum expressions are not supported")
            parts.append(multiple(resolve_knot(tm.group(2)), count))
        K = connected_sum(*parts)
        return SeifertMatrix(K.A, spec)
    if spec.startswith("["):
        try:
            rows = json.loads(spec)
            return SeifertMatrix.from_rows(rows)
        except (json.JSONDecodeError, TypeError, ValueError) as exc:
            raise UnknownKnotError(f"invalid Seifert matrix {spec!r}: {exc}") from None
    raise UnknownKnotError(f"unknown knot {spec!r}")
