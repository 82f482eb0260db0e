"""Independent numerical and brute-force oracles.

The oracle functions only see plain integer rows or complex matrices and
share no code with the exact engines, so agreement is a real check. The
random-matrix generator at the bottom builds inputs for both sides.
"""

from __future__ import annotations

import cmath
import itertools
import random
from math import gcd

import mpmath
import numpy as np


class OracleUndecided(RuntimeError):
    """The numerical enclosure could not separate an eigenvalue from zero."""


def _det(rows: list[list[int]]) -> int:
    n = len(rows)
    if n == 0:
        return 1
    # Laplace-free: exact via fractions-free Bareiss on a copy
    a = [list(r) for r in rows]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def invariant_factors_by_minors(rows: list[list[int]]) -> list[int]:
    """Invariant factors from gcds of k x k minors (determinantal divisors)."""
    n = len(rows)
    m = len(rows[0]) if rows else 0
    out = []
    prev = 1
    for k in range(1, min(n, m) + 1):
        g = 0
        for ri in itertools.combinations(range(n), k):
            for ci in itertools.combinations(range(m), k):
                g = gcd(g, _det([[rows[i][j] for j in ci] for i in ri]))
        if g == 0:
            out.extend([0] * (min(n, m) - k + 1))
            break
        out.append(g // prev)
        prev = g
    return out


def float_lt_signature(A: list[list[int]], d: int, p: int, tol: float = 1e-8) -> tuple[int, int]:
    """Signature/nullity of (1-w)A + (1-conj w)A^T by float64 eigvalsh.

    Raises OracleUndecided if an eigenvalue falls in the grey band
    [tol, 1e3 * tol] where the float answer is not trustworthy.
    """
    n = len(A)
    if n == 0:
        return 0, 0
    w = cmath.exp(2j * cmath.pi * p / d)
    M = np.array(A, dtype=float)
    H = (1 - w) * M + (1 - w.conjugate()) * M.T
    ev = np.linalg.eigvalsh(H)
    scale = max(1.0, float(np.abs(H).max()))
    if np.any((np.abs(ev) > tol * scale) & (np.abs(ev) < 1e3 * tol * scale)):
        raise OracleUndecided(f"eigenvalue near zero at ({d}, {p})")
    pos = int(np.sum(ev > 1e3 * tol * scale))
    neg = int(np.sum(ev < -1e3 * tol * scale))
    return pos - neg, n - pos - neg


def interval_signature(H: list[list[complex]], dps: int = 50) -> tuple[int, int]:
    """Eigenvalue signs of a Hermitian matrix at ``dps`` digits.

    Each computed eigenpair (lam, v) with residual r = |H v - lam v| / |v|
    encloses a true eigenvalue in [lam - r - e, lam + r + e], where e bounds
    the spectral shift from rounding the entries to ``dps`` digits (Weyl).
    An eigenvalue whose enclosure contains zero is counted as null only when
    it lies below 10**(-dps/2); otherwise the oracle gives up.
    """
    n = len(H)
    if n == 0:
        return 0, 0
    with mpmath.workdps(dps):
        M = mpmath.matrix(n, n)
        for i in range(n):
            for j in range(n):
                M[i, j] = mpmath.mpc(H[i][j])
        E, Q = mpmath.eighe(M)
        scale = max(mpmath.mpf(1), max(abs(M[i, j]) for i in range(n) for j in range(n)))
        e = n * scale * mpmath.mpf(10) ** (-(dps - 5))
        zero_band = mpmath.mpf(10) ** (-(dps // 2))
        pos = neg = null = 0
        for k in range(n):
            lam = E[k]
            v = Q[:, k]
            r = mpmath.norm(M * v - lam * v) / mpmath.norm(v) + e
            if lam - r > 0:
                pos += 1
            elif lam + r < 0:
                neg += 1
            elif abs(lam) + r < zero_band:
                null += 1
            else:
                raise OracleUndecided(f"eigenvalue {lam} with residual {r}")
    return pos - neg, null


def random_cyclotomic_hermitian(rng: random.Random, max_n: int = 6, max_d: int = 12):
    """A random Hermitian matrix over Q(zeta_d), n <= max_n, d <= max_d.

    Half the draws are congruent to a random diagonal (so singular cases
    occur); the rest have independent random upper triangles.
    """
    from .cyclotomic import CyclotomicField
    from .linalg import CyclotomicHermitian

    d = rng.randint(2, max_d)
    n = rng.randint(1, max_n)
    F = CyclotomicField(d)

    def rand_elt(span=3):
        return F.from_poly([rng.randint(-span, span) for _ in range(F.degree)], rng.choice((1, 1, 2, 3)))

    if rng.random() < 0.5:
        B = [[rand_elt(2) for _ in range(n)] for _ in range(n)]
        diag = [rng.randint(-3, 3) for _ in range(n)]
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = F.zero()
                for k in range(n):
                    if diag[k]:
                        acc = acc + B[k][i].conjugate() * B[k][j] * diag[k]
                row.append(acc)
            rows.append(tuple(row))
    else:
        rows = [[None] * n for _ in range(n)]
        for i in range(n):
            c = rand_elt()
            rows[i][i] = c + c.conjugate()
            for j in range(i + 1, n):
                e = rand_elt()
                rows[i][j] = e
                rows[j][i] = e.conjugate()
        rows = [tuple(r) for r in rows]
    return CyclotomicHermitian(d, tuple(rows))
