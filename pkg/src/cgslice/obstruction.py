"""Casson-Gordon non-sliceness certificates for the knots K_w(J) in S^1 x S^2.

The Casson-Gordon signature sigma(M_f(K_w(J)), chi) is never computed. For a
slice disk with framing f = -2 w lam it is confined to an open window built
from sigma_J(zeta), the correction term F and the C-complex bound
|sigma_{K_w(U) u alpha}| <= w - 1, while the embedding obstruction forces
|sigma(M_f, chi)| <= 1. A certificate records two primitive roots whose
windows leave [-1, 1] for every framing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .branched_cover import Inapplicable, prime_factorization
from .cyclotomic import RootOfUnity
from .knots import SeifertMatrix, connected_sum, multiple, torus_knot_2k
from .parallel import parallel_map
from .signatures import lt_signature


def is_prime_power(d: int) -> bool:
    return d >= 2 and len(prime_factorization(d)) == 1


def prime_power_divisors(w: int) -> list[int]:
    """Prime-power divisors d >= 2 of |w|, ascending."""
    w = abs(w)
    return [d for d in range(2, w + 1) if w % d == 0 and is_prime_power(d)]


# --- the correction term ---------------------------------------------------

def _check_n(d: int, n1: int, n2: int) -> None:
    if d < 2:
        raise ValueError(f"d must be >= 2, got {d}")
    for n in (n1, n2):
        if not 1 <= n <= d - 1:
            raise ValueError(f"n1, n2 must lie in [1, {d - 1}], got ({n1}, {n2})")


def F_value(a: int, f: int, d: int, n1: int, n2: int) -> Fraction:
    """-a + 2a(n1/d + n2/d - 2 n1 n2/d^2) + 2 (n2/d)(1 - n2/d) f, exactly."""
    _check_n(d, n1, n2)
    return Fraction(F_scaled(a, f, d, n1, n2), d * d)


def F_scaled(a: int, f: int, d: int, n1: int, n2: int) -> int:
    """d^2 * F(a, f, d, n1, n2), an integer."""
    return -a * d * d + 2 * a * (d * n1 + d * n2 - 2 * n1 * n2) + 2 * n2 * (d - n2) * f


def F_bounds(a: int, f: int) -> tuple[int, int]:
    """Open interval (-|a| + min(0, f), |a| + max(0, f)) confining F."""
    return -abs(a) + min(0, f), abs(a) + max(0, f)


@dataclass(frozen=True)
class FBoundCheck:
    a: int
    f: int
    d: int
    holds: bool
    points: int
    violations: tuple[tuple[int, int], ...]
    lower_margin: Fraction
    lower_at: tuple[int, int]
    upper_margin: Fraction
    upper_at: tuple[int, int]


def _F_grid(a: int, f: int, d: int) -> np.ndarray:
    if max(abs(a), abs(f), d) > 10**5:
        raise OverflowError("parameters too large for the int64 grid")
    n = np.arange(1, d, dtype=np.int64)
    n1, n2 = np.meshgrid(n, n, indexing="ij")
    return -a * d * d + 2 * a * (d * n1 + d * n2 - 2 * n1 * n2) + 2 * n2 * (d - n2) * f


def F_bound_exhaustive_check(a: int, f: int, d: int) -> FBoundCheck:
    """Check -|a| + min(0,f) < F < |a| + max(0,f) at every (n1, n2) in [1, d-1]^2.

    Works in exact integers scaled by d^2. Margins are distances to the two
    bounds; the (n1, n2) where each is smallest is reported.
    """
    if d < 2:
        raise ValueError(f"d must be >= 2, got {d}")
    if a == 0:
        raise ValueError("a must be nonzero")
    lo, hi = F_bounds(a, f)
    grid = _F_grid(a, f, d)
    low_gap = grid - lo * d * d
    high_gap = hi * d * d - grid
    bad = np.argwhere((low_gap <= 0) | (high_gap <= 0))
    i, j = np.unravel_index(int(np.argmin(low_gap)), low_gap.shape)
    k, l = np.unravel_index(int(np.argmin(high_gap)), high_gap.shape)
    return FBoundCheck(
        a=a, f=f, d=d,
        holds=len(bad) == 0,
        points=int(grid.size),
        violations=tuple((int(x) + 1, int(y) + 1) for x, y in bad),
        lower_margin=Fraction(int(low_gap[i, j]), d * d),
        lower_at=(int(i) + 1, int(j) + 1),
        upper_margin=Fraction(int(high_gap[k, l]), d * d),
        upper_at=(int(k) + 1, int(l) + 1),
    )


@dataclass(frozen=True)
class FSweepSummary:
    cells: int
    points: int
    violations: int
    min_margin: Fraction
    min_margin_at: tuple[int, int, int]


def _sweep_d(args) -> tuple[int, int, Fraction, tuple[int, int, int]]:
    d, a_values, f_values = args
    points = violations = 0
    best = None
    for a in a_values:
        for f in f_values:
            r = F_bound_exhaustive_check(a, f, d)
            points += r.points
            violations += len(r.violations)
            m = min(r.lower_margin, r.upper_margin)
            if best is None or m < best[0]:
                best = (m, (a, f, d))
    return points, violations, best[0], best[1]


def F_bound_sweep(a_values: Sequence[int], f_values: Sequence[int], d_values: Sequence[int],
                  threads: int = 1) -> FSweepSummary:
    """Exhaustive bound check over a grid of (a, f, d); ordered, deterministic reduction."""
    a_values = [a for a in a_values if a != 0]
    f_values = list(f_values)
    jobs = [(d, a_values, f_values) for d in d_values]
    results = parallel_map(_sweep_d, jobs, threads)
    points = sum(r[0] for r in results)
    violations = sum(r[1] for r in results)
    m, at = min(((r[2], r[3]) for r in results), key=lambda t: t[0])
    return FSweepSummary(len(a_values) * len(f_values) * len(jobs), points, violations, m, at)


# --- signature windows -----------------------------------------------------

@dataclass(frozen=True)
class SignatureWindow:
    """Open interval (lower, upper) containing sigma(M_f(K_w(J)), chi)."""

    lower: Fraction
    upper: Fraction

    def __post_init__(self):
        if not self.lower < self.upper:
            raise ValueError("empty signature window")

    def excludes_unit_interval(self) -> bool:
        """True when no value with |s| <= 1 lies in the open window."""
        return self.lower >= 1 or self.upper <= -1

    def closure_contains_unit_interval(self) -> bool:
        return self.lower <= -1 and self.upper >= 1

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    def __str__(self) -> str:
        return f"({self.lower}, {self.upper})"


def signature_window(w: int, f: int, sigma: int) -> SignatureWindow:
    """Window when gcd(lam, d) = 1."""
    if w < 1:
        raise ValueError("winding number must be positive")
    return SignatureWindow(Fraction(sigma + 1 - 2 * w + min(0, f)),
                           Fraction(sigma - 1 + 2 * w + max(0, f)))


def signature_window_mirrored(w: int, f: int, sigma: int) -> SignatureWindow:
    """Window when gcd(lam, d) != 1, after the handle slide and mirror."""
    if w < 1:
        raise ValueError("winding number must be positive")
    return SignatureWindow(Fraction(sigma + 1 - 2 * w - max(0, w - f)),
                           Fraction(sigma - 1 + 2 * w - min(0, w - f)))


@dataclass(frozen=True)
class CharacterData:
    """chi: mu_K -> zeta = e^{2 pi i p/d}, [H] - lam [mu_K] -> 1."""

    d: int
    p: int
    lam: int

    def __post_init__(self):
        if not is_prime_power(self.d):
            raise ValueError(f"d = {self.d} is not a prime power")
        if not (1 <= self.p <= self.d - 1 and gcd(self.p, self.d) == 1):
            raise ValueError(f"p = {self.p} is not a unit mod {self.d}")

    @property
    def coprime(self) -> bool:
        return gcd(self.lam, self.d) == 1

    @property
    def branch(self) -> str:
        return "coprime" if self.coprime else "noncoprime"

    def F_arguments(self, w: int, f: int) -> tuple[int, int, int, int, int]:
        """(a, f', d, n1, n2) at which the correction term is evaluated in this branch."""
        d, p = self.d, self.p
        if self.coprime:
            return w, f, d, p, (self.lam * p) % d
        return -w, w - f, d, d - p, (-p * (1 + self.lam)) % d


@dataclass(frozen=True)
class RootWindows:
    p: int
    sigma: int
    coprime: SignatureWindow
    mirrored: SignatureWindow
    F_args: tuple[int, int, int, int, int]
    F: Fraction
    F_within_bounds: bool


@dataclass(frozen=True)
class SweepRow:
    lam: int
    f: int
    branch: str
    roots: tuple[RootWindows, ...]

    @property
    def coprime_contradiction(self) -> bool:
        return any(r.coprime.excludes_unit_interval() for r in self.roots)

    @property
    def mirrored_contradiction(self) -> bool:
        return any(r.mirrored.excludes_unit_interval() for r in self.roots)

    @property
    def contradiction(self) -> bool:
        """Contradiction in the branch that applies to this lam."""
        return self.coprime_contradiction if self.branch == "coprime" else self.mirrored_contradiction


def lambda_sweep(w: int, lambdas: Iterable[int], d: int,
                 roots: Sequence[tuple[int, int]]) -> list[SweepRow]:
    """Windows for each framing f = -2 w lam at each (p, sigma_J(e^{2 pi i p/d})) in ``roots``."""
    rows = []
    for lam in lambdas:
        f = -2 * w * lam
        entries = []
        branch = None
        for p, sigma in roots:
            chi = CharacterData(d, p, lam)
            branch = chi.branch
            args = chi.F_arguments(w, f)
            Fv = F_value(*args)
            lo, hi = F_bounds(args[0], args[1])
            entries.append(RootWindows(
                p=p, sigma=sigma,
                coprime=signature_window(w, f, sigma),
                mirrored=signature_window_mirrored(w, f, sigma),
                F_args=args, F=Fv, F_within_bounds=lo < Fv < hi,
            ))
        if branch is None:
            branch = "coprime" if gcd(lam, d) == 1 else "noncoprime"
        rows.append(SweepRow(lam, f, branch, tuple(entries)))
    return rows


# --- certificates ----------------------------------------------------------

@dataclass(frozen=True)
class Inequality:
    lhs: str
    rel: str
    rhs: str
    holds: bool

    def __str__(self) -> str:
        return f"{self.lhs} {self.rel} {self.rhs}  [{'ok' if self.holds else 'FAIL'}]"


@dataclass(frozen=True)
class NonSliceCertificate:
    w: int
    d: int
    zeta1: RootOfUnity
    zeta2: RootOfUnity
    sigma1: int
    sigma2: int
    inequalities: tuple[Inequality, ...]
    transcript: tuple[SweepRow, ...]
    knot: str | None = None

    def verify(self) -> bool:
        return (
            self.zeta1 != self.zeta2
            and self.zeta1.primitive and self.zeta2.primitive
            and self.zeta1.d == self.zeta2.d == self.d
            and is_prime_power(self.d) and self.w % self.d == 0
            and 2 * self.w < self.sigma1 and self.sigma2 < -2 * self.w
            and all(i.holds for i in self.inequalities)
            and all(row.contradiction for row in self.transcript)
        )


def _inequalities(w: int, s1: int, s2: int) -> tuple[Inequality, ...]:
    return (
        Inequality(f"2w = {2 * w}", "<", f"sigma_J(zeta1) = {s1}", 2 * w < s1),
        Inequality(f"sigma_J(zeta2) = {s2}", "<", f"-2w = {-2 * w}", s2 < -2 * w),
    )


DEFAULT_LAMBDAS = range(-3, 4)


def certify_nonslice(w: int, J: SeifertMatrix,
                     lambdas: Iterable[int] = DEFAULT_LAMBDAS) -> NonSliceCertificate | None:
    """First (d, p1, p2) with 2w < sigma_J(zeta1) and sigma_J(zeta2) < -2w.

    Returns None when no such pair exists; that does not mean K_w(J) is slice.
    """
    if w <= 0:
        raise ValueError("certify_nonslice needs w >= 1; reverse orientation for negative w")
    lambdas = list(lambdas)
    for d in prime_power_divisors(w):
        ps = [p for p in range(1, d // 2 + 1) if gcd(p, d) == 1]
        sig = {p: lt_signature(J, (d, p)).sigma for p in ps}
        for p1, p2 in itertools.permutations(ps, 2):
            s1, s2 = sig[p1], sig[p2]
            if 2 * w < s1 and s2 < -2 * w:
                return NonSliceCertificate(
                    w=w, d=d,
                    zeta1=RootOfUnity(d, p1), zeta2=RootOfUnity(d, p2),
                    sigma1=s1, sigma2=s2,
                    inequalities=_inequalities(w, s1, s2),
                    transcript=tuple(lambda_sweep(w, lambdas, d, [(p1, s1), (p2, s2)])),
                    knot=J.name,
                )
    return None


# --- seed-knot search ------------------------------------------------------

SEARCH_KS = (3, 5, 7, 9)


@dataclass(frozen=True)
class SeedKnot:
    """m T(2, k1)^h1 # n T(2, k2)^h2."""

    m: int
    k1: int
    h1: str
    n: int
    k2: int
    h2: str

    @property
    def spec(self) -> str:
        return f"sum:{self.m}*t2k:{self.k1}:{self.h1}+{self.n}*t2k:{self.k2}:{self.h2}"

    def knot(self) -> SeifertMatrix:
        J = connected_sum(multiple(torus_knot_2k(self.k1, self.h1), self.m),
                          multiple(torus_knot_2k(self.k2, self.h2), self.n))
        return SeifertMatrix(J.A, self.spec)


@dataclass(frozen=True)
class SeedSearchResult:
    seed: SeedKnot
    certificate: NonSliceCertificate
    candidates_screened: int = field(default=0, compare=False)


def _seed_order():
    # (k1, h1) and (k2, h2): k1 <= k2, distinct summand types
    types = [(k, h) for k in SEARCH_KS for h in "rl"]
    pairs = [(a, b) for a in types for b in types if a[0] < b[0] or (a[0] == b[0] and a[1] < b[1])]
    return sorted(pairs, key=lambda ab: (ab[0][0], ab[1][0], ab[0][1], ab[1][1]))


def search_seed_knot(w: int, max_summands: int,
                     lambdas: Iterable[int] = DEFAULT_LAMBDAS,
                     divisors: Sequence[int] | None = None) -> SeedSearchResult | None:
    """Brute-force search for a seed knot J with a certificate for K_w(J).

    Candidates are ordered by (m + n, k1, k2, m, n, h1, h2) and the first
    one passing :func:`certify_nonslice` is returned. Signatures of the
    summands are computed once and combined additively to screen; the
    winner is re-certified on its full Seifert matrix.
    """
    if w < 1:
        raise ValueError("search needs w >= 1")
    if divisors is None:
        divisors = [d for d in prime_power_divisors(w) if d >= 5]
        if w < 5 or not divisors:
            raise Inapplicable(f"w = {w} has no prime-power divisor d >= 5")
    pairs = _seed_order()
    tables = {}
    for d in divisors:
        ps = [p for p in range(1, d // 2 + 1) if gcd(p, d) == 1]
        tables[d] = (ps, {t: [lt_signature(torus_knot_2k(t[0], t[1]), (d, p)).sigma for p in ps]
                          for t in {x for pr in pairs for x in pr}})
    screened = 0
    for total in range(2, max_summands + 1):
        hits = []
        for (k1, h1), (k2, h2) in pairs:
            for m in range(1, total):
                n = total - m
                screened += 1
                for d in divisors:
                    ps, sig = tables[d]
                    v = [m * a + n * b for a, b in zip(sig[(k1, h1)], sig[(k2, h2)])]
                    if max(v) > 2 * w and min(v) < -2 * w:
                        hits.append((total, k1, k2, m, n, h1, h2))
                        break
        for total_, k1, k2, m, n, h1, h2 in sorted(hits):
            seed = SeedKnot(m, k1, h1, n, k2, h2)
            cert = certify_nonslice(w, seed.knot(), lambdas)
            if cert is not None:
                return SeedSearchResult(seed, cert, screened)
    return None
