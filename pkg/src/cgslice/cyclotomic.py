"""Exact arithmetic in cyclotomic fields Q(zeta_d).

Elements are residues modulo the d-th cyclotomic polynomial, stored as an
integer coefficient vector of length phi(d) over one positive denominator.
The generator ``x`` is always embedded as ``exp(2*pi*i/d)``; a root
``exp(2*pi*i*p/d)`` is the power ``x**p``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

import mpmath


class CyclotomicRepresentationError(ValueError):
    """An entry is not a valid residue modulo the cyclotomic polynomial."""


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # coefficients low-to-high; den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, b in enumerate(den):
                num[i + j] -= c * b
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(d: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the d-th cyclotomic polynomial."""
    if d < 1:
        raise ValueError(f"order must be positive, got {d}")
    poly = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            poly = _poly_divexact(poly, list(cyclotomic_polynomial(e)))
    return tuple(poly)


def euler_phi(d: int) -> int:
    return len(cyclotomic_polynomial(d)) - 1


class CyclotomicField:
    """Q(zeta_d) with precomputed reduction and conjugation tables."""

    _instances: dict[int, "CyclotomicField"] = {}

    def __new__(cls, d: int):
        if d in cls._instances:
            return cls._instances[d]
        self = super().__new__(cls)
        self.d = d
        self.phi_poly = cyclotomic_polynomial(d)
        self.degree = len(self.phi_poly) - 1
        self._phi_terms = tuple((j, c) for j, c in enumerate(self.phi_poly[:-1]) if c)
        # x**k reduced, for 0 <= k < d
        powers = []
        for k in range(d):
            c = [0] * max(k + 1, self.degree)
            c[k] = 1
            powers.append(tuple(self._reduce(c)))
        self._powers = powers
        self.units = tuple(k for k in range(1, d + 1) if gcd(k, d) == 1)
        cls._instances[d] = self
        return self

    def __reduce__(self):
        return (CyclotomicField, (self.d,))

    def __repr__(self) -> str:
        return f"CyclotomicField({self.d})"

    def _reduce(self, coeffs: list[int]) -> list[int]:
        m = self.degree
        c = list(coeffs)
        terms = self._phi_terms
        for i in range(len(c) - 1, m - 1, -1):
            t = c[i]
            if t:
                base = i - m
                for j, pj in terms:
                    c[base + j] -= t * pj
        del c[m:]
        c.extend([0] * (m - len(c)))
        return c

    def power_coeffs(self, k: int) -> tuple[int, ...]:
        return self._powers[k % self.d]

    # constructors
    def zero(self) -> "Cyc":
        return Cyc(self, (0,) * self.degree, 1)

    def one(self) -> "Cyc":
        return self.from_int(1)

    def from_int(self, n: int) -> "Cyc":
        return Cyc(self, (n,) + (0,) * (self.degree - 1), 1)

    def from_fraction(self, q: Fraction) -> "Cyc":
        q = Fraction(q)
        return Cyc.make(self, [q.numerator] + [0] * (self.degree - 1), q.denominator)

    def gen_power(self, k: int) -> "Cyc":
        """zeta_d ** k."""
        return Cyc(self, self.power_coeffs(k), 1)

    def from_residue(self, coeffs, den: int = 1) -> "Cyc":
        """Strict constructor: ``coeffs`` must already be a reduced residue."""
        coeffs = list(coeffs)
        if len(coeffs) > self.degree:
            if any(coeffs[self.degree:]):
                raise CyclotomicRepresentationError(
                    f"residue of degree {len(coeffs) - 1} is not reduced modulo "
                    f"Phi_{self.d} (degree {self.degree})")
            coeffs = coeffs[: self.degree]
        if not all(isinstance(c, int) for c in coeffs):
            raise CyclotomicRepresentationError("residue coefficients must be integers")
        if not isinstance(den, int) or den == 0:
            raise CyclotomicRepresentationError("denominator must be a nonzero integer")
        coeffs += [0] * (self.degree - len(coeffs))
        return Cyc.make(self, coeffs, den)

    def from_poly(self, coeffs, den: int = 1) -> "Cyc":
        """Reduce an arbitrary integer polynomial in zeta_d."""
        coeffs = list(coeffs) + [0] * max(0, self.degree - len(coeffs))
        return Cyc.make(self, self._reduce(coeffs), den)

    @lru_cache(maxsize=None)
    def cos_bounds(self, prec: int) -> tuple[tuple[int, int], ...]:
        """Integer bounds (lo, hi) with lo <= 2**prec * cos(2*pi*j/d) <= hi."""
        ctx = mpmath.iv
        saved = ctx.prec
        ctx.prec = prec + 20
        try:
            out = []
            for j in range(self.degree):
                v = ctx.cos(2 * ctx.pi * j / self.d) * (2 ** prec)
                lo = int(mpmath.floor(v.a))
                hi = int(mpmath.ceil(v.b))
                out.append((lo, hi))
        finally:
            ctx.prec = saved
        return tuple(out)


class Cyc:
    """An element ``sum(num[j] * zeta**j) / den`` of Q(zeta_d)."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field: CyclotomicField, num: tuple[int, ...], den: int):
        self.field = field
        self.num = num
        self.den = den

    def __reduce__(self):
        return (Cyc, (self.field, self.num, self.den))

    @staticmethod
    def make(field: CyclotomicField, num, den: int) -> "Cyc":
        if den < 0:
            num = [-c for c in num]
            den = -den
        g = den
        for c in num:
            if g == 1:
                break
            g = gcd(g, c)
        if g > 1:
            num = [c // g for c in num]
            den //= g
        return Cyc(field, tuple(num), den)

    def _coerce(self, other) -> "Cyc":
        if isinstance(other, Cyc):
            if other.field is not self.field:
                raise ValueError("elements from different cyclotomic fields")
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        if isinstance(other, Fraction):
            return self.field.from_fraction(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.field.d, self.num, self.den))

    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __neg__(self) -> "Cyc":
        return Cyc(self.field, tuple(-c for c in self.num), self.den)

    def __add__(self, other) -> "Cyc":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return Cyc.make(self.field, [a + b for a, b in zip(self.num, other.num)], self.den)
        return Cyc.make(
            self.field,
            [a * other.den + b * self.den for a, b in zip(self.num, other.num)],
            self.den * other.den,
        )

    __radd__ = __add__

    def __sub__(self, other) -> "Cyc":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Cyc":
        return (-self) + other

    def __mul__(self, other) -> "Cyc":
        if isinstance(other, int):
            return Cyc.make(self.field, [c * other for c in self.num], self.den)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.num, other.num
        m = len(a)
        prod = [0] * (2 * m - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return Cyc.make(self.field, self.field._reduce(prod), self.den * other.den)

    __rmul__ = __mul__

    def galois(self, k: int) -> "Cyc":
        """Image under zeta -> zeta**k (k a unit mod d)."""
        f = self.field
        acc = [0] * f.degree
        for j, c in enumerate(self.num):
            if c:
                for i, e in enumerate(f.power_coeffs(j * k)):
                    if e:
                        acc[i] += c * e
        return Cyc(f, tuple(acc), self.den)

    def conjugate(self) -> "Cyc":
        """Image under zeta -> zeta**(d-1)."""
        return self.galois(-1)

    def is_real(self) -> bool:
        return self == self.conjugate()

    def inverse(self) -> "Cyc":
        """1/a = (product of the other Galois conjugates of a) / N(a)."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        f = self.field
        if f.degree == 1:
            return Cyc.make(f, [self.den], self.num[0])
        numer = Cyc(f, self.num, 1)
        cofactor = f.one()
        for k in f.units[1:]:
            cofactor = cofactor * numer.galois(k)
        norm = numer * cofactor
        n = norm.num[0]
        assert not any(norm.num[1:]) and norm.den == 1
        return Cyc.make(f, [c * self.den for c in cofactor.num], n * cofactor.den)

    def __truediv__(self, other) -> "Cyc":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def to_complex(self, dps: int = 30) -> mpmath.mpc:
        with mpmath.workdps(dps):
            z = mpmath.expjpi(mpmath.mpf(2) / self.field.d)
            return mpmath.fsum(c * z ** j for j, c in enumerate(self.num)) / self.den

    def sign(self) -> int:
        """Certified sign of a real element.

        Zero is decided exactly from the canonical residue; a nonzero value is
        enclosed with rigorous rational cosine bounds whose precision doubles
        until the enclosure excludes zero.
        """
        if self.is_zero():
            return 0
        if not self.is_real():
            raise ValueError("sign of a non-real cyclotomic element")
        if self.field.degree == 1:
            return 1 if self.num[0] > 0 else -1
        prec = 64
        while True:
            lo = hi = 0
            for c, (clo, chi) in zip(self.num, self.field.cos_bounds(prec)):
                if c > 0:
                    lo += c * clo
                    hi += c * chi
                elif c < 0:
                    lo += c * chi
                    hi += c * clo
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            prec *= 2

    def __repr__(self) -> str:
        terms = []
        for j, c in enumerate(self.num):
            if c:
                terms.append(f"{c}" if j == 0 else f"{c}*z^{j}")
        body = " + ".join(terms) or "0"
        if self.den != 1:
            body = f"({body})/{self.den}"
        return f"Cyc[{self.field.d}]({body})"


@dataclass(frozen=True)
class RootOfUnity:
    """The root exp(2*pi*i*p/d), 1 <= p <= d-1."""

    d: int
    p: int

    def __post_init__(self):
        if self.d < 2 or not 1 <= self.p <= self.d - 1:
            raise ValueError(f"invalid root of unity ({self.d}, {self.p}): need d >= 2, 1 <= p <= d-1")

    @property
    def primitive(self) -> bool:
        return gcd(self.p, self.d) == 1

    def conjugate(self) -> "RootOfUnity":
        return RootOfUnity(self.d, self.d - self.p)

    def reduced(self) -> "RootOfUnity":
        g = gcd(self.p, self.d)
        return RootOfUnity(self.d // g, self.p // g)

    def power(self, k: int) -> "RootOfUnity | None":
        """zeta**k in lowest terms, or None when it equals 1."""
        q = (self.p * k) % self.d
        if q == 0:
            return None
        return RootOfUnity(self.d, q).reduced()

    @property
    def turns(self) -> Fraction:
        return Fraction(self.p, self.d)

    def __str__(self) -> str:
        return f"({self.d},{self.p})"
