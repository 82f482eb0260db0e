from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cgslice.branched_cover import Inapplicable
from cgslice.knots import catalog, mirror, resolve_knot
from cgslice.obstruction import (
    CharacterData,
    F_bound_exhaustive_check,
    F_bound_sweep,
    F_bounds,
    F_scaled,
    F_value,
    SignatureWindow,
    certify_nonslice,
    is_prime_power,
    lambda_sweep,
    prime_power_divisors,
    search_seed_knot,
    signature_window,
    signature_window_mirrored,
)
from cgslice.signatures import lt_signature

CANDIDATE = "sum:12*t2k:5:r+18*t2k:3:l"


def test_prime_powers():
    assert [d for d in range(1, 30) if is_prime_power(d)] == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29]
    assert prime_power_divisors(60) == [2, 3, 4, 5]
    assert prime_power_divisors(1) == []


def test_F_values():
    assert F_value(5, 0, 5, 1, 1) == Fraction(-9, 5)
    assert F_value(1, 0, 2, 1, 1) == 0
    assert F_scaled(5, 0, 5, 1, 1) == -45
    with pytest.raises(ValueError):
        F_value(5, 0, 5, 0, 1)


@settings(max_examples=200, deadline=None)
@given(st.integers(-10, 10), st.integers(-20, 20), st.integers(2, 40), st.data())
def test_F_affine_in_f(a, f, d, data):
    n1 = data.draw(st.integers(1, d - 1))
    n2 = data.draw(st.integers(1, d - 1))
    slope = 2 * Fraction(n2, d) * (1 - Fraction(n2, d))
    assert F_value(a, f + 1, d, n1, n2) - F_value(a, f, d, n1, n2) == slope


@pytest.mark.parametrize("a, f, d", [(5, -10, 5), (-3, 7, 4), (1, 0, 2), (10, 20, 40)])
def test_exhaustive_check_holds(a, f, d):
    r = F_bound_exhaustive_check(a, f, d)
    assert r.holds and r.violations == () and r.points == (d - 1) ** 2
    assert r.lower_margin > 0 and r.upper_margin > 0


def test_exhaustive_check_rejects():
    with pytest.raises(ValueError):
        F_bound_exhaustive_check(0, 1, 5)
    with pytest.raises(ValueError):
        F_bound_exhaustive_check(1, 1, 1)


def test_exhaustive_check_matches_fraction_evaluation():
    a, f, d = -7, 13, 9
    lo, hi = F_bounds(a, f)
    values = [F_value(a, f, d, n1, n2) for n1 in range(1, d) for n2 in range(1, d)]
    r = F_bound_exhaustive_check(a, f, d)
    assert r.lower_margin == min(v - lo for v in values)
    assert r.upper_margin == min(hi - v for v in values)


def test_sweep_small_grid_is_thread_independent():
    args = (range(-3, 4), range(-4, 5), range(2, 9))
    s1 = F_bound_sweep(*args, threads=1)
    s2 = F_bound_sweep(*args, threads=2)
    assert s1 == s2 and s1.violations == 0


@pytest.mark.parametrize("w, f, sigma, lo, hi", [
    (5, 0, 12, 3, 21),
    (5, -10, 12, -7, 21),
    (1, 0, 0, -1, 1),
])
def test_window(w, f, sigma, lo, hi):
    assert signature_window(w, f, sigma) == SignatureWindow(Fraction(lo), Fraction(hi))


@pytest.mark.parametrize("w, f, sigma, lo, hi", [
    (5, 0, 12, -2, 21),
    (5, 20, 12, 3, 36),
    (1, 0, 0, -2, 1),
])
def test_window_mirrored(w, f, sigma, lo, hi):
    assert signature_window_mirrored(w, f, sigma) == SignatureWindow(Fraction(lo), Fraction(hi))


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 30), st.integers(-100, 100), st.integers(-200, 200))
def test_window_widths(w, f, sigma):
    assert signature_window(w, f, sigma).width == 4 * w - 2 + abs(f)
    assert signature_window_mirrored(w, f, sigma).width == 4 * w - 2 + abs(w - f)


def test_window_exclusion_semantics():
    assert SignatureWindow(Fraction(1), Fraction(5)).excludes_unit_interval()
    assert not SignatureWindow(Fraction(0), Fraction(5)).excludes_unit_interval()
    assert SignatureWindow(Fraction(-5), Fraction(-1)).excludes_unit_interval()


def test_character_data():
    c = CharacterData(5, 2, 3)
    assert c.branch == "coprime"
    assert c.F_arguments(5, -30) == (5, -30, 5, 2, 1)
    c = CharacterData(5, 2, 5)
    assert c.branch == "noncoprime"
    assert c.F_arguments(5, -50) == (-5, 55, 5, 3, 3)
    with pytest.raises(ValueError):
        CharacterData(6, 1, 0)
    with pytest.raises(ValueError):
        CharacterData(9, 3, 0)


def test_candidate_certificate():
    c = certify_nonslice(5, resolve_knot(CANDIDATE))
    assert c is not None and c.verify()
    assert (c.d, c.zeta1.p, c.zeta2.p, c.sigma1, c.sigma2) == (5, 1, 2, 12, -12)
    assert [row.lam for row in c.transcript] == list(range(-3, 4))
    assert [row.branch for row in c.transcript].count("noncoprime") == 1


def test_certificate_is_conjugation_invariant():
    # signatures at conjugate roots agree, so the same pair certifies via conjugates
    J = resolve_knot(CANDIDATE)
    c = certify_nonslice(5, J)
    assert lt_signature(J, c.zeta1.conjugate()).sigma == c.sigma1
    assert lt_signature(J, c.zeta2.conjugate()).sigma == c.sigma2


def test_certificate_mirror():
    c = certify_nonslice(5, mirror(resolve_knot(CANDIDATE)))
    assert c is not None and (c.zeta1.p, c.zeta2.p, c.sigma1, c.sigma2) == (2, 1, 12, -12)


def test_wide_lambda_sweep():
    rows = lambda_sweep(5, range(-50, 51), 5, [(1, 12), (2, -12)])
    assert all(r.coprime_contradiction and r.mirrored_contradiction for r in rows)
    assert all(rt.F_within_bounds for r in rows for rt in r.roots)


def test_tampered_certificate_fails_verification():
    from dataclasses import replace
    c = certify_nonslice(5, resolve_knot(CANDIDATE))
    assert not replace(c, sigma1=10).verify()
    assert not replace(c, d=4).verify()


def test_no_certificate_when_signatures_small():
    for J in catalog().values():
        assert certify_nonslice(1, J) is None
        assert certify_nonslice(5, J) is None
    with pytest.raises(ValueError):
        certify_nonslice(0, resolve_knot("unknot"))


@pytest.mark.parametrize("w, spec", [
    (5, "sum:12*t2k:3:l+6*t2k:7:r"),
    (7, "sum:16*t2k:3:l+8*t2k:5:r"),
])
def test_seed_search(w, spec):
    r = search_seed_knot(w, 40)
    assert r.seed.spec == spec
    assert r.certificate.verify() and r.certificate.d == w


def test_seed_search_composite_winding():
    r = search_seed_knot(25, 120)
    assert r.seed.spec == "sum:39*t2k:5:l+26*t2k:7:r"
    c = r.certificate
    assert (c.d, c.zeta1.p, c.zeta2.p, c.sigma1, c.sigma2) == (25, 8, 2, 52, -52)


def test_seed_search_inapplicable():
    with pytest.raises(Inapplicable):
        search_seed_knot(3, 40)
    with pytest.raises(Inapplicable):
        search_seed_knot(6, 40)
    assert search_seed_knot(3, 40, divisors=[3]) is None
