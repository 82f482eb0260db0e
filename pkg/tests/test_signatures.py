import pytest

from cgslice import signatures
from cgslice.knots import catalog, connected_sum, mirror, multiple, resolve_knot, reverse
from cgslice.oracles import OracleUndecided, float_lt_signature
from cgslice.signatures import (
    NullityError,
    all_roots,
    cable_21_signature,
    cobordism_genus_lower_bound,
    lt_signature,
)


@pytest.mark.parametrize("spec, root, sigma", [
    ("trefoil_r", (2, 1), -2),
    ("trefoil_l", (2, 1), 2),
    ("fig8", (2, 1), 0),
    ("10_124_r", (2, 1), -8),
    ("t2k:5:r", (5, 1), -2),
    ("t2k:5:r", (5, 2), -4),
    ("t2k:9:r", (2, 1), -8),
    ("unknot", (7, 3), 0),
    ("sum:12*t2k:5:r+18*t2k:3:l", (5, 1), 12),
    ("sum:12*t2k:5:r+18*t2k:3:l", (5, 2), -12),
])
def test_known_values(spec, root, sigma):
    assert lt_signature(resolve_knot(spec), root).sigma == sigma


def test_nullity_at_alexander_root():
    # t^2 - t + 1 vanishes at primitive 6th roots
    v = lt_signature(resolve_knot("trefoil_r"), (6, 1))
    assert (v.sigma, v.eta) == (-1, 1)


def test_zeta_one_rejected():
    with pytest.raises(ValueError):
        lt_signature(resolve_knot("trefoil_r"), (5, 0))


def test_split_and_unsplit_agree():
    J = resolve_knot("sum:2*trefoil_r+fig8+t2k:5:l")
    for z in all_roots(10):
        assert lt_signature(J, z) == lt_signature(J, z, split=False)


def test_catalog_against_float_oracle():
    checked = 0
    for name, J in catalog().items():
        for z in all_roots(16):
            try:
                want = float_lt_signature(J.A.to_rows(), z.d, z.p)
            except OracleUndecided:
                continue
            v = lt_signature(J, z)
            assert (v.sigma, v.eta) == want, (name, z)
            checked += 1
    assert checked > 1000


def test_properties_sample():
    cat = catalog()
    J1, J2 = cat["t2k:7:r"], cat["10_124_l"]
    S = connected_sum(J1, J2)
    for z in all_roots(12):
        s1 = lt_signature(J1, z).sigma
        assert lt_signature(mirror(J1), z, split=False).sigma == -s1
        assert lt_signature(reverse(J1), z, split=False).sigma == s1
        assert lt_signature(J1, z.conjugate()).sigma == s1
        if z.primitive:
            assert lt_signature(S, z, split=False).sigma == s1 + lt_signature(J2, z).sigma


def test_cable():
    t = resolve_knot("trefoil_r")
    assert cable_21_signature(t, (2, 1)).sigma == 0  # zeta^2 = 1
    assert cable_21_signature(t, (10, 1)).sigma == lt_signature(t, (5, 1)).sigma


def test_genus_bound():
    t = resolve_knot("trefoil_r")
    assert cobordism_genus_lower_bound(multiple(t, 4), resolve_knot("unknot"), [(2, 1)]) == 4
    with pytest.raises(NullityError):
        cobordism_genus_lower_bound(t, resolve_knot("unknot"), [(6, 1)])


def test_sign_flip_is_detected(monkeypatch):
    real = signatures.levine_tristram_form
    monkeypatch.setattr(signatures, "levine_tristram_form", lambda A, w: -real(A, w))
    signatures._block_pivots.cache_clear()
    try:
        assert lt_signature(resolve_knot("trefoil_r"), (2, 1)).sigma == 2
    finally:
        signatures._block_pivots.cache_clear()
