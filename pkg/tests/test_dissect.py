"""Tests for the dissection identity registry."""

import pytest

from etaq import series
from etaq.dissect import (
    build_sides,
    five_dissect_check,
    identity_ids,
    rr_R_series,
    verify,
)
from etaq.eta import power_product
from etaq.series import (
    coeff,
    euler_series,
    extract_progression,
    make_series,
    mul,
    negate_odd,
    shift,
    substitute_power,
)

EXACT_IDS = [
    "D1_f1_over_f3cubed",
    "D2_inv_f1f3",
    "D3_f3cubed_over_f1",
    "D4_f1_over_f5",
    "D5_f1_times_f5",
    "D6_inv_f1f5",
    "D7_rr_five_dissection",
]
PARITY_IDS = ["B_binomial_mod2_%d" % k for k in (1, 2, 3, 5, 10)]


def test_registry_order():
    assert list(identity_ids()) == EXACT_IDS + PARITY_IDS


@pytest.mark.parametrize("identity_id", EXACT_IDS)
def test_exact_identities(identity_id):
    res = verify(identity_id, 300)
    assert res.ok, res
    assert res.modulus is None
    lhs, rhs = build_sides(identity_id, 120)
    assert lhs.precision == 120 and rhs.precision == 120


@pytest.mark.parametrize("identity_id", PARITY_IDS)
def test_parity_identities(identity_id):
    res = verify(identity_id, 400)
    assert res.ok, res
    assert res.modulus == 2


def test_verify_unknown_id():
    with pytest.raises(ValueError):
        verify("D8", 50)


def test_rr_series_head():
    r = rr_R_series(5)
    assert [coeff(r, n) for n in range(5)] == [1, 1, 0, -1, 0]
    r = rr_R_series(200)
    rec = mul(r, series.invert(r))
    assert all(coeff(rec, n) == (1 if n == 0 else 0) for n in range(rec.precision))


def test_negate_odd_euler_products():
    # (-q; -q) = E2^3 / (E1 E4) and likewise in q^5
    p = 240
    assert negate_odd(euler_series(1, p)) == power_product({2: 3, 1: -1, 4: -1}, p)
    assert negate_odd(euler_series(5, p)) == power_product({10: 3, 5: -1, 20: -1}, p)


def test_d6_follows_from_d5_by_sign_flip():
    p = 200
    _, rhs5 = build_sides("D5_f1_times_f5", p)
    chain = mul(negate_odd(rhs5), power_product({4: 1, 20: 1, 2: -3, 10: -3}, p))
    lhs6, rhs6 = build_sides("D6_inv_f1f5", p)
    hi = min(chain.precision, rhs6.precision)
    assert series.first_mismatch(chain, rhs6, hi) is None
    assert series.first_mismatch(chain, lhs6, min(chain.precision, lhs6.precision)) is None


def test_d4_follows_from_its_reciprocal_form():
    p = 200
    # E5/E1 = E8 E20^2/(E2^2 E40) + q E4^3 E10 E40/(E2^3 E8 E20)
    base_lhs = power_product({5: 1, 1: -1}, p)
    t1 = power_product({8: 1, 20: 2, 2: -2, 40: -1}, p)
    t2 = shift(power_product({4: 3, 10: 1, 40: 1, 2: -3, 8: -1, 20: -1}, p - 1), 1)
    base_rhs = series.add(t1, t2)
    assert series.first_mismatch(base_lhs, base_rhs, p) is None
    chain = mul(negate_odd(base_rhs), power_product({2: 3, 20: 1, 4: -1, 10: -3}, p))
    lhs4, _ = build_sides("D4_f1_over_f5", p)
    assert series.first_mismatch(chain, lhs4, min(chain.precision, p)) is None


def test_five_dissection_support():
    _, rhs = build_sides("D7_rr_five_dissection", 300)
    assert five_dissect_check(rhs, {0, 1, 2}).ok
    bad = five_dissect_check(rhs, {0, 1})
    assert not bad.ok
    assert bad.violations and bad.violations[0][0] % 5 == 2

    # the even-index companion lives on residues {0, 2, 4}
    e2_over_e5 = power_product({2: 1, 5: -1}, 300)
    assert five_dissect_check(e2_over_e5, {0, 2, 4}).ok
    assert not five_dissect_check(e2_over_e5, {0, 1, 2}).ok


def test_five_dissection_terms_reproduce():
    p = 300
    _, rhs = build_sides("D7_rr_five_dissection", p)
    r_prec = p // 5 + 2
    r5 = substitute_power(rr_R_series(r_prec), 5)
    e25 = euler_series(25, p)
    term0 = mul(e25, r5)
    term1 = shift(series.scale(e25, -1), 1)
    term2 = series.scale(mul(e25, shift(series.invert(r5), 2)), -1)
    for r, term in ((0, term0), (1, term1), (2, term2)):
        got = extract_progression(rhs, 5, r)
        want = extract_progression(term, 5, r)
        hi = min(got.precision, want.precision)
        assert series.first_mismatch(got, want, hi) is None


def test_binomial_squares_spread_mod_two():
    lhs, rhs = build_sides("B_binomial_mod2_3", 100)
    assert lhs == euler_series(6, 100)
    spread = substitute_power(series.reduce_mod(euler_series(3, 50), 2), 2)
    hi = min(rhs.precision, spread.precision)
    assert series.first_mismatch(rhs, spread, hi, mod=2) is None
