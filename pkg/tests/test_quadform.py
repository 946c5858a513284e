import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fineforms.params import FineParams, Level, ParameterError, valid_pairs
from fineforms.quadform import (
    ParityCounts,
    Representation,
    andrews_product,
    andrews_sum,
    from_cone,
    parity_counts,
    q_value,
    quaternary_parity_direct,
    quaternary_series,
    quaternary_signed_count,
    representations,
    signed_series,
    to_cone,
)
from fineforms.series import fine_product
from oracles import bivariate_product_brute, cone_reps_brute, q_form, signed_cone_brute

P31 = FineParams(3, 1)


@pytest.mark.parametrize("k, l, expected", [(0, 0, 0), (1, -1, 1), (1, 0, 3)])
def test_q_value_examples(k, l, expected):
    assert q_value(P31, k, l) == expected


def test_cone_bijection_round_trip():
    for k, l in itertools.product(range(-50, 51), repeat=2):
        if k >= abs(l):
            s, t = to_cone(k, l)
            assert s >= 0 and t >= 0 and (s - t) % 2 == 0
            assert from_cone(s, t) == (k, l)
    for s, t in itertools.product(range(101), repeat=2):
        if (s - t) % 2 == 0:
            k, l = from_cone(s, t)
            assert k >= abs(l)


def test_from_cone_rejects_mixed_parity():
    with pytest.raises(ValueError):
        from_cone(1, 2)


@pytest.mark.parametrize("P", valid_pairs(6, Level.FORMAL), ids=str)
def test_linearized_form_identity(P):
    p, r = P.p, P.r
    for k, l in itertools.product(range(-50, 51), repeat=2):
        s, t = k + l, k - l
        assert 2 * q_form(p, r, k, l) == s * (p * t + p - r) + t * r
        assert q_value(P, k, l) == q_form(p, r, k, l)
        if k >= abs(l):
            assert q_value(P, k, l) >= 0


def test_representations_examples():
    assert representations(P31, 0) == [Representation(0, 0, 1)]
    assert representations(P31, 3) == [Representation(1, 0, -1), Representation(3, -3, 1)]
    assert representations(P31, 4) == [Representation(2, 2, 1), Representation(4, -4, 1)]
    assert representations(P31, -1) == []


def test_representation_invariants():
    with pytest.raises(ValueError):
        Representation(1, 2, 1)
    with pytest.raises(ValueError):
        Representation(1, 0, 1)


@pytest.mark.parametrize("P", valid_pairs(8, Level.FORMAL), ids=str)
def test_representations_match_box_scan(P):
    for n in range(0, 40):
        assert [(x.k, x.l) for x in representations(P, n)] == cone_reps_brute(P.p, P.r, n)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 40), st.data(), st.integers(0, 300))
def test_representations_property(p, data, n):
    r = data.draw(st.integers(1, p - 1))
    P = FineParams(p, r)
    reps = representations(P, n)
    assert all(q_value(P, x.k, x.l) == n for x in reps)
    assert [(x.k, x.l) for x in reps] == cone_reps_brute(p, r, n)


@pytest.mark.parametrize("n, expected", [(3, (1, 1)), (4, (2, 0)), (0, (1, 0))])
def test_parity_counts_examples(n, expected):
    assert parity_counts(P31, n) == ParityCounts(*expected)


def test_signed_series_examples():
    assert signed_series(P31, 4).to_list() == [1, 1, 2, 0, 2]
    assert signed_series(FineParams(5, 3), 0).to_list() == [1]


@pytest.mark.parametrize("P", valid_pairs(9, Level.FORMAL), ids=str)
def test_signed_series_matches_brute_and_parity(P):
    series = signed_series(P, 60)
    assert series.to_list() == signed_cone_brute(P.p, P.r, 60)
    assert series.to_list() == [parity_counts(P, n).signed for n in range(61)]


def test_signed_series_equals_product(strong):
    assert signed_series(strong, 300) == fine_product(strong, 300)


@pytest.mark.parametrize("p, r, n, expected", [(3, 1, 1, 1), (3, 1, 3, 5), (5, 3, 1, 0)])
def test_quaternary_examples(p, r, n, expected):
    P = FineParams(p, r)
    assert quaternary_signed_count(P, n) == expected
    assert quaternary_parity_direct(P, n).signed == expected


def test_quaternary_direct_parity_split():
    # (0,2), (2,0) and (1,1) value pairs at p=3, r=1, n=3, all even
    assert quaternary_parity_direct(P31, 3) == ParityCounts(5, 0)


def test_quaternary_routes_agree(weak):
    series = quaternary_series(weak, 60)
    for n in range(1, 61):
        assert series[n] == quaternary_parity_direct(weak, n).signed


def test_quaternary_needs_weak():
    with pytest.raises(ParameterError):
        quaternary_signed_count(FineParams(4, 2), 3)


def test_andrews_product_low_order():
    prod = andrews_product(3, 8)
    assert prod.trusted_half_width == 5
    assert [prod.coefficient(0, e) for e in range(-8, 9)] == [1] * 9 + [0] * 8
    assert prod.coefficient(1, 0) == -1


def test_andrews_product_matches_brute_dicts():
    order, width = 3, 8
    prod = andrews_product(order, width)
    brute = bivariate_product_brute(order, width)
    for (i, e), value in prod.trusted_items():
        assert value == brute.get((i, e), 0)


def test_andrews_sum_terms():
    total = andrews_sum(4, 10)
    assert [total.coefficient(0, e) for e in range(-10, 1)] == [1] * 11
    assert total.coefficient(0, 1) == 0
    assert total.coefficient(1, 0) == -1  # (k, l) = (1, 0)


@pytest.mark.parametrize("order", [0, 1, 5, 12, 20])
def test_andrews_sides_agree(order):
    width = 2 * order + 2
    prod, total = andrews_product(order, width), andrews_sum(order, width)
    for (i, e), value in prod.trusted_items():
        assert value == total.coefficient(i, e)


def test_andrews_window_precondition():
    with pytest.raises(ParameterError):
        andrews_product(5, 5)
    with pytest.raises(ParameterError):
        andrews_sum(5, 11)
