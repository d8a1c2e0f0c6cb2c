import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sqdisc.constructions import (
    Case,
    IsolationFailure,
    case_iii_parameters,
    choose_truncation_order,
    classify_coeff_set,
    construct_case_i,
    construct_case_ii,
    construct_case_iii,
    periodic_truncation,
    rouche_order,
    series_coefficients,
)
from sqdisc.discriminant import discriminant, reciprocal_square_criterion
from sqdisc.gf2 import squarefree_mod2
from sqdisc.poly import DomainError, IntPolynomial as P, is_reciprocal, p_n, reverse
from sqdisc.roots import find_all_roots


# --- coefficient sets -------------------------------------------------------


def test_classify_pm1():
    cs = classify_coeff_set({-1, 1})
    assert cs.negation_closed and cs.multiplication_closed and cs.contains_pm1
    assert cs.height == 1


def test_classify_zero_one():
    cs = classify_coeff_set({0, 1})
    assert cs.multiplication_closed
    assert not cs.negation_closed and not cs.contains_pm1
    assert cs.height == 1


def test_classify_no_case():
    cs = classify_coeff_set({0, 1, 2})
    assert not (cs.negation_closed or cs.multiplication_closed or cs.contains_pm1)
    assert cs.applicable_cases() == []


@pytest.mark.parametrize("els", [set(), {0}])
def test_classify_rejects(els):
    with pytest.raises(DomainError):
        classify_coeff_set(els)


@given(st.sets(st.integers(-4, 4), min_size=1).filter(lambda s: s != {0}))
def test_flags_match_definitions(els):
    cs = classify_coeff_set(els)
    assert cs.negation_closed == all(-a in els for a in els)
    assert cs.multiplication_closed == all(a * b in els for a in els for b in els)
    assert cs.contains_pm1 == ({1, -1} <= els)
    assert cs.height == max(abs(a) for a in els) >= 1


def test_fixup_choices():
    assert classify_coeff_set({-2, -1, 0, 1, 2}).smallest_nonzero() == 1
    assert classify_coeff_set({-1, 2}).smallest_nonzero() == -1
    assert classify_coeff_set({-1, 0, 1}).smallest() == 0


# --- periodic truncation ----------------------------------------------------


def test_truncation_examples():
    pm1 = classify_coeff_set({-1, 1})
    assert periodic_truncation(P((1, -1)), 4, pm1).coeffs == (1, -1, 1, -1)
    assert periodic_truncation(P((1, 1, 1)), 7, pm1).coeffs == (1,) * 7
    assert periodic_truncation(P((1, -1)), 3, pm1).coeffs == (1, -1, 1)


def test_truncation_series_is_periodic_expansion():
    # f / (1 - X^(n+1)) expanded by long division
    f = P((1, 0, -1, 1))
    n1 = 4
    num = list(f.coeffs) + [0] * 20
    series = []
    for j in range(20):
        series.append(num[j])
        if j + n1 < len(num):
            num[j + n1] += num[j]
    assert series_coefficients(f, 20) == series


def test_truncation_fixups():
    zpm1 = classify_coeff_set({-1, 0, 1})
    g = periodic_truncation(P((1, 0, 1)), 5, zpm1)  # b_4 = a_1 = 0
    assert g.coeffs == (1, 0, 1, 1, 1)
    # g(1) = 0 forces the top coefficient to move
    g = periodic_truncation(P((1, -1)), 4, classify_coeff_set({-1, 1}), force_nonzero_at_one=True)
    assert g(1) != 0 and g.degree == 3
    assert g.coeffs[:3] == (1, -1, 1)


def test_truncation_rejects_bad_input():
    pm1 = classify_coeff_set({-1, 1})
    with pytest.raises(DomainError):
        periodic_truncation(P((0, 1)), 4, pm1)
    with pytest.raises(DomainError):
        periodic_truncation(P((1, 2)), 4, pm1)
    with pytest.raises(DomainError):
        periodic_truncation(P((1, 1)), 1, pm1)


# --- case i -----------------------------------------------------------------


def test_case_i_example():
    fk = construct_case_i(P((1, -1, 1, -1)), 4, 1)
    assert list(fk.coeffs) == [1, -1, 1, -1, 1, 1, 1, 1, 1, 1, 1, 1, 1, -1, 1, -1, 1]
    assert fk(1) == fk(-1) == 9
    assert discriminant(fk).is_square
    assert squarefree_mod2(fk)
    assert not discriminant(fk).is_zero


def test_case_i_rejects():
    with pytest.raises(DomainError):
        construct_case_i(P((1, -1, 1)), 3, 1)
    with pytest.raises(DomainError):
        construct_case_i(P((1, -1)), 4, 1)
    with pytest.raises(DomainError):
        construct_case_i(P((1, 1)), 2, 1, classify_coeff_set({0, 1}))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.data())
def test_case_i_properties(half_k, data):
    k = 2 * half_k
    els = data.draw(st.sampled_from([(-1, 1), (-1, 0, 1), (-2, -1, 1, 2)]))
    nonzero = [a for a in els if a]
    g = P(
        (data.draw(st.sampled_from(nonzero)),)
        + tuple(data.draw(st.sampled_from(els)) for _ in range(k - 2))
        + (data.draw(st.sampled_from(nonzero)),)
    )
    a = data.draw(st.sampled_from(els))
    fk = construct_case_i(g, k, a, classify_coeff_set(els))
    assert fk.degree == 4 * k and reverse(fk) == fk and is_reciprocal(fk)
    assert fk(1) == fk(-1)
    assert all(c in els for c in fk.coeffs)
    assert reciprocal_square_criterion(fk)
    assert discriminant(fk).is_square


# --- case ii ----------------------------------------------------------------


def test_case_ii_examples():
    assert construct_case_ii(P((1, 1, 1)), 3) == p_n(8)
    assert construct_case_ii(P((1,)), 1) == P((1,))
    fk = construct_case_ii(P((1, 0, 1)), 3)
    assert fk == P((1, 0, 1)) * P((1, 0, 0, 0, 0, 0, 1))
    assert set(fk.coeffs) <= {0, 1}


def test_case_ii_rejects():
    with pytest.raises(DomainError):
        construct_case_ii(P((1, 1)), 2)
    with pytest.raises(DomainError):
        construct_case_ii(P((1, 1, 1)), 3, classify_coeff_set({1, 2}))


def test_case_ii_contains_zeros_of_g(rng):
    for _ in range(20):
        k = rng.choice([3, 5, 7])
        g = P(tuple(rng.choice((-1, 1)) for _ in range(k)))
        fk = construct_case_ii(g, k)
        assert fk.degree == k * k - 1
        scale = sum(abs(c) for c in fk.coeffs)
        for z in find_all_roots(g).roots:
            assert abs(fk(z)) < 1e-10 * scale * max(1.0, abs(z)) ** fk.degree


# --- case iii ---------------------------------------------------------------


def test_case_iii_example():
    g = P((1, 1, 1))
    assert case_iii_parameters(g) == (-1, 13)
    fk = construct_case_iii(g, 3)
    assert list(fk.coeffs) == [1] * 6 + [-1] * 13 + [1] * 6
    assert fk.degree == 24
    assert fk(1) == fk(-1) == -1
    assert discriminant(fk).is_square


def test_case_iii_sign_mirror():
    g = P((-1, -1, -1))
    assert case_iii_parameters(g) == (1, -13)
    fk = construct_case_iii(g, 3)
    assert fk == -construct_case_iii(P((1, 1, 1)), 3)
    assert fk(1) == fk(-1) == 1


def test_case_iii_rejects_g1_zero():
    with pytest.raises(DomainError):
        construct_case_iii(P((1, 0, -1)), 3)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([3, 5, 7]), st.data())
def test_case_iii_properties(k, data):
    g = P(tuple(data.draw(st.sampled_from([-1, 1])) for _ in range(k)))
    if g(1) == 0:
        return
    u, ell = case_iii_parameters(g)
    fk = construct_case_iii(g, k)
    assert fk.degree == 4 * k + abs(ell) - 1 == 4 * k + 4 * abs(g(1))
    assert fk.degree % 4 == 0 and is_reciprocal(fk)
    assert fk(1) == fk(-1) == u
    assert set(fk.coeffs) <= {-1, 1}
    assert discriminant(fk).is_square


# --- Rouche order -----------------------------------------------------------


def test_rouche_order_example():
    assert rouche_order(2, 0.1, 0.9, Case.NEGATION) == 52
    assert 2 * 0.9**51 / 0.1 < 0.1 <= 2 * 0.9**50 / 0.1


def test_rouche_order_parity_and_degenerate():
    assert rouche_order(0, 0.1, 0.5, Case.NEGATION) == 2
    assert rouche_order(0, 0.1, 0.5, Case.PM1) == 3
    k = rouche_order(2, 0.1, 0.9, Case.MULTIPLICATIVE)
    assert k % 2 == 1 and k in (52, 53)


@given(st.floats(0.01, 0.99), st.floats(1e-6, 1.0), st.integers(1, 8))
def test_rouche_order_is_minimal(r, m, B):
    k = rouche_order(B, m, r, Case.NEGATION)
    assert B * r ** (k - 1) / (1 - r) < m
    assert k % 2 == 0
    # two steps below is either invalid or under the minimum
    if k - 2 >= 2:
        assert not B * r ** (k - 3) / (1 - r) < m


def test_choose_truncation_order_golden():
    cs = classify_coeff_set({-1, 1})
    alpha = 0.6180339887498949
    choice = choose_truncation_order(P((1, -1, -1)), alpha, 1e-2, cs, Case.NEGATION)
    assert choice.R == 1e-2
    assert choice.B == 2
    assert choice.r == pytest.approx(alpha + 1e-2)
    assert choice.k % 2 == 0
    assert choice.B * choice.r ** (choice.k - 1) / (1 - choice.r) < choice.m


def test_choose_truncation_order_domain():
    cs = classify_coeff_set({-1, 1})
    with pytest.raises(DomainError):
        choose_truncation_order(P((1, -1, -1)), 1.618, 1e-2, cs, Case.NEGATION)
    with pytest.raises(DomainError):
        choose_truncation_order(P((1, -1, -1)), 0.618, 0, cs, Case.NEGATION)


def test_isolation_failure_when_circle_hits_a_zero():
    # alpha is not a zero here, and the circle passes through the zero at 0.5
    cs = classify_coeff_set({-2, -1, 1, 2})
    with pytest.raises(IsolationFailure):
        choose_truncation_order(P((1, -2)), 0.25, 0.25, cs, Case.NEGATION, roots=[5.0])
