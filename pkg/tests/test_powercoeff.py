import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from arith.ffpoly import DensePoly
from arith.powercoeff import (
    BiPoly,
    bipoly_pow_truncated,
    coefficient_at,
    extract_coeff_entries,
    multinomial_coeff_oracle,
    multinomial_terms,
)
from curves import families
from models.exceptions import EvenDegreeError, InvalidPrimeError, NotSquarefreeError
from models.pydantic_models import Sign

PRIMES_UP_TO_101 = [7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101]


def quintic(p):
    return families.family_polynomial(Sign.MINUS, p)


@st.composite
def bipolys(draw, p):
    rows = draw(
        st.lists(st.lists(st.integers(0, p - 1), min_size=1, max_size=4), min_size=1, max_size=5)
    )
    return BiPoly(rows, p)


def test_zero_exponent_is_one():
    assert bipoly_pow_truncated(quintic(7), 0, 20) == BiPoly.one(7)


def test_first_power_is_truncation():
    f = quintic(7)
    assert bipoly_pow_truncated(f, 1, 3) == f.truncate(3)
    assert bipoly_pow_truncated(f, 1, 10) == f


@given(bipolys(7), bipolys(7), st.integers(0, 8))
def test_capped_product_is_prefix(a, b, cap):
    assert a.mul(b, x_cap=cap) == (a * b).truncate(cap)


@given(bipolys(11), st.integers(0, 6), st.integers(0, 12))
def test_truncated_power_is_exact_below_cap(f, e, cap):
    full = BiPoly.one(11)
    for _ in range(e):
        full = full * f
    assert bipoly_pow_truncated(f, e, cap) == full.truncate(cap)


@given(bipolys(13), st.integers(0, 12))
def test_specialisation_commutes_with_multiplication(f, t0):
    g = BiPoly([[1, 2], [0, 0, 3], [5]], 13)
    assert (f * g).specialize(t0) == f.specialize(t0) * g.specialize(t0)


def test_oracle_top_degree():
    assert multinomial_coeff_oracle(7, 15) == DensePoly.constant(1, 7)


def test_oracle_degree_for_p_11():
    assert multinomial_coeff_oracle(11, 10).degree == 3


def test_oracle_out_of_range_is_zero():
    assert multinomial_coeff_oracle(11, -1).is_zero()
    assert multinomial_coeff_oracle(11, 26).is_zero()


def test_oracle_rejects_small_primes():
    with pytest.raises(InvalidPrimeError):
        multinomial_coeff_oracle(5, 3)


def test_multinomial_terms_cover_the_exponent():
    p, r = 13, 12
    e = (p - 1) // 2
    terms = list(multinomial_terms(p, r))
    assert terms
    for term in terms:
        assert term.a + term.b + term.c + term.d == e
        assert term.x_degree == r


@pytest.mark.parametrize("p", PRIMES_UP_TO_101)
def test_power_and_oracle_agree(p):
    f = quintic(p)
    power = bipoly_pow_truncated(f, (p - 1) // 2, 2 * p - 1)
    for r in (p - 2, p - 1, 2 * p - 2, 2 * p - 1):
        assert power.coefficient(r) == multinomial_coeff_oracle(p, r), r


@pytest.mark.parametrize("p", [7, 11, 13, 31])
def test_entry_degree_bound(p):
    # c_r of (x^5 - 5x^3 + 5x + 2 - 4t)^((p-1)/2) has t-degree <= (p-1)/2 - ceil(r/5)
    e = (p - 1) // 2
    for r in (p - 2, p - 1, 2 * p - 2, 2 * p - 1):
        assert coefficient_at(quintic(p), p, r).degree <= e - (r + 4) // 5


def test_extract_entries_for_p_11():
    N = extract_coeff_entries(quintic(11), 11, 2)
    assert N.entry(1, 2).is_zero() and N.entry(2, 1).is_zero()
    assert N.entry(1, 1).degree == 3
    assert N.entry(2, 2).degree == 1


@pytest.mark.parametrize("p, expected", [(7, 0), (5, 2)])
def test_extract_genus_one_constant_curve(p, expected):
    # y^2 = x^3 + x lifted to F_p[t][x]: the single entry is c_{p-1}
    f = BiPoly.constant_in_t(DensePoly([0, 1, 0, 1], p))
    N = extract_coeff_entries(f, p, 1)
    assert N.evaluate(0).to_ints() == [[expected]]
    assert N.evaluate(p - 1).to_ints() == [[expected]]


def test_extract_rejects_even_degree():
    with pytest.raises(EvenDegreeError, match="odd_degree_model"):
        extract_coeff_entries(families.family_polynomial(Sign.PLUS, 7), 7, 2)


def test_extract_rejects_non_squarefree():
    # x (x^2 + t)^2 has a repeated factor for every t
    square = BiPoly([[], [0, 0, 1], [], [0, 2], [], [1]], 7)
    with pytest.raises(NotSquarefreeError):
        extract_coeff_entries(square, 7, 2)


def test_root_at_infinity_for_plus_family():
    p = 7
    model = families.odd_family_polynomial(Sign.PLUS, p)
    assert model.x_degree == 5
    # leading coefficient f'(-2) = -4t
    assert model.coefficient(5) == DensePoly([0, -4], p)
    for t0 in range(2, p):
        assert model.specialize(t0).degree == 5


def test_grid_normalisation():
    f = BiPoly([[1, 0, 0], [0], [0, 0]], 7)
    assert f.grid.shape == (1, 1)
    assert np.array_equal(BiPoly([], 7).grid, np.zeros((0, 0), dtype=np.int64))
