import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import GF, Poly, symbols

from arith.ffpoly import (
    DensePoly,
    PrimeFieldElement,
    count_roots,
    field_arith,
    is_squarefree,
    poly_gcd,
    poly_mul,
    rational_roots,
    squarefree_part,
)
from models.exceptions import (
    InvalidModulusError,
    ModulusMismatchError,
    NotInvertibleError,
    PolynomialError,
)

t = symbols("t")

SMALL_PRIMES = [3, 5, 7, 11, 13]


def sympy_poly(values, p):
    return Poly(list(reversed(values)) or [0], t, domain=GF(p))


def as_values(poly: Poly, p: int):
    return tuple(int(c) % p for c in reversed(poly.all_coeffs())) if not poly.is_zero else ()


@st.composite
def polys(draw, p=None, max_degree=12):
    p = p or draw(st.sampled_from(SMALL_PRIMES))
    values = draw(st.lists(st.integers(0, p - 1), max_size=max_degree + 1))
    return DensePoly(values, p)


def test_field_mul():
    assert field_arith(PrimeFieldElement(3, 5), PrimeFieldElement(4, 5), "mul").value == 2


def test_field_inverse_of_one():
    one = PrimeFieldElement(1, 7)
    assert field_arith(one, one, "inv").value == 1


def test_fermat():
    three = PrimeFieldElement(3, 7)
    assert field_arith(three, three, "pow", exponent=6).value == 1


def test_inverse_of_zero_raises():
    zero = PrimeFieldElement(0, 7)
    with pytest.raises(NotInvertibleError):
        zero.inverse()
    with pytest.raises(ZeroDivisionError):
        PrimeFieldElement(3, 7) / zero


def test_modulus_mismatch():
    with pytest.raises(ModulusMismatchError):
        PrimeFieldElement(1, 7) + PrimeFieldElement(1, 11)
    with pytest.raises(ModulusMismatchError):
        DensePoly([1, 1], 7) * DensePoly([1, 1], 11)


@pytest.mark.parametrize("modulus", [0, 1, 2, 4, 9, -7])
def test_invalid_modulus(modulus):
    with pytest.raises(InvalidModulusError):
        PrimeFieldElement(1, modulus)


def test_poly_mul_examples():
    assert poly_mul(DensePoly([1, 1], 5), DensePoly([1, -1], 5)).values == (1, 0, 4)
    assert poly_mul(DensePoly([], 5), DensePoly([1, 2, 3], 5)).is_zero()
    assert poly_mul(DensePoly([1, 1], 3), DensePoly([1, 1], 3), degree_cap=1).values == (1, 2)


def test_str_of_zero():
    assert str(DensePoly.zero(11)) == "0"
    assert str(DensePoly([1, 0, 3], 11)) == "1 + 3*t^2"


@given(polys(), st.data())
def test_mul_matches_sympy(a, data):
    p = a.modulus
    b = data.draw(polys(p=p))
    expected = sympy_poly(a.values, p) * sympy_poly(b.values, p)
    assert (a * b).values == as_values(expected, p)


@pytest.mark.parametrize("p", [7, 101, 439])
def test_kronecker_product_matches_schoolbook(p):
    # long enough to take the packed-integer path
    a = DensePoly([(i * i + 3) % p for i in range(60)], p)
    b = DensePoly([(7 * i + 1) % p for i in range(45)], p)
    expected = [0] * (len(a.values) + len(b.values) - 1)
    for i, x in enumerate(a.values):
        for j, y in enumerate(b.values):
            expected[i + j] += x * y
    assert (a * b).values == DensePoly(expected, p).values
    assert a.mul(b, degree_cap=30).values == DensePoly(expected[:31], p).values


@given(polys(max_degree=8), st.integers(0, 12), st.integers(0, 20))
def test_truncated_power_is_prefix_of_full_power(f, e, cap):
    assert f.pow(e, degree_cap=cap) == (f ** e).truncate(cap)


def test_gcd_examples():
    assert poly_gcd(DensePoly([-1, 0, 1], 7), DensePoly([-1, 1], 7)).values == (6, 1)
    f = DensePoly([3, 0, 2], 7)
    assert poly_gcd(f, DensePoly.zero(7)) == f.monic()
    with pytest.raises(PolynomialError):
        poly_gcd(DensePoly.zero(7), DensePoly.zero(7))


def test_gcd_brute_force_mod_3():
    a = DensePoly([1, 0, 1], 3)
    b = DensePoly([0, 1, 1], 3)
    common = [
        d
        for d in (DensePoly(list(c) + [1], 3) for k in range(3) for c in _tuples(3, k))
        if (a % d).is_zero() and (b % d).is_zero()
    ]
    best = max(common, key=lambda d: d.degree)
    assert poly_gcd(a, b) == best


def _tuples(p, length):
    if length == 0:
        yield ()
        return
    for rest in _tuples(p, length - 1):
        for c in range(p):
            yield rest + (c,)


@given(polys(), st.data())
def test_gcd_matches_sympy(a, data):
    p = a.modulus
    b = data.draw(polys(p=p))
    if a.is_zero() and b.is_zero():
        return
    expected = sympy_poly(a.values, p).gcd(sympy_poly(b.values, p)).monic()
    assert poly_gcd(a, b).values == as_values(expected, p)


def test_squarefree_part_examples():
    d = DensePoly.from_roots([1, 1, 2], 7)
    assert squarefree_part(d) == DensePoly.from_roots([1, 2], 7)
    assert squarefree_part(d).degree == 2
    f = DensePoly.from_roots([0, 3, 5], 7)
    assert is_squarefree(f)
    assert squarefree_part(f) == f.monic()
    for p in (3, 5, 7):
        assert squarefree_part(DensePoly.monomial(p, p)) == DensePoly.monomial(1, p)
    with pytest.raises(PolynomialError):
        squarefree_part(DensePoly.zero(7))


def test_squarefree_part_multiplicity_divisible_by_p():
    # (t - 1)^5 (t - 2) mod 5: the first factor has multiplicity p
    d = DensePoly.from_roots([1] * 5 + [2], 5)
    assert squarefree_part(d) == DensePoly.from_roots([1, 2], 5)


@given(polys())
def test_squarefree_part_matches_sympy(d):
    if d.is_zero():
        return
    p = d.modulus
    factors = sympy_poly(d.values, p).factor_list()[1]
    assert squarefree_part(d).degree == sum(f.degree() for f, _ in factors)


def test_count_roots_examples():
    assert count_roots(DensePoly([-1, 0, 1], 7), "rational") == 2
    assert count_roots(DensePoly.from_roots([1, 1], 7), "closure") == 1
    t2_plus_1 = DensePoly([1, 0, 1], 7)
    assert count_roots(t2_plus_1, "rational") == 0
    assert count_roots(t2_plus_1, "closure") == 2
    assert rational_roots(t2_plus_1) == []
    with pytest.raises(PolynomialError):
        count_roots(DensePoly.zero(7))


@given(polys())
def test_rational_count_matches_evaluation(d):
    if d.is_zero():
        return
    assert count_roots(d, "rational") == len(rational_roots(d))


@given(polys())
def test_is_squarefree_matches_radical(d):
    if d.is_zero():
        return
    assert is_squarefree(d) == (squarefree_part(d).degree == d.degree)


def test_frobenius_and_pth_root():
    f = DensePoly([1, 2, 3], 5)
    assert f.frobenius() == f ** 5
    assert f.frobenius().pth_root() == f
    with pytest.raises(PolynomialError):
        f.pth_root()
