"""The one-parameter families with real multiplication by Z[(1+sqrt 5)/2]:

    C-(t): y^2 = x^5 - 5x^3 + 5x + 2 - 4t
    C+(t): y^2 = (x + 2)(x^5 - 5x^3 + 5x + 2 - 4t)

C+ is handled through its odd-degree model at the root x = -2.
"""

import logging
from collections import Counter
from functools import lru_cache
from typing import List, Optional, Union

from sympy import isprime

from arith.ffpoly import DensePoly, count_roots, is_squarefree
from arith.matrix import CoeffMatrixN
from arith.powercoeff import BiPoly, extract_coeff_entries
from curves.cartier import CurveModel, classify, coeff_matrix, odd_degree_model
from models.exceptions import CurveError, InvalidPrimeError, NotSquarefreeError, SplitClassError
from models.pydantic_models import (
    CurveType,
    DdtReport,
    FamilySpec,
    LemmaReport,
    RemarkReport,
    ScanEntry,
    ScanReport,
    ShapeKind,
    ShapeReport,
    Sign,
    SplitClass,
    VanishingPair,
)

logger = logging.getLogger(__name__)

PLUS_ROOT = -2
GENUS = 2

# Tags compatible with "either supersingular or ordinary".
DICHOTOMY_TAGS = {
    CurveType.ORDINARY.value,
    CurveType.SUPERSINGULAR.value,
    CurveType.PRODUCT_OF_SUPERSINGULAR_EC.value,
}

SignLike = Union[Sign, str]


def check_family_prime(p: int) -> int:
    if not isinstance(p, int) or p <= 5 or not isprime(p):
        raise InvalidPrimeError(f"The families need a prime p > 5, got {p}")
    return p


def split_class(p: int) -> SplitClass:
    """Splitting of p in Q(sqrt 5): split for p = 1, 4 mod 5, inert for p = 2, 3 mod 5."""
    residue = p % 5
    if residue == 0:
        raise InvalidPrimeError("p = 5 ramifies in Q(sqrt 5)")
    return SplitClass.SPLIT if residue in (1, 4) else SplitClass.INERT


def family_spec(sign: SignLike, p: int) -> FamilySpec:
    check_family_prime(p)
    return FamilySpec(sign=Sign(sign), p=p, split_class=split_class(p))


def designated_root(sign: SignLike) -> Optional[int]:
    """The rational x-root used for the odd-degree model (C+ only)."""
    return PLUS_ROOT if Sign(sign) is Sign.PLUS else None


def family_polynomial(sign: SignLike, p: int) -> BiPoly:
    """The defining polynomial over F_p[t]; degree 5 for C-, degree 6 for C+."""
    check_family_prime(p)
    quintic = BiPoly([(2, -4), (5,), (), (-5,), (), (1,)], p)
    if Sign(sign) is Sign.MINUS:
        return quintic
    linear = BiPoly([(2,), (1,)], p)
    return linear * quintic


def odd_family_polynomial(sign: SignLike, p: int) -> BiPoly:
    """Degree-5 model over F_p[t]; for C+ the root -2 is moved to infinity."""
    f = family_polynomial(sign, p)
    if Sign(sign) is Sign.PLUS:
        return f.shift_root_to_infinity(PLUS_ROOT)
    return f


def is_degenerate(sign: SignLike, p: int, t0: int) -> bool:
    """Whether the fibre at t0 is singular (f(x, t0) has a repeated root)."""
    return not is_squarefree(family_polynomial(sign, p).specialize(t0))


def degenerate_parameters(sign: SignLike, p: int) -> List[int]:
    return [t0 for t0 in range(p) if is_degenerate(sign, p, t0)]


def curve_model_at(sign: SignLike, p: int, t0: int) -> CurveModel:
    f = family_polynomial(sign, p).specialize(t0)
    if not is_squarefree(f):
        raise NotSquarefreeError(
            f"t0={t0 % p} is degenerate: f(x, {t0 % p}) has a repeated root mod {p}", polynomial=f
        )
    if Sign(sign) is Sign.PLUS:
        return odd_degree_model(f, PLUS_ROOT)
    return CurveModel(f)


@lru_cache(maxsize=128)
def _parametric(sign: Sign, p: int) -> CoeffMatrixN:
    return extract_coeff_entries(odd_family_polynomial(sign, p), p, GENUS)


def parametric_coeff_matrix(sign: SignLike, p: int) -> CoeffMatrixN:
    """Entries c_{p-1}, c_{p-2}, c_{2p-1}, c_{2p-2} as polynomials in t."""
    check_family_prime(p)
    return _parametric(Sign(sign), p)


def _corollary_holds(N: CoeffMatrixN, sign: Sign, p: int) -> bool:
    for t0 in range(p):
        if is_degenerate(sign, p, t0):
            continue
        if classify(N.evaluate(t0)).tag not in DICHOTOMY_TAGS:
            return False
    return True


def verify_shape(sign: SignLike, p: int) -> ShapeReport:
    """Check the claimed matrix shape as a polynomial identity in t.

    C- shapes are theorems and reported as asserted; C+ shapes are tested in
    the odd-model basis and only recorded.
    """
    sign = Sign(sign)
    N = parametric_coeff_matrix(sign, p)
    cls = split_class(p)
    a, b = N.entry(1, 1), N.entry(1, 2)
    c, d = N.entry(2, 1), N.entry(2, 2)

    def index(i: int, j: int) -> int:
        return CoeffMatrixN.coefficient_index(i, j, p)

    if sign is Sign.MINUS:
        if cls is SplitClass.SPLIT:
            shape = ShapeKind.DIAGONAL
            failures = [index(1, 2)] * bool(b) + [index(2, 1)] * bool(c)
        else:
            shape = ShapeKind.ANTIDIAGONAL
            failures = [index(1, 1)] * bool(a) + [index(2, 2)] * bool(d)
    elif cls is SplitClass.SPLIT:
        shape = ShapeKind.UPPER_WITH_TIE
        failures = [index(2, 1)] * bool(c) + [index(1, 2)] * (b != d - a)
    else:
        shape = ShapeKind.INERT_PLUS
        failures = [index(2, 1)] * (c != a) + [index(2, 2)] * (d != -a)

    report = ShapeReport(
        p=p,
        sign=sign,
        split_class=cls,
        claimed_shape=shape,
        holds_identically=not failures,
        witness=failures[0] if failures else None,
        asserted=sign is Sign.MINUS,
        corollary_holds=_corollary_holds(N, sign, p) if cls is SplitClass.INERT else None,
    )
    if not report.holds_identically:
        log = logger.warning if report.asserted else logger.info
        log("Shape %s fails for %s, p=%d at c_%d", shape.value, sign.value, p, report.witness)
    return report


def congruence_remark_check(p: int) -> RemarkReport:
    """Which coefficient pair of (x^5 - 5x^3 + 5x + 2 - 4t)^((p-1)/2) vanishes mod p.

    The printed case assignment is split -> (c_{p-1}, c_{2p-2}) and
    inert -> (c_{p-2}, c_{2p-1}); the comparison is reported, not enforced.
    """
    N = parametric_coeff_matrix(Sign.MINUS, p)
    cls = split_class(p)
    diagonal_zero = N.entry(1, 1).is_zero() and N.entry(2, 2).is_zero()
    antidiagonal_zero = N.entry(1, 2).is_zero() and N.entry(2, 1).is_zero()
    vanishing = None
    if diagonal_zero and not antidiagonal_zero:
        vanishing = VanishingPair.DIAGONAL
    elif antidiagonal_zero and not diagonal_zero:
        vanishing = VanishingPair.ANTIDIAGONAL
    printed = VanishingPair.DIAGONAL if cls is SplitClass.SPLIT else VanishingPair.ANTIDIAGONAL
    return RemarkReport(
        p=p,
        split_class=cls,
        vanishing_pair=vanishing,
        printed_pair=printed,
        matches_remark_as_printed=vanishing is printed,
    )


def determinant_polynomial(p: int) -> DensePoly:
    """d(t) = det N(t) for C-."""
    return parametric_coeff_matrix(Sign.MINUS, p).determinant()


def ddt(p: int) -> DdtReport:
    d = determinant_polynomial(p)
    if d.is_zero():
        raise CurveError(f"d(t) vanishes identically for p={p}")
    return DdtReport(
        p=p,
        modulus=p,
        d=list(d.values),
        degree=d.degree,
        distinct_roots_closure=count_roots(d, "closure"),
        rational_roots=count_roots(d, "rational"),
        leading_coeff=d.leading_coefficient.value,
    )


def lemma_degrees(p: int) -> LemmaReport:
    """Observed and predicted t-degrees of the diagonal entries for split p."""
    check_family_prime(p)
    if split_class(p) is not SplitClass.SPLIT:
        raise SplitClassError(f"The degree formulas cover split primes only, got p={p}")
    if p % 5 == 1:
        k, case = (p - 1) // 5, "5k+1"
        expected_a, expected_b = 3 * k // 2, k // 2
    else:
        k, case = (p + 1) // 5, "5k-1"
        expected_a, expected_b = 3 * k // 2 - 1, k // 2 - 1
    N = parametric_coeff_matrix(Sign.MINUS, p)
    observed_a, observed_b = N.entry(1, 1).degree, N.entry(2, 2).degree
    return LemmaReport(
        p=p,
        k=k,
        case=case,
        expected_deg_a=expected_a,
        observed_deg_a=observed_a,
        expected_deg_b=expected_b,
        observed_deg_b=observed_b,
        deg_d=determinant_polynomial(p).degree,
        holds=observed_a == expected_a and observed_b == expected_b,
    )


def degree_lemma_check(p: int) -> bool:
    return lemma_degrees(p).holds


def scan_family(sign: SignLike, p: int) -> ScanReport:
    """Classify every fibre t0 in F_p, recording singular fibres separately."""
    sign = Sign(sign)
    check_family_prime(p)
    cls = split_class(p)
    entries = []
    exceptional = []
    for t0 in range(p):
        try:
            curve = curve_model_at(sign, p, t0)
        except NotSquarefreeError:
            logger.info("Skipping degenerate fibre t0=%d of %s mod %d", t0, sign.value, p)
            exceptional.append(t0)
            entries.append(ScanEntry(t0=t0, degenerate=True))
            continue
        N = coeff_matrix(curve, p)
        classification = classify(N)
        entries.append(
            ScanEntry(
                t0=t0,
                degenerate=False,
                tag=classification.tag,
                determinant=N.determinant().value,
                p_rank=classification.p_rank,
            )
        )
    counts = Counter({tag.value: 0 for tag in CurveType})
    counts.update(e.tag for e in entries if not e.degenerate)
    dichotomy = None
    if cls is SplitClass.INERT:
        dichotomy = all(e.tag in DICHOTOMY_TAGS for e in entries if not e.degenerate)
    return ScanReport(
        p=p,
        sign=sign,
        split_class=cls,
        entries=entries,
        counts=dict(counts),
        exceptional_t0=exceptional,
        dichotomy_holds=dichotomy,
    )
