"""Cartier-Manin data of hyperelliptic curves y^2 = f(x) over F_p.

The coefficient matrix N = (c_{ip-j}) of f^((p-1)/2) is the entrywise p-th
power of the Cartier-Manin matrix M, so every classification below reads N:

- det N != 0                   <=> the Jacobian is ordinary
- N = 0                        <=> the Jacobian is a product of supersingular elliptic curves
- g = 2 and N^(p) N = 0        <=> the Jacobian is supersingular
- p-rank <= rank N

All predicates are invariant under the semilinear change of basis
N -> (U^(p))^-1 N U.
"""

from typing import Tuple, Union

from arith.ffpoly import DensePoly, PrimeFieldElement, is_squarefree
from arith.matrix import CoeffMatrixN
from models.exceptions import (
    CurveError,
    EvenDegreeError,
    ModulusMismatchError,
    NotARootError,
    NotSquarefreeError,
)
from models.pydantic_models import Classification, CurveType


class CurveModel:
    """y^2 = f(x) with f squarefree of odd degree 2g + 1 over F_p."""

    __slots__ = ("f", "genus")

    def __init__(self, f: DensePoly):
        if f.degree < 3:
            raise CurveError(f"Degree {f.degree} does not define a curve of genus >= 1")
        if f.degree % 2 == 0:
            raise EvenDegreeError(
                f"Degree {f.degree} is even; use odd_degree_model with a rational root"
            )
        if not is_squarefree(f):
            raise NotSquarefreeError(f"{f!r} has a repeated root", polynomial=f)
        self.f = f
        self.genus = (f.degree - 1) // 2

    @property
    def modulus(self) -> int:
        return self.f.modulus

    @property
    def f_coefficients(self) -> Tuple[PrimeFieldElement, ...]:
        return self.f.coefficients

    def __repr__(self) -> str:
        return f"CurveModel(y^2 = {self.f!r}, g={self.genus})"


def odd_degree_model(f: DensePoly, r: Union[int, PrimeFieldElement]) -> CurveModel:
    """Move the rational root r of a degree-(2g+2) polynomial to infinity.

    Returns u^(2g+2) f(r + 1/u), of degree 2g + 1; odd-degree input passes through.
    """
    if f.degree % 2 == 1:
        return CurveModel(f)
    if f.evaluate(r).value != 0:
        raise NotARootError(f"{int(r)} is not a root of {f!r}")
    if not is_squarefree(f):
        raise NotSquarefreeError(f"{f!r} has a repeated root", polynomial=f)
    model = f.taylor_shift(r).reversed(f.degree)
    if model.degree != f.degree - 1 or not is_squarefree(model):
        raise NotSquarefreeError("Odd-degree model is not squarefree", polynomial=model)
    return CurveModel(model)


def coeff_matrix(curve: CurveModel, p: int) -> CoeffMatrixN:
    """N with (i, j) entry the coefficient of x^(ip-j) in f^((p-1)/2)."""
    if curve.modulus != p:
        raise ModulusMismatchError(p, curve.modulus)
    g = curve.genus
    power = curve.f.pow((p - 1) // 2, degree_cap=g * p - 1)
    rows = [
        [PrimeFieldElement(power.coefficient(i * p - j), p) for j in range(1, g + 1)]
        for i in range(1, g + 1)
    ]
    return CoeffMatrixN(rows, p, g)


def p_rank_bound(N: CoeffMatrixN) -> int:
    """rank N over F_p, an upper bound for the p-rank."""
    return N.rank()


def p_rank(N: CoeffMatrixN) -> int:
    """The p-rank, rank of N^(p^(g-1)) ... N^(p) N."""
    product = N
    twist = N
    for _ in range(N.genus - 1):
        twist = twist.frobenius_twist()
        product = twist @ product
    return product.rank()


def is_supersingular_genus2(N: CoeffMatrixN) -> bool:
    if N.genus != 2:
        raise CurveError("The N^(p) N criterion applies to genus 2 only")
    return (N.frobenius_twist() @ N).is_zero()


def classify(N: CoeffMatrixN) -> Classification:
    """Classify the Jacobian from the coefficient matrix over F_p."""
    if N.is_parametric:
        raise CurveError("Classification needs a matrix over F_p; evaluate at a parameter first")
    g = N.genus
    rank = p_rank_bound(N)
    if rank == g:
        tag, supersingular = CurveType.ORDINARY, False
    elif N.is_zero():
        tag, supersingular = CurveType.PRODUCT_OF_SUPERSINGULAR_EC, True
    elif g == 2 and is_supersingular_genus2(N):
        tag, supersingular = CurveType.SUPERSINGULAR, True
    else:
        # for g > 2, N^(p) N = 0 alone does not decide supersingularity
        tag, supersingular = CurveType.NON_ORDINARY_OTHER, (False if g <= 2 else None)
    return Classification(
        tag=tag,
        genus=g,
        p_rank_upper_bound=rank,
        p_rank=p_rank(N),
        supersingular=supersingular,
    )


def classify_curve(curve: CurveModel) -> Classification:
    return classify(coeff_matrix(curve, curve.modulus))
