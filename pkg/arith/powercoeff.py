"""Coefficients c_r of f(x)^((p-1)/2) for f with coefficients in F_p[t].

Two independent routes are provided:

- `bipoly_pow_truncated`: square-and-multiply over F_p[t][x], dropping every
  x-degree above the cap after each product. A product coefficient at x-degree
  k only depends on factor coefficients at x-degrees <= k, so the kept part is
  exact.
- `multinomial_coeff_oracle`: the multinomial expansion of
  (x^5 - 5x^3 + 5x + (2 - 4t))^((p-1)/2), summed term by term.
"""

import logging
import time
from functools import lru_cache
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np

from arith import kronecker
from arith.ffpoly import DensePoly, check_modulus, is_squarefree
from arith.matrix import CoeffMatrixN
from models.exceptions import EvenDegreeError, InvalidPrimeError, ModulusMismatchError, NotSquarefreeError

logger = logging.getLogger(__name__)


class BiPoly:
    """Polynomial in x whose coefficients are polynomials in t over F_p.

    Stored as an int64 residue grid: row = power of x, column = power of t.
    """

    __slots__ = ("_grid", "modulus")

    def __init__(self, x_coefficients: Sequence[Union[DensePoly, Sequence[int]]], modulus: int):
        self.modulus = check_modulus(modulus)
        rows = []
        for c in x_coefficients:
            if isinstance(c, DensePoly):
                if c.modulus != modulus:
                    raise ModulusMismatchError(modulus, c.modulus)
                rows.append(list(c.values))
            else:
                rows.append([int(v) % modulus for v in c])
        width = max((len(r) for r in rows), default=0)
        grid = np.zeros((len(rows), width), dtype=np.int64)
        for i, r in enumerate(rows):
            grid[i, : len(r)] = r
        self._grid = _normalize(grid)

    @classmethod
    def from_grid(cls, grid: np.ndarray, modulus: int) -> "BiPoly":
        poly = cls.__new__(cls)
        poly.modulus = modulus
        poly._grid = _normalize(grid)
        return poly

    @classmethod
    def one(cls, modulus: int) -> "BiPoly":
        return cls.from_grid(np.ones((1, 1), dtype=np.int64), modulus)

    @classmethod
    def constant_in_t(cls, f: DensePoly) -> "BiPoly":
        """Lift a polynomial in x with F_p coefficients."""
        return cls([[v] for v in f.values], f.modulus)

    @property
    def grid(self) -> np.ndarray:
        return self._grid.copy()

    @property
    def x_degree(self) -> int:
        return self._grid.shape[0] - 1

    @property
    def t_degree(self) -> int:
        return self._grid.shape[1] - 1

    @property
    def x_coefficients(self) -> List[DensePoly]:
        return [DensePoly(row.tolist(), self.modulus) for row in self._grid]

    def is_zero(self) -> bool:
        return self._grid.shape[0] == 0

    def coefficient(self, r: int) -> DensePoly:
        """The coefficient of x^r as a polynomial in t (zero out of range)."""
        if 0 <= r < self._grid.shape[0]:
            return DensePoly(self._grid[r].tolist(), self.modulus)
        return DensePoly.zero(self.modulus)

    def truncate(self, x_cap: int) -> "BiPoly":
        return BiPoly.from_grid(self._grid[: x_cap + 1], self.modulus)

    def mul(self, other: "BiPoly", x_cap: Optional[int] = None) -> "BiPoly":
        """Product, keeping x-degrees <= x_cap when a cap is given."""
        if other.modulus != self.modulus:
            raise ModulusMismatchError(self.modulus, other.modulus)
        p = self.modulus
        a, b = self._grid, other._grid
        if x_cap is not None:
            a, b = a[: x_cap + 1], b[: x_cap + 1]
        if a.size == 0 or b.size == 0:
            return BiPoly.from_grid(np.zeros((0, 0), dtype=np.int64), p)
        rows = a.shape[0] + b.shape[0] - 1
        if x_cap is not None:
            rows = min(rows, x_cap + 1)
        # Kronecker substitution in two variables: pad every t-row to the
        # product's t-length so no t-carry reaches the next x-row.
        stride = a.shape[1] + b.shape[1] - 1
        flat_a = np.zeros((a.shape[0], stride), dtype=np.int64)
        flat_a[:, : a.shape[1]] = a
        flat_b = np.zeros((b.shape[0], stride), dtype=np.int64)
        flat_b[:, : b.shape[1]] = b
        pairs = min(a.shape[0], b.shape[0]) * min(a.shape[1], b.shape[1])
        product = kronecker.multiply(
            flat_a.ravel(), flat_b.ravel(), p, length=rows * stride, pair_count=pairs
        )
        return BiPoly.from_grid(product.reshape(rows, stride), p)

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        return self.mul(other)

    def specialize(self, t0: int) -> DensePoly:
        """The polynomial in x obtained by setting t = t0."""
        p = self.modulus
        return DensePoly([DensePoly(row.tolist(), p).evaluate(t0) for row in self._grid], p)

    def evaluate_x(self, x0: int) -> DensePoly:
        """The polynomial in t obtained by setting x = x0."""
        p = self.modulus
        acc = DensePoly.zero(p)
        for row in self._grid[::-1]:
            acc = acc.scale(x0) + DensePoly(row.tolist(), p)
        return acc

    def shift_root_to_infinity(self, root: int) -> "BiPoly":
        """u^n * f(root + 1/u) for n = deg_x f, i.e. the coefficient reversal of f(x + root).

        When f(root) = 0 the result has x-degree n - 1.
        """
        p = self.modulus
        n = self.x_degree
        shifted = [DensePoly.zero(p) for _ in range(n + 1)]
        # f(x + r) = sum_k a_k (x + r)^k, expanded with binomials
        for k, a_k in enumerate(self.x_coefficients):
            binom = 1
            for j in range(k + 1):
                shifted[j] = shifted[j] + a_k.scale(binom * pow(root, k - j, p))
                binom = binom * (k - j) // (j + 1)
        return BiPoly(shifted[::-1], p)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.modulus == other.modulus and np.array_equal(self._grid, other._grid)

    def __repr__(self) -> str:
        return f"BiPoly(x-degree={self.x_degree}, t-degree={self.t_degree}, p={self.modulus})"


def _normalize(grid: np.ndarray) -> np.ndarray:
    grid = np.asarray(grid, dtype=np.int64)
    if grid.ndim != 2 or grid.size == 0:
        return np.zeros((0, 0), dtype=np.int64)
    nonzero_rows = np.flatnonzero(grid.any(axis=1))
    if nonzero_rows.size == 0:
        return np.zeros((0, 0), dtype=np.int64)
    grid = grid[: nonzero_rows[-1] + 1]
    nonzero_cols = np.flatnonzero(grid.any(axis=0))
    return np.ascontiguousarray(grid[:, : nonzero_cols[-1] + 1])


def bipoly_pow_truncated(f: BiPoly, e: int, x_cap: int) -> BiPoly:
    """f^e with every x-degree above x_cap dropped (exact below the cap)."""
    if x_cap < 0:
        raise ValueError("x_cap must be non-negative")
    if e < 0:
        raise ValueError("Exponent must be non-negative")
    started = time.perf_counter()
    result = BiPoly.one(f.modulus)
    base = f.truncate(x_cap)
    exponent = e
    while exponent:
        if exponent & 1:
            result = result.mul(base, x_cap)
        exponent >>= 1
        if exponent:
            base = base.mul(base, x_cap)
    logger.debug(
        "f^%d mod %d truncated at x^%d: grid %s in %.3fs",
        e, f.modulus, x_cap, result.grid.shape, time.perf_counter() - started,
    )
    return result


def is_generically_squarefree(f: BiPoly) -> bool:
    """Whether f is squarefree in x over F_p(t).

    Checked by specialisation: one t0 in F_p keeping the x-degree with a
    squarefree fibre is a witness. Values are tried in order 0, 1, 2, ...
    """
    leading = f.coefficient(f.x_degree)
    for t0 in range(f.modulus):
        if leading.evaluate(t0).value == 0:
            continue
        if is_squarefree(f.specialize(t0)):
            return True
    return False


def extract_coeff_entries(f: BiPoly, p: int, g: int) -> CoeffMatrixN:
    """The parametric matrix N with (i, j) entry c_{ip-j}(t), 1 <= i, j <= g."""
    if f.modulus != p:
        raise ModulusMismatchError(p, f.modulus)
    if f.x_degree % 2 == 0:
        raise EvenDegreeError(
            f"Defining polynomial has even x-degree {f.x_degree}; "
            "reduce it with odd_degree_model first"
        )
    if f.x_degree != 2 * g + 1:
        raise ValueError(f"x-degree {f.x_degree} does not match genus {g}")
    if not is_generically_squarefree(f):
        raise NotSquarefreeError("Defining polynomial is not squarefree in x")
    power = bipoly_pow_truncated(f, (p - 1) // 2, g * p - 1)
    rows = [[power.coefficient(i * p - j) for j in range(1, g + 1)] for i in range(1, g + 1)]
    return CoeffMatrixN(rows, p, g)


class MultinomialTerm(NamedTuple):
    a: int
    b: int
    c: int
    d: int
    coefficient: int  # (a, b, c, d)! mod p

    @property
    def x_degree(self) -> int:
        return 5 * self.a + 3 * self.b + self.c


@lru_cache(maxsize=64)
def factorial_tables(p: int) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Factorials and inverse factorials mod p of 0..(p-1)/2."""
    e = (p - 1) // 2
    fact = [1] * (e + 1)
    for i in range(1, e + 1):
        fact[i] = fact[i - 1] * i % p
    inv_fact = [1] * (e + 1)
    inv_fact[e] = pow(fact[e], -1, p)
    for i in range(e, 0, -1):
        inv_fact[i - 1] = inv_fact[i] * i % p
    return tuple(fact), tuple(inv_fact)


def multinomial_terms(p: int, r: int) -> Iterator[MultinomialTerm]:
    """All (a, b, c, d) with a+b+c+d = (p-1)/2 and 5a+3b+c = r."""
    e = (p - 1) // 2
    fact, inv_fact = factorial_tables(p)
    for a in range(min(e, r // 5) + 1):
        for b in range(min(e - a, (r - 5 * a) // 3) + 1):
            c = r - 5 * a - 3 * b
            d = e - a - b - c
            if c < 0 or d < 0:
                continue
            coefficient = fact[e] * inv_fact[a] % p * inv_fact[b] % p * inv_fact[c] % p * inv_fact[d] % p
            yield MultinomialTerm(a, b, c, d, coefficient)


def multinomial_coeff_oracle(p: int, r: int) -> DensePoly:
    """Coefficient of x^r in (x^5 - 5x^3 + 5x + (2 - 4t))^((p-1)/2), term by term."""
    if p <= 5:
        raise InvalidPrimeError(f"Multinomial oracle needs p > 5, got {p}")
    check_modulus(p)
    e = (p - 1) // 2
    if r < 0 or r > 5 * e:
        return DensePoly.zero(p)
    # weights[d] multiplies (2 - 4t)^d
    weights = [0] * (e + 1)
    for term in multinomial_terms(p, r):
        sign = -1 if term.b % 2 else 1
        weights[term.d] = (weights[term.d] + sign * term.coefficient * pow(5, term.b + term.c, p)) % p
    constant_term = DensePoly((2, -4), p)
    acc = DensePoly.zero(p)
    for w in reversed(weights):
        acc = acc * constant_term + w
    return acc


def coefficient_at(f: BiPoly, p: int, r: int) -> DensePoly:
    """c_r of f^((p-1)/2) via the truncated power."""
    return bipoly_pow_truncated(f, (p - 1) // 2, r).coefficient(r)
