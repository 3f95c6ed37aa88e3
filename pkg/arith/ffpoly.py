"""Arithmetic in F_p and dense univariate polynomials over F_p.

Polynomials are stored lowest degree first with residues as plain ints;
`DensePoly.coefficients` exposes them as PrimeFieldElement values.
"""

from functools import lru_cache
from typing import Iterable, List, Tuple, Union

import numpy as np
from sympy import isprime

from arith import kronecker
from models.exceptions import (
    InvalidModulusError,
    ModulusMismatchError,
    NotInvertibleError,
    PolynomialError,
)

MAX_MODULUS = 2 ** 62

# Below this length schoolbook products beat the packing overhead.
_KRONECKER_THRESHOLD = 24


@lru_cache(maxsize=None)
def check_modulus(modulus: int) -> int:
    """Validate that `modulus` is an odd prime below 2^62 and return it."""
    if not isinstance(modulus, int) or isinstance(modulus, bool):
        raise InvalidModulusError(f"Modulus must be an integer, got {modulus!r}")
    if modulus <= 2 or modulus >= MAX_MODULUS:
        raise InvalidModulusError(f"Modulus must be an odd prime below 2^62, got {modulus}")
    if not isprime(modulus):
        raise InvalidModulusError(f"Modulus {modulus} is not prime")
    return modulus


class PrimeFieldElement:
    """A residue modulo an odd prime p."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        self.modulus = check_modulus(int(modulus))
        self.value = int(value) % self.modulus

    def _coerce(self, other: Union["PrimeFieldElement", int]) -> int:
        if isinstance(other, PrimeFieldElement):
            if other.modulus != self.modulus:
                raise ModulusMismatchError(self.modulus, other.modulus)
            return other.value
        if isinstance(other, int):
            return other % self.modulus
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return PrimeFieldElement(self.value + v, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return PrimeFieldElement(self.value - v, self.modulus)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return PrimeFieldElement(v - self.value, self.modulus)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return PrimeFieldElement(self.value * v, self.modulus)

    __rmul__ = __mul__

    def __neg__(self) -> "PrimeFieldElement":
        return PrimeFieldElement(-self.value, self.modulus)

    def inverse(self) -> "PrimeFieldElement":
        if self.value == 0:
            raise NotInvertibleError(f"0 has no inverse modulo {self.modulus}")
        return PrimeFieldElement(pow(self.value, -1, self.modulus), self.modulus)

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return self * PrimeFieldElement(v, self.modulus).inverse()

    def __pow__(self, exponent: int) -> "PrimeFieldElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return PrimeFieldElement(pow(self.value, exponent, self.modulus), self.modulus)

    def __eq__(self, other) -> bool:
        if isinstance(other, PrimeFieldElement):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.modulus))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"PrimeFieldElement({self.value} mod {self.modulus})"


def field_arith(a: PrimeFieldElement, b: PrimeFieldElement, op: str, exponent: int = 0) -> PrimeFieldElement:
    """Apply `op` (add, sub, mul, inv, pow) to field elements; `b` is ignored by inv and pow."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    if op == "pow":
        return a ** exponent
    raise ValueError(f"Unknown field operation: {op}")


Coefficient = Union[int, PrimeFieldElement]


def _residue(c: Coefficient, modulus: int) -> int:
    if isinstance(c, PrimeFieldElement):
        if c.modulus != modulus:
            raise ModulusMismatchError(modulus, c.modulus)
        return c.value
    return int(c) % modulus


def _strip(values: List[int]) -> Tuple[int, ...]:
    end = len(values)
    while end and values[end - 1] == 0:
        end -= 1
    return tuple(values[:end])


class DensePoly:
    """Univariate polynomial over F_p, coefficients lowest degree first."""

    __slots__ = ("_values", "modulus")

    def __init__(self, coefficients: Iterable[Coefficient], modulus: int):
        self.modulus = check_modulus(int(modulus))
        self._values = _strip([_residue(c, self.modulus) for c in coefficients])

    @classmethod
    def _raw(cls, values: Tuple[int, ...], modulus: int) -> "DensePoly":
        # values are already reduced and stripped
        poly = cls.__new__(cls)
        poly.modulus = modulus
        poly._values = values
        return poly

    @classmethod
    def zero(cls, modulus: int) -> "DensePoly":
        return cls((), modulus)

    @classmethod
    def constant(cls, c: Coefficient, modulus: int) -> "DensePoly":
        return cls((c,), modulus)

    @classmethod
    def monomial(cls, degree: int, modulus: int, coefficient: Coefficient = 1) -> "DensePoly":
        return cls([0] * degree + [coefficient], modulus)

    @classmethod
    def from_roots(cls, roots: Iterable[int], modulus: int) -> "DensePoly":
        result = cls.constant(1, modulus)
        for r in roots:
            result = result * cls((-r, 1), modulus)
        return result

    @property
    def values(self) -> Tuple[int, ...]:
        return self._values

    @property
    def coefficients(self) -> Tuple[PrimeFieldElement, ...]:
        return tuple(PrimeFieldElement(v, self.modulus) for v in self._values)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._values) - 1

    @property
    def leading_coefficient(self) -> PrimeFieldElement:
        return PrimeFieldElement(self._values[-1] if self._values else 0, self.modulus)

    def is_zero(self) -> bool:
        return not self._values

    def is_constant(self) -> bool:
        return len(self._values) <= 1

    def is_monic(self) -> bool:
        return bool(self._values) and self._values[-1] == 1

    def coefficient(self, k: int) -> int:
        return self._values[k] if 0 <= k < len(self._values) else 0

    def to_array(self) -> np.ndarray:
        return np.array(self._values, dtype=np.int64)

    def _check(self, other: "DensePoly") -> None:
        if other.modulus != self.modulus:
            raise ModulusMismatchError(self.modulus, other.modulus)

    def _lift(self, other) -> "DensePoly":
        if isinstance(other, DensePoly):
            self._check(other)
            return other
        if isinstance(other, (int, PrimeFieldElement)):
            return DensePoly.constant(other, self.modulus)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b, p = self._values, other._values, self.modulus
        if len(a) < len(b):
            a, b = b, a
        values = list(a)
        for i, v in enumerate(b):
            values[i] = (values[i] + v) % p
        return DensePoly._raw(_strip(values), p)

    __radd__ = __add__

    def __neg__(self) -> "DensePoly":
        p = self.modulus
        return DensePoly._raw(tuple((-v) % p for v in self._values), p)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c: Coefficient) -> "DensePoly":
        c = _residue(c, self.modulus)
        p = self.modulus
        return DensePoly._raw(_strip([(v * c) % p for v in self._values]), p)

    def mul(self, other: "DensePoly", degree_cap: int = None) -> "DensePoly":
        """Product, keeping only degrees <= degree_cap when a cap is given."""
        self._check(other)
        p = self.modulus
        a, b = self._values, other._values
        if not a or not b:
            return DensePoly.zero(p)
        length = len(a) + len(b) - 1
        if degree_cap is not None:
            if degree_cap < 0:
                return DensePoly.zero(p)
            length = min(length, degree_cap + 1)
            a, b = a[:length], b[:length]
        if min(len(a), len(b)) < _KRONECKER_THRESHOLD:
            values = [0] * length
            for i, x in enumerate(a):
                if x == 0:
                    continue
                for j, y in enumerate(b[: length - i]):
                    values[i + j] += x * y
            return DensePoly._raw(_strip([v % p for v in values]), p)
        product = kronecker.multiply(
            np.array(a, dtype=np.int64), np.array(b, dtype=np.int64), p, length=length
        )
        return DensePoly._raw(_strip(product.tolist()), p)

    def __mul__(self, other):
        if isinstance(other, (int, PrimeFieldElement)):
            return self.scale(other)
        if isinstance(other, DensePoly):
            return self.mul(other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "DensePoly":
        return self.pow(exponent)

    def pow(self, exponent: int, degree_cap: int = None) -> "DensePoly":
        """Square-and-multiply power, optionally truncated above degree_cap."""
        if exponent < 0:
            raise PolynomialError("Negative exponent for a polynomial")
        result = DensePoly.constant(1, self.modulus)
        base = self if degree_cap is None else self.truncate(degree_cap)
        while exponent:
            if exponent & 1:
                result = result.mul(base, degree_cap)
            exponent >>= 1
            if exponent:
                base = base.mul(base, degree_cap)
        return result

    def truncate(self, degree_cap: int) -> "DensePoly":
        return DensePoly._raw(_strip(list(self._values[: degree_cap + 1])), self.modulus)

    def divmod(self, divisor: "DensePoly") -> Tuple["DensePoly", "DensePoly"]:
        self._check(divisor)
        if divisor.is_zero():
            raise NotInvertibleError("Polynomial division by zero")
        p = self.modulus
        remainder = list(self._values)
        d = divisor._values
        dd = len(d) - 1
        if len(remainder) <= dd:
            return DensePoly.zero(p), self
        inv_lead = pow(d[-1], -1, p)
        quotient = [0] * (len(remainder) - dd)
        for k in range(len(remainder) - 1, dd - 1, -1):
            c = remainder[k] % p
            if c == 0:
                continue
            q = (c * inv_lead) % p
            quotient[k - dd] = q
            shift = k - dd
            for i, v in enumerate(d):
                remainder[shift + i] = (remainder[shift + i] - q * v) % p
        return DensePoly._raw(_strip(quotient), p), DensePoly._raw(_strip([v % p for v in remainder[:dd]]), p)

    def __floordiv__(self, other: "DensePoly") -> "DensePoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "DensePoly") -> "DensePoly":
        return self.divmod(other)[1]

    def monic(self) -> "DensePoly":
        if self.is_zero():
            raise PolynomialError("The zero polynomial has no monic associate")
        return self.scale(pow(self._values[-1], -1, self.modulus))

    def derivative(self) -> "DensePoly":
        p = self.modulus
        return DensePoly._raw(_strip([(i * v) % p for i, v in enumerate(self._values)][1:]), p)

    def evaluate(self, point: Coefficient) -> PrimeFieldElement:
        p = self.modulus
        x = _residue(point, p)
        acc = 0
        for v in reversed(self._values):
            acc = (acc * x + v) % p
        return PrimeFieldElement(acc, p)

    __call__ = evaluate

    def compose_linear(self, a: Coefficient, b: Coefficient) -> "DensePoly":
        """self(a*t + b), by Horner."""
        p = self.modulus
        inner = DensePoly((b, a), p)
        acc = DensePoly.zero(p)
        for v in reversed(self._values):
            acc = acc * inner + v
        return acc

    def taylor_shift(self, shift: Coefficient) -> "DensePoly":
        """self(t + shift)."""
        return self.compose_linear(1, shift)

    def reversed(self, degree: int) -> "DensePoly":
        """t^degree * self(1/t), for degree >= deg self."""
        padded = list(self._values) + [0] * (degree + 1 - len(self._values))
        return DensePoly(padded[::-1], self.modulus)

    def frobenius(self) -> "DensePoly":
        """self^p, computed as self(t^p) since coefficients lie in F_p."""
        p = self.modulus
        values = [0] * ((len(self._values) - 1) * p + 1) if self._values else []
        for i, v in enumerate(self._values):
            values[i * p] = v
        return DensePoly._raw(tuple(values), p)

    def pth_root(self) -> "DensePoly":
        """h with h(t)^p = self, for self a polynomial in t^p."""
        p = self.modulus
        if any(v for i, v in enumerate(self._values) if i % p):
            raise PolynomialError("Polynomial is not a p-th power")
        return DensePoly._raw(tuple(self._values[::p]), p)

    def pow_mod(self, exponent: int, modulus_poly: "DensePoly") -> "DensePoly":
        """self^exponent reduced modulo `modulus_poly`, by square-and-multiply."""
        result = DensePoly.constant(1, self.modulus) % modulus_poly
        base = self % modulus_poly
        while exponent:
            if exponent & 1:
                result = (result * base) % modulus_poly
            exponent >>= 1
            if exponent:
                base = (base * base) % modulus_poly
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, DensePoly):
            return self.modulus == other.modulus and self._values == other._values
        if isinstance(other, (int, PrimeFieldElement)):
            return self == DensePoly.constant(other, self.modulus)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._values, self.modulus))

    def __bool__(self) -> bool:
        return bool(self._values)

    def __repr__(self) -> str:
        return f"DensePoly({list(self._values)} mod {self.modulus})"

    def __str__(self) -> str:
        if not self._values:
            return "0"
        terms = []
        for i, v in enumerate(self._values):
            if v == 0:
                continue
            if i == 0:
                terms.append(str(v))
            elif i == 1:
                terms.append(f"{v}*t" if v != 1 else "t")
            else:
                terms.append(f"{v}*t^{i}" if v != 1 else f"t^{i}")
        return " + ".join(terms)


def poly_mul(a: DensePoly, b: DensePoly, degree_cap: int = None) -> DensePoly:
    return a.mul(b, degree_cap)


def poly_gcd(a: DensePoly, b: DensePoly) -> DensePoly:
    """Monic gcd by the Euclidean algorithm."""
    a._check(b)
    if a.is_zero() and b.is_zero():
        raise PolynomialError("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def _radical(d: DensePoly) -> DensePoly:
    if d.degree <= 0:
        return DensePoly.constant(1, d.modulus)
    derivative = d.derivative()
    if derivative.is_zero():
        # d(t) = h(t^p) = h(t)^p
        return _radical(d.pth_root())
    common = poly_gcd(d, derivative)
    if common.degree == 0:
        return d.monic()
    # d / gcd(d, d') holds each factor of multiplicity prime to p once;
    # factors of multiplicity divisible by p survive only in the gcd.
    coprime_part = (d // common).monic()
    rest = _radical(common)
    overlap = poly_gcd(coprime_part, rest)
    return (coprime_part * (rest // overlap)).monic()


def squarefree_part(d: DensePoly) -> DensePoly:
    """Product of the distinct monic irreducible factors of d.

    Its degree is the number of distinct roots of d in an algebraic closure,
    including the case where p divides a multiplicity.
    """
    if d.is_zero():
        raise PolynomialError("Squarefree part of the zero polynomial is undefined")
    return _radical(d.monic())


def is_squarefree(d: DensePoly) -> bool:
    if d.is_zero():
        return False
    if d.degree <= 0:
        return True
    return poly_gcd(d, d.derivative()).degree == 0


def count_roots(d: DensePoly, mode: str = "rational") -> int:
    """Number of distinct roots of d, in F_p ("rational") or in the closure ("closure")."""
    if d.is_zero():
        raise PolynomialError("Root count of the zero polynomial is undefined")
    if d.degree == 0:
        return 0
    if mode == "closure":
        return squarefree_part(d).degree
    if mode != "rational":
        raise ValueError(f"Unknown root counting mode: {mode}")
    p = d.modulus
    t = DensePoly.monomial(1, p)
    frobenius_t = t.pow_mod(p, d)
    return poly_gcd(d, frobenius_t - t).degree


def rational_roots(d: DensePoly) -> List[int]:
    """The F_p-roots of d, sorted, by direct evaluation."""
    if d.is_zero():
        raise PolynomialError("Every element is a root of the zero polynomial")
    return [x for x in range(d.modulus) if d.evaluate(x).value == 0]
