"""The coefficient matrix N = (c_{ip-j}) and exact linear algebra over F_p."""

from typing import List, Sequence, Union

from arith.ffpoly import DensePoly, PrimeFieldElement, check_modulus
from models.exceptions import ModulusMismatchError, NotInvertibleError

Entry = Union[PrimeFieldElement, DensePoly]


def row_echelon(rows: Sequence[Sequence[int]], modulus: int) -> List[List[int]]:
    """Reduced row echelon form of an integer matrix mod p."""
    m = [[v % modulus for v in row] for row in rows]
    if not m:
        return m
    n_rows, n_cols = len(m), len(m[0])
    pivot_row = 0
    for col in range(n_cols):
        pivot = next((r for r in range(pivot_row, n_rows) if m[r][col]), None)
        if pivot is None:
            continue
        m[pivot_row], m[pivot] = m[pivot], m[pivot_row]
        inv = pow(m[pivot_row][col], -1, modulus)
        m[pivot_row] = [(v * inv) % modulus for v in m[pivot_row]]
        for r in range(n_rows):
            if r != pivot_row and m[r][col]:
                factor = m[r][col]
                m[r] = [(a - factor * b) % modulus for a, b in zip(m[r], m[pivot_row])]
        pivot_row += 1
        if pivot_row == n_rows:
            break
    return m


def rank_mod_p(rows: Sequence[Sequence[int]], modulus: int) -> int:
    return sum(1 for row in row_echelon(rows, modulus) if any(row))


def det_mod_p(rows: Sequence[Sequence[int]], modulus: int) -> int:
    m = [[v % modulus for v in row] for row in rows]
    n = len(m)
    det = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det = (det * m[col][col]) % modulus
        inv = pow(m[col][col], -1, modulus)
        for r in range(col + 1, n):
            if m[r][col]:
                factor = (m[r][col] * inv) % modulus
                m[r] = [(a - factor * b) % modulus for a, b in zip(m[r], m[col])]
    return det % modulus


def inverse_mod_p(rows: Sequence[Sequence[int]], modulus: int) -> List[List[int]]:
    n = len(rows)
    augmented = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(rows)]
    reduced = row_echelon(augmented, modulus)
    if any(reduced[i][i] != 1 for i in range(n)):
        raise NotInvertibleError("Matrix is singular")
    return [row[n:] for row in reduced]


def matmul_mod_p(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], modulus: int) -> List[List[int]]:
    return [
        [sum(x * y for x, y in zip(row, col)) % modulus for col in zip(*b)]
        for row in a
    ]


class CoeffMatrixN:
    """g x g matrix with entry (i, j) = c_{ip-j}; entries in F_p or in F_p[t].

    N is the entrywise p-th power of the Cartier-Manin matrix M.
    """

    def __init__(self, entries: Sequence[Sequence[Entry]], prime: int, genus: int):
        self.prime = check_modulus(prime)
        self.genus = genus
        if len(entries) != genus or any(len(row) != genus for row in entries):
            raise ValueError(f"Expected a {genus}x{genus} matrix")
        for row in entries:
            for e in row:
                if e.modulus != self.prime:
                    raise ModulusMismatchError(self.prime, e.modulus)
        self.entries = [list(row) for row in entries]

    @classmethod
    def from_ints(cls, rows: Sequence[Sequence[int]], prime: int) -> "CoeffMatrixN":
        return cls([[PrimeFieldElement(v, prime) for v in row] for row in rows], prime, len(rows))

    @property
    def is_parametric(self) -> bool:
        return any(isinstance(e, DensePoly) for row in self.entries for e in row)

    def entry(self, i: int, j: int) -> Entry:
        """Entry c_{ip-j}, with 1 <= i, j <= g."""
        return self.entries[i - 1][j - 1]

    @staticmethod
    def coefficient_index(i: int, j: int, prime: int) -> int:
        return i * prime - j

    def to_ints(self) -> List[List[int]]:
        if self.is_parametric:
            raise TypeError("Parametric matrix has polynomial entries; evaluate it first")
        return [[e.value for e in row] for row in self.entries]

    def is_zero(self) -> bool:
        return all(not e for row in self.entries for e in row)

    def evaluate(self, t0: int) -> "CoeffMatrixN":
        """Specialise polynomial entries at t = t0."""
        rows = [
            [e.evaluate(t0) if isinstance(e, DensePoly) else e for e in row]
            for row in self.entries
        ]
        return CoeffMatrixN(rows, self.prime, self.genus)

    def frobenius_twist(self) -> "CoeffMatrixN":
        """N^(p): every entry raised to the p-th power."""
        rows = [
            [e.frobenius() if isinstance(e, DensePoly) else e ** self.prime for e in row]
            for row in self.entries
        ]
        return CoeffMatrixN(rows, self.prime, self.genus)

    def __matmul__(self, other: "CoeffMatrixN") -> "CoeffMatrixN":
        if other.prime != self.prime:
            raise ModulusMismatchError(self.prime, other.prime)
        g = self.genus
        rows = []
        for i in range(g):
            row = []
            for j in range(g):
                acc = self.entries[i][0] * other.entries[0][j]
                for k in range(1, g):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            rows.append(row)
        return CoeffMatrixN(rows, self.prime, g)

    def determinant(self) -> Entry:
        g = self.genus
        if self.is_parametric or g <= 2:
            if g == 1:
                return self.entries[0][0]
            if g == 2:
                (a, b), (c, d) = self.entries
                return a * d - b * c
            raise NotImplementedError("Parametric determinants are implemented for g <= 2")
        return PrimeFieldElement(det_mod_p(self.to_ints(), self.prime), self.prime)

    def rank(self) -> int:
        return rank_mod_p(self.to_ints(), self.prime)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoeffMatrixN):
            return NotImplemented
        return self.prime == other.prime and self.entries == other.entries

    def __repr__(self) -> str:
        return f"CoeffMatrixN({self.entries!r}, p={self.prime})"
