"""Brute-force point counts, an independent check on the coefficient matrix."""

import numpy as np

from arith.matrix import CoeffMatrixN
from curves.cartier import CurveModel

# Residues are multiplied in int64.
MAX_COUNTING_PRIME = 2 ** 31


def count_points(curve: CurveModel) -> int:
    """#C(F_p) for y^2 = f(x) with deg f odd (one point at infinity)."""
    p = curve.modulus
    if p >= MAX_COUNTING_PRIME:
        raise ValueError(f"Brute-force counting is limited to p < 2^31, got {p}")
    xs = np.arange(p, dtype=np.int64)
    values = np.zeros(p, dtype=np.int64)
    for c in reversed(curve.f.values):
        values = (values * xs + c) % p
    is_square = np.zeros(p, dtype=bool)
    is_square[(xs * xs) % p] = True
    character = np.where(values == 0, 0, np.where(is_square[values], 1, -1))
    return p + int(character.sum()) + 1


def frobenius_trace(curve: CurveModel) -> int:
    """a_p = p + 1 - #C(F_p)."""
    return curve.modulus + 1 - count_points(curve)


def trace_congruence_holds(curve: CurveModel, N: CoeffMatrixN) -> bool:
    """#C(F_p) = 1 - trace N (mod p)."""
    p = curve.modulus
    trace = sum(N.entry(i, i).value for i in range(1, N.genus + 1))
    return (count_points(curve) - 1 + trace) % p == 0
