"""Exact polynomial products by Kronecker substitution.

Residue vectors are packed into one big integer (one fixed-width slot per
coefficient), multiplied with GMP, and unpacked again. Slots are wide enough
that no carry ever crosses a slot boundary, so every unpacked slot is the exact
integer convolution value before reduction mod p.
"""

from typing import Optional

import gmpy2
import numpy as np


def slot_bytes(pair_count: int, modulus: int) -> int:
    """Bytes per slot for a product where at most `pair_count` terms meet in one slot."""
    bound = max(pair_count, 1) * (modulus - 1) ** 2
    return max(1, (bound.bit_length() + 7) // 8)


def pack(values: np.ndarray, width: int) -> gmpy2.mpz:
    """Pack non-negative residues (lowest index first) into slots of `width` bytes."""
    if values.size == 0:
        return gmpy2.mpz(0)
    if width <= 8:
        raw = values.astype("<u8").view(np.uint8).reshape(-1, 8)[:, :width]
        data = np.ascontiguousarray(raw).tobytes()
    else:
        data = b"".join(int(v).to_bytes(width, "little") for v in values)
    return gmpy2.mpz(int.from_bytes(data, "little"))


def unpack(packed: gmpy2.mpz, width: int, count: int, modulus: int) -> np.ndarray:
    """Read `count` slots from `packed` and reduce each mod `modulus`."""
    if count <= 0:
        return np.zeros(0, dtype=np.int64)
    total_bits = 8 * width * count
    packed = packed & gmpy2.bit_mask(total_bits)
    data = int(packed).to_bytes(width * count, "little")
    raw = np.frombuffer(data, dtype=np.uint8).reshape(count, width)
    if width <= 8:
        buf = np.zeros((count, 8), dtype=np.uint8)
        buf[:, :width] = raw
        words = buf.view("<u8").reshape(count)
        return (words % np.uint64(modulus)).astype(np.int64)
    return np.array(
        [int.from_bytes(raw[i].tobytes(), "little") % modulus for i in range(count)],
        dtype=np.int64,
    )


def multiply(
    a: np.ndarray,
    b: np.ndarray,
    modulus: int,
    length: Optional[int] = None,
    pair_count: Optional[int] = None,
) -> np.ndarray:
    """Product of two residue vectors mod `modulus`.

    Args:
        a, b: 1-D int64 arrays of residues in [0, modulus), lowest degree first
        modulus: the prime p
        length: number of product coefficients to return (truncation); defaults
            to the full product length
        pair_count: upper bound on the number of products landing in one slot;
            defaults to min(len(a), len(b))

    Returns:
        1-D int64 array of reduced coefficients, exactly `length` long
    """
    full = len(a) + len(b) - 1 if len(a) and len(b) else 0
    if length is None:
        length = full
    if full <= 0 or length <= 0:
        return np.zeros(max(length, 0), dtype=np.int64)
    # Only the first `length` input coefficients can reach the kept slots.
    a = a[:length]
    b = b[:length]
    if pair_count is None:
        pair_count = min(len(a), len(b))
    width = slot_bytes(pair_count, modulus)
    product = pack(a, width) * pack(b, width)
    kept = min(length, len(a) + len(b) - 1)
    result = np.zeros(length, dtype=np.int64)
    result[:kept] = unpack(product, width, kept, modulus)
    return result
