import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from arith import kronecker

MERSENNE_61 = 2 ** 61 - 1


def convolve(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += int(x) * int(y)
    return [v % p for v in out]


def test_slot_bytes():
    assert kronecker.slot_bytes(1, 3) == 1
    assert kronecker.slot_bytes(100, 439) == 4
    assert kronecker.slot_bytes(10, MERSENNE_61) == 16


@given(st.lists(st.integers(0, 438), min_size=1, max_size=40), st.lists(st.integers(0, 438), min_size=1, max_size=40))
def test_multiply_matches_convolution(a, b):
    product = kronecker.multiply(np.array(a, dtype=np.int64), np.array(b, dtype=np.int64), 439)
    assert product.tolist() == convolve(a, b, 439)


def test_wide_slots():
    rng = np.random.default_rng(61)
    a = rng.integers(0, MERSENNE_61, size=30, dtype=np.int64)
    b = rng.integers(0, MERSENNE_61, size=17, dtype=np.int64)
    product = kronecker.multiply(a, b, MERSENNE_61)
    assert [int(v) for v in product] == convolve(a, b, MERSENNE_61)


@pytest.mark.parametrize("length", [1, 5, 20, 60])
def test_truncated_length(length):
    a = np.arange(1, 21, dtype=np.int64)
    b = np.arange(3, 23, dtype=np.int64)
    product = kronecker.multiply(a, b, 101, length=length)
    expected = (convolve(a, b, 101) + [0] * length)[:length]
    assert len(product) == length
    assert product.tolist() == expected


def test_empty_input():
    assert kronecker.multiply(np.zeros(0, dtype=np.int64), np.ones(3, dtype=np.int64), 7).size == 0
