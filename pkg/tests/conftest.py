"""Shared fixtures and independent brute-force oracles.

The oracles deliberately avoid the library's scan machinery: plain
itertools/numpy reimplementations used to cross-check the optimized
paths.
"""

from __future__ import annotations

import random

import numpy as np
import pytest

from qsteane.bch import FamilySpec, build_family_code
from qsteane.gf2 import LinearCode, extend_parity
from qsteane.table1 import TABLE1_ROWS, check_row


#: Hamming [7,4,3] and its parity extension, the self-dual [8,4,4] code.
HAMMING_7_4 = LinearCode([0b1101000, 0b0110100, 0b1110010, 0b1010001], 7)
EXT_HAMMING_8_4 = extend_parity(HAMMING_7_4)


def span_words(code: LinearCode) -> list[int]:
    """All 2^k codewords by direct linear combination (no Gray walk)."""
    words = [0]
    for row in code.basis_ints():
        words += [w ^ row for w in words]
    return words


def brute_min_distance(code: LinearCode) -> int:
    return min(w.bit_count() for w in span_words(code) if w)


def brute_second_gdw(code: LinearCode) -> int:
    """Independent oracle: numpy broadcast over all codeword pairs."""
    words = np.array([w for w in span_words(code) if w], dtype=np.uint32)
    ors = words[:, None] | words[None, :]
    wts = np.bitwise_count(ors)
    np.fill_diagonal(wts, code.n + 1)
    return int(wts.min())


def random_code(rng: random.Random, n: int, k_target: int, min_k: int = 2) -> LinearCode:
    """A random [n, k] code with k >= min_k (resamples degenerate draws)."""
    while True:
        rows = [rng.randrange(1, 1 << n) for _ in range(k_target)]
        code = LinearCode(rows, n)
        if code.k >= min_k:
            return code


@pytest.fixture(scope="session")
def table_checks():
    """All published-table row checks, computed once per session."""
    return [check_row(row) for row in TABLE1_ROWS]


@pytest.fixture(scope="session")
def f4_desk():
    """The smallest F4 instance (m=4, ell=0), built and certified once."""
    return build_family_code(FamilySpec("F4", 4, 0))
