"""Exact weight and distance scans.

Everything here is exhaustive: minimum distance and the second
generalized Hamming weight by codeword/pair enumeration, and the exact
quantum distance by walking the full row space of a stabilizer
generator matrix.  Scans above ~2^18 words take a numpy-vectorized
split path (single-word codes only, n <= 63); larger n falls back to a
pure big-int loop.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Optional

import numpy as np

from .gf2 import (
    DEFAULT_ENUM_CAP,
    BinaryVector,
    EnumerationCapError,
    LinearCode,
    enumerate_span,
    lex_key,
)

if TYPE_CHECKING:
    from .steane import QuantumCode

_VECTOR_SPLIT = 13  # half-space size for the numpy split path
_PURE_LOOP_MAX_K = 17  # below this a plain Python Gray walk is fast enough


@dataclass(frozen=True)
class SymplecticVector:
    """X/Z halves of a length-2n binary vector (u_x | u_z)."""

    n: int
    ux: BinaryVector
    uz: BinaryVector

    def __post_init__(self):
        if self.ux.length != self.n or self.uz.length != self.n:
            raise ValueError("halves must both have length n")


@dataclass(frozen=True)
class DistanceReport:
    """Result of an exhaustive distance scan, with attaining witness."""

    value: int
    witness: tuple
    enumerated_count: int
    note: str = ""


def generalized_weight(v: SymplecticVector) -> int:
    """Hamming weight of the bitwise OR of the X and Z halves."""
    return (v.ux.bits | v.uz.bits).bit_count()


def min_distance(C: LinearCode, cap: int = DEFAULT_ENUM_CAP) -> DistanceReport:
    """Exact minimum distance by full codeword enumeration.

    The witness is the lexicographically smallest codeword attaining
    the minimum, so results do not depend on how the scan is split.
    """
    if C.k == 0:
        raise ValueError("distance undefined for zero code")
    if C.k > cap:
        raise EnumerationCapError(
            f"min_distance over 2^{C.k} codewords exceeds cap k <= {cap}"
        )
    basis = C.basis_ints()
    if C.k < _PURE_LOOP_MAX_K or C.n > 63:
        best, best_word = C.n + 1, None
        word = 0
        for i in range(1, 1 << C.k):
            word ^= basis[(i & -i).bit_length() - 1]
            w = word.bit_count()
            if w < best or (w == best and lex_key(word, C.n) < lex_key(best_word, C.n)):
                best, best_word = w, word
    else:
        best, best_word = _min_weight_split(basis, C.n)
    C.cached_d1 = best
    return DistanceReport(
        value=best,
        witness=(BinaryVector(C.n, best_word),),
        enumerated_count=1 << C.k,
    )


def _gray_span_array(basis: list[int]) -> np.ndarray:
    arr = np.empty(1 << len(basis), dtype=np.uint64)
    word = 0
    arr[0] = 0
    for i in range(1, 1 << len(basis)):
        word ^= basis[(i & -i).bit_length() - 1]
        arr[i] = word
    return arr


def _min_weight_split(basis: list[int], n: int) -> tuple[int, int]:
    """Minimum nonzero weight over span(basis); numpy inner half-space."""
    kb = min(len(basis), _VECTOR_SPLIT)
    lo = _gray_span_array(basis[:kb])
    best, best_word = n + 1, None
    word = 0
    outer = basis[kb:]
    for i in range(1 << len(outer)):
        if i:
            word ^= outer[(i & -i).bit_length() - 1]
        vals = np.bitwise_count(np.uint64(word) ^ lo)
        if i == 0:
            vals[0] = n + 1  # skip the zero codeword
        bmin = int(vals.min())
        if bmin <= best:
            for idx in np.flatnonzero(vals == bmin):
                cand = word ^ int(lo[idx])
                if bmin < best or lex_key(cand, n) < lex_key(best_word, n):
                    best, best_word = bmin, cand
    return best, best_word


def second_gdw(C: LinearCode, cap: int = DEFAULT_ENUM_CAP) -> DistanceReport:
    """Exact second generalized Hamming weight.

    Minimum OR-weight over pairs of distinct nonzero codewords (the
    minimum support of a 2-dimensional subcode).  The pair scan is
    pruned: any pair's OR-weight is at least the larger of the two
    weights, so codewords at or above the current best are skipped.
    """
    if C.k < 2:
        raise ValueError("no 2-dimensional subcode: k < 2")
    if C.k > cap:
        raise EnumerationCapError(
            f"second_gdw over 2^{C.k} codewords exceeds cap k <= {cap}"
        )
    words = [w for w in enumerate_span(C.basis_ints(), cap=cap) if w]
    words.sort(key=lambda w: (w.bit_count(), lex_key(w, C.n)))
    wts = [w.bit_count() for w in words]

    best = C.n + 1
    for i in range(len(words)):
        if wts[i] >= best:
            break
        wi = words[i]
        for j in range(i + 1, len(words)):
            if wts[j] >= best:
                break
            w = (wi | words[j]).bit_count()
            if w < best:
                best = w

    # Deterministic witness: lexicographically smallest pair among the
    # minimizers (only codewords of weight <= best can participate).
    light = [w for w in words if w.bit_count() <= best]
    best_pair = None
    for i in range(len(light)):
        for j in range(i + 1, len(light)):
            if (light[i] | light[j]).bit_count() == best:
                pair = tuple(sorted((light[i], light[j]), key=lambda w: lex_key(w, C.n)))
                key = (lex_key(pair[0], C.n), lex_key(pair[1], C.n))
                if best_pair is None or key < best_pair[0]:
                    best_pair = (key, pair)
    assert best_pair is not None
    C.cached_d2 = best
    return DistanceReport(
        value=best,
        witness=tuple(BinaryVector(C.n, w) for w in best_pair[1]),
        enumerated_count=1 << C.k,
    )


def quantum_distance_exact(Q: "QuantumCode", cap: int = DEFAULT_ENUM_CAP) -> DistanceReport:
    """Exact quantum distance by enumerating the full row space of (Gx|Gz).

    Returns the minimum generalized weight over vectors of C that are
    not symplectically orthogonal to all of C (i.e. lie outside the
    stabilizer C-perp).  When C equals its symplectic dual the minimum
    is taken over all nonzero elements instead, and the report says so.
    """
    gx = Q.Gx.row_ints()
    gz = Q.Gz.row_ints()
    r, n = len(gx), Q.n
    if r > cap:
        raise EnumerationCapError(
            f"quantum distance over 2^{r} vectors exceeds cap {cap}"
        )
    # Symplectic syndrome of each generator against all generators:
    # incremental tracking makes the orthogonality test O(1) per step.
    syn = []
    for j in range(r):
        s = 0
        for i in range(r):
            p = ((gx[j] & gz[i]).bit_count() + (gz[j] & gx[i]).bit_count()) & 1
            s |= p << i
        syn.append(s)

    self_orthogonal = all(s == 0 for s in syn)
    note = "self-dual convention: minimum over nonzero elements of C" if self_orthogonal else ""

    if n <= 63:
        value, wit = _quantum_scan_split(gx, gz, syn, n, self_orthogonal)
    else:
        value, wit = _quantum_scan_pure(gx, gz, syn, n, self_orthogonal)
    if wit is None:
        raise ValueError("no vector outside the stabilizer: empty scan")
    ux, uz = wit
    return DistanceReport(
        value=value,
        witness=(BinaryVector(n, ux), BinaryVector(n, uz)),
        enumerated_count=1 << r,
        note=note,
    )


def _pair_lex(ux: int, uz: int, n: int) -> tuple[int, int]:
    return (lex_key(ux, n), lex_key(uz, n))


def _quantum_scan_split(gx, gz, syn, n, self_orthogonal):
    r = len(gx)
    kb = min(r, _VECTOR_SPLIT)
    bx = _gray_span_array(gx[:kb])
    bz = _gray_span_array(gz[:kb])
    bs = _gray_span_array(syn[:kb])
    ox, oz, osyn = gx[kb:], gz[kb:], syn[kb:]
    ax = az = asyn = 0
    best, best_wit = n + 1, None
    for i in range(1 << (r - kb)):
        if i:
            j = (i & -i).bit_length() - 1
            ax ^= ox[j]
            az ^= oz[j]
            asyn ^= osyn[j]
        ux = np.uint64(ax) ^ bx
        uz = np.uint64(az) ^ bz
        vals = np.bitwise_count(ux | uz)
        if self_orthogonal:
            live = vals != 0
        else:
            live = (np.uint64(asyn) ^ bs) != 0
        if not live.any():
            continue
        bmin = int(vals[live].min())
        if bmin <= best:
            for idx in np.flatnonzero(live & (vals == bmin)):
                cand = (ax ^ int(bx[idx]), az ^ int(bz[idx]))
                if bmin < best or _pair_lex(*cand, n) < _pair_lex(*best_wit, n):
                    best, best_wit = bmin, cand
    return best, best_wit


def _quantum_scan_pure(gx, gz, syn, n, self_orthogonal):
    r = len(gx)
    ux = uz = s = 0
    best, best_wit = n + 1, None
    for i in range(1, 1 << r):
        j = (i & -i).bit_length() - 1
        ux ^= gx[j]
        uz ^= gz[j]
        s ^= syn[j]
        if (s == 0) != self_orthogonal:
            continue
        if self_orthogonal and ux == 0 and uz == 0:
            continue
        w = (ux | uz).bit_count()
        if w < best or (w == best and _pair_lex(ux, uz, n) < _pair_lex(*best_wit, n)):
            best, best_wit = w, (ux, uz)
    return best, best_wit
