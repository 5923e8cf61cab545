"""Packed-bitset pair matrices for interval-overlap checks at scale.

A symmetric relation on vertex pairs is stored as an ``(n, ceil(n/64))``
uint64 matrix: bit ``v`` of row ``u`` marks the ordered pair ``(u, v)``.
Bit ``v`` lives in word ``v >> 6`` at position ``v & 63``, which matches
``np.packbits(..., bitorder="little")`` on a little-endian platform; all
conversions below go through that convention.

The point of this module is the separation trick: for one interval
realization, the pairs that do NOT overlap are exactly the pairs where one
interval ends before the other starts.  Sorting by left endpoint turns
"the intervals starting after hi(u)" into a suffix, so the directed
non-overlap rows of a whole realization are ``n`` suffix masks gathered
from one cumulative-OR table: O(n log n + n^2/64) per dimension instead of
O(n^2) pair tests.
"""

from __future__ import annotations

import numpy as np

WORD = 64

# Below this vertex count plain boolean matrices beat packed words.
DENSE_LIMIT = 2048

_U64 = np.uint64
_ONE = np.uint64(1)


def words(n: int) -> int:
    return (n + WORD - 1) >> 6


def zero_matrix(n: int) -> np.ndarray:
    return np.zeros((n, words(n)), dtype=_U64)


def full_matrix(n: int) -> np.ndarray:
    """All valid pair bits set (bits >= n stay clear)."""
    out = np.full((n, words(n)), ~np.uint64(0), dtype=_U64)
    tail = n & 63
    if tail:
        out[:, -1] = (_ONE << np.uint64(tail)) - _ONE
    return out


def diagonal_matrix(n: int) -> np.ndarray:
    out = zero_matrix(n)
    v = np.arange(n)
    out[v, v >> 6] = _ONE << (v & 63).astype(_U64)
    return out


def pack_adjacency(n: int, edges) -> np.ndarray:
    """Symmetric adjacency bits from an iterable of (u, v) pairs."""
    out = zero_matrix(n)
    e = np.asarray(sorted(edges), dtype=np.int64)
    if e.size:
        u = np.concatenate([e[:, 0], e[:, 1]])
        v = np.concatenate([e[:, 1], e[:, 0]])
        np.bitwise_or.at(out, (u, v >> 6), _ONE << (v & 63).astype(_U64))
    return out


def or_separation(sep: np.ndarray, los: np.ndarray, his: np.ndarray) -> None:
    """OR into ``sep`` the directed non-overlap pairs of one realization.

    Row ``u`` receives every ``v`` with ``lo_v > hi_u``.  Together with the
    transposed direction (``u`` after ``v``) this covers all non-overlapping
    pairs; callers symmetrize once at the end.
    """
    n = los.shape[0]
    if n == 0:
        return
    order = np.argsort(los, kind="stable")
    sorted_los = los[order]
    # suffix[t] = bits of the vertices ordered at positions t..n-1
    onehot = zero_matrix(n)
    onehot[np.arange(n), order >> 6] = _ONE << (order & 63).astype(_U64)
    suffix = np.zeros((n + 1, words(n)), dtype=_U64)
    suffix[:n] = np.bitwise_or.accumulate(onehot[::-1], axis=0)[::-1]
    t = np.searchsorted(sorted_los, his, side="right")
    np.bitwise_or(sep, suffix[t], out=sep)


def transpose(mat: np.ndarray, n: int) -> np.ndarray:
    if n == 0:
        return mat.copy()
    bits = np.unpackbits(mat.view(np.uint8), axis=1, bitorder="little")[:, :n]
    out_bits = np.zeros((n, words(n) * WORD), dtype=np.uint8)
    out_bits[:, :n] = bits.T
    return np.packbits(out_bits, axis=1, bitorder="little").view(_U64)


def symmetrized(mat: np.ndarray, n: int) -> np.ndarray:
    return mat | transpose(mat, n)


def first_pair(mat: np.ndarray, n: int) -> tuple[int, int] | None:
    """Lexicographically smallest ``(u, v)`` with ``u < v`` set in ``mat``.

    ``mat`` is assumed symmetric; the scan masks out ``v <= u`` per row.
    """
    for u in range(n):
        row = mat[u].copy()
        cut = u + 1  # only bits v > u count
        row[: cut >> 6] = 0
        if cut & 63:
            row[cut >> 6] &= ~((_ONE << np.uint64(cut & 63)) - _ONE)
        nz = np.nonzero(row)[0]
        if nz.size:
            w = int(nz[0])
            x = int(row[w])
            v = (w << 6) + (x & -x).bit_length() - 1
            return (u, v)
    return None


def check_realizations(
    adj_packed: np.ndarray, n: int, realizations
) -> tuple[bool, tuple[int, int] | None]:
    """Does the overlap intersection of ``realizations`` equal the adjacency?

    Returns ``(True, None)`` or ``(False, smallest mismatched pair)``.  An
    empty list of realizations checks the complete-graph convention.
    """
    sep = zero_matrix(n)
    for r in realizations:
        or_separation(sep, r.los, r.his)
    sep = symmetrized(sep, n)
    wrong_split = sep & adj_packed  # edges that some dimension separates
    covered = sep | adj_packed | diagonal_matrix(n)
    missing = covered ^ full_matrix(n)  # non-edges no dimension separates
    if not wrong_split.any() and not missing.any():
        return True, None
    return False, first_pair(wrong_split | missing, n)


# ---------------------------------------------------------------------------
# Dense boolean path (small n)
# ---------------------------------------------------------------------------


def dense_adjacency(n: int, edges) -> np.ndarray:
    out = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        out[u, v] = out[v, u] = True
    return out


def dense_overlap(los: np.ndarray, his: np.ndarray) -> np.ndarray:
    return (los[:, None] <= his[None, :]) & (los[None, :] <= his[:, None])


def check_realizations_dense(
    adj: np.ndarray, n: int, realizations
) -> tuple[bool, tuple[int, int] | None]:
    inter = np.ones((n, n), dtype=bool)
    for r in realizations:
        inter &= dense_overlap(r.los, r.his)
    np.fill_diagonal(inter, False)
    diff = inter ^ adj
    if not diff.any():
        return True, None
    # row-major argwhere lists the (u, v) u<v form of each pair first
    u, v = np.argwhere(diff)[0]
    return False, (int(u), int(v))
