"""Vectorized exact charpoly engine for signature scans.

Scans over many signatures of one underlying graph are the hot path of the
census; this module computes integer characteristic polynomials for whole
batches with int64 numpy arithmetic.  Everything stays exact: for n <= 12
every intermediate (matrix-power entries up to E^ceil(n/2), pairwise trace
products, Newton accumulators) fits comfortably in 63 bits, which runtime
assertions double-check.  The scalar reference path in spectra is the
contract implementation; equality of the two is part of the test suite.
"""

from __future__ import annotations

from typing import Optional, Sequence, Tuple

import numpy as np

from .digraph import SignedDigraph
from .graphs import UnderlyingGraph

__all__ = [
    "MAX_BULK_N",
    "SignatureSpace",
    "codes_range",
    "batch_matrices",
    "charpoly_batch",
    "root_counts_batch",
]

MAX_BULK_N = 12

_UNIT_A = np.array([1, 0, -1, -1, 0, 1], dtype=np.int64)
_UNIT_B = np.array([0, 1, 1, 0, -1, -1], dtype=np.int64)

_SAFE = 2**61


class SignatureSpace:
    """Tree-normalized signature space of one underlying graph.

    The spanning forest is the deterministic BFS forest; its edges are
    pinned to gain 1 and each non-tree edge ranges over the six units.
    Assignment codes are mixed-radix integers, first non-tree edge most
    significant, so enumeration order is reproducible.
    """

    def __init__(self, graph: UnderlyingGraph):
        self.graph = graph
        self.n = graph.n
        _, tree = graph.bfs_forest()
        self.tree_edges = [tuple(sorted(e)) for e in tree]
        tree_set = set(self.tree_edges)
        self.free_edges = sorted(e for e in graph.edges if e not in tree_set)
        self.count = 6 ** len(self.free_edges)

    def codes_to_digraph(self, code_row: Sequence[int]) -> SignedDigraph:
        gains = {e: 0 for e in self.tree_edges}
        for e, k in zip(self.free_edges, code_row):
            gains[e] = int(k)
        return SignedDigraph(self.n, gains)


def codes_range(space: SignatureSpace, start: int, stop: int) -> np.ndarray:
    """Mixed-radix decode of assignment indices [start, stop)."""
    t = len(space.free_edges)
    idx = np.arange(start, stop, dtype=np.int64)
    if t == 0:
        return np.zeros((len(idx), 0), dtype=np.int64)
    weights = 6 ** np.arange(t - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // weights[None, :]) % 6


def batch_matrices(space: SignatureSpace, codes: np.ndarray):
    """(batch, n, n) coordinate matrices for a batch of assignment codes."""
    batch = codes.shape[0]
    n = space.n
    a = np.zeros((batch, n, n), dtype=np.int64)
    b = np.zeros((batch, n, n), dtype=np.int64)
    for (u, v) in space.tree_edges:
        a[:, u, v] = 1
        a[:, v, u] = 1
    for i, (u, v) in enumerate(space.free_edges):
        k = codes[:, i]
        a[:, u, v] = _UNIT_A[k]
        b[:, u, v] = _UNIT_B[k]
        kc = (-k) % 6
        a[:, v, u] = _UNIT_A[kc]
        b[:, v, u] = _UNIT_B[kc]
    return a, b


def _zmul(a1, b1, a2, b2):
    return (
        a1 @ a2 - b1 @ b2,
        a1 @ b2 + b1 @ a2 + b1 @ b2,
    )


def _pair_traces(a1, b1, a2, b2):
    ta = np.einsum("bij,bji->b", a1, a2) - np.einsum("bij,bji->b", b1, b2)
    tb = (
        np.einsum("bij,bji->b", a1, b2)
        + np.einsum("bij,bji->b", b1, a2)
        + np.einsum("bij,bji->b", b1, b2)
    )
    return ta, tb


def charpoly_batch(a: np.ndarray, b: np.ndarray, upto: Optional[int] = None) -> np.ndarray:
    """Monic integer charpolys, shape (batch, n+1), highest degree first.

    With `upto = k`, only the leading coefficients through x^(n-k) are
    computed (enough for e.g. edge/triangle-trace prefilters).
    """
    batch, n, _ = a.shape
    if n > MAX_BULK_N:
        raise ValueError(f"bulk engine limited to n <= {MAX_BULK_N}")
    kmax = n if upto is None else min(upto, n)
    half = (kmax + 1) // 2
    powers = [(a, b)]
    for _ in range(half - 1):
        pa, pb = _zmul(*powers[-1], a, b)
        # with power entries below 2^27, every later product (pairwise
        # trace sums, Newton accumulators) provably stays inside int64
        # for n <= 12
        if max(np.abs(pa).max(initial=0), np.abs(pb).max(initial=0)) > 2**27:
            raise OverflowError("bulk power entries approaching int64 range")
        powers.append((pa, pb))
    traces = np.zeros((batch, kmax + 1), dtype=np.int64)
    for k in range(1, kmax + 1):
        if k <= half:
            pa, pb = powers[k - 1]
            ta = np.trace(pa, axis1=1, axis2=2)
            tb = np.trace(pb, axis1=1, axis2=2)
        else:
            i = k // 2
            j = k - i
            ta, tb = _pair_traces(*powers[i - 1], *powers[j - 1])
        if np.any(tb != 0):
            raise ArithmeticError(f"non-real power trace at k={k}")
        traces[:, k] = ta
    e = np.zeros((batch, kmax + 1), dtype=np.int64)
    e[:, 0] = 1
    for k in range(1, kmax + 1):
        acc = np.zeros(batch, dtype=np.int64)
        sign = 1
        for j in range(1, k + 1):
            acc += sign * e[:, k - j] * traces[:, j]
            sign = -sign
        if np.any(acc % k != 0):
            raise ArithmeticError(f"non-integer coefficient at k={k}")
        e[:, k] = acc // k
    coeffs = np.empty((batch, kmax + 1), dtype=np.int64)
    for k in range(kmax + 1):
        coeffs[:, k] = ((-1) ** k) * e[:, k]
    return coeffs


def root_counts_batch(
    coeffs: np.ndarray,
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(n_pos, n_zero, n_neg) per row; rows are real-rooted by contract."""
    batch, width = coeffs.shape
    deg = width - 1
    nonzero = coeffs != 0
    # trailing zeros: degree minus position of last nonzero coefficient
    last_nonzero = width - 1 - np.argmax(nonzero[:, ::-1], axis=1)
    n_zero = (width - 1 - last_nonzero).astype(np.int64)
    signs = np.sign(coeffs)
    n_pos = np.zeros(batch, dtype=np.int64)
    prev = np.zeros(batch, dtype=np.int64)
    for k in range(width):
        s = signs[:, k]
        flip = (s != 0) & (prev != 0) & (s != prev)
        n_pos += flip
        prev = np.where(s != 0, s, prev)
    n_neg = deg - n_zero - n_pos
    return n_pos, n_zero, n_neg
