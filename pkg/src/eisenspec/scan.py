"""Parallel exact signature sweeps.

Drives the bulk engine over (graph, index-range) work units, exhaustively
or by seeded sampling, and reports hit signatures as assignment codes so
workers never ship digraph objects.  Used by the census-style verification
sweeps; all decisions are exact integer comparisons.
"""

from __future__ import annotations

from typing import Callable, Iterable, List, Sequence, Tuple

import numpy as np

from .bulk import (
    batch_matrices,
    charpoly_batch,
    codes_range,
    root_counts_batch,
    SignatureSpace,
)
from .digraph import SignedDigraph
from .graphs import UnderlyingGraph

__all__ = ["SweepHit", "sweep", "sample_sweep", "rebuild_hits"]

_BATCH = 65536

SweepHit = Tuple[int, Tuple[int, ...]]  # (graph index, assignment codes)


def _predicate_mask(mode: str, payload, coeffs: np.ndarray) -> np.ndarray:
    if mode == "inertia_eq":
        n_pos, n_zero, n_neg = root_counts_batch(coeffs)
        p, z, m = payload
        return (n_pos == p) & (n_zero == z) & (n_neg == m)
    if mode == "rank_in":
        _, n_zero, _ = root_counts_batch(coeffs)
        rank = (coeffs.shape[1] - 1) - n_zero
        mask = np.zeros(coeffs.shape[0], dtype=bool)
        for r in payload:
            mask |= rank == r
        return mask
    if mode == "charpoly_eq":
        target = np.array(payload, dtype=np.int64)
        return np.all(coeffs == target[None, :], axis=1)
    raise ValueError(f"unknown sweep mode {mode!r}")


def _scan_exhaustive(args):
    graph, gi, lo, hi, mode, payload = args
    space = SignatureSpace(graph)
    hits: List[SweepHit] = []
    for start in range(lo, hi, _BATCH):
        stop = min(start + _BATCH, hi)
        codes = codes_range(space, start, stop)
        a, b = batch_matrices(space, codes)
        coeffs = charpoly_batch(a, b)
        mask = _predicate_mask(mode, payload, coeffs)
        for row in codes[mask]:
            hits.append((gi, tuple(int(k) for k in row)))
    return hi - lo, hits


def _scan_sampled(args):
    graph, gi, seed, count, mode, payload = args
    space = SignatureSpace(graph)
    rng = np.random.default_rng(seed)
    t = len(space.free_edges)
    hits: List[SweepHit] = []
    remaining = count
    while remaining > 0:
        take = min(_BATCH, remaining)
        codes = rng.integers(0, 6, size=(take, t), dtype=np.int64)
        a, b = batch_matrices(space, codes)
        coeffs = charpoly_batch(a, b)
        mask = _predicate_mask(mode, payload, coeffs)
        for row in codes[mask]:
            hits.append((gi, tuple(int(k) for k in row)))
        remaining -= take
    return count, hits


def _run_units(units, worker: Callable, threads: int):
    if threads > 1 and len(units) > 1:
        import multiprocessing as mp

        with mp.Pool(threads) as pool:
            results = pool.map(worker, units, chunksize=1)
    else:
        results = [worker(u) for u in units]
    scanned = sum(r[0] for r in results)
    hits: List[SweepHit] = []
    for _, h in results:
        hits.extend(h)
    hits.sort()
    return scanned, hits


def sweep(
    graphs: Sequence[UnderlyingGraph],
    mode: str,
    payload,
    threads: int = 1,
    unit_size: int = 6**7,
) -> Tuple[int, List[SweepHit]]:
    """Exhaustive exact sweep over every tree-normalized signature.

    Returns (number scanned, sorted hits).  Deterministic regardless of the
    worker count.
    """
    units = []
    for gi, graph in enumerate(graphs):
        total = SignatureSpace(graph).count
        lo = 0
        while lo < total:
            hi = min(lo + unit_size, total)
            units.append((graph, gi, lo, hi, mode, payload))
            lo = hi
    return _run_units(units, _scan_exhaustive, threads)


def sample_sweep(
    graphs: Sequence[UnderlyingGraph],
    mode: str,
    payload,
    samples: int,
    seed: int = 0,
    threads: int = 1,
    unit_size: int = 6**7,
) -> Tuple[int, List[SweepHit]]:
    """Seeded random sweep: `samples` signatures per graph, reproducible."""
    units = []
    for gi, graph in enumerate(graphs):
        remaining = samples
        part = 0
        while remaining > 0:
            take = min(unit_size, remaining)
            units.append((graph, gi, seed * 65599 + gi * 257 + part, take, mode, payload))
            remaining -= take
            part += 1
    return _run_units(units, _scan_sampled, threads)


def rebuild_hits(
    graphs: Sequence[UnderlyingGraph], hits: Iterable[SweepHit]
) -> List[SignedDigraph]:
    spaces = {}
    out = []
    for gi, codes in hits:
        if gi not in spaces:
            spaces[gi] = SignatureSpace(graphs[gi])
        out.append(spaces[gi].codes_to_digraph(codes))
    return out
