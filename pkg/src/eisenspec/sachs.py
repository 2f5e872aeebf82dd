"""Combinatorial characteristic-polynomial oracle.

Computes chi by summing over elementary subgraphs (vertex-disjoint unions
of edges and cycles): the coefficient of x^(n-j) collects, over the
j-vertex elementary subgraphs H,

    (-1)^(components(H) + negative_cycles(H)) * 2^(cycles(H) - nonreal_cycles(H)).

This enumeration is exponential and exists purely to disagree loudly with
the algebraic path if either implementation drifts; it refuses n > 12
unless forced.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, List, Tuple

from .algebra import IntPolynomial
from .digraph import SignedDigraph
from .graphs import UnderlyingGraph

__all__ = ["ElementarySubgraph", "enumerate_elementary", "char_poly_sachs"]

SIZE_LIMIT = 12


class ElementarySubgraph:
    """Vertex-disjoint edges and cycles with the stats the weight needs."""

    __slots__ = ("edges", "cycles")

    def __init__(self, edges: Tuple[Tuple[int, int], ...], cycles: Tuple[Tuple[int, ...], ...]):
        self.edges = edges
        self.cycles = cycles

    @property
    def vertex_count(self) -> int:
        return 2 * len(self.edges) + sum(len(c) for c in self.cycles)

    @property
    def component_count(self) -> int:
        return len(self.edges) + len(self.cycles)

    @property
    def cycle_count(self) -> int:
        return len(self.cycles)

    def __repr__(self) -> str:
        return f"ElementarySubgraph(edges={self.edges}, cycles={self.cycles})"


def _all_cycles(g: UnderlyingGraph) -> List[Tuple[int, ...]]:
    """Every cycle of length >= 3, one canonical traversal each.

    A cycle is listed rooted at its minimum vertex, and the second vertex is
    smaller than the last, fixing one of the two directions.
    """
    adj = g.adjacency_sets()
    cycles: List[Tuple[int, ...]] = []

    def extend(root: int, path: List[int], used: set):
        u = path[-1]
        for v in sorted(adj[u]):
            if v == root and len(path) >= 3:
                if path[1] < path[-1]:
                    cycles.append(tuple(path))
            elif v > root and v not in used:
                path.append(v)
                used.add(v)
                extend(root, path, used)
                used.remove(v)
                path.pop()

    for root in range(g.n):
        extend(root, [root], {root})
    return cycles


@lru_cache(maxsize=256)
def _components_of(g: UnderlyingGraph):
    edges = sorted(g.edges)
    cycles = _all_cycles(g)
    comps: List[Tuple[str, tuple, frozenset]] = []
    for e in edges:
        comps.append(("edge", e, frozenset(e)))
    for c in cycles:
        comps.append(("cycle", c, frozenset(c)))
    return comps


def _elementary_subgraphs(g: UnderlyingGraph) -> Iterator[ElementarySubgraph]:
    comps = _components_of(g)

    def rec(start: int, used: frozenset, edges, cycles):
        yield ElementarySubgraph(tuple(edges), tuple(cycles))
        for i in range(start, len(comps)):
            kind, data, verts = comps[i]
            if used & verts:
                continue
            if kind == "edge":
                yield from rec(i + 1, used | verts, edges + [data], cycles)
            else:
                yield from rec(i + 1, used | verts, edges, cycles + [data])

    for sub in rec(0, frozenset(), [], []):
        if sub.component_count:
            yield sub


def enumerate_elementary(g: UnderlyingGraph, j: int, force: bool = False) -> Iterator[ElementarySubgraph]:
    """All elementary subgraphs of g on exactly j vertices, each once."""
    if g.n > SIZE_LIMIT and not force:
        raise ValueError(f"enumeration refused for n > {SIZE_LIMIT}; pass force=True")
    for sub in _elementary_subgraphs(g):
        if sub.vertex_count == j:
            yield sub


def char_poly_sachs(phi: SignedDigraph, force: bool = False) -> IntPolynomial:
    """chi via elementary-subgraph weights; independent of the trace path."""
    g = phi.underlying()
    if g.n > SIZE_LIMIT and not force:
        raise ValueError(f"enumeration refused for n > {SIZE_LIMIT}; pass force=True")
    n = phi.n
    coeffs = [0] * (n + 1)
    coeffs[0] = 1
    for sub in _elementary_subgraphs(g):
        j = sub.vertex_count
        negative = 0
        nonreal = 0
        for cyc in sub.cycles:
            total = 0
            for i, u in enumerate(cyc):
                total += phi.gain(u, cyc[(i + 1) % len(cyc)])
            k = total % 6
            # real parts of units are +-1 and +-1/2; never zero in this group
            if k in (2, 3, 4):
                negative += 1
            if k in (1, 2, 4, 5):
                nonreal += 1
        weight = (-1) ** (sub.component_count + negative) * 2 ** (
            sub.cycle_count - nonreal
        )
        coeffs[j] += weight
    return IntPolynomial(tuple(coeffs))
