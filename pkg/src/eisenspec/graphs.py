"""Plain undirected graphs: the underlying-graph layer.

Provides the small amount of classical graph machinery the package needs:
graph6 text I/O, subgraph/union/complement utilities, triangle and
independent-set scans, isomorphism enumeration by pruned backtracking and a
brute-force canonical labelling (minimum adjacency string) adequate for the
desk scale n <= 12 this package targets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

__all__ = [
    "UnderlyingGraph",
    "graph_isomorphisms",
    "signed_pairs_isomorphisms",
    "canonical_permutation",
    "automorphisms",
    "has_independent_triple",
    "parse_graph6",
    "to_graph6",
    "read_graph6_lines",
    "all_graphs",
]


def _norm_edge(u: int, v: int) -> Tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class UnderlyingGraph:
    """Simple loop-free undirected graph on vertices 0..n-1."""

    n: int
    edges: frozenset

    def __post_init__(self):
        for (u, v) in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad edge ({u},{v}) for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "UnderlyingGraph":
        return cls(n, frozenset(_norm_edge(u, v) for u, v in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def neighbors(self, u: int) -> List[int]:
        out = [v for v in range(self.n) if v != u and self.has_edge(u, v)]
        return out

    def adjacency_sets(self) -> List[set]:
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degree_sequence(self) -> Tuple[int, ...]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    def components(self) -> List[List[int]]:
        adj = self.adjacency_sets()
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            stack, comp = [s], []
            seen[s] = True
            while stack:
                u = stack.pop()
                comp.append(u)
                for v in adj[u]:
                    if not seen[v]:
                        seen[v] = True
                        stack.append(v)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def induced(self, vertices: Sequence[int]) -> "UnderlyingGraph":
        vs = sorted(vertices)
        index = {v: i for i, v in enumerate(vs)}
        edges = [
            (index[u], index[v]) for u, v in self.edges if u in index and v in index
        ]
        return UnderlyingGraph.from_edges(len(vs), edges)

    def relabel(self, perm: Sequence[int]) -> "UnderlyingGraph":
        """perm[v] = new label of v."""
        return UnderlyingGraph.from_edges(
            self.n, ((perm[u], perm[v]) for u, v in self.edges)
        )

    def disjoint_union(self, other: "UnderlyingGraph") -> "UnderlyingGraph":
        shift = self.n
        edges = set(self.edges)
        edges.update((u + shift, v + shift) for u, v in other.edges)
        return UnderlyingGraph.from_edges(self.n + other.n, edges)

    def complement(self) -> "UnderlyingGraph":
        edges = [
            (u, v)
            for u, v in combinations(range(self.n), 2)
            if (u, v) not in self.edges
        ]
        return UnderlyingGraph.from_edges(self.n, edges)

    def triangles(self) -> List[Tuple[int, int, int]]:
        adj = self.adjacency_sets()
        out = []
        for u, v in sorted(self.edges):
            for w in sorted(adj[u] & adj[v]):
                if w > v:
                    out.append((u, v, w))
        return out

    def bfs_forest(self) -> Tuple[List[Optional[int]], List[Tuple[int, int]]]:
        """Deterministic BFS forest from the lowest vertex of each component.

        Returns (parent array, tree edges as (parent, child) in visit order).
        """
        adj = self.adjacency_sets()
        parent: List[Optional[int]] = [None] * self.n
        seen = [False] * self.n
        tree: List[Tuple[int, int]] = []
        for root in range(self.n):
            if seen[root]:
                continue
            seen[root] = True
            queue = [root]
            while queue:
                u = queue.pop(0)
                for v in sorted(adj[u]):
                    if not seen[v]:
                        seen[v] = True
                        parent[v] = u
                        tree.append((u, v))
                        queue.append(v)
        return parent, tree

    def __repr__(self) -> str:
        return f"UnderlyingGraph(n={self.n}, m={self.m})"


def has_independent_triple(g: UnderlyingGraph) -> bool:
    """True iff some three vertices are pairwise non-adjacent."""
    for u, v, w in combinations(range(g.n), 3):
        if not g.has_edge(u, v) and not g.has_edge(u, w) and not g.has_edge(v, w):
            return True
    return False


# ---------------------------------------------------------------------------
# Isomorphism search: plain backtracking ordered by degree signatures.
# ---------------------------------------------------------------------------


def _signatures(g: UnderlyingGraph):
    adj = g.adjacency_sets()
    deg = [len(a) for a in adj]
    return [(deg[u], tuple(sorted(deg[v] for v in adj[u]))) for u in range(g.n)]


def graph_isomorphisms(
    g: UnderlyingGraph, h: UnderlyingGraph
) -> Iterator[Tuple[int, ...]]:
    """Yield every bijection perm with perm(g) = h (perm[u] = image of u)."""
    if g.n != h.n or g.m != h.m:
        return
    if sorted(g.degree_sequence()) != sorted(h.degree_sequence()):
        return
    n = g.n
    sig_g = _signatures(g)
    sig_h = _signatures(h)
    if sorted(sig_g) != sorted(sig_h):
        return
    adj_g = g.adjacency_sets()
    adj_h = h.adjacency_sets()
    candidates: Dict[tuple, List[int]] = {}
    for v in range(n):
        candidates.setdefault(sig_h[v], []).append(v)
    # place high-constraint vertices first
    order = sorted(range(n), key=lambda u: (len(candidates.get(sig_g[u], ())), -len(adj_g[u])))
    mapping = [-1] * n
    used = [False] * n

    def extend(pos: int) -> Iterator[Tuple[int, ...]]:
        if pos == n:
            yield tuple(mapping)
            return
        u = order[pos]
        for v in candidates.get(sig_g[u], ()):
            if used[v]:
                continue
            ok = True
            for w in order[:pos]:
                if (w in adj_g[u]) != (mapping[w] in adj_h[v]):
                    ok = False
                    break
            if ok:
                mapping[u] = v
                used[v] = True
                yield from extend(pos + 1)
                mapping[u] = -1
                used[v] = False

    yield from extend(0)


def automorphisms(g: UnderlyingGraph) -> List[Tuple[int, ...]]:
    return list(graph_isomorphisms(g, g))


def signed_pairs_isomorphisms(
    n: int,
    gains_a: Dict[Tuple[int, int], int],
    gains_b: Dict[Tuple[int, int], int],
) -> Iterator[Tuple[int, ...]]:
    """Yield bijections mapping the gain map of A exactly onto that of B.

    Gains are exponent maps on ordered pairs (u, v), u < v; reversing a pair
    negates the exponent mod 6.  This is isomorphism of signed digraphs:
    E(A) = P E(B) P^T up to the permutation P.
    """
    if len(gains_a) != len(gains_b):
        return
    ga = UnderlyingGraph.from_edges(n, gains_a.keys())
    gb = UnderlyingGraph.from_edges(n, gains_b.keys())

    def gain(gains, u, v):
        if u < v:
            return gains.get((u, v))
        k = gains.get((v, u))
        return None if k is None else (-k) % 6

    adj_a = ga.adjacency_sets()
    sig_a = _signatures(ga)
    sig_b = _signatures(gb)
    if sorted(sig_a) != sorted(sig_b):
        return
    candidates: Dict[tuple, List[int]] = {}
    for v in range(n):
        candidates.setdefault(sig_b[v], []).append(v)
    order = sorted(range(n), key=lambda u: len(candidates.get(sig_a[u], ())))
    mapping = [-1] * n
    used = [False] * n

    def extend(pos: int) -> Iterator[Tuple[int, ...]]:
        if pos == n:
            yield tuple(mapping)
            return
        u = order[pos]
        for v in candidates.get(sig_a[u], ()):
            if used[v]:
                continue
            ok = True
            for w in order[:pos]:
                if gain(gains_a, u, w) != gain(gains_b, v, mapping[w]):
                    ok = False
                    break
            if ok:
                mapping[u] = v
                used[v] = True
                yield from extend(pos + 1)
                mapping[u] = -1
                used[v] = False

    yield from extend(0)


# ---------------------------------------------------------------------------
# Canonical labelling: lexicographic minimum adjacency string.
# ---------------------------------------------------------------------------

_CANONICAL_LIMIT = 12


def _twin_classes(g: UnderlyingGraph) -> List[int]:
    """class id per vertex; u, v are interchangeable if N(u)-{v} = N(v)-{u}."""
    adj = g.adjacency_sets()
    cls = list(range(g.n))
    for u, v in combinations(range(g.n), 2):
        if cls[v] != v:
            continue
        if (adj[u] - {v}) == (adj[v] - {u}):
            cls[v] = cls[u]
    return cls


def canonical_permutation(g: UnderlyingGraph) -> Tuple[int, ...]:
    """Permutation placing g into its canonical labelling.

    The canonical form is the lexicographically smallest bit string obtained
    by listing, for each position i in order, the adjacency of the vertex
    placed at i to the vertices placed at 0..i-1.  Returns perm with
    perm[v] = canonical position of v.  Backtracking prunes on strict prefix
    comparisons and collapses twin vertices (interchangeable by a
    transposition automorphism), which tames complete and multipartite
    graphs.
    """
    n = g.n
    if n > _CANONICAL_LIMIT:
        raise ValueError(f"canonical labelling limited to n <= {_CANONICAL_LIMIT}")
    if n == 0:
        return ()
    adj = g.adjacency_sets()
    deg = [len(a) for a in adj]
    twin = _twin_classes(g)

    best_bits: List[int] = []
    best_perm: List[int] = []
    placed: List[int] = []
    have_best = False

    def rec(bits: List[int]):
        nonlocal have_best, best_bits, best_perm
        depth = len(placed)
        if depth == n:
            if not have_best or bits < best_bits:
                best_bits = bits[:]
                best_perm = placed[:]
                have_best = True
            return
        seen_classes = set()
        cands = []
        for v in range(n):
            if v in placed:
                continue
            key = (twin[v], tuple(1 if u in adj[v] else 0 for u in placed))
            if key in seen_classes:
                continue
            seen_classes.add(key)
            new_bits = [1 if u in adj[v] else 0 for u in placed]
            cands.append((new_bits, -deg[v], v))
        cands.sort()
        for new_bits, _, v in cands:
            trial = bits + new_bits
            if have_best:
                prefix = best_bits[: len(trial)]
                if trial > prefix:
                    continue
            placed.append(v)
            rec(trial)
            placed.pop()

    rec([])
    perm = [0] * n
    for pos, v in enumerate(best_perm):
        perm[v] = pos
    return tuple(perm)


# ---------------------------------------------------------------------------
# graph6 text format.
# ---------------------------------------------------------------------------


def parse_graph6(line: str) -> UnderlyingGraph:
    """Decode one graph in graph6 format (n < 63 or the 4-byte extension)."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise ValueError(f"invalid graph6 characters in {line!r}")
    if data[0] <= 62:
        n = data[0]
        body = data[1:]
    elif len(data) >= 4 and data[1] <= 62:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        raise ValueError("graph6 sizes beyond 258047 vertices not supported")
    bits = []
    for b in body:
        for i in range(5, -1, -1):
            bits.append((b >> i) & 1)
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if idx < len(bits) and bits[idx]:
                edges.append((u, v))
            idx += 1
    return UnderlyingGraph.from_edges(n, edges)


def to_graph6(g: UnderlyingGraph) -> str:
    if g.n > 62:
        raise ValueError("graph6 encoding implemented for n <= 62")
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        b = 0
        for j in range(6):
            b = (b << 1) | bits[i + j]
        out.append(chr(b + 63))
    return "".join(out)


def read_graph6_lines(text: str) -> List[UnderlyingGraph]:
    graphs = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        graphs.append(parse_graph6(line))
    return graphs


# ---------------------------------------------------------------------------
# Built-in census source: every non-isomorphic graph on up to 7 vertices.
# ---------------------------------------------------------------------------

_ATLAS_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


@lru_cache(maxsize=None)
def all_graphs(n: int) -> Tuple[UnderlyingGraph, ...]:
    """All non-isomorphic graphs with exactly n vertices (connected or not).

    Backed by the published graph atlas (via networkx) rather than a
    re-implementation of orderly generation; the count per order is asserted
    against the known census sizes.
    """
    if n == 0:
        return (UnderlyingGraph.from_edges(0, []),)
    if n > 7:
        raise ValueError("built-in graph source covers n <= 7; supply a graph6 list")
    import networkx as nx

    out = []
    for G in nx.graph_atlas_g():
        if G.number_of_nodes() != n:
            continue
        mapping = {v: i for i, v in enumerate(sorted(G.nodes()))}
        out.append(
            UnderlyingGraph.from_edges(
                n, ((mapping[u], mapping[v]) for u, v in G.edges())
            )
        )
    if len(out) != _ATLAS_COUNTS[n]:
        raise RuntimeError(
            f"atlas returned {len(out)} graphs on {n} vertices, expected {_ATLAS_COUNTS[n]}"
        )
    return tuple(out)


def connected_graphs(n: int) -> Tuple[UnderlyingGraph, ...]:
    return tuple(g for g in all_graphs(n) if g.is_connected())
