"""Gain switching, spanning-tree normalization and switching isomorphism.

A diagonal switch multiplies the gain on (u, v) by x_u * x_v^{-1}; cycle
gains are invariant.  Pinning every spanning-tree gain to 1 ("tree
normalization") leaves only a per-component global constant of switching
freedom, which acts trivially, so two labelled digraphs on one graph are
switching equivalent exactly when their tree-normalized forms coincide.
Switching isomorphism adds vertex relabelling and the converse to the
orbit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from .digraph import SignedDigraph
from .graphs import (
    UnderlyingGraph,
    automorphisms,
    canonical_permutation,
    graph_isomorphisms,
    signed_pairs_isomorphisms,
)

__all__ = [
    "SwitchingFunction",
    "TreeNormalForm",
    "apply_switch",
    "normalize_tree",
    "fundamental_cycle_gains",
    "switching_equivalent_labeled",
    "switching_isomorphic",
    "canonical_form",
    "find_nonisomorphic_switch_partner",
]


@dataclass(frozen=True)
class SwitchingFunction:
    """Per-vertex unit exponents: the diagonal of the switching matrix."""

    exponents: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "exponents", tuple(k % 6 for k in self.exponents)
        )

    def __len__(self) -> int:
        return len(self.exponents)

    def inverse(self) -> "SwitchingFunction":
        return SwitchingFunction(tuple((-k) % 6 for k in self.exponents))

    def compose(self, other: "SwitchingFunction") -> "SwitchingFunction":
        return SwitchingFunction(
            tuple(a + b for a, b in zip(self.exponents, other.exponents))
        )

    @classmethod
    def identity(cls, n: int) -> "SwitchingFunction":
        return cls((0,) * n)

    def is_identity(self) -> bool:
        return all(k == 0 for k in self.exponents)


def apply_switch(phi: SignedDigraph, x: SwitchingFunction) -> SignedDigraph:
    """gain(u, v) -> x_u * gain(u, v) * x_v^{-1}; underlying graph unchanged."""
    if len(x) != phi.n:
        raise ValueError("switching function length must match vertex count")
    e = x.exponents
    return SignedDigraph(
        phi.n, {(u, v): (e[u] + k - e[v]) % 6 for (u, v), k in phi.gains.items()}
    )


@dataclass(frozen=True)
class TreeNormalForm:
    """A spanning forest, the base with all tree gains 1, and the switch used."""

    tree: FrozenSet[Tuple[int, int]]
    base: SignedDigraph
    applied: SwitchingFunction


def _check_spanning_forest(g: UnderlyingGraph, tree: Iterable[Tuple[int, int]]):
    edges = {tuple(sorted(e)) for e in tree}
    for u, v in edges:
        if not g.has_edge(u, v):
            raise ValueError(f"tree edge ({u},{v}) not in the graph")
    # acyclic and spanning each component: check by union-find
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            raise ValueError("given edge set contains a cycle")
        parent[ru] = rv
    comps = len({find(v) for v in range(g.n)})
    if comps != len(g.components()):
        raise ValueError("given forest does not span every component")
    return edges


def normalize_tree(
    phi: SignedDigraph, tree: Optional[Iterable[Tuple[int, int]]] = None
) -> TreeNormalForm:
    """Switch so every forest gain becomes 1 via a single potential pass.

    Default forest: BFS from the lowest vertex of each component, neighbours
    in increasing order.  Roots get exponent 0; a child v of parent u gets
    x_v = x_u * gain(u, v), which cancels the tree gain.
    """
    g = phi.underlying()
    if tree is None:
        _, tree_edges = g.bfs_forest()
        edge_set = {tuple(sorted(e)) for e in tree_edges}
        oriented = tree_edges
    else:
        edge_set = _check_spanning_forest(g, tree)
        # orient the forest away from component roots
        adj: Dict[int, List[int]] = {v: [] for v in range(phi.n)}
        for u, v in edge_set:
            adj[u].append(v)
            adj[v].append(u)
        seen = [False] * phi.n
        oriented = []
        for root in range(phi.n):
            if seen[root]:
                continue
            seen[root] = True
            stack = [root]
            while stack:
                u = stack.pop()
                for v in sorted(adj[u]):
                    if not seen[v]:
                        seen[v] = True
                        oriented.append((u, v))
                        stack.append(v)
    x = [0] * phi.n
    for u, v in oriented:
        x[v] = (x[u] + phi.gain(u, v)) % 6
    applied = SwitchingFunction(tuple(x))
    base = apply_switch(phi, applied)
    for u, v in edge_set:
        if base.gain(u, v) != 0:
            raise AssertionError("tree gain did not normalize")
    return TreeNormalForm(frozenset(edge_set), base, applied)


def fundamental_cycle_gains(
    phi: SignedDigraph, tree: Iterable[Tuple[int, int]]
) -> Dict[Tuple[int, int], int]:
    """Gain exponent of each fundamental cycle, keyed by its non-tree edge.

    The cycle of a non-tree edge (u, v) is traversed u -> v then back along
    the tree; with tree gains switched to 1 that gain is simply the
    normalized gain on (u, v).
    """
    nf = normalize_tree(phi, tree)
    return {
        (u, v): k for (u, v), k in nf.base.gains.items() if (u, v) not in nf.tree
    }


def switching_equivalent_labeled(
    a: SignedDigraph, b: SignedDigraph
) -> Optional[SwitchingFunction]:
    """Witness switch with apply_switch(a, X) == b, labels fixed; else None.

    Sound and complete because both sides are normalized on one shared
    deterministic tree: tree gains pinned to 1 leave only a per-component
    constant of freedom, which acts trivially on gains.
    """
    if a.n != b.n:
        raise ValueError("vertex counts differ")
    if a.underlying() != b.underlying():
        return None
    nf_a = normalize_tree(a)
    nf_b = normalize_tree(b)
    if nf_a.base != nf_b.base:
        return None
    witness = nf_b.applied.inverse().compose(nf_a.applied)
    if apply_switch(a, witness) != b:
        raise AssertionError("normalization produced an invalid witness")
    return witness


def switching_isomorphic(
    a: SignedDigraph,
    b: SignedDigraph,
    allow_converse: bool = True,
) -> Optional[Tuple[Tuple[int, ...], SwitchingFunction, bool]]:
    """First witness (bijection, switch, conjugated) making a equal to b.

    The bijection relabels a, the flag applies the converse, and the switch
    finishes the job: apply_switch(maybe_converse(a.relabel(perm)), X) == b.
    """
    if a.n != b.n:
        return None
    ga, gb = a.underlying(), b.underlying()
    for perm in graph_isomorphisms(ga, gb):
        relabeled = a.relabel(perm)
        for conj in (False, True) if allow_converse else (False,):
            candidate = relabeled.converse() if conj else relabeled
            witness = switching_equivalent_labeled(candidate, b)
            if witness is not None:
                return perm, witness, conj
    return None


_CANONICAL_LIMIT = 12


def canonical_form(phi: SignedDigraph) -> bytes:
    """Dedup key: equal canonical forms iff switching isomorphic.

    Minimum, over all relabellings onto the canonically labelled underlying
    graph and over taking the converse, of the tree-normalized gain map.
    Permutation search; usable for n <= 12 (cost grows with the
    automorphism group).  Stable only within a major version.
    """
    if phi.n > _CANONICAL_LIMIT:
        raise ValueError(f"canonical_form limited to n <= {_CANONICAL_LIMIT}")
    g = phi.underlying()
    base_perm = canonical_permutation(g)
    g_canon = g.relabel(base_perm)
    best: Optional[tuple] = None
    for aut in automorphisms(g_canon):
        perm = tuple(aut[base_perm[v]] for v in range(phi.n))
        relabeled = phi.relabel(perm)
        for conj in (False, True):
            candidate = relabeled.converse() if conj else relabeled
            nf = normalize_tree(candidate)
            key = tuple(sorted(nf.base.gains.items()))
            if best is None or key < best:
                best = key
    header = (phi.n, tuple(sorted(g_canon.edges)))
    return repr((header, best)).encode()


def _signed_isomorphic(a: SignedDigraph, b: SignedDigraph) -> bool:
    """Exact signed-digraph isomorphism (gains preserved, no switching)."""
    if a.n != b.n:
        return False
    for _ in signed_pairs_isomorphisms(a.n, a.gains, b.gains):
        return True
    return False


def find_nonisomorphic_switch_partner(
    phi: SignedDigraph,
) -> Optional[SignedDigraph]:
    """A switching-equivalent digraph that is not isomorphic to phi.

    Searches one-sided cut switches: multiply one side of a vertex cut by a
    unit.  Every non-empty digraph admits such a partner; the empty digraph
    returns None.  All cuts are scanned for n <= 12, single-vertex and
    edge-pair cuts beyond that.
    """
    if phi.is_empty():
        return None
    n = phi.n
    if n <= 12:
        # subsets containing vertex 0: a cut and its complement give the
        # same switched digraphs up to a trivial global constant
        cuts = []
        rest = list(range(1, n))
        for mask in range(1 << (n - 1)):
            side = [0] + [rest[i] for i in range(n - 1) if mask >> i & 1]
            if len(side) < n:
                cuts.append(side)
        cuts.sort(key=lambda s: (len(s), s))
    else:
        cuts = [[v] for v in range(n)]
        cuts += [list(e) for e in phi.edges()]
    for side in cuts:
        members = set(side)
        for k in range(1, 6):
            x = SwitchingFunction(
                tuple(k if v in members else 0 for v in range(n))
            )
            switched = apply_switch(phi, x)
            if switched == phi:
                continue
            if not _signed_isomorphic(switched, phi):
                return switched
    return None
