"""The signed-digraph data model.

A signed directed graph is stored as a gain map: for each ordered vertex
pair (u, v) with u < v that carries an edge, the exponent k of the gain
omega^k on that pair.  The reversed pair carries the conjugate gain
omega^{-k}, so the Hermitian constraint holds by construction.  Encoding
of edge types: k = 0 positive digon, 3 negative digon, 1 positive arc
u -> v, 4 negative arc u -> v (5 and 2 are the reversed arcs).
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .graphs import UnderlyingGraph

__all__ = [
    "SignedDigraph",
    "from_edge_list",
    "underlying",
    "induced",
    "disjoint_union",
    "converse",
    "negate",
    "relabel",
    "parse_sdg",
    "to_sdg",
]

GainMap = Dict[Tuple[int, int], int]


class SignedDigraph:
    """Immutable signed digraph: vertex count plus gain map on pairs u < v."""

    __slots__ = ("n", "_gains", "_items")

    def __init__(self, n: int, gains: GainMap):
        table: GainMap = {}
        for (u, v), k in gains.items():
            if not (0 <= u < v < n):
                raise ValueError(f"bad pair ({u},{v}) for n={n}")
            table[(u, v)] = k % 6
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_gains", table)
        object.__setattr__(self, "_items", tuple(sorted(table.items())))

    def __setattr__(self, name, value):
        raise AttributeError("SignedDigraph is immutable")

    def __reduce__(self):
        return (SignedDigraph, (self.n, dict(self._gains)))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SignedDigraph)
            and self.n == other.n
            and self._items == other._items
        )

    def __hash__(self) -> int:
        return hash((self.n, self._items))

    @property
    def gains(self) -> GainMap:
        return dict(self._gains)

    @property
    def m(self) -> int:
        return len(self._gains)

    def is_empty(self) -> bool:
        return not self._gains

    def gain(self, u: int, v: int) -> Optional[int]:
        """Exponent of the gain on the ordered pair (u, v); None if no edge."""
        if u == v:
            raise ValueError("no self-pairs")
        if u < v:
            return self._gains.get((u, v))
        k = self._gains.get((v, u))
        return None if k is None else (-k) % 6

    def has_edge(self, u: int, v: int) -> bool:
        return self.gain(u, v) is not None

    def edges(self) -> List[Tuple[int, int]]:
        return [p for p, _ in self._items]

    def underlying(self) -> UnderlyingGraph:
        return UnderlyingGraph.from_edges(self.n, self._gains.keys())

    def induced(self, vertices: Sequence[int]) -> "SignedDigraph":
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        gains = {
            (index[u], index[v]): k
            for (u, v), k in self._gains.items()
            if u in index and v in index
        }
        return SignedDigraph(len(vs), gains)

    def disjoint_union(self, other: "SignedDigraph") -> "SignedDigraph":
        gains = dict(self._gains)
        shift = self.n
        for (u, v), k in other._gains.items():
            gains[(u + shift, v + shift)] = k
        return SignedDigraph(self.n + other.n, gains)

    def converse(self) -> "SignedDigraph":
        """Entrywise conjugation: every gain inverted."""
        return SignedDigraph(self.n, {p: (-k) % 6 for p, k in self._gains.items()})

    def negate(self) -> "SignedDigraph":
        """Multiply the signature by -1 = omega^3."""
        return SignedDigraph(self.n, {p: (k + 3) % 6 for p, k in self._gains.items()})

    def relabel(self, perm: Sequence[int]) -> "SignedDigraph":
        """perm[v] = new label of v; gains follow the pair orientation."""
        gains: GainMap = {}
        for (u, v), k in self._gains.items():
            a, b = perm[u], perm[v]
            if a < b:
                gains[(a, b)] = k
            else:
                gains[(b, a)] = (-k) % 6
        return SignedDigraph(self.n, gains)

    def degree(self, u: int) -> int:
        return sum(1 for (a, b) in self._gains if a == u or b == u)

    def __repr__(self) -> str:
        return f"SignedDigraph(n={self.n}, m={self.m})"


def from_edge_list(n: int, entries: Iterable[Tuple[int, int, int]]) -> SignedDigraph:
    """Build a signed digraph from (u, v, k) triples, gain omega^k on (u, v).

    Entries with v < u are normalized by conjugation.  Conflicting duplicate
    pairs are rejected; a repeated entry with the same gain is tolerated.
    """
    gains: GainMap = {}
    for u, v, k in entries:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"vertex out of range in ({u},{v},{k})")
        if u == v:
            raise ValueError(f"self-loop on vertex {u}")
        key, kk = ((u, v), k % 6) if u < v else ((v, u), (-k) % 6)
        if key in gains and gains[key] != kk:
            raise ValueError(f"conflicting gains on pair {key}")
        gains[key] = kk
    return SignedDigraph(n, gains)


def underlying(phi: SignedDigraph) -> UnderlyingGraph:
    return phi.underlying()


def induced(phi: SignedDigraph, vertices: Sequence[int]) -> SignedDigraph:
    return phi.induced(vertices)


def disjoint_union(a: SignedDigraph, b: SignedDigraph) -> SignedDigraph:
    return a.disjoint_union(b)


def converse(phi: SignedDigraph) -> SignedDigraph:
    return phi.converse()


def negate(phi: SignedDigraph) -> SignedDigraph:
    return phi.negate()


def relabel(phi: SignedDigraph, perm: Sequence[int]) -> SignedDigraph:
    return phi.relabel(perm)


# ---------------------------------------------------------------------------
# .sdg text format: "n <N>" header, then "<u> <v> <k>" per ordered pair,
# '#' starts a comment.
# ---------------------------------------------------------------------------


def parse_sdg(text: str) -> SignedDigraph:
    n = None
    entries = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "n" or len(parts) != 2:
                raise ValueError(f"expected 'n <N>' header, got {raw!r}")
            n = int(parts[1])
            continue
        if len(parts) != 3:
            raise ValueError(f"expected '<u> <v> <k>', got {raw!r}")
        u, v, k = (int(p) for p in parts)
        entries.append((u, v, k))
    if n is None:
        raise ValueError("missing 'n <N>' header")
    return from_edge_list(n, entries)


def to_sdg(phi: SignedDigraph, comment: str = "") -> str:
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"n {phi.n}")
    for (u, v), k in sorted(phi.gains.items()):
        lines.append(f"{u} {v} {k}")
    return "\n".join(lines) + "\n"
