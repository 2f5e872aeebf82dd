"""Named constructors for the signed digraphs the package works with.

All constructors return deterministic labelled representatives; anything the
theory fixes only up to switching isomorphism is pinned to a concrete
labelling here so golden tests are reproducible.
"""

from __future__ import annotations

from itertools import combinations
from typing import List, Sequence, Tuple

from .digraph import SignedDigraph, from_edge_list

__all__ = [
    "complete",
    "complete_star",
    "complete_double_star",
    "complete_bipartite",
    "empty",
    "path",
    "cycle",
    "transitive_tournament_4",
    "gem",
    "three_pan",
    "exceptional",
    "c5_type",
    "semi_complete_tilde",
    "semi_complete_hat",
    "semi_complete_plain",
    "kite",
    "named",
    "NAMED_CONSTRUCTORS",
]


def complete(n: int) -> SignedDigraph:
    """K_n, all positive digons."""
    return from_edge_list(n, ((u, v, 0) for u, v in combinations(range(n), 2)))


def complete_star(n: int) -> SignedDigraph:
    """K_n with the single pair (0, 1) replaced by a gain-omega arc."""
    if n < 2:
        raise ValueError("complete_star needs n >= 2")
    entries = [(u, v, 0) for u, v in combinations(range(n), 2) if (u, v) != (0, 1)]
    entries.append((0, 1, 1))
    return from_edge_list(n, entries)


def complete_double_star(n: int = 5) -> SignedDigraph:
    """K_n with two oriented edges sharing their initial vertex 0."""
    if n != 5:
        raise ValueError("the double-star construction is used at order 5")
    entries = [
        (u, v, 0)
        for u, v in combinations(range(n), 2)
        if (u, v) not in ((0, 1), (0, 2))
    ]
    entries += [(0, 1, 1), (0, 2, 1)]
    return from_edge_list(n, entries)


def complete_bipartite(p: int, q: int) -> SignedDigraph:
    """K_{p,q} on parts {0..p-1} and {p..p+q-1}, all positive digons."""
    return from_edge_list(
        p + q, ((u, p + v, 0) for u in range(p) for v in range(q))
    )


def empty(n: int) -> SignedDigraph:
    return SignedDigraph(n, {})


def path(n: int) -> SignedDigraph:
    """P_n labelled along the path: edges (0,1), (1,2), ..."""
    return from_edge_list(n, ((i, i + 1, 0) for i in range(n - 1)))


def cycle(n: int, gain: int = 0) -> SignedDigraph:
    """C_n labelled around the cycle, total cycle gain omega^gain.

    The gain sits on the closing edge traversed (n-1) -> 0; all other edges
    are positive digons.
    """
    if n < 3:
        raise ValueError("cycles need n >= 3")
    entries = [(i, i + 1, 0) for i in range(n - 1)]
    entries.append((n - 1, 0, gain))
    return from_edge_list(n, entries)


def transitive_tournament_4(sign: str = "+") -> SignedDigraph:
    """Order-4 transitive tournament: arcs u -> v for u < v, gain +-omega."""
    k = 1 if sign == "+" else 4
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    return from_edge_list(4, ((u, v, k) for u, v in combinations(range(4), 2)))


def gem() -> SignedDigraph:
    """Dominating vertex 0 over the path 1-2-3-4."""
    return from_edge_list(
        5, [(0, 1, 0), (0, 2, 0), (0, 3, 0), (0, 4, 0), (1, 2, 0), (2, 3, 0), (3, 4, 0)]
    )


def three_pan() -> SignedDigraph:
    """Triangle 0-1-2 with pendant 3 attached to 2."""
    return from_edge_list(4, [(0, 1, 0), (0, 2, 0), (1, 2, 0), (2, 3, 0)])


_EXCEPTIONAL_COMPLEMENTS = {
    1: (7, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]),
    2: (7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4)]),
    3: (6, [(1, 2), (1, 4), (2, 5), (4, 5)]),
    4: (6, [(0, 1), (1, 2), (2, 5), (4, 5)]),
}

_EXCEPTIONAL_EDGES = {
    5: (6, [(0, 1), (0, 5), (1, 2), (1, 5), (2, 3), (2, 4), (3, 4), (4, 5)]),
    6: (
        7,
        [
            (0, 1), (0, 5), (0, 6),
            (1, 2), (1, 5), (1, 6),
            (2, 3), (2, 4), (2, 5),
            (3, 4), (4, 5), (5, 6),
        ],
    ),
}


def exceptional(index: int) -> SignedDigraph:
    """The six sporadic all-positive graphs G1..G6 (orders 7,7,6,6,6,7).

    G1..G4 are given by their complements, G5 and G6 by direct edge lists;
    all carry the all-positive signature.
    """
    if index in _EXCEPTIONAL_COMPLEMENTS:
        n, comp = _EXCEPTIONAL_COMPLEMENTS[index]
        comp_set = {tuple(sorted(e)) for e in comp}
        return from_edge_list(
            n,
            (
                (u, v, 0)
                for u, v in combinations(range(n), 2)
                if (u, v) not in comp_set
            ),
        )
    if index in _EXCEPTIONAL_EDGES:
        n, edges = _EXCEPTIONAL_EDGES[index]
        return from_edge_list(n, ((u, v, 0) for u, v in edges))
    raise ValueError("exceptional graphs are numbered 1..6")


def _block_offsets(tau: Sequence[int]) -> List[int]:
    offsets = [0]
    for t in tau:
        offsets.append(offsets[-1] + t)
    return offsets


def c5_type(type_tag: str, tau: Sequence[int]) -> SignedDigraph:
    """Clique expansion of the pentagon with one of the four signature types.

    Blocks 0..4 sit consecutively around the pentagon; blocks are positive
    cliques and consecutive block pairs are joined by positive digons except
    for the distinguished pair (4, 0):

      A: all edges of the (4, 0) pair are negative digons;
      B: as A, plus one gain-omega arc inside block 4 (needs tau[4] >= 2);
      C: all edges of the (4, 0) pair are -omega arcs oriented 4 -> 0;
      D: as A, but the first (4, 0) edge is a -omega arc (needs >= 2 edges
         in the pair).
    """
    tau = list(tau)
    if len(tau) != 5 or any(t < 1 for t in tau):
        raise ValueError("tau must hold five positive block sizes")
    type_tag = type_tag.upper()
    if type_tag not in "ABCD" or len(type_tag) != 1:
        raise ValueError("type must be one of A, B, C, D")
    if type_tag == "B" and tau[4] < 2:
        raise ValueError("type B needs at least two vertices in block 4")
    if type_tag == "D" and tau[0] * tau[4] < 2:
        raise ValueError("type D needs at least two edges between blocks 4 and 0")
    off = _block_offsets(tau)
    blocks = [list(range(off[j], off[j + 1])) for j in range(5)]
    entries: List[Tuple[int, int, int]] = []
    for j in range(5):
        entries.extend((u, v, 0) for u, v in combinations(blocks[j], 2))
    for j in range(4):
        entries.extend((u, v, 0) for u in blocks[j] for v in blocks[j + 1])
    cross = [(a, b) for a in blocks[4] for b in blocks[0]]
    if type_tag in ("A", "B"):
        entries.extend((a, b, 3) for a, b in cross)
    elif type_tag == "C":
        entries.extend((a, b, 4) for a, b in cross)  # -omega arcs 4 -> 0
    else:  # D
        first, rest = cross[0], cross[1:]
        entries.append((first[0], first[1], 4))
        entries.extend((a, b, 3) for a, b in rest)
    if type_tag == "B":
        x, y = blocks[4][0], blocks[4][1]
        entries = [
            (u, v, k) for (u, v, k) in entries if tuple(sorted((u, v))) != (x, y)
        ]
        entries.append((x, y, 1))
    return from_edge_list(sum(tau), entries)


def _semi_complete_base(p: int, q: int) -> List[Tuple[int, int, int]]:
    """All-positive clique expansion of the 4-path with blocks [p, 1, 1, q]."""
    if p < 2 or q < 2:
        raise ValueError("both end blocks need at least two vertices")
    u, v = p, p + 1
    qblock = list(range(p + 2, p + 2 + q))
    entries = [(a, b, 0) for a, b in combinations(range(p), 2)]
    entries += [(a, u, 0) for a in range(p)]
    entries += [(u, v, 0)]
    entries += [(v, b, 0) for b in qblock]
    entries += [(a, b, 0) for a, b in combinations(qblock, 2)]
    return entries


def semi_complete_tilde(p: int, q: int) -> SignedDigraph:
    """Two bridged cliques; one gain-omega arc inside the p-side clique."""
    entries = [(a, b, k) for (a, b, k) in _semi_complete_base(p, q) if (a, b) != (0, 1)]
    entries.append((0, 1, 1))
    return from_edge_list(p + q + 2, entries)


def semi_complete_hat(p: int, q: int) -> SignedDigraph:
    """Two bridged cliques; one gain-omega arc inside the q-side clique."""
    x, y = p + 2, p + 3
    entries = [(a, b, k) for (a, b, k) in _semi_complete_base(p, q) if (a, b) != (x, y)]
    entries.append((x, y, 1))
    return from_edge_list(p + q + 2, entries)


def semi_complete_plain(p: int, q: int) -> SignedDigraph:
    """Two bridged cliques, all-positive signature."""
    return from_edge_list(p + q + 2, _semi_complete_base(p, q))


def kite(a: int, b: int) -> SignedDigraph:
    """(a, b)-kite: K_a on 0..a-1 plus a b-path hung off clique vertex a-1."""
    if a < 1 or b < 1:
        raise ValueError("kite needs a >= 1 and b >= 1")
    entries = [(u, v, 0) for u, v in combinations(range(a), 2)]
    entries.append((a - 1, a, 0))
    entries += [(a + i, a + i + 1, 0) for i in range(b - 1)]
    return from_edge_list(a + b, entries)


def _parse_tau(arg) -> List[int]:
    if isinstance(arg, (list, tuple)):
        return [int(t) for t in arg]
    return [int(t) for t in str(arg).split(",")]


NAMED_CONSTRUCTORS = {
    "K": lambda n: complete(int(n)),
    "K_star": lambda n: complete_star(int(n)),
    "K_double_star": lambda n=5: complete_double_star(int(n)),
    "K_bipartite": lambda p, q: complete_bipartite(int(p), int(q)),
    "O": lambda n: empty(int(n)),
    "P": lambda n: path(int(n)),
    "C": lambda n, gain=0: cycle(int(n), int(gain)),
    "T4": lambda sign="+": transitive_tournament_4(sign),
    "Gem": lambda: gem(),
    "ThreePan": lambda: three_pan(),
    "G1": lambda: exceptional(1),
    "G2": lambda: exceptional(2),
    "G3": lambda: exceptional(3),
    "G4": lambda: exceptional(4),
    "G5": lambda: exceptional(5),
    "G6": lambda: exceptional(6),
    "C5_type": lambda t, tau: c5_type(str(t), _parse_tau(tau)),
    "SemiCompleteTilde": lambda p, q: semi_complete_tilde(int(p), int(q)),
    "SemiCompleteHat": lambda p, q: semi_complete_hat(int(p), int(q)),
    "Kite": lambda a, b: kite(int(a), int(b)),
}


def named(constructor: str, *params) -> SignedDigraph:
    """Dispatch to a named constructor; raises ValueError on bad input."""
    if constructor not in NAMED_CONSTRUCTORS:
        raise ValueError(f"unknown constructor {constructor!r}")
    try:
        return NAMED_CONSTRUCTORS[constructor](*params)
    except TypeError as exc:
        raise ValueError(f"bad parameters for {constructor}: {exc}") from exc
