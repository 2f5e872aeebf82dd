"""Hand-pinned signed digraphs used by golden tests and reproduction scripts.

Each constructor returns a fixed labelled instance; the names describe the
property the instance exhibits.
"""

from __future__ import annotations

from typing import Tuple

from .digraph import SignedDigraph, from_edge_list
from .expansions import clique_expand

__all__ = [
    "cospectral_six_pair",
    "shared_tree_pair",
    "symmetric_spectrum_oddity",
    "paw_c4_expansion_pair",
    "bridged_clique_zero_pair",
    "pentagon_expansion_zero_pair",
]


def cospectral_six_pair() -> Tuple[SignedDigraph, SignedDigraph]:
    """Two cospectral, non-switching-isomorphic digraphs on one 6-vertex graph.

    Both share the underlying graph with edges
    {01, 04, 05, 12, 13, 23, 34, 45} and the characteristic polynomial
    x^6 - 8x^4 + 13x^2 - 5, but their fundamental-cycle gains differ.
    """
    a = from_edge_list(
        6,
        [
            (0, 1, 0),
            (0, 4, 0),
            (0, 5, 0),
            (1, 2, 3),  # negative digon
            (1, 3, 0),
            (2, 3, 0),
            (4, 3, 1),  # positive arc 4 -> 3
            (4, 5, 0),
        ],
    )
    b = from_edge_list(
        6,
        [
            (0, 1, 0),
            (0, 4, 0),
            (0, 5, 1),  # positive arc 0 -> 5
            (1, 3, 0),
            (2, 1, 4),  # negative arc 2 -> 1
            (2, 3, 0),
            (4, 3, 1),  # positive arc 4 -> 3
            (4, 5, 0),
        ],
    )
    return a, b


def shared_tree_pair() -> Tuple[SignedDigraph, SignedDigraph]:
    """Two tree-coincident representatives of one switching class.

    Both agree (all-positive) on the spanning path 0-1-2-3-4-5; they differ
    on the chords, yet a diagonal switch plus a relabelling maps one onto
    the other.
    """
    base = [(0, 1, 0), (1, 2, 0), (2, 3, 0), (3, 4, 0), (4, 5, 0)]
    a = from_edge_list(6, base + [(1, 4, 0), (0, 5, 3)])
    b = from_edge_list(6, base + [(1, 4, 3), (0, 5, 3)])
    return a, b


def symmetric_spectrum_oddity() -> SignedDigraph:
    """A non-bipartite 11-vertex digraph whose spectrum is symmetric."""
    return from_edge_list(
        11,
        [
            (0, 2, 4),  # negative arc 0 -> 2
            (0, 1, 0),
            (1, 2, 0),
            (2, 3, 0),
            (3, 4, 0),
            (2, 4, 0),
            (6, 4, 4),  # negative arc 6 -> 4
            (5, 6, 0),
            (4, 5, 0),
            (6, 7, 0),
            (6, 8, 0),
            (6, 9, 0),
            (6, 10, 0),
        ],
    )


def paw_c4_expansion_pair() -> Tuple[SignedDigraph, SignedDigraph]:
    """A cospectral pair of order 9 on different underlying graphs.

    A dense expansion of the triangle-with-pendant shape against an
    expansion of the four-cycle; both carry a single gain-omega arc bundle.
    """
    paw = from_edge_list(4, [(0, 1, 0), (0, 2, 1), (1, 2, 0), (2, 3, 0)])
    quad = from_edge_list(4, [(0, 1, 1), (1, 2, 0), (2, 3, 0), (0, 3, 0)])
    return clique_expand(paw, [3, 4, 1, 1]), clique_expand(quad, [6, 1, 1, 1])


def bridged_clique_zero_pair() -> Tuple[SignedDigraph, SignedDigraph]:
    """Two bridged-clique digraphs with a zero third-largest eigenvalue.

    The oriented edge touches the bridge attachment, which forces the zero;
    these witness why such signatures are excluded from the bridged-clique
    classification.
    """
    a = from_edge_list(
        7,
        [
            (0, 1, 0), (0, 2, 0), (0, 3, 0),
            (1, 2, 1),  # arc inside the 4-clique, hitting the attachment
            (1, 3, 0), (2, 3, 0),
            (4, 5, 0), (4, 6, 0), (5, 6, 0),
            (2, 6, 0),  # bridge
        ],
    )
    b = from_edge_list(
        6,
        [
            (0, 1, 1),  # arc in the first triangle
            (0, 2, 0), (1, 2, 0),
            (3, 4, 1),  # arc in the second triangle
            (3, 5, 0), (4, 5, 0),
            (2, 5, 0),  # bridge
        ],
    )
    return a, b


def pentagon_expansion_zero_pair() -> Tuple[SignedDigraph, SignedDigraph]:
    """Two pentagon expansions with a zero third-largest eigenvalue.

    The first doubles two non-adjacent blocks and stars both; the second
    stars one block while the closing pentagon edge is a negative arc.
    Both violate the admissible signature types.
    """
    a = from_edge_list(
        7,
        [
            (0, 1, 0), (0, 2, 0),
            (1, 3, 0), (2, 3, 0),
            (3, 4, 0), (3, 5, 0),
            (4, 6, 0), (5, 6, 0),
            (0, 6, 3),   # negative digon closing the pentagon
            (1, 2, 1),   # arc inside one doubled block
            (4, 5, 1),   # arc inside the other doubled block
        ],
    )
    b = from_edge_list(
        6,
        [
            (0, 1, 0), (1, 2, 0),
            (2, 3, 0), (2, 4, 0),
            (3, 5, 0), (4, 5, 0),
            (5, 0, 4),   # negative arc closing the pentagon
            (3, 4, 1),   # arc inside the doubled block
        ],
    )
    return a, b
