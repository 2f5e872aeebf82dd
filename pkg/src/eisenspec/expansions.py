"""Twin and clique expansion/reduction operators.

Twin expansion replaces vertex j by an independent set of tau_j copies,
clique expansion by a positive clique of tau_j copies; cross-block gains
repeat the base gain.  Blocks sit consecutively in base-vertex order, so
expanded labellings are reproducible.

Reduction detects (pseudo)twin pairs by single-unit row proportionality:
u, v are twins when they are non-adjacent and some unit c has
row_u = c * row_v away from {u, v}; pseudotwins when they are adjacent and
the mutual gain itself works as c.  Either condition forces every triangle
through the pair to have gain 1, so reductions stay inside the switching
class of the base.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from .digraph import SignedDigraph

__all__ = [
    "twin_expand",
    "clique_expand",
    "find_twins",
    "find_pseudotwins",
    "twin_reduce",
    "clique_reduce",
    "reduction_blocks",
    "twin_expand_charpoly",
    "clique_expand_charpoly",
]


def _offsets(tau: Sequence[int]) -> List[int]:
    off = [0]
    for t in tau:
        off.append(off[-1] + t)
    return off


def _validate_tau(phi: SignedDigraph, tau: Sequence[int]) -> List[int]:
    tau = [int(t) for t in tau]
    if len(tau) != phi.n:
        raise ValueError(f"expected {phi.n} multiplicities, got {len(tau)}")
    if any(t < 1 for t in tau):
        raise ValueError("multiplicities must be positive")
    return tau


def _expand(phi: SignedDigraph, tau: Sequence[int], clique: bool) -> SignedDigraph:
    tau = _validate_tau(phi, tau)
    off = _offsets(tau)
    gains: Dict[Tuple[int, int], int] = {}
    for (i, j), k in phi.gains.items():
        for a in range(off[i], off[i + 1]):
            for b in range(off[j], off[j + 1]):
                gains[(a, b)] = k
    if clique:
        for j in range(phi.n):
            block = range(off[j], off[j + 1])
            for a in block:
                for b in block:
                    if a < b:
                        gains[(a, b)] = 0
    return SignedDigraph(off[-1], gains)


def twin_expand(phi: SignedDigraph, tau: Sequence[int]) -> SignedDigraph:
    """Blocks become independent sets; tau_j is the final multiplicity of j."""
    return _expand(phi, tau, clique=False)


def clique_expand(phi: SignedDigraph, tau: Sequence[int]) -> SignedDigraph:
    """Blocks become positive cliques; tau_j is the final multiplicity of j."""
    return _expand(phi, tau, clique=True)


def _rows_proportional(phi: SignedDigraph, u: int, v: int) -> Optional[int]:
    """Unit exponent c with row_u = omega^c * row_v off {u, v}, else None."""
    c = None
    for z in range(phi.n):
        if z == u or z == v:
            continue
        gu = phi.gain(u, z)
        gv = phi.gain(v, z)
        if (gu is None) != (gv is None):
            return None
        if gu is None:
            continue
        d = (gu - gv) % 6
        if c is None:
            c = d
        elif c != d:
            return None
    return 0 if c is None else c


def find_twins(phi: SignedDigraph) -> List[Tuple[int, int]]:
    """Non-adjacent pairs whose rows agree up to one unit factor."""
    out = []
    for u in range(phi.n):
        for v in range(u + 1, phi.n):
            if phi.has_edge(u, v):
                continue
            if _rows_proportional(phi, u, v) is not None:
                out.append((u, v))
    return out


def find_pseudotwins(phi: SignedDigraph) -> List[Tuple[int, int]]:
    """Adjacent pairs whose rows agree with factor equal to the mutual gain."""
    out = []
    for u in range(phi.n):
        for v in range(u + 1, phi.n):
            c = phi.gain(u, v)
            if c is None:
                continue
            if _rows_proportional(phi, u, v) == c:
                out.append((u, v))
    return out


def _reduce(phi: SignedDigraph, finder) -> Tuple[SignedDigraph, List[int]]:
    """Collapse detected pairs until none remain.

    Per pass, the detected pairs are grouped into classes and all but the
    lowest vertex of each class are deleted at once; this realizes one
    particular order of single-pair deletions (a deletion never breaks the
    remaining pairs) while keeping large expansions cheap.  Returns the
    reduced digraph and, per original vertex, the index of the surviving
    vertex it collapsed into.
    """
    alive = list(range(phi.n))
    current = phi
    merged_into = list(range(phi.n))
    while True:
        pairs = finder(current)
        if not pairs:
            break
        root = list(range(current.n))

        def find(x):
            while root[x] != x:
                root[x] = root[root[x]]
                x = root[x]
            return x

        for u, v in pairs:
            ru, rv = find(u), find(v)
            if ru != rv:
                root[max(ru, rv)] = min(ru, rv)
        drop = [v for v in range(current.n) if find(v) != v]
        for v in drop:
            orig_v, orig_u = alive[v], alive[find(v)]
            for i, tgt in enumerate(merged_into):
                if tgt == orig_v:
                    merged_into[i] = orig_u
        keep = [i for i in range(current.n) if find(i) == i]
        current = current.induced(keep)
        alive = [alive[i] for i in keep]
    index = {orig: i for i, orig in enumerate(alive)}
    return current, [index[t] for t in merged_into]


def twin_reduce(phi: SignedDigraph) -> SignedDigraph:
    return _reduce(phi, find_twins)[0]


def clique_reduce(phi: SignedDigraph) -> SignedDigraph:
    return _reduce(phi, find_pseudotwins)[0]


def reduction_blocks(phi: SignedDigraph, clique: bool = False) -> Tuple[SignedDigraph, List[int]]:
    """Reduced digraph plus the block multiplicities (per reduced vertex)."""
    finder = find_pseudotwins if clique else find_twins
    reduced, merged = _reduce(phi, finder)
    counts = [0] * reduced.n
    for t in merged:
        counts[t] += 1
    return reduced, counts


# ---------------------------------------------------------------------------
# Exact characteristic polynomials of expansions without building the
# expanded matrix.  Writing the blow-up as S E T with T S = diag(tau), the
# determinant identity det(xI - S M) (for rectangular S, M) collapses the
# nonzero spectrum onto the small matrix E * diag(tau):
#
#   twin:    chi(x) = x^(n-k) * det(x I_k - E D)
#   clique:  chi(x) = (x+1)^(n-k) * q(x+1),  q(y) = det(y I_k - (E+I) D)
#
# Both small determinants expand to integer polynomials; this is what makes
# the large published expansion instances checkable in milliseconds.  The
# identity itself is validated against the dense path in the test suite.
# ---------------------------------------------------------------------------


def _charpoly_zomega_matrix(a, b, n: int) -> List[int]:
    """Monic integer charpoly of an n x n matrix over Z[omega] via traces.

    a, b are row-major coordinate matrices (lists of lists).  Trace-power
    recursion; realness and integrality of the result are asserted.
    """
    from .spectra import _charpoly_from_matrices  # shared integer kernel

    return _charpoly_from_matrices(a, b, n)


def twin_expand_charpoly(phi: SignedDigraph, tau: Sequence[int]):
    """IntPolynomial of twin_expand(phi, tau), computed on the base order."""
    from .algebra import IntPolynomial
    from .algebra import UNIT_COORDS

    tau = _validate_tau(phi, tau)
    k = phi.n
    n = sum(tau)
    a = [[0] * k for _ in range(k)]
    b = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            if i == j:
                continue
            g = phi.gain(i, j)
            if g is not None:
                ca, cb = UNIT_COORDS[g]
                a[i][j] = ca * tau[j]
                b[i][j] = cb * tau[j]
    small = _charpoly_zomega_matrix(a, b, k)
    poly = IntPolynomial(tuple(small))
    return poly.shift_degree(n - k)


def clique_expand_charpoly(phi: SignedDigraph, tau: Sequence[int]):
    """IntPolynomial of clique_expand(phi, tau), computed on the base order."""
    from .algebra import IntPolynomial
    from .algebra import UNIT_COORDS

    tau = _validate_tau(phi, tau)
    k = phi.n
    n = sum(tau)
    a = [[0] * k for _ in range(k)]
    b = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            if i == j:
                g_a, g_b = 1, 0  # E + I puts 1 on the diagonal
            else:
                g = phi.gain(i, j)
                if g is None:
                    continue
                g_a, g_b = UNIT_COORDS[g]
            a[i][j] = g_a * tau[j]
            b[i][j] = g_b * tau[j]
    q = IntPolynomial(tuple(_charpoly_zomega_matrix(a, b, k)))
    # chi(x) = (x+1)^(n-k) * q(x+1)
    shift = IntPolynomial((1, 1))  # x + 1
    comp = IntPolynomial((int(q.coefficients[0]),))
    for c in q.coefficients[1:]:
        comp = comp * shift + IntPolynomial((int(c),))
    out = comp
    for _ in range(n - k):
        out = out * shift
    return out
