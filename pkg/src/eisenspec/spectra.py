"""Exact spectral data of signed digraphs.

Everything decision-bearing (characteristic polynomial, rank, inertia,
cospectrality) is computed over the integers: matrix powers live in
Z[omega] as integer coordinate pairs, power traces are integers, and the
Newton recursion for the coefficients divides exactly.  Floating point
appears only in the display/diagnostic eigensolver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .algebra import (
    EisensteinRational,
    IntPolynomial,
    Unit,
    UNIT_COORDS,
    poly_real_root_counts,
)
from .digraph import SignedDigraph

__all__ = [
    "EisensteinMatrix",
    "Spectrum",
    "eisenstein_matrix",
    "char_poly_exact",
    "trace_power",
    "triangle_census",
    "rank_exact",
    "inertia",
    "eigenvalues_numeric",
    "cycle_gain",
    "spectrum_is_symmetric",
    "verify_interlacing",
    "spectrum",
]


class EisensteinMatrix:
    """Hermitian matrix over Z[omega], stored as integer coordinate pairs."""

    __slots__ = ("n", "a", "b")

    def __init__(self, a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]):
        n = len(a)
        self.n = n
        self.a = [list(row) for row in a]
        self.b = [list(row) for row in b]
        for i in range(n):
            for j in range(n):
                ca, cb = self.a[i][j], self.b[i][j]
                # Hermitian: conj(a + b w) = (a + b) - b w
                if self.a[j][i] != ca + cb or self.b[j][i] != -cb:
                    raise ValueError(f"matrix is not Hermitian at ({i},{j})")

    @classmethod
    def from_digraph(cls, phi: SignedDigraph) -> "EisensteinMatrix":
        n = phi.n
        a = [[0] * n for _ in range(n)]
        b = [[0] * n for _ in range(n)]
        for (u, v), k in phi.gains.items():
            ca, cb = UNIT_COORDS[k]
            a[u][v], b[u][v] = ca, cb
            ka, kb = UNIT_COORDS[(-k) % 6]
            a[v][u], b[v][u] = ka, kb
        return cls(a, b)

    def entry(self, u: int, v: int) -> EisensteinRational:
        return EisensteinRational(Fraction(self.a[u][v]), Fraction(self.b[u][v]))

    def __repr__(self) -> str:
        return f"EisensteinMatrix(n={self.n})"


def eisenstein_matrix(phi: SignedDigraph) -> EisensteinMatrix:
    """Unit entries at edges, zeros elsewhere, zero diagonal."""
    return EisensteinMatrix.from_digraph(phi)


# ---------------------------------------------------------------------------
# Integer charpoly kernel.
# ---------------------------------------------------------------------------


def _zomega_matmul(a1, b1, a2, b2, n: int):
    """(a1 + b1 w) @ (a2 + b2 w) with w^2 = w - 1, plain integer lists."""
    a2t = [[a2[j][i] for j in range(n)] for i in range(n)]
    b2t = [[b2[j][i] for j in range(n)] for i in range(n)]
    ra = [[0] * n for _ in range(n)]
    rb = [[0] * n for _ in range(n)]
    for i in range(n):
        a1i = a1[i]
        b1i = b1[i]
        rai = ra[i]
        rbi = rb[i]
        for k in range(n):
            a2k = a2t[k]
            b2k = b2t[k]
            sa = 0
            sb = 0
            for j in range(n):
                x, y = a1i[j], b1i[j]
                u, v = a2k[j], b2k[j]
                if x or y:
                    sa += x * u - y * v
                    sb += x * v + y * u + y * v
            rai[k] = sa
            rbi[k] = sb
    return ra, rb


def _pair_trace(a1, b1, a2, b2, n: int) -> Tuple[int, int]:
    """trace of (a1 + b1 w) @ (a2 + b2 w) without forming the product."""
    ta = 0
    tb = 0
    for i in range(n):
        a1i, b1i = a1[i], b1[i]
        for j in range(n):
            x, y = a1i[j], b1i[j]
            if x or y:
                u, v = a2[j][i], b2[j][i]
                ta += x * u - y * v
                tb += x * v + y * u + y * v
    return ta, tb


def _charpoly_from_matrices(a, b, n: int) -> List[int]:
    """Monic integer characteristic polynomial from coordinate matrices.

    Power traces p_k are assembled from powers up to E^ceil(n/2) via
    pairwise trace products, then Newton's identities produce the
    elementary symmetric functions.  Realness of every trace and exact
    divisibility in the recursion are asserted; a failure would mean the
    input was not a matrix of the promised kind.
    """
    if n == 0:
        return [1]
    powers = [(a, b)]  # powers[j] = E^(j+1)
    half = (n + 1) // 2
    for _ in range(half - 1):
        pa, pb = powers[-1]
        powers.append(_zomega_matmul(pa, pb, a, b, n))
    traces = [0] * (n + 1)  # traces[k] = tr(E^k), integer
    for k in range(1, n + 1):
        if k <= half:
            pa, pb = powers[k - 1]
            ta = sum(pa[i][i] for i in range(n))
            tb = sum(pb[i][i] for i in range(n))
        else:
            i = k // 2
            j = k - i
            ta, tb = _pair_trace(*powers[i - 1], *powers[j - 1], n)
        if tb != 0:
            raise ArithmeticError(f"non-real power trace at k={k}")
        traces[k] = ta
    # Newton: k e_k = sum_{j=1..k} (-1)^(j-1) e_{k-j} p_j
    e = [0] * (n + 1)
    e[0] = 1
    for k in range(1, n + 1):
        acc = 0
        sign = 1
        for j in range(1, k + 1):
            acc += sign * e[k - j] * traces[j]
            sign = -sign
        if acc % k != 0:
            raise ArithmeticError(f"non-integer coefficient at k={k}")
        e[k] = acc // k
    # chi(x) = sum (-1)^k e_k x^(n-k)
    return [((-1) ** k) * e[k] for k in range(n + 1)]


def char_poly_exact(m) -> IntPolynomial:
    """det(xI - E) as an exact monic integer polynomial.

    Accepts an EisensteinMatrix or a SignedDigraph.
    """
    if isinstance(m, SignedDigraph):
        m = EisensteinMatrix.from_digraph(m)
    return IntPolynomial(tuple(_charpoly_from_matrices(m.a, m.b, m.n)))


def trace_power(m, p: int) -> int:
    """Exact integer trace of E^p (p = 2 or 3 in the structural lemmas)."""
    if isinstance(m, SignedDigraph):
        m = EisensteinMatrix.from_digraph(m)
    n = m.n
    if p < 1:
        raise ValueError("power must be positive")
    pa, pb = m.a, m.b
    for _ in range(p - 1):
        pa, pb = _zomega_matmul(pa, pb, m.a, m.b, n)
    ta = sum(pa[i][i] for i in range(n))
    tb = sum(pb[i][i] for i in range(n))
    if tb != 0:
        raise ArithmeticError("non-real trace")
    return ta


_RE_CLASS = {0: "1", 1: "1/2", 5: "1/2", 2: "-1/2", 4: "-1/2", 3: "-1"}


def triangle_census(phi: SignedDigraph) -> Tuple[int, int, int, int]:
    """(s_1, s_1/2, s_-1/2, s_-1): induced triangles bucketed by Re of gain.

    The weighted identity 6 s_1 + 3 s_1/2 - 3 s_-1/2 - 6 s_-1 = tr E^3 is
    asserted before returning.
    """
    counts = {"1": 0, "1/2": 0, "-1/2": 0, "-1": 0}
    for (u, v, w) in phi.underlying().triangles():
        g = (phi.gain(u, v) + phi.gain(v, w) + phi.gain(w, u)) % 6
        counts[_RE_CLASS[g]] += 1
    s1, sh, snh, sn = counts["1"], counts["1/2"], counts["-1/2"], counts["-1"]
    if 6 * s1 + 3 * sh - 3 * snh - 6 * sn != trace_power(phi, 3):
        raise AssertionError("triangle census disagrees with the cubic trace")
    return s1, sh, snh, sn


def rank_exact(phi: SignedDigraph) -> int:
    """n minus the multiplicity of the zero root of the charpoly."""
    _, n_zero, _ = poly_real_root_counts(char_poly_exact(phi))
    return phi.n - n_zero


def inertia(phi) -> Tuple[int, int, int]:
    """(n_pos, n_zero, n_neg), exact."""
    if isinstance(phi, IntPolynomial):
        return poly_real_root_counts(phi)
    return poly_real_root_counts(char_poly_exact(phi))


def cycle_gain(phi: SignedDigraph, cycle: Sequence[int]) -> Unit:
    """Gain of the cycle traversed in the stated vertex order."""
    if len(cycle) < 3:
        raise ValueError("cycles have length >= 3")
    if len(set(cycle)) != len(cycle):
        raise ValueError("cycle vertices must be distinct")
    total = 0
    for i, u in enumerate(cycle):
        v = cycle[(i + 1) % len(cycle)]
        k = phi.gain(u, v)
        if k is None:
            raise ValueError(f"consecutive cycle vertices {u},{v} not adjacent")
        total += k
    return Unit(total)


def spectrum_is_symmetric(phi: SignedDigraph) -> bool:
    """True iff chi(x) = +-chi(-x): all odd-step coefficients vanish."""
    coeffs = char_poly_exact(phi).coefficients
    return all(c == 0 for i, c in enumerate(coeffs) if i % 2 == 1)


# ---------------------------------------------------------------------------
# Numeric eigenvalues: real symmetric embedding + cyclic Jacobi.  Display
# and diagnostics only; nothing downstream decides on these numbers.
# ---------------------------------------------------------------------------

_SQRT3_2 = math.sqrt(3.0) / 2.0


def _jacobi_eigenvalues(mat, tol_factor: float = 1e-12) -> List[float]:
    import numpy as np

    s = np.array(mat, dtype=float)
    n = s.shape[0]
    if n == 0:
        return []
    norm = np.linalg.norm(s)
    if norm == 0:
        return [0.0] * n
    threshold = tol_factor * norm
    for _ in range(60):
        off = math.sqrt(max(0.0, (s * s).sum() - (np.diag(s) ** 2).sum()))
        if off <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = s[p, q]
                if abs(apq) <= threshold / (n * n):
                    continue
                theta = (s[q, q] - s[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (
                    abs(theta) + math.sqrt(theta * theta + 1.0)
                )
                c = 1.0 / math.sqrt(t * t + 1.0)
                sn = t * c
                rp = c * s[p, :] - sn * s[q, :]
                rq = sn * s[p, :] + c * s[q, :]
                s[p, :], s[q, :] = rp, rq
                cp = c * s[:, p] - sn * s[:, q]
                cq = sn * s[:, p] + c * s[:, q]
                s[:, p], s[:, q] = cp, cq
    return sorted(np.diag(s).tolist(), reverse=True)


def eigenvalues_numeric(m) -> List[float]:
    """Eigenvalues (floats, descending) via the 2n x 2n real embedding.

    The embedding [[Re, -Im], [Im, Re]] doubles each eigenvalue; each pair
    is reported once.
    """
    if isinstance(m, SignedDigraph):
        m = EisensteinMatrix.from_digraph(m)
    n = m.n
    if n == 0:
        return []
    re = [[m.a[i][j] + m.b[i][j] / 2.0 for j in range(n)] for i in range(n)]
    im = [[m.b[i][j] * _SQRT3_2 for j in range(n)] for i in range(n)]
    big = [[0.0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            big[i][j] = re[i][j]
            big[i][n + j] = -im[i][j]
            big[n + i][j] = im[i][j]
            big[n + i][n + j] = re[i][j]
    doubled = _jacobi_eigenvalues(big)
    return [doubled[2 * i] for i in range(n)]


def verify_interlacing(phi: SignedDigraph, subset: Sequence[int], tol: float = 1e-8) -> bool:
    """Numeric check that induced-subgraph eigenvalues interlace the host's."""
    lam = eigenvalues_numeric(phi)
    mu = eigenvalues_numeric(phi.induced(subset))
    n, m = len(lam), len(mu)
    for i in range(m):
        if not (lam[i] >= mu[i] - tol and mu[i] >= lam[n - m + i] - tol):
            return False
    return True


@dataclass(frozen=True)
class Spectrum:
    """Exact charpoly and inertia, plus float eigenvalues for display."""

    charpoly: IntPolynomial
    inertia: Tuple[int, int, int]
    numeric_eigenvalues: Tuple[float, ...]


def spectrum(phi: SignedDigraph) -> Spectrum:
    poly = char_poly_exact(phi)
    return Spectrum(
        charpoly=poly,
        inertia=poly_real_root_counts(poly),
        numeric_eigenvalues=tuple(eigenvalues_numeric(phi)),
    )
