"""Exact arithmetic over the sixth-root unit group, Z[omega] and Q(omega).

omega = (1 + i*sqrt(3))/2 is a primitive sixth root of unity satisfying
omega^2 = omega - 1.  Every element of Q(omega) is written a + b*omega with
rational coordinates on the basis {1, omega}; the reduction rule keeps all
products on that basis.  Units are the six powers omega^k, k in Z_6, with
omega^0 = 1 and omega^3 = -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "Unit",
    "EisensteinRational",
    "IntPolynomial",
    "unit_mul",
    "unit_conj",
    "unit_to_eis",
    "eis_real_part",
    "poly_real_root_counts",
    "sturm_root_counts",
    "UNIT_COORDS",
]

# Coordinates (a, b) of omega^k on the basis {1, omega}.
UNIT_COORDS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))

# Twice the real part of omega^k (real parts are 1, 1/2, -1/2, -1, -1/2, 1/2).
UNIT_DOUBLE_RE = (2, 1, -1, -2, -1, 1)


@dataclass(frozen=True)
class Unit:
    """A unit omega^k of Z[omega], k taken modulo 6."""

    k: int

    def __post_init__(self):
        object.__setattr__(self, "k", self.k % 6)

    def __mul__(self, other: "Unit") -> "Unit":
        return Unit(self.k + other.k)

    def inverse(self) -> "Unit":
        return Unit(-self.k)

    def conj(self) -> "Unit":
        # Conjugation inverts a unit: |omega^k| = 1.
        return Unit(-self.k)

    def to_eisenstein(self) -> "EisensteinRational":
        a, b = UNIT_COORDS[self.k]
        return EisensteinRational(Fraction(a), Fraction(b))

    @property
    def real_part(self) -> Fraction:
        return Fraction(UNIT_DOUBLE_RE[self.k], 2)

    def __repr__(self) -> str:
        return f"w{self.k}"


def unit_mul(u: Unit, v: Unit) -> Unit:
    return u * v


def unit_conj(u: Unit) -> Unit:
    return u.conj()


def unit_to_eis(u: Unit) -> "EisensteinRational":
    return u.to_eisenstein()


def eis_real_part(x: "EisensteinRational") -> Fraction:
    return x.real_part


@dataclass(frozen=True)
class EisensteinRational:
    """Element a + b*omega of Q(omega), exact rational coordinates.

    Fraction keeps both coordinates in lowest terms with positive
    denominator, so equality and hashing are canonical.
    """

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "EisensteinRational":
        return cls(Fraction(0), Fraction(0))

    @classmethod
    def one(cls) -> "EisensteinRational":
        return cls(Fraction(1), Fraction(0))

    @classmethod
    def from_unit(cls, u: Unit) -> "EisensteinRational":
        return u.to_eisenstein()

    @classmethod
    def from_rational(cls, q) -> "EisensteinRational":
        return cls(Fraction(q), Fraction(0))

    # -- ring / field operations ------------------------------------------

    def __add__(self, other: "EisensteinRational") -> "EisensteinRational":
        return EisensteinRational(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "EisensteinRational") -> "EisensteinRational":
        return EisensteinRational(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "EisensteinRational":
        return EisensteinRational(-self.a, -self.b)

    def __mul__(self, other: "EisensteinRational") -> "EisensteinRational":
        # (a1 + b1 w)(a2 + b2 w) with w^2 = w - 1.
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        return EisensteinRational(a1 * a2 - b1 * b2, a1 * b2 + b1 * a2 + b1 * b2)

    def conj(self) -> "EisensteinRational":
        # conj(a + b w) = (a + b) - b w  since conj(w) = 1 - w.
        return EisensteinRational(self.a + self.b, -self.b)

    def norm(self) -> Fraction:
        """x * conj(x) = a^2 + ab + b^2, non-negative, zero iff x = 0."""
        return self.a * self.a + self.a * self.b + self.b * self.b

    def inverse(self) -> "EisensteinRational":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(omega)")
        c = self.conj()
        return EisensteinRational(c.a / n, c.b / n)

    def __truediv__(self, other: "EisensteinRational") -> "EisensteinRational":
        return self * other.inverse()

    # -- queries -----------------------------------------------------------

    @property
    def real_part(self) -> Fraction:
        # Re(omega) = 1/2.
        return self.a + self.b / 2

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    def __repr__(self) -> str:
        return f"({self.a} + {self.b}w)"


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients highest degree first.

    Characteristic polynomials produced by this package are monic; generic
    arithmetic (multiply, compose with shifts, exact division) is provided
    for test oracles.
    """

    coefficients: tuple

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        if len(coeffs) > 1:
            # normalize: no leading zeros except the zero polynomial itself
            i = 0
            while i < len(coeffs) - 1 and coeffs[i] == 0:
                i += 1
            coeffs = coeffs[i:]
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return self.coefficients == (0,)

    def is_monic(self) -> bool:
        return self.coefficients[0] == 1

    def __call__(self, x):
        """Exact evaluation; works for Fraction and int arguments."""
        acc = 0
        for c in self.coefficients:
            acc = acc * x + c
        return acc

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial((0,))
        a, b = self.coefficients, other.coefficients
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return IntPolynomial(tuple(out))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a = list(self.coefficients)[::-1]
        b = list(other.coefficients)[::-1]
        n = max(len(a), len(b))
        a += [0] * (n - len(a))
        b += [0] * (n - len(b))
        return IntPolynomial(tuple((x + y) for x, y in zip(a, b))[::-1])

    def scale(self, c: int) -> "IntPolynomial":
        return IntPolynomial(tuple(c * x for x in self.coefficients))

    def shift_degree(self, k: int) -> "IntPolynomial":
        """Multiply by lambda^k."""
        if self.is_zero():
            return self
        return IntPolynomial(self.coefficients + (0,) * k)

    def compose_neg(self) -> "IntPolynomial":
        """p(-lambda)."""
        n = self.degree
        return IntPolynomial(
            tuple(c if (n - i) % 2 == 0 else -c for i, c in enumerate(self.coefficients))
        )

    def divide_exact(self, other: "IntPolynomial") -> "IntPolynomial":
        """Exact polynomial division; raises if the remainder is nonzero."""
        q, r = _poly_divmod_fraction(self.coefficients, other.coefficients)
        if any(c != 0 for c in r):
            raise ValueError("inexact polynomial division")
        return IntPolynomial(tuple(_as_int(c) for c in q))

    def derivative(self) -> "IntPolynomial":
        n = self.degree
        if n == 0:
            return IntPolynomial((0,))
        return IntPolynomial(
            tuple(c * (n - i) for i, c in enumerate(self.coefficients[:-1]))
        )

    def __repr__(self) -> str:
        return f"IntPolynomial{self.coefficients}"


def _as_int(q: Fraction) -> int:
    if q.denominator != 1:
        raise ValueError(f"non-integer coefficient {q}")
    return q.numerator


def _poly_divmod_fraction(num: Sequence, den: Sequence):
    """Polynomial divmod over Q; inputs highest degree first."""
    num = [Fraction(c) for c in num]
    den = [Fraction(c) for c in den]
    while len(den) > 1 and den[0] == 0:
        den = den[1:]
    if den == [Fraction(0)]:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(1, len(num) - len(den) + 1)
    r = num[:]
    while len(r) >= len(den) and any(c != 0 for c in r):
        if r[0] == 0:
            r = r[1:]
            continue
        d = len(r) - len(den)
        c = r[0] / den[0]
        q[len(q) - 1 - d] = c
        for i in range(len(den)):
            r[i] -= c * den[i]
        r = r[1:]
    if not r:
        r = [Fraction(0)]
    return q, r


def _sign_variations(coeffs: Iterable) -> int:
    count = 0
    prev = 0
    for c in coeffs:
        if c == 0:
            continue
        s = 1 if c > 0 else -1
        if prev != 0 and s != prev:
            count += 1
        prev = s
    return count


def poly_real_root_counts(p: IntPolynomial):
    """Exact (n_pos, n_zero, n_neg) root census of a real-rooted polynomial.

    n_zero is the multiplicity of the root 0 (trailing zero coefficients);
    n_pos comes from Descartes' rule of signs, which is exact whenever every
    root is real (the caller's contract: p is the characteristic polynomial
    of a Hermitian matrix).
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no root census")
    coeffs = p.coefficients
    n_zero = 0
    while coeffs[-1] == 0 and len(coeffs) > 1:
        coeffs = coeffs[:-1]
        n_zero += 1
    n_pos = _sign_variations(coeffs)
    n_neg = (len(coeffs) - 1) - n_pos
    return n_pos, n_zero, n_neg


# ---------------------------------------------------------------------------
# Sturm-sequence fallback.  Same contract as poly_real_root_counts; used to
# cross-check Descartes in the test suite.  Counts roots with multiplicity
# via square-free decomposition.
# ---------------------------------------------------------------------------


def _frac_poly_trim(p):
    while len(p) > 1 and p[0] == 0:
        p = p[1:]
    return p


def _frac_poly_gcd(a, b):
    a = _frac_poly_trim([Fraction(c) for c in a])
    b = _frac_poly_trim([Fraction(c) for c in b])
    while b != [Fraction(0)]:
        _, r = _poly_divmod_fraction(a, b)
        a, b = b, _frac_poly_trim(r)
    # make monic for determinism
    if a[0] != 0:
        a = [c / a[0] for c in a]
    return a


def _frac_poly_div(a, b):
    q, r = _poly_divmod_fraction(a, b)
    if any(c != 0 for c in r):
        raise ValueError("inexact division in square-free decomposition")
    return _frac_poly_trim(q)


def _frac_derivative(p):
    n = len(p) - 1
    if n == 0:
        return [Fraction(0)]
    return [c * (n - i) for i, c in enumerate(p[:-1])]


def _sturm_chain(p):
    chain = [p, _frac_poly_trim(_frac_derivative(p))]
    while len(chain[-1]) > 1:
        _, r = _poly_divmod_fraction(chain[-2], chain[-1])
        r = _frac_poly_trim(r)
        if r == [Fraction(0)]:
            break
        chain.append([-c for c in r])
    return chain


def _eval_frac(p, x):
    acc = Fraction(0)
    for c in p:
        acc = acc * x + c
    return acc


def _chain_variations(chain, x):
    vals = [_eval_frac(p, x) for p in chain]
    return _sign_variations(vals)


def _sturm_distinct_in(p, lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots of square-free p in the half-open interval (lo, hi]."""
    chain = _sturm_chain(p)
    return _chain_variations(chain, lo) - _chain_variations(chain, hi)


def sturm_root_counts(p: IntPolynomial):
    """(n_pos, n_zero, n_neg) with multiplicity via Sturm sequences.

    Slower than Descartes but makes no real-rootedness assumption about the
    positive/negative counts it reports (complex roots are simply never
    counted), so agreement with poly_real_root_counts certifies the census.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no root census")
    coeffs = list(p.coefficients)
    n_zero = 0
    while coeffs[-1] == 0 and len(coeffs) > 1:
        coeffs.pop()
        n_zero += 1
    work = [Fraction(c) for c in coeffs]
    if len(work) == 1:
        return 0, n_zero, 0
    # Cauchy bound on root magnitude.
    bound = Fraction(1) + max(abs(Fraction(c) / work[0]) for c in work[1:])
    n_pos = 0
    n_neg = 0
    # gcd(p, p') keeps each root once per extra multiplicity, so summing
    # the distinct-root counts of successive gcd layers recovers
    # multiplicities
    layer = work
    while len(layer) > 1:
        g = _frac_poly_gcd(layer, _frac_derivative(layer))
        sq_free = _frac_poly_div(layer, g)
        n_pos += _sturm_distinct_in(sq_free, Fraction(0), bound)
        n_neg += _sturm_distinct_in(sq_free, -bound, Fraction(0))
        layer = g
    return n_pos, n_zero, n_neg
