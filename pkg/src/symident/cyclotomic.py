"""Exact arithmetic in Z[x]/Phi_m(x) and the root-of-unity evaluation
points built from it.

Working modulo the cyclotomic polynomial (rather than x^m - 1) keeps the
ring an integral domain, so "this element is a rational integer" is
decidable by looking at the coordinates.
"""

from __future__ import annotations

from functools import lru_cache

from .exactalg import det_cofactor
from .symfun import PointVector


def _poly_divide_exact(num, den):
    # dense ascending coefficient lists over Z, den monic-led; exact division
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        if c % den[-1]:
            raise ValueError("inexact polynomial division")
        f = c // den[-1]
        q[i] = f
        if f:
            for j, d in enumerate(den):
                num[i + j] -= f * d
    if any(num):
        raise ValueError("inexact polynomial division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple:
    """Coefficients (ascending) of the m-th cyclotomic polynomial, obtained
    by dividing x^m - 1 by the product of the lower-order ones."""
    if m < 1:
        raise ValueError("cyclotomic polynomials are indexed from 1")
    num = [0] * (m + 1)
    num[0], num[m] = -1, 1
    den = [1]
    for d in range(1, m):
        if m % d == 0:
            phi_d = cyclotomic_poly(d)
            out = [0] * (len(den) + len(phi_d) - 1)
            for i, a in enumerate(den):
                if a:
                    for j, b in enumerate(phi_d):
                        out[i + j] += a * b
            den = out
    return tuple(_poly_divide_exact(num, den))


class CycField:
    """The ring Z[x]/Phi_m(x); elements are CycInt values in the power basis."""

    __slots__ = ("m", "phi", "degree", "_reduction")

    def __init__(self, m: int):
        self.m = m
        self.phi = cyclotomic_poly(m)
        self.degree = len(self.phi) - 1
        # x^(degree+i) mod Phi for i = 0..degree-1, enough to reduce products
        rows = []
        cur = [-c for c in self.phi[:-1]]
        rows.append(tuple(cur))
        for _ in range(self.degree - 1):
            nxt = [0] + cur[:-1]
            top = cur[-1]
            if top:
                for j in range(self.degree):
                    nxt[j] -= top * self.phi[j]
            cur = nxt
            rows.append(tuple(cur))
        self._reduction = rows

    def element(self, coords) -> "CycInt":
        coords = list(coords)
        if len(coords) > self.degree:
            out = coords[: self.degree]
            for i, c in enumerate(coords[self.degree:]):
                if c:
                    row = self._reduction[i]
                    for j in range(self.degree):
                        out[j] += c * row[j]
            coords = out
        else:
            coords = coords + [0] * (self.degree - len(coords))
        return CycInt(self, tuple(coords))

    def from_int(self, c: int) -> "CycInt":
        return self.element([c])

    @property
    def zero(self) -> "CycInt":
        return self.from_int(0)

    @property
    def one(self) -> "CycInt":
        return self.from_int(1)

    def zeta(self, j: int = 1) -> "CycInt":
        """The class of x^j, a primitive m-th root of unity for gcd(j,m)=1."""
        j %= self.m
        return self.element([0] * j + [1])

    def __eq__(self, other):
        return isinstance(other, CycField) and other.m == self.m

    def __hash__(self):
        return hash(("CycField", self.m))

    def __repr__(self):
        return "CycField(%d)" % self.m


class CycInt:
    """Element of Z[x]/Phi_m(x), stored as power-basis coordinates."""

    __slots__ = ("field", "coords")

    def __init__(self, field: CycField, coords):
        self.field = field
        self.coords = tuple(coords)
        if len(self.coords) != field.degree:
            raise ValueError("coordinate vector of wrong length")

    def _coerce(self, other):
        if isinstance(other, CycInt):
            if other.field != self.field:
                raise ValueError("mixed cyclotomic orders")
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CycInt(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.field, tuple(a * other for a in self.coords))
        if not isinstance(other, CycInt):
            return NotImplemented
        if other.field != self.field:
            raise ValueError("mixed cyclotomic orders")
        d = self.field.degree
        conv = [0] * (2 * d - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    if b:
                        conv[i + j] += a * b
        return self.field.element(conv)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("cyclotomic powers take nonnegative integer exponents")
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_rational_integer(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash((self.field.m, self.coords))

    def __repr__(self):
        return "CycInt(m=%d, %r)" % (self.field.m, self.coords)


def as_integer(x: CycInt) -> int:
    """Constant coordinate of x, provided every other coordinate vanishes."""
    if not x.is_rational_integer():
        raise ValueError("not a rational integer: coordinates %r in Z[x]/Phi_%d"
                         % (x.coords, x.field.m))
    return x.coords[0]


# ---------------------------------------------------------------------------
# evaluation points


def shifted_roots_vector(r: int) -> PointVector:
    """Entries -zeta^j - zeta^(-j) for j = 1..r with zeta of order 2r+1;
    exact versions of -2 cos(2 pi j / (2r+1))."""
    if r < 1:
        raise ValueError("need r >= 1")
    field = CycField(2 * r + 1)
    m = field.m
    entries = [-(field.zeta(j) + field.zeta(m - j)) for j in range(1, r + 1)]
    return PointVector(entries, "shifted")


def doubled_roots_vector(r: int) -> PointVector:
    """Entries -zeta^j and -zeta^(-j) for j = 1..r, length 2r."""
    if r < 1:
        raise ValueError("need r >= 1")
    field = CycField(2 * r + 1)
    m = field.m
    plus = [-field.zeta(j) for j in range(1, r + 1)]
    minus = [-field.zeta(m - j) for j in range(1, r + 1)]
    return PointVector(plus + minus, "doubled")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def discriminant_square_check(r: int) -> bool:
    """Exact check that the squared Vandermonde determinant of the shifted
    roots equals (2r+1)^(r-1); needs 2r+1 prime.

    The square is checked (rather than the determinant itself) because the
    unsquared value is a square root of an integer whose sign depends on
    the ordering of the conjugates.
    """
    p = 2 * r + 1
    if not _is_prime(p):
        raise ValueError("2r+1 = %d is not prime" % p)
    vals = shifted_roots_vector(r)
    field = vals[0].field
    rows = [[vals[i] ** (r - j) for j in range(1, r + 1)] for i in range(r)]
    det = det_cofactor(rows)
    return det * det == field.from_int(p ** (r - 1))
