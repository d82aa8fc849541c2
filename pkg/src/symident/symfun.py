"""Elementary, complete homogeneous, power-sum, monomial and Schur
polynomials over any exact coefficient ring, together with the classical
Wronski / Newton relations and generating-function truncations.

All routines take a PointVector and work by duck typing: the entries only
have to support +, -, * (with int) and ** on nonnegative exponents.  This
lets one code path evaluate over rationals, Laurent polynomials, or
cyclotomic integers.

Conventions fixed here once and used everywhere downstream:

* power(0, ...) is rejected; where an identity needs a degree-0 power sum
  the caller passes the number of variables explicitly.
* a negative complete index is resolved through the one-row Schur quotient,
  which needs exact division and invertible entries; other negative shapes
  are rejected.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from .combinat import Partition
from .exactalg import MultiLaurent, det_cofactor, det_fraction_free


class PointVector:
    """Tuple of ring values with a tag recording how it was built.

    kind is "plain" for raw entries z_j, "doubled" for (z_1..z_r,
    1/z_1..1/z_r), "shifted" for entries z_j + 1/z_j.
    """

    __slots__ = ("entries", "kind")

    def __init__(self, entries, kind="plain"):
        entries = tuple(entries)
        if not entries:
            raise ValueError("empty point vector")
        if kind not in ("plain", "doubled", "shifted"):
            raise ValueError("unknown vector kind %r" % kind)
        self.entries = entries
        self.kind = kind

    @classmethod
    def doubled(cls, entries, inverses=None):
        entries = tuple(entries)
        if inverses is None:
            inverses = tuple(Fraction(1) / Fraction(x) for x in entries)
        else:
            inverses = tuple(inverses)
        return cls(entries + inverses, "doubled")

    @classmethod
    def shifted(cls, entries, inverses=None):
        entries = tuple(entries)
        if inverses is None:
            inverses = tuple(Fraction(1) / Fraction(x) for x in entries)
        else:
            inverses = tuple(inverses)
        return cls(tuple(z + w for z, w in zip(entries, inverses)), "shifted")

    @property
    def arity(self) -> int:
        return len(self.entries)

    @property
    def one(self):
        return self.entries[0] ** 0

    @property
    def zero(self):
        one = self.one
        return one - one

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __repr__(self):
        return "PointVector(%r, kind=%r)" % (self.entries, self.kind)


def symbolic_vectors(r: int):
    """Laurent-polynomial vectors in z_1..z_r: (plain, doubled, shifted)."""
    zs = [MultiLaurent.variable(i, r) for i in range(r)]
    inv = [z ** -1 for z in zs]
    plain = PointVector(zs, "plain")
    doubled = PointVector(tuple(zs) + tuple(inv), "doubled")
    shifted = PointVector([z + w for z, w in zip(zs, inv)], "shifted")
    return plain, doubled, shifted


# ---------------------------------------------------------------------------
# the three classical families


def elementary_prefix(nmax: int, v: PointVector) -> list:
    """[e_0, ..., e_nmax] by coefficient extraction from prod (1 + z_j y)."""
    one, zero = v.one, v.zero
    top = min(nmax, v.arity)
    e = [one] + [zero] * top
    count = 0
    for z in v:
        count += 1
        for k in range(min(count, top), 0, -1):
            e[k] = e[k] + z * e[k - 1]
    return e + [zero] * (nmax - top)


def elementary(n: int, v: PointVector):
    """Sum of all n-fold products of distinct entries; 1 at n = 0 and 0
    outside 0..arity."""
    if n < 0 or n > v.arity:
        return v.zero
    if n == 0:
        return v.one
    return elementary_prefix(n, v)[n]


def complete_prefix(nmax: int, v: PointVector) -> list:
    """[h_0, ..., h_nmax] by coefficient extraction from prod 1/(1 - z_j y)."""
    one, zero = v.one, v.zero
    h = [one] + [zero] * nmax
    for z in v:
        for k in range(1, nmax + 1):
            h[k] = h[k] + z * h[k - 1]
    return h


def complete(n: int, v: PointVector):
    """Sum of all degree-n monomials in the entries.

    Negative n is resolved through the one-row Schur quotient, so the
    entries must be pairwise distinct and support exact division.
    """
    if n == 0:
        return v.one
    if n < 0:
        return schur((n,) + (0,) * (v.arity - 1), v)
    return complete_prefix(n, v)[n]


def power(n: int, v: PointVector):
    """Sum of n-th powers of the entries; defined for n >= 1 only."""
    if n < 1:
        raise ValueError("power sums are defined for n >= 1")
    acc = None
    for z in v:
        t = z ** n
        acc = t if acc is None else acc + t
    return acc


def monomial(lam, v: PointVector):
    """Orbit sum of z^lam over distinct permutations of the exponent tuple."""
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    if lam.length > v.arity:
        raise ValueError("partition longer than the vector")
    exps = tuple(lam.parts) + (0,) * (v.arity - lam.length)
    acc = None
    for perm in set(permutations(exps)):
        term = None
        for z, e in zip(v, perm):
            if e == 0:
                continue
            f = z ** e
            term = f if term is None else term * f
        if term is None:
            term = v.one
        acc = term if acc is None else acc + term
    return acc


def _det(matrix):
    if matrix and isinstance(matrix[0][0], (int, Fraction)):
        return det_fraction_free(matrix)
    return det_cofactor(matrix)


def schur(lam, v: PointVector):
    """Quotient of the alternant det(z_i^(lam_j + r - j)) by the Vandermonde
    determinant.

    Nonnegative shapes of any length are accepted; a negative row is only
    allowed in the one-row shape (-n, 0, ..., 0) used to extend the complete
    polynomials below index zero.
    """
    lam = tuple(int(x) for x in lam)
    r = v.arity
    if len(lam) > r:
        raise ValueError("shape longer than the vector")
    lam = lam + (0,) * (r - len(lam))
    if any(p < 0 for p in lam):
        if any(p != 0 for p in lam[1:]):
            raise ValueError("negative entries only in the one-row shape")
    elif any(lam[i] < lam[i + 1] for i in range(r - 1)):
        raise ValueError("shape must be weakly decreasing")
    exps = [lam[j] + r - 1 - j for j in range(r)]
    alternant = _det([[v[i] ** exps[j] for j in range(r)] for i in range(r)])
    vandermonde = _det([[v[i] ** (r - 1 - j) for j in range(r)] for i in range(r)])
    return alternant / vandermonde


# ---------------------------------------------------------------------------
# classical relations


def wronski_check(n: int, v: PointVector) -> bool:
    """True iff sum_j (-1)^(j-1) e_j h_(n-j) vanishes (n >= 1)."""
    if n < 1:
        raise ValueError("the alternating convolution starts at n = 1")
    top = min(n, v.arity)
    e = elementary_prefix(top, v)
    h = complete_prefix(n, v)
    acc = v.zero
    for j in range(top + 1):
        term = e[j] * h[n - j]
        acc = acc - term if j % 2 == 0 else acc + term
    return acc == v.zero


def newton_check(n: int, v: PointVector) -> bool:
    """True iff sum_j (-1)^(n-j) p_(n-j+1) e_j equals (n+1) e_(n+1)."""
    top = min(n, v.arity)
    e = elementary_prefix(top, v)
    acc = v.zero
    for j in range(top + 1):
        term = power(n - j + 1, v) * e[j]
        acc = acc + term if (n - j) % 2 == 0 else acc - term
    return acc == elementary(n + 1, v) * (n + 1)


def genfun_coefficients(kind: str, v: PointVector, order: int) -> list:
    """Coefficients of y^0..y^order of the e / h / p generating functions.

    e: prod (1 + z_j y); h: prod 1/(1 - z_j y); p: sum_j 1/(1 - z_j y),
    whose constant coefficient is the number of entries.
    """
    if kind == "e":
        return elementary_prefix(order, v)
    if kind == "h":
        return complete_prefix(order, v)
    if kind == "p":
        out = [v.one * v.arity]
        for n in range(1, order + 1):
            out.append(power(n, v))
        return out
    raise ValueError("kind must be one of e, h, p")
