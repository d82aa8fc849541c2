"""Combinatorial coefficients and series.

Generalized binomials (negative upper index included), ballot coefficients,
raising factorials, Gaussian q-binomials, integer partitions with their
centralizer orders, and the ballot-number generating series that drives the
expansion identities.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .exactalg import Series, UniLaurent


def binom(n: int, k: int) -> int:
    """Binomial coefficient with arbitrary integer upper index.

    For k < 0 the value is 0; otherwise n(n-1)...(n-k+1)/k!, which is an
    exact integer for every integer n, negative ones included.
    """
    if k < 0:
        return 0
    if k == 0:
        return 1
    if n >= 0:
        return math.comb(n, k) if k <= n else 0
    num = 1
    for i in range(k):
        num *= n - i
    return num // math.factorial(k)


def ballot(n: int, k: int) -> int:
    """Ballot coefficient binom(n, k) - binom(n, k-1); k must be >= 0."""
    if k < 0:
        raise ValueError("ballot coefficient needs k >= 0")
    return binom(n, k) - binom(n, k - 1)


def raising_factorial(a, m: int) -> Fraction:
    """Rising product a(a+1)...(a+m-1); empty product 1 for m = 0."""
    if m < 0:
        raise ValueError("raising factorial needs m >= 0")
    a = Fraction(a)
    out = Fraction(1)
    for i in range(m):
        out *= a + i
    return out


@lru_cache(maxsize=None)
def _q_binom_cached(n: int, k: int) -> UniLaurent:
    if k < 0 or k > n:
        return UniLaurent.zero("q")
    if k == 0 or k == n:
        return UniLaurent.one("q")
    # q-Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k]; stays in the polynomial ring
    return _q_binom_cached(n - 1, k - 1) + UniLaurent.monomial(1, k) * _q_binom_cached(n - 1, k)


def q_binom(n: int, k: int) -> UniLaurent:
    """Gaussian binomial coefficient as a polynomial in q.

    Zero when k < 0 or k > n; evaluating at q = 1 recovers binom(n, k).
    """
    if n < 0:
        raise ValueError("q-binomial needs n >= 0")
    return _q_binom_cached(n, k)


def ballot_series(alpha: int, order: int) -> Series:
    """Power series whose x^k coefficient is (alpha)_{2k} / (k! (alpha+1)_k).

    For integer alpha >= 1 that coefficient equals ballot(alpha + 2k - 1, k),
    and alpha = 1 gives the Catalan numbers; the whole family is the
    alpha-th power of the Catalan generating function.  A zero factor in the
    denominator product is a domain error.
    """
    coeffs = []
    for k in range(order + 1):
        den = Fraction(math.factorial(k)) * raising_factorial(alpha + 1, k)
        if den == 0:
            raise ValueError("zero denominator at x^%d for alpha=%d" % (k, alpha))
        coeffs.append(raising_factorial(alpha, 2 * k) / den)
    return Series(coeffs, order)


class Partition:
    """Weakly decreasing tuple of positive parts (trailing zeros dropped)."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError("partition parts must be nonnegative")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("partition parts must be weakly decreasing")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        self.parts = parts

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicities(self) -> dict:
        out = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, tuple):
            return self.parts == Partition(other).parts
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return "Partition%r" % (self.parts,)


def partitions_of(n: int, max_parts: int):
    """All partitions of n into at most max_parts parts, reverse
    lexicographically (largest first part first)."""
    if n < 0 or max_parts < 0:
        raise ValueError("partitions_of needs nonnegative arguments")
    out = []

    def rec(remaining, cap, nparts, acc):
        if remaining == 0:
            out.append(Partition(acc))
            return
        if nparts == 0:
            return
        for p in range(min(cap, remaining), 0, -1):
            rec(remaining - p, p, nparts - 1, acc + [p])

    rec(n, n if n else 1, max_parts, [])
    return out


def centralizer_order(lam) -> int:
    """Product over part sizes i of i^m_i * m_i!, where m_i counts parts of
    size i.  This is the order of the centralizer of a permutation with
    cycle type lam, and the normalizing factor of power-sum expansions.
    """
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    out = 1
    for i, m in lam.multiplicities().items():
        out *= i ** m * math.factorial(m)
    return out
