"""Exact arithmetic substrate for the rest of the package.

Plain Python ints act as arbitrary-precision integers and
``fractions.Fraction`` as exact rationals.  On top of those this module
provides truncated formal power series (``Series``), sparse Laurent
polynomials in one variable (``UniLaurent``) and in several variables
(``MultiLaurent``), and exact determinant routines.

All values are immutable after construction and every operation is pure,
so everything here can be shared freely between threads.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction


# ---------------------------------------------------------------------------
# dense coefficient-list helpers (index = exponent)


def _mul_coeffs(a, b, order):
    out = [Fraction(0)] * (order + 1)
    for i, ai in enumerate(a):
        if i > order:
            break
        if not ai:
            continue
        top = order - i
        for j, bj in enumerate(b):
            if j > top:
                break
            if bj:
                out[i + j] += ai * bj
    return out


def _inv_coeffs(a, order):
    # series inverse; needs a nonzero constant term
    c0 = a[0] if a else Fraction(0)
    if c0 == 0:
        raise ValueError("series inverse needs a nonzero constant term")
    inv = [Fraction(0)] * (order + 1)
    inv[0] = Fraction(1, 1) / c0
    for n in range(1, order + 1):
        s = Fraction(0)
        for j in range(1, min(n, len(a) - 1) + 1):
            if a[j]:
                s += a[j] * inv[n - j]
        inv[n] = -s / c0
    return inv


class Series:
    """Formal power series with exact rational coefficients, truncated at a
    fixed order.

    A series of order K stores exactly the coefficients of x^0 .. x^K.
    Binary operations truncate to the smaller operand order.  Comparing two
    series of *different* orders raises instead of guessing, so a sloppy
    truncation can never turn into a silent false positive.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order=None):
        coeffs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        if len(coeffs) < order + 1:
            coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        self.coeffs = tuple(coeffs[: order + 1])
        self.order = order

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, c, order):
        return cls([Fraction(c)], order)

    @classmethod
    def zero(cls, order):
        return cls([], order)

    @classmethod
    def one(cls, order):
        return cls([Fraction(1)], order)

    @classmethod
    def x(cls, order):
        return cls([Fraction(0), Fraction(1)], order)

    # -- helpers -------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Series):
            return other
        if isinstance(other, (int, Fraction)):
            return Series.constant(other, self.order)
        return None

    def __getitem__(self, n):
        return self.coeffs[n]

    def truncated(self, order):
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return Series(self.coeffs[: order + 1], order)

    def divided_by_x(self, j=1):
        """Exact division by x^j; the lowest j coefficients must vanish."""
        if any(self.coeffs[i] for i in range(j)):
            raise ValueError("series is not divisible by x^%d" % j)
        return Series(self.coeffs[j:], self.order - j)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        k = min(self.order, other.order)
        return Series([self.coeffs[i] + other.coeffs[i] for i in range(k + 1)], k)

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Series([c * other for c in self.coeffs], self.order)
        if not isinstance(other, Series):
            return NotImplemented
        k = min(self.order, other.order)
        return Series(_mul_coeffs(self.coeffs, other.coeffs, k), k)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("series powers take nonnegative integer exponents")
        result = Series.one(self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self):
        return Series(_inv_coeffs(self.coeffs, self.order), self.order)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.order != other.order:
            raise ValueError(
                "refusing to compare series of different truncation orders "
                "(%d vs %d)" % (self.order, other.order)
            )
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.order))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append("%s*x^%d" % (c, i))
        body = " + ".join(terms) if terms else "0"
        return "Series(%s; order=%d)" % (body, self.order)


def series_compose(outer, inner):
    """Substitute ``inner`` for the variable of ``outer``.

    The inner series must have zero constant term; the result carries the
    smaller of the two truncation orders.
    """
    if inner.coeffs[0] != 0:
        raise ValueError("composition needs an inner series with zero constant term")
    k = min(outer.order, inner.order)
    inn = inner.coeffs[: k + 1]
    out = outer.coeffs[: k + 1]
    acc = [Fraction(0)] * (k + 1)
    for c in reversed(out):
        acc = _mul_coeffs(acc, inn, k)
        acc[0] += c
    return Series(acc, k)


def series_sqrt(s):
    """Square root of a series with constant term 1.

    Newton iteration t <- (t + s/t)/2, doubling the number of correct
    coefficients each round, so the cost is a handful of multiplications.
    """
    if s.coeffs[0] != 1:
        raise ValueError("series square root needs constant term 1")
    k = s.order
    t = [Fraction(1)]
    p = 0
    while p < k:
        p = min(2 * p + 1, k)
        a = list(s.coeffs[: p + 1])
        quot = _mul_coeffs(a, _inv_coeffs(t, p), p)
        t = [(t[i] if i < len(t) else Fraction(0)) + quot[i] for i in range(p + 1)]
        t = [c / 2 for c in t]
    return Series(t, k)


# ---------------------------------------------------------------------------
# Laurent polynomials


class UniLaurent:
    """Sparse Laurent polynomial in one variable with integer coefficients.

    Stored as a map exponent -> coefficient with no zero entries, so
    structural equality of the maps is exact polynomial equality.
    """

    __slots__ = ("var", "coeffs")

    def __init__(self, coeffs=None, var="q"):
        d = {}
        if coeffs:
            for e, c in coeffs.items():
                if c:
                    d[e] = c
        self.coeffs = d
        self.var = var

    @classmethod
    def monomial(cls, coeff=1, power=1, var="q"):
        return cls({power: coeff}, var)

    @classmethod
    def one(cls, var="q"):
        return cls({0: 1}, var)

    @classmethod
    def zero(cls, var="q"):
        return cls({}, var)

    def _coerce(self, other):
        if isinstance(other, UniLaurent):
            return other
        if isinstance(other, int):
            return UniLaurent({0: other}, self.var)
        return None

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        d = dict(self.coeffs)
        for e, c in other.coeffs.items():
            v = d.get(e, 0) + c
            if v:
                d[e] = v
            elif e in d:
                del d[e]
        return UniLaurent(d, self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniLaurent({e: -c for e, c in self.coeffs.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return UniLaurent({e: c * other for e, c in self.coeffs.items()}, self.var)
        if not isinstance(other, UniLaurent):
            return NotImplemented
        d = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                v = d.get(e, 0) + c1 * c2
                if v:
                    d[e] = v
                elif e in d:
                    del d[e]
        return UniLaurent(d, self.var)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int):
            raise ValueError("polynomial powers take integer exponents")
        if n < 0:
            if len(self.coeffs) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self.coeffs.items()
            if c * c != 1:
                raise ValueError("coefficient %d is not invertible" % c)
            return UniLaurent({e * n: c ** (n & 1)}, self.var)
        result = UniLaurent.one(self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def evaluate(self, x):
        """Exact value at x; x must be nonzero when negative powers occur."""
        x = Fraction(x)
        total = Fraction(0)
        for e, c in self.coeffs.items():
            if e < 0 and x == 0:
                raise ValueError("zero substituted into a negative exponent")
            total += c * x ** e
        return total

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                parts.append(str(c))
            elif e == 1:
                parts.append("%d*%s" % (c, self.var))
            else:
                parts.append("%d*%s^%d" % (c, self.var, e))
        return " + ".join(parts)


class MultiLaurent:
    """Sparse Laurent polynomial in ``nvars`` variables, integer coefficients.

    Keys are exponent tuples of length nvars (entries may be negative);
    zero coefficients are never stored.
    """

    __slots__ = ("nvars", "coeffs")

    def __init__(self, nvars, coeffs=None):
        d = {}
        if coeffs:
            for exps, c in coeffs.items():
                if len(exps) != nvars:
                    raise ValueError("exponent tuple of wrong length")
                if c:
                    d[tuple(exps)] = c
        self.nvars = nvars
        self.coeffs = d

    @classmethod
    def variable(cls, i, nvars, power=1):
        exps = [0] * nvars
        exps[i] = power
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def constant(cls, c, nvars):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, nvars):
        return cls.constant(1, nvars)

    @classmethod
    def zero(cls, nvars):
        return cls(nvars, {})

    def _coerce(self, other):
        if isinstance(other, MultiLaurent):
            if other.nvars != self.nvars:
                raise ValueError("mixed variable counts")
            return other
        if isinstance(other, int):
            return MultiLaurent.constant(other, self.nvars)
        return None

    def is_zero(self):
        return not self.coeffs

    def is_monomial(self):
        return len(self.coeffs) == 1

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        d = dict(self.coeffs)
        for exps, c in other.coeffs.items():
            v = d.get(exps, 0) + c
            if v:
                d[exps] = v
            elif exps in d:
                del d[exps]
        out = MultiLaurent(self.nvars)
        out.coeffs = d
        return out

    __radd__ = __add__

    def __neg__(self):
        out = MultiLaurent(self.nvars)
        out.coeffs = {e: -c for e, c in self.coeffs.items()}
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            out = MultiLaurent(self.nvars)
            if other:
                out.coeffs = {e: c * other for e, c in self.coeffs.items()}
            return out
        if not isinstance(other, MultiLaurent):
            return NotImplemented
        if other.nvars != self.nvars:
            raise ValueError("mixed variable counts")
        a, b = self.coeffs, other.coeffs
        if len(a) > len(b):
            a, b = b, a
        d = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = d.get(e, 0) + c1 * c2
                if v:
                    d[e] = v
                elif e in d:
                    del d[e]
        out = MultiLaurent(self.nvars)
        out.coeffs = d
        return out

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int):
            raise ValueError("polynomial powers take integer exponents")
        if n < 0:
            if len(self.coeffs) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (exps, c), = self.coeffs.items()
            if c * c != 1:
                raise ValueError("coefficient %d is not invertible" % c)
            out = MultiLaurent(self.nvars)
            out.coeffs = {tuple(e * n for e in exps): c ** (n & 1)}
            return out
        result = MultiLaurent.one(self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def evaluate(self, point):
        """Exact value at a tuple of rationals.

        A zero coordinate is fine as long as it never meets a negative
        exponent.
        """
        if len(point) != self.nvars:
            raise ValueError("point of wrong arity")
        point = [Fraction(x) for x in point]
        total = Fraction(0)
        for exps, c in self.coeffs.items():
            term = Fraction(c)
            for x, e in zip(point, exps):
                if e == 0:
                    continue
                if e < 0 and x == 0:
                    raise ValueError("zero substituted into a negative exponent")
                term *= x ** e
            total += term
        return total

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return _laurent_divide_exact(self, other)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.nvars, frozenset(self.coeffs.items())))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for exps in sorted(self.coeffs):
            c = self.coeffs[exps]
            factors = ["z%d^%d" % (i + 1, e) for i, e in enumerate(exps) if e]
            parts.append("*".join([str(c)] + factors) if factors else str(c))
        return " + ".join(parts)


def _laurent_divide_exact(num, den):
    """Exact quotient num/den of MultiLaurent values; raises if inexact.

    Negative exponents are cleared by a monomial shift, then ordinary
    multivariate long division runs in lex order.  The divisors that occur
    here (Vandermonde factors) have unit leading coefficients, but general
    integer leading coefficients are handled as well.
    """
    if den.is_zero():
        raise ZeroDivisionError("Laurent division by zero")
    if num.is_zero():
        return MultiLaurent.zero(num.nvars)
    v = num.nvars

    def ords(p):
        return tuple(min(exps[i] for exps in p.coeffs) for i in range(v))

    # per-variable minimal exponents are additive for exact quotients, so
    # these shifts make numerator, denominator and quotient all polynomial
    o_num, o_den = ords(num), ords(den)
    s_den = tuple(max(0, -o) for o in o_den)
    s_num = tuple(max(0, -o_num[i], s_den[i] - o_num[i] + o_den[i]) for i in range(v))
    nd = {tuple(e + s for e, s in zip(exps, s_num)): c for exps, c in num.coeffs.items()}
    dd = {tuple(e + s for e, s in zip(exps, s_den)): c for exps, c in den.coeffs.items()}

    lead = max(dd)
    lead_c = dd[lead]
    rest = [(e, c) for e, c in dd.items() if e != lead]
    quot = {}
    rem = dict(nd)
    while rem:
        top = max(rem)
        if any(top[i] < lead[i] for i in range(v)):
            raise ValueError("inexact Laurent division")
        c = rem[top]
        q, r = divmod(c, lead_c)
        if r:
            raise ValueError("inexact Laurent division")
        mono = tuple(top[i] - lead[i] for i in range(v))
        quot[mono] = q
        del rem[top]
        for e, dc in rest:
            key = tuple(mono[i] + e[i] for i in range(v))
            val = rem.get(key, 0) - q * dc
            if val:
                rem[key] = val
            elif key in rem:
                del rem[key]
    back = tuple(s_den[i] - s_num[i] for i in range(v))
    out = MultiLaurent(v)
    out.coeffs = {tuple(e + b for e, b in zip(exps, back)): c for exps, c in quot.items()}
    return out


def laurent_mul(a, b):
    return a * b


def laurent_eval(a, point):
    return a.evaluate(point)


# ---------------------------------------------------------------------------
# exact determinants


def det_cofactor(rows):
    """Determinant over any commutative ring, via minor expansion memoized
    on column subsets (2^n scaling, fine for the small matrices used here).
    """
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ValueError("need a nonempty square matrix")
    memo = {}

    def go(i, cols):
        if len(cols) == 1:
            return rows[i][cols[0]]
        hit = memo.get(cols)
        if hit is not None:
            return hit
        acc = None
        for idx, c in enumerate(cols):
            term = rows[i][c] * go(i + 1, cols[:idx] + cols[idx + 1:])
            if idx % 2:
                term = -term
            acc = term if acc is None else acc + term
        memo[cols] = acc
        return acc

    return go(0, tuple(range(n)))


def det_fraction_free(rows):
    """Determinant of an integer or rational matrix by fraction-free
    (Bareiss) elimination.  Returns a Fraction; for integer input the value
    is integral.
    """
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ValueError("need a nonempty square matrix")
    m = [[Fraction(x) for x in row] for row in rows]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return Fraction(0)
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
            m[i][k] = Fraction(0)
        prev = m[k][k]
    return sign * m[n - 1][n - 1]
