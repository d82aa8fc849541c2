"""Verifiers for the expansion identities between the symmetric polynomials
of r variables evaluated at z + z^-1 and those of 2r variables evaluated at
(z, z^-1), plus their principal q-specializations.

Every verifier runs in one of two modes:

* symbolic - both sides are built as Laurent polynomials in z_1..z_r and
  compared structurally, which is a proof for the given (r, index);
* random - both sides are evaluated at reproducibly drawn rational points
  (pairwise distinct, nonzero), which is a strong randomized check for
  parameter ranges where the symbolic expansion would be too large.

A failed check never raises; it comes back as a CheckReport carrying a
counterexample, so suite runners can aggregate and render outcomes.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .combinat import ballot, binom, q_binom
from .exactalg import UniLaurent
from .symfun import (PointVector, complete, complete_prefix, elementary,
                     elementary_prefix, power, symbolic_vectors)


@dataclass(frozen=True)
class VerifyMode:
    """How a check evaluates its two sides.

    Symbolic mode ignores trials and seed; random mode draws its points
    reproducibly from the seed (plus the check id, so distinct checks use
    independent streams).
    """

    mode: str = "symbolic"
    trials: int = 5
    seed: int = 0

    def __post_init__(self):
        if self.mode not in ("symbolic", "random"):
            raise ValueError("mode must be 'symbolic' or 'random'")
        if self.mode == "random" and self.trials < 1:
            raise ValueError("random mode needs at least one trial")


@dataclass
class CheckReport:
    check: str
    params: dict
    status: str  # "pass" | "fail"
    counterexample: Optional[str] = None
    elapsed: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @property
    def check_id(self) -> str:
        inner = ",".join("%s=%s" % (k, self.params[k]) for k in sorted(self.params))
        return "%s[%s]" % (self.check, inner)

    def sort_key(self):
        return (self.check, tuple(sorted((k, str(v)) for k, v in self.params.items())))


def _report(check, params, failures, t0) -> CheckReport:
    status = "pass" if not failures else "fail"
    ce = None if not failures else "; ".join(failures[:3])
    return CheckReport(check, dict(params), status, ce, time.perf_counter() - t0)


def random_rational_points(rng: random.Random, count: int, bound: int = 10 ** 6):
    """Pairwise distinct nonzero fractions +-a/b with 1 <= a, b <= bound."""
    pts = []
    seen = set()
    while len(pts) < count:
        x = Fraction(rng.randint(1, bound), rng.randint(1, bound))
        if rng.randint(0, 1):
            x = -x
        if x in seen:
            continue
        seen.add(x)
        pts.append(x)
    return pts


def _rng_for(mode: VerifyMode, check: str, params: dict) -> random.Random:
    tag = "%s|%s|%s" % (mode.seed, check, sorted(params.items()))
    return random.Random(tag)


def _vector_pairs(r: int, mode: VerifyMode, check: str, params: dict):
    """Yield (doubled, shifted) vector pairs for the requested mode."""
    if mode.mode == "symbolic":
        _, doubled, shifted = symbolic_vectors(r)
        yield doubled, shifted
        return
    rng = _rng_for(mode, check, params)
    for _ in range(mode.trials):
        xs = random_rational_points(rng, r)
        inv = [Fraction(1) / x for x in xs]
        yield (PointVector(tuple(xs) + tuple(inv), "doubled"),
               PointVector([x + y for x, y in zip(xs, inv)], "shifted"))


def _run_sides(check, params, r, mode, sides):
    """Evaluate a (doubled, shifted) -> (lhs, rhs) body across the mode's
    vectors and collect mismatches."""
    t0 = time.perf_counter()
    failures = []
    for trial, (doubled, shifted) in enumerate(_vector_pairs(r, mode, check, params)):
        lhs, rhs = sides(doubled, shifted)
        if lhs != rhs:
            where = "symbolic" if mode.mode == "symbolic" else "point %d" % trial
            failures.append("%s: lhs=%r rhs=%r" % (where, lhs, rhs))
    out_params = dict(params)
    out_params["mode"] = mode.mode
    if mode.mode == "random":
        out_params["seed"] = mode.seed
    return _report(check, out_params, failures, t0)


# ---------------------------------------------------------------------------
# expansions of f^(r)(z + z^-1) in terms of f^(2r)(z, z^-1)


def first_kind_e(r: int, m: int, mode: VerifyMode = VerifyMode()) -> CheckReport:
    """sum_k ballot(m-r-1, k) e_(m-2k) of the doubled vector equals
    e_m of the shifted vector for 0 <= m <= r, and 0 for larger m."""
    if r < 1 or m < 0:
        raise ValueError("need r >= 1 and m >= 0")

    def sides(doubled, shifted):
        es = elementary_prefix(min(m, 2 * r), doubled)
        lhs = doubled.zero
        for k in range(max(m // 2 - r, 0), m // 2 + 1):
            idx = m - 2 * k
            if idx <= 2 * r:
                lhs = lhs + es[idx] * ballot(m - r - 1, k)
        rhs = elementary(m, shifted) if m <= r else shifted.zero
        return lhs, rhs

    return _run_sides("first_kind_e", {"r": r, "m": m}, r, mode, sides)


def first_kind_h(r: int, m: int, mode: VerifyMode = VerifyMode()) -> CheckReport:
    """h_m of the shifted vector equals sum_k ballot(m+r-1, k) h_(m-2k) of
    the doubled vector."""
    if r < 1 or m < 0:
        raise ValueError("need r >= 1 and m >= 0")

    def sides(doubled, shifted):
        hs = complete_prefix(m, doubled)
        rhs = doubled.zero
        for k in range(m // 2 + 1):
            rhs = rhs + hs[m - 2 * k] * ballot(m + r - 1, k)
        return complete(m, shifted), rhs

    return _run_sides("first_kind_h", {"r": r, "m": m}, r, mode, sides)


def first_kind_p(r: int, m: int, mode: VerifyMode = VerifyMode()) -> CheckReport:
    """2 p_m of the shifted vector equals sum_k binom(m, k) p_|m-2k| of the
    doubled vector, reading the degree-0 power sum as 2r (the arity).

    Both sides are doubled once so that everything stays in the integer
    coefficient ring.
    """
    if r < 1 or m < 1:
        raise ValueError("need r >= 1 and m >= 1")

    def sides(doubled, shifted):
        lhs = power(m, shifted) * 2
        rhs = doubled.zero
        for k in range(m + 1):
            idx = abs(m - 2 * k)
            term = doubled.one * (2 * r) if idx == 0 else power(idx, doubled)
            rhs = rhs + term * binom(m, k)
        return lhs, rhs

    return _run_sides("first_kind_p", {"r": r, "m": m}, r, mode, sides)


# ---------------------------------------------------------------------------
# expansions of f^(2r)(z, z^-1) in terms of f^(r)(z + z^-1)


def second_kind_e(r: int, n: int, mode: VerifyMode = VerifyMode()) -> CheckReport:
    """e_n of the doubled vector equals
    sum_k binom(r-n+2k, k) e_(n-2k) of the shifted vector, 0 <= n <= 2r."""
    if r < 1 or not 0 <= n <= 2 * r:
        raise ValueError("need r >= 1 and 0 <= n <= 2r")

    def sides(doubled, shifted):
        es = elementary_prefix(min(n, r), shifted)
        rhs = shifted.zero
        for k in range(max((n - r) // 2, 0), n // 2 + 1):
            idx = n - 2 * k
            if idx <= r:
                rhs = rhs + es[idx] * binom(r - n + 2 * k, k)
        return elementary(n, doubled), rhs

    return _run_sides("second_kind_e", {"r": r, "n": n}, r, mode, sides)


def second_kind_h(r: int, n: int, mode: VerifyMode = VerifyMode()) -> CheckReport:
    """h_n of the doubled vector equals
    sum_k (-1)^k binom(n-k+r-1, k) h_(n-2k) of the shifted vector; the
    alternating sign is forced by the expansion of (1+y^2)^(-m-r).
    """
    if r < 1 or n < 0:
        raise ValueError("need r >= 1 and n >= 0")

    def sides(doubled, shifted):
        hs = complete_prefix(n, shifted)
        rhs = shifted.zero
        for k in range(n // 2 + 1):
            term = hs[n - 2 * k] * binom(n - k + r - 1, k)
            rhs = rhs + term if k % 2 == 0 else rhs - term
        return complete(n, doubled), rhs

    return _run_sides("second_kind_h", {"r": r, "n": n}, r, mode, sides)


def second_kind_p(r: int, n: int, mode: VerifyMode = VerifyMode()) -> CheckReport:
    """p_n of the doubled vector equals
    2 sum_k binom(2k-n-1, k) p_(n-2k) - sum_k binom(2k-n, k) p_(n-2k) of the
    shifted vector, with the degree-0 power sum read as r."""
    if r < 1 or n < 1:
        raise ValueError("need r >= 1 and n >= 1")

    def sides(doubled, shifted):
        def p_shift(idx):
            return shifted.one * r if idx == 0 else power(idx, shifted)

        rhs = shifted.zero
        for k in range((n + 1) // 2 + 1):
            coeff = 2 * binom(2 * k - n - 1, k)
            if coeff and n - 2 * k >= 0:
                rhs = rhs + p_shift(n - 2 * k) * coeff
        for k in range(n // 2 + 1):
            coeff = binom(2 * k - n, k)
            if coeff:
                rhs = rhs - p_shift(n - 2 * k) * coeff
        return power(n, doubled), rhs

    return _run_sides("second_kind_p", {"r": r, "n": n}, r, mode, sides)


def genfun_transfer_check(r: int, order: int) -> CheckReport:
    """Coefficient-wise comparison, in y up to the given order, of

    sum e_n^(2r)(z, z^-1) y^n  against  (1+y^2)^r sum e_m^(r)(z+z^-1) x^m
    sum h_n^(2r)(z, z^-1) y^n  against  (1+y^2)^-r sum h_m^(r)(z+z^-1) x^m

    where x = y/(1+y^2); substituting and expanding turns the coefficient of
    y^n into a finite binomial sum over the shifted-vector values.
    """
    if r < 1 or order < 0:
        raise ValueError("need r >= 1 and order >= 0")
    t0 = time.perf_counter()
    _, doubled, shifted = symbolic_vectors(r)
    zero = shifted.zero
    e2 = elementary_prefix(min(order, 2 * r), doubled)
    h2 = complete_prefix(order, doubled)
    e1 = elementary_prefix(min(order, r), shifted)
    h1 = complete_prefix(order, shifted)
    failures = []
    for n in range(order + 1):
        lhs = e2[n] if n <= 2 * r else zero
        rhs = zero
        for m in range(min(n, r) + 1):
            if (n - m) % 2 == 0:
                rhs = rhs + e1[m] * binom(r - m, (n - m) // 2)
        if lhs != rhs:
            failures.append("e coefficient y^%d" % n)
        rhs = zero
        for m in range(n + 1):
            if (n - m) % 2 == 0:
                j = (n - m) // 2
                term = h1[m] * binom(r + m + j - 1, j)
                rhs = rhs + term if j % 2 == 0 else rhs - term
        if h2[n] != rhs:
            failures.append("h coefficient y^%d" % n)
    return _report("genfun_transfer", {"r": r, "order": order}, failures, t0)


# ---------------------------------------------------------------------------
# principal specialization at (q^r, ..., q, q^-1, ..., q^-r)


def _q_vectors(r: int):
    q = UniLaurent.monomial(1, 1, "q")
    plus = [q ** j for j in range(r, 0, -1)]
    minus = [q ** -j for j in range(r, 0, -1)]
    doubled = PointVector(plus + minus, "doubled")
    shifted = PointVector([a + b for a, b in zip(plus, minus)], "shifted")
    return doubled, shifted


def _q_power(e: int) -> UniLaurent:
    return UniLaurent.monomial(1, e, "q")


def _elem_q_closed(r: int, n: int) -> UniLaurent:
    # alternating q-binomial sum for e_n of the doubled q-vector
    out = UniLaurent.zero("q")
    for k in range(min(n, 2 * r + 1) + 1):
        term = q_binom(2 * r + 1, k) * _q_power(k * (k - 2 * r - 1) // 2)
        out = out + term if (n - k) % 2 == 0 else out - term
    return out


def _complete_q_closed(r: int, n: int) -> UniLaurent:
    return _q_power(-n * r) * (q_binom(2 * r + n, n) - q_binom(2 * r + n - 1, n - 1) * _q_power(r))


def principal_spec_e(r: int, n: int) -> CheckReport:
    """e_n at the doubled q-vector against the alternating q-binomial sum;
    the sum vanishes for n > 2r."""
    if r < 1 or n < 0:
        raise ValueError("need r >= 1 and n >= 0")
    t0 = time.perf_counter()
    doubled, _ = _q_vectors(r)
    lhs = elementary(n, doubled)
    rhs = _elem_q_closed(r, n)
    failures = [] if lhs == rhs else ["lhs=%r rhs=%r" % (lhs, rhs)]
    return _report("principal_spec_e", {"r": r, "n": n}, failures, t0)


def principal_spec_h(r: int, n: int) -> CheckReport:
    """h_n at the doubled q-vector against
    q^(-nr) ([2r+n, n]_q - [2r+n-1, n-1]_q q^r)."""
    if r < 1 or n < 0:
        raise ValueError("need r >= 1 and n >= 0")
    t0 = time.perf_counter()
    doubled, _ = _q_vectors(r)
    lhs = complete(n, doubled)
    rhs = _complete_q_closed(r, n)
    failures = [] if lhs == rhs else ["lhs=%r rhs=%r" % (lhs, rhs)]
    return _report("principal_spec_h", {"r": r, "n": n}, failures, t0)


def principal_spec_p(r: int, n: int) -> CheckReport:
    """p_n at the doubled q-vector against -1 + q^(-rn)(1-q^((2r+1)n))/(1-q^n),
    compared after clearing the denominator 1 - q^n."""
    if r < 1 or n < 1:
        raise ValueError("need r >= 1 and n >= 1")
    t0 = time.perf_counter()
    doubled, _ = _q_vectors(r)
    one = UniLaurent.one("q")
    clear = one - _q_power(n)
    lhs = (power(n, doubled) + one) * clear
    rhs = _q_power(-r * n) * (one - _q_power((2 * r + 1) * n))
    failures = [] if lhs == rhs else ["lhs=%r rhs=%r" % (lhs, rhs)]
    return _report("principal_spec_p", {"r": r, "n": n}, failures, t0)


def principal_combination_check(r: int, bound: int) -> CheckReport:
    """The six q-identities obtained by feeding the closed q-forms through
    both expansion directions, all as exact Laurent-polynomial identities.

    Signs follow the substitution chain itself: the alternating e-form
    keeps its (-1)^(n-k), and the h-expansion carries (-1)^k as in
    second_kind_h.
    """
    if r < 1 or bound < 1:
        raise ValueError("need r >= 1 and bound >= 1")
    t0 = time.perf_counter()
    doubled, shifted = _q_vectors(r)
    one = UniLaurent.one("q")
    zero = UniLaurent.zero("q")
    es = elementary_prefix(min(bound, r), shifted)
    hs = complete_prefix(bound, shifted)
    failures = []

    def e_shift(m):
        return es[m] if m <= r else zero

    # (1a) ballot-weighted sums of the alternating q-binomial forms; the
    # k-range is the one the substituted expansion supplies
    for m in range(bound + 1):
        lhs = zero
        for k in range(max(m // 2 - r, 0), m // 2 + 1):
            lhs = lhs + _elem_q_closed(r, m - 2 * k) * ballot(m - r - 1, k)
        rhs = e_shift(m) if m <= r else zero
        if lhs != rhs:
            failures.append("(1a) m=%d" % m)

    # (1b) alternating q-binomial sum re-expanded over the shifted vector
    for n in range(min(bound, 2 * r) + 1):
        lhs = zero
        for k in range(n + 1):
            term = q_binom(2 * r + 1, k) * _q_power(k * (k - 2 * r - 1) // 2)
            lhs = lhs + term if (n - k) % 2 == 0 else lhs - term
        rhs = zero
        for k in range(max((n - r) // 2, 0), n // 2 + 1):
            if n - 2 * k <= r:
                rhs = rhs + e_shift(n - 2 * k) * binom(r - n + 2 * k, k)
        if lhs != rhs:
            failures.append("(1b) n=%d" % n)

    # (2a) h of the shifted vector as a ballot-weighted sum of closed forms
    for m in range(bound + 1):
        rhs = zero
        for k in range(m // 2 + 1):
            rhs = rhs + _complete_q_closed(r, m - 2 * k) * ballot(m + r - 1, k)
        if hs[m] != rhs:
            failures.append("(2a) m=%d" % m)

    # (2b) closed h-form as an alternating binomial sum over the shifted h's
    for n in range(bound + 1):
        rhs = zero
        for k in range(n // 2 + 1):
            term = hs[n - 2 * k] * binom(n - k + r - 1, k)
            rhs = rhs + term if k % 2 == 0 else rhs - term
        if _complete_q_closed(r, n) != rhs:
            failures.append("(2b) n=%d" % n)

    # (3a) power sums of the shifted vector from the geometric closed form
    def geom(t):
        # sum_{j=0}^{2r} q^(jt); value 2r+1 at t = 0
        out = zero
        for j in range(2 * r + 1):
            out = out + _q_power(j * t)
        return out

    for m in range(bound + 1):
        lhs = (power(m, shifted) if m >= 1 else shifted.one * r) * 2
        rhs = zero - one * 2 ** m
        for k in range(m + 1):
            t = abs(m - 2 * k)
            rhs = rhs + _q_power(-t * r) * geom(t) * binom(m, k)
        if lhs != rhs:
            failures.append("(3a) m=%d" % m)

    # (3b) closed p-form as the double alternating binomial sum, cleared
    for n in range(1, bound + 1):
        clear = one - _q_power(n)
        lhs = (zero - clear) + _q_power(-r * n) - _q_power((r + 1) * n)

        def p_shift(t):
            return shifted.one * r if t == 0 else power(t, shifted)

        total = zero
        for k in range((n + 1) // 2 + 1):
            coeff = 2 * binom(2 * k - n - 1, k)
            if coeff and n - 2 * k >= 0:
                total = total + p_shift(n - 2 * k) * coeff
        for k in range(n // 2 + 1):
            coeff = binom(2 * k - n, k)
            if coeff:
                total = total - p_shift(n - 2 * k) * coeff
        if lhs != total * clear:
            failures.append("(3b) n=%d" % n)

    return _report("principal_combination", {"r": r, "bound": bound}, failures, t0)


def unit_binomial_sum_check(r: int) -> CheckReport:
    """sum_k binom(r-n+2k, k) binom(n-2k-r-1, floor(n/2)-k) = 1 for
    n = 0..2r."""
    if r < 1:
        raise ValueError("need r >= 1")
    t0 = time.perf_counter()
    failures = []
    for n in range(2 * r + 1):
        total = 0
        for k in range(max((n - r) // 2, 0), n // 2 + 1):
            total += binom(r - n + 2 * k, k) * binom(n - 2 * k - r - 1, n // 2 - k)
        if total != 1:
            failures.append("n=%d gives %d" % (n, total))
    return _report("unit_binomial_sum_check", {"r": r}, failures, t0)


def composition_consistency_check(r: int, m_max: int) -> CheckReport:
    """Expanding h_m of the shifted vector into doubled-vector h's and then
    re-expanding each of those back must reproduce the original value."""
    if r < 1 or m_max < 0:
        raise ValueError("need r >= 1 and m_max >= 0")
    t0 = time.perf_counter()
    _, doubled, shifted = symbolic_vectors(r)
    hs = complete_prefix(m_max, shifted)
    failures = []
    for m in range(m_max + 1):
        total = shifted.zero
        for k in range(m // 2 + 1):
            outer = ballot(m + r - 1, k)
            n = m - 2 * k
            for j in range(n // 2 + 1):
                inner = binom(n - j + r - 1, j)
                term = hs[n - 2 * j] * (outer * inner)
                total = total + term if j % 2 == 0 else total - term
        if total != hs[m]:
            failures.append("m=%d" % m)
    return _report("composition_consistency", {"r": r, "m_max": m_max}, failures, t0)
