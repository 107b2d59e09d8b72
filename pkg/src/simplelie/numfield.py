"""Exact-rational polynomial helpers: Sturm counting, Eisenstein tests, the
degree-n "exactly two non-real roots" construction, and primitive-element
shifts.

Everything runs over Fraction; interval arguments may be unbounded (None).
The bound epsilon in the two-non-real construction is certified by exact
rational interval subdivision, never by floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .roots import LieError


class RationalPolynomial:
    """Polynomial over Q, coefficients ascending, leading coefficient nonzero."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def from_roots(cls, roots):
        out = cls((1,))
        for r in roots:
            out = out * cls((-Fraction(r), 1))
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return RationalPolynomial(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPolynomial(out)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return RationalPolynomial(
            [
                (self.coeffs[i] if i < len(self.coeffs) else 0)
                + (other.coeffs[i] if i < len(other.coeffs) else 0)
                for i in range(n)
            ]
        )

    def scale(self, s):
        return RationalPolynomial([c * Fraction(s) for c in self.coeffs])

    def derivative(self):
        return RationalPolynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        d = other.degree
        lead = other.coeffs[-1]
        while len(rem) - 1 >= d and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            f = rem[-1] / lead
            k = len(rem) - 1 - d
            q[k] = f
            for i, c in enumerate(other.coeffs):
                rem[k + i] -= f * c
            rem.pop()
        return RationalPolynomial(q), RationalPolynomial(rem)

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        if a.is_zero():
            return a
        return a.scale(1 / a.coeffs[-1])

    def shift(self, r):
        """The polynomial p(x + r)."""
        r = Fraction(r)
        out = RationalPolynomial(())
        for c in reversed(self.coeffs):
            out = out * RationalPolynomial((r, 1)) + RationalPolynomial((c,))
        return out

    def is_squarefree(self) -> bool:
        g = self.gcd(self.derivative())
        return g.degree <= 0

    def eval_interval(self, lo, hi):
        """Exact interval Horner: bounds for p([lo, hi])."""
        lo, hi = Fraction(lo), Fraction(hi)
        alo = ahi = Fraction(0)
        for c in reversed(self.coeffs):
            prods = (alo * lo, alo * hi, ahi * lo, ahi * hi)
            alo, ahi = min(prods) + c, max(prods) + c
        return alo, ahi

    def cauchy_bound(self) -> Fraction:
        if self.degree < 1:
            raise LieError("degree must be positive")
        lead = abs(self.coeffs[-1])
        return 1 + max(abs(c) for c in self.coeffs[:-1]) / lead if self.degree else Fraction(1)

    def __eq__(self, other):
        return isinstance(other, RationalPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"RationalPolynomial({[str(c) for c in self.coeffs]})"

    def pretty(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if i == 0:
                term = str(c)
            elif abs(c) == 1:
                term = mono if c > 0 else f"-{mono}"
            else:
                term = f"{c}*{mono}"
            parts.append(term)
        out = parts[0]
        for t in parts[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out


def _sturm_chain(p: RationalPolynomial):
    chain = [p, p.derivative()]
    while chain[-1].degree > 0:
        rem = chain[-2].divmod(chain[-1])[1]
        if rem.is_zero():
            break
        chain.append(rem.scale(-1))
    return chain


def _variations(values) -> int:
    seq = [v for v in values if v]
    return sum(1 for a, b in zip(seq, seq[1:]) if (a > 0) != (b > 0))


def _sign_at_inf(p: RationalPolynomial, positive: bool) -> int:
    if p.is_zero():
        return 0
    lead = p.coeffs[-1]
    s = 1 if lead > 0 else -1
    if not positive and p.degree % 2:
        s = -s
    return s


def sturm_count(p: RationalPolynomial, lo=None, hi=None) -> int:
    """Exact number of real roots in (lo, hi]; None means unbounded.

    Requires p squarefree (deflate first otherwise) and nonvanishing at any
    finite endpoint.
    """
    if p.degree < 1:
        raise LieError("degree must be at least 1")
    if not p.is_squarefree():
        raise LieError("polynomial is not squarefree; divide by gcd(p, p') first")
    for end in (lo, hi):
        if end is not None and p(Fraction(end)) == 0:
            raise LieError("interval endpoint is a root; perturb the endpoint")
    chain = _sturm_chain(p)
    if lo is None:
        va = _variations([_sign_at_inf(q, positive=False) for q in chain])
    else:
        va = _variations([q(Fraction(lo)) for q in chain])
    if hi is None:
        vb = _variations([_sign_at_inf(q, positive=True) for q in chain])
    else:
        vb = _variations([q(Fraction(hi)) for q in chain])
    return va - vb


def isolate_real_roots(p: RationalPolynomial):
    """Disjoint rational intervals (a, b] each containing one real root.

    Exact rational roots may come back as degenerate [r, r] intervals.
    """
    if not p.is_squarefree():
        raise LieError("polynomial is not squarefree")
    bound = p.cauchy_bound()
    out = []

    def descend(a, b):
        n = sturm_count(p, a, b)
        if n == 0:
            return
        if n == 1:
            out.append((a, b))
            return
        mid = (a + b) / 2
        if p(mid) == 0:
            out.append((mid, mid))
            # shrink a window around mid free of the other roots; the count
            # near mid runs over the deflated polynomial, which mid no
            # longer annihilates
            quo, rem = p.divmod(RationalPolynomial((-mid, 1)))
            if not rem.is_zero():  # pragma: no cover
                raise LieError("deflation failed")
            left = (a + mid) / 2
            while quo(left) == 0 or sturm_count(quo, left, mid) > 0:
                left = (left + mid) / 2
            right = (mid + b) / 2
            while quo(right) == 0 or sturm_count(quo, mid, right) > 0:
                right = (mid + right) / 2
            descend(a, left)
            descend(right, b)
        else:
            descend(a, mid)
            descend(mid, b)

    lo = -bound
    while p(lo) == 0:  # pragma: no cover
        lo -= 1
    hi = bound
    while p(hi) == 0:  # pragma: no cover
        hi += 1
    descend(lo, hi)
    out.sort()
    if len(out) != sturm_count(p):
        raise LieError("root isolation lost a root")  # pragma: no cover
    return out


def refine_to_exclusion(p: RationalPolynomial, target: RationalPolynomial, interval):
    """Shrink an isolating interval of `p` until `target` has constant sign
    on it; returns a certified positive lower bound for |target| there."""
    a, b = interval
    if a == b:
        v = abs(target(a))
        if v == 0:
            raise LieError("target vanishes at the isolated point")
        return v
    while True:
        lo, hi = target.eval_interval(a, b)
        if lo > 0:
            return lo
        if hi < 0:
            return -hi
        mid = (a + b) / 2
        if p(mid) == 0:
            a = b = mid
            v = abs(target(mid))
            if v == 0:
                raise LieError("target vanishes at a critical point")
            return v
        if sturm_count(p, a, mid) == 1:
            b = mid
        else:
            a = mid


def eisenstein(p: RationalPolynomial, prime: int) -> bool:
    """prime | a_i (i < n), prime does not divide a_n, prime^2 does not
    divide a_0."""
    if prime < 2:
        raise LieError("prime must be at least 2")
    ints = []
    for c in p.coeffs:
        if c.denominator != 1:
            raise LieError("Eisenstein test needs integer coefficients")
        ints.append(c.numerator)
    if len(ints) < 2:
        return False
    if ints[-1] % prime == 0:
        return False
    if any(c % prime for c in ints[:-1]):
        return False
    return ints[0] % (prime * prime) != 0


@dataclass(frozen=True)
class TwoNonrealCertificate:
    """The constructed polynomial with its verification data."""

    h: RationalPolynomial
    f: RationalPolynomial
    q: int
    epsilon_bound: Fraction
    real_roots: int
    eisenstein_at_2: bool


def two_nonreal_certificate(n: int, k: int, ks=()) -> TwoNonrealCertificate:
    """h = q*f + 2 for f = (x^2 + k)(x - k_1)...(x - k_{n-2}): an integer
    polynomial with exactly n-2 real roots, Eisenstein at 2.

    Parameters must be even and positive with the k_i distinct.  The bound
    epsilon <= min |f| over the critical points of f is certified by exact
    interval subdivision, and q is the least odd integer with 2/q < epsilon.
    For n = 2 the Eisenstein certificate additionally needs 4 | k (otherwise
    4 divides the constant term q*k + 2); the flag records the outcome.
    """
    ks = tuple(int(x) for x in ks)
    if n < 2:
        raise LieError("degree must be at least 2")
    if len(ks) != n - 2:
        raise LieError(f"expected {n - 2} linear-factor parameters, got {len(ks)}")
    params = (k,) + ks
    if any(x <= 0 or x % 2 for x in params):
        raise LieError("parameters must be positive even integers")
    if len(set(ks)) != len(ks):
        raise LieError("linear-factor parameters must be distinct")
    f = RationalPolynomial((k, 0, 1))
    for r in ks:
        f = f * RationalPolynomial((-r, 1))
    fp = f.derivative()
    eps = None
    if fp.degree >= 1:
        gp = fp if fp.is_squarefree() else fp.divmod(fp.gcd(fp.derivative()))[0]
        for interval in isolate_real_roots(gp):
            b = refine_to_exclusion(gp, f, interval)
            eps = b if eps is None else min(eps, b)
    if eps is None:
        eps = Fraction(2)  # no real critical points: any positive bound works
    q = 1
    while Fraction(2, q) >= eps:
        q += 2
    h = f.scale(q) + RationalPolynomial((2,))
    count = sturm_count(h)
    if count != n - 2:
        raise LieError("construction failed the root-count check")  # pragma: no cover
    return TwoNonrealCertificate(h, f, q, eps, count, eisenstein(h, 2))


def construct_two_nonreal(n: int, k: int, ks=()) -> RationalPolynomial:
    return two_nonreal_certificate(n, k, ks).h


def primitive_shift(minpoly: RationalPolynomial, k: int, l: int) -> Fraction:
    """r such that minpoly(x + r) has exactly k positive and l negative real
    roots; verified by two Sturm counts before returning."""
    if not minpoly.is_squarefree():
        raise LieError("minimal polynomial must be squarefree")
    total = sturm_count(minpoly)
    if k + l != total:
        raise LieError(f"target ({k},{l}) does not match {total} real roots")
    intervals = isolate_real_roots(minpoly)
    bound = minpoly.cauchy_bound()
    if l == 0:
        r = -bound - 1
    elif l == total:
        r = bound + 1
    else:
        left = intervals[l - 1]
        right = intervals[l]
        while left[1] >= right[0]:
            left = _halve(minpoly, left)
            right = _halve(minpoly, right)
        r = (left[1] + right[0]) / 2
        if minpoly(r) == 0:  # pragma: no cover
            raise LieError("separator hit a root")
    shifted = minpoly.shift(r)
    pos = sturm_count(shifted, 0, None)
    neg = sturm_count(shifted, None, 0)
    if (pos, neg) != (k, l):
        raise LieError("shift verification failed")  # pragma: no cover
    return r


def _halve(p, interval):
    a, b = interval
    if a == b:
        return interval
    mid = (a + b) / 2
    if p(mid) == 0:
        return (mid, mid)
    if sturm_count(p, a, mid) == 1:
        return (a, mid)
    return (mid, b)
