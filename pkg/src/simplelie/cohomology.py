"""Poincare polynomials of cohomological representations keyed by subsets of
simple roots, and the coefficient-support searches over them.

For a subset S of the simple roots (1-based labels throughout the public
API), the attached polynomial is

    P(S, t) = t^{dim u_S} (1 + t)^{|S|} P(l_1, t) ... P(l_k, t),

where u_S is the nilradical of the parabolic keyed by S, the l_i are the
simple factors of the complementary subdiagram, and each simple factor
contributes prod (1 + t^{2d+1}) over its exponents.  Everything is dense
integer arithmetic; the top degree for E8 is 248.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .kac import identify_simple_gcm
from .roots import LieError, RootSystem, SimpleType, build_root_system, exponents


class IntPolynomial:
    """Dense integer-coefficient polynomial in t, canonical (no trailing zeros)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def one_plus_power(cls, k: int):
        return cls((1,) + (0,) * (k - 1) + (1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    def shifted(self, k: int) -> "IntPolynomial":
        return IntPolynomial((0,) * k + self.coeffs)

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"


def poincare_simple(stype: SimpleType) -> IntPolynomial:
    """prod over exponents d of (1 + t^{2d+1}): the compact-group polynomial."""
    out = IntPolynomial.one()
    for d in exponents(stype):
        out = out * IntPolynomial.one_plus_power(2 * d + 1)
    return out


@dataclass(frozen=True)
class LeviSubset:
    """A subset of the simple roots with its parabolic bookkeeping."""

    stype: SimpleType
    phi_prime: tuple  # sorted 1-based labels
    dim_nilradical: int
    levi_factors: tuple  # SimpleType list for the complementary subdiagram

    @property
    def center_dim(self) -> int:
        return len(self.phi_prime)


def levi_subset(rs: RootSystem, phi_prime) -> LeviSubset:
    labels = _normalize_subset(rs, phi_prime)
    support = frozenset(i - 1 for i in labels)
    dim_u = sum(
        1
        for r in range(rs.n_pos)
        if any(rs._coeffs[r][i] for i in support)
    )
    rest = [i for i in range(rs.rank) if i not in support]
    factors = []
    for comp in _diagram_components(rs.cartan, rest):
        sub = [[rs.cartan[i][j] for j in comp] for i in comp]
        factors.append(identify_simple_gcm(sub))
    factors.sort()
    return LeviSubset(rs.stype, labels, dim_u, tuple(factors))


def _normalize_subset(rs: RootSystem, phi_prime) -> tuple:
    labels = sorted(set(int(i) for i in phi_prime))
    for i in labels:
        if not 1 <= i <= rs.rank:
            raise LieError(f"simple-root label {i} out of range 1..{rs.rank}")
    return tuple(labels)


def _diagram_components(cartan, vertices):
    remaining = set(vertices)
    while remaining:
        start = min(remaining)
        comp = [start]
        remaining.discard(start)
        frontier = [start]
        while frontier:
            i = frontier.pop()
            for j in list(remaining):
                if cartan[i][j] != 0:
                    comp.append(j)
                    remaining.discard(j)
                    frontier.append(j)
        yield sorted(comp)


def poincare_levi(rs: RootSystem, phi_prime) -> IntPolynomial:
    """P(S, t), exactly; degree = dim g - dim u_S."""
    sub = levi_subset(rs, phi_prime)
    out = IntPolynomial.one()
    for _ in range(len(sub.phi_prime)):
        out = out * IntPolynomial.one_plus_power(1)
    for f in sub.levi_factors:
        out = out * poincare_simple(f)
    out = out.shifted(sub.dim_nilradical)
    if out.degree != rs.stype.dimension - sub.dim_nilradical:
        raise LieError("degree identity failed")  # pragma: no cover
    return out


@dataclass(frozen=True)
class SupportResult:
    """Subsets whose polynomial has a nonzero coefficient in one degree."""

    degree: int
    subsets: tuple  # nonempty subsets, canonical order (size, then labels)
    includes_trivial: bool  # whether the empty set (trivial module) also hits


_SUPPORT_CACHE: dict = {}


def coefficient_support(rs: RootSystem, k: int) -> SupportResult:
    """Exhaustive scan over all 2^rank subsets, pruned by the degree bounds
    dim u_S <= k <= deg P(S, t)."""
    if k < 0:
        raise LieError("degree must be non-negative")
    cached = _SUPPORT_CACHE.get((rs.stype, k))
    if cached is not None:
        return cached
    hits = []
    trivial = False
    dim_g = rs.stype.dimension
    dim_u_single = {}
    for i in range(1, rs.rank + 1):
        dim_u_single[i] = levi_subset(rs, (i,)).dim_nilradical
    for size in range(rs.rank + 1):
        for sub in combinations(range(1, rs.rank + 1), size):
            if any(dim_u_single[i] > k for i in sub):
                continue  # dim u_S >= dim u_{single} for every member
            ls = levi_subset(rs, sub)
            if ls.dim_nilradical > k or k > dim_g - ls.dim_nilradical:
                continue
            if poincare_levi(rs, sub).coefficient(k):
                if sub:
                    hits.append(sub)
                else:
                    trivial = True
    result = SupportResult(k, tuple(hits), trivial)
    _SUPPORT_CACHE[(rs.stype, k)] = result
    return result


# -- the report behind the headline support statement --------------------------


@dataclass(frozen=True)
class DegreeSupport:
    degree: int
    dual_degree: int
    subsets: tuple
    includes_trivial: bool
    dual_matches: bool


@dataclass(frozen=True)
class SupportReport:
    stype_name: str
    degrees: tuple  # DegreeSupport rows
    note: str = ""


def cycle_support_report(rs: RootSystem) -> SupportReport:
    """For each geometric-cycle degree of the type (min of each dimension
    pair with the orientation condition satisfied): the subsets supporting
    that degree, with the dual degree checked for agreement."""
    from .symspace import or_satisfied_min_dims

    degrees = or_satisfied_min_dims(rs.stype)
    if not degrees:
        return SupportReport(
            rs.stype.name,
            (),
            note="no orientation-compatible classes for this type; "
            "the cycle construction does not apply",
        )
    dim_g = rs.stype.dimension
    rows = []
    for k in degrees:
        res = coefficient_support(rs, k)
        dual = coefficient_support(rs, dim_g - k)
        rows.append(
            DegreeSupport(
                k,
                dim_g - k,
                res.subsets,
                res.includes_trivial,
                res.subsets == dual.subsets and res.includes_trivial == dual.includes_trivial,
            )
        )
    return SupportReport(rs.stype.name, tuple(rows))


# -- machine checks for the polynomial identities -------------------------------------------------------


def finite_diagram_automorphisms(stype: SimpleType):
    """All permutations of the simple roots preserving the Cartan matrix."""
    rs = build_root_system(stype)
    n = rs.rank
    out = []

    def backtrack(assign):
        i = len(assign)
        if i == n:
            out.append(tuple(assign))
            return
        for cand in range(n):
            if cand in assign:
                continue
            if any(
                rs.cartan[i][j] != rs.cartan[cand][assign[j]]
                or rs.cartan[j][i] != rs.cartan[assign[j]][cand]
                for j in range(i)
            ):
                continue
            assign.append(cand)
            backtrack(assign)
            assign.pop()

    backtrack([])
    return tuple(out)


def check_automorphism_invariance(stype: SimpleType):
    """P(S) = P(pi(S)) for every subset S and diagram automorphism pi."""
    rs = build_root_system(stype)
    autos = [p for p in finite_diagram_automorphisms(stype) if p != tuple(range(rs.rank))]
    failures = []
    for size in range(rs.rank + 1):
        for sub in combinations(range(1, rs.rank + 1), size):
            base = poincare_levi(rs, sub)
            for p in autos:
                image = tuple(sorted(p[i - 1] + 1 for i in sub))
                if poincare_levi(rs, image) != base:
                    failures.append((sub, p))  # pragma: no cover
    return {"type": stype.name, "automorphisms": len(autos), "failures": failures}


def check_degree_identity(stype: SimpleType):
    """deg P(S) = dim g - dim u_S for all S; hence deg differences equal
    nilradical differences for every pair of subsets."""
    rs = build_root_system(stype)
    dim_g = stype.dimension
    failures = []
    for size in range(rs.rank + 1):
        for sub in combinations(range(1, rs.rank + 1), size):
            ls = levi_subset(rs, sub)
            if poincare_levi(rs, sub).degree != dim_g - ls.dim_nilradical:
                failures.append(sub)  # pragma: no cover
    return {"type": stype.name, "failures": failures}


def polynomial_checks(stype: SimpleType | None = None, l: int | None = None):
    """Combined machine verification: diagram-automorphism invariance and the
    degree identity for a type, and the odd-product gap pattern for a bound."""
    out = {}
    if stype is not None:
        out["automorphism_invariance"] = check_automorphism_invariance(stype)
        out["degree_identity"] = check_degree_identity(stype)
    if l is not None:
        out["odd_product_gaps"] = [check_odd_product_gaps(i) for i in range(1, l + 1)]
    return out


def check_odd_product_gaps(l: int):
    """f(t) = (1+t)(1+t^3)...(1+t^{2l+1}) has zero coefficients exactly at
    degrees 2 and (l+1)^2 - 2 within [0, (l+1)^2]."""
    f = IntPolynomial.one()
    for d in range(l + 1):
        f = f * IntPolynomial.one_plus_power(2 * d + 1)
    top = (l + 1) ** 2
    if f.degree != top:
        raise LieError("wrong degree in odd product")  # pragma: no cover
    zeros = tuple(k for k in range(top + 1) if f.coefficient(k) == 0)
    expected = tuple(sorted({2, top - 2})) if l >= 1 else ()
    return {"l": l, "zeros": zeros, "expected": expected, "ok": zeros == expected}
