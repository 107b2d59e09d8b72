"""Involution analysis: eigenspace split, symmetric-pair tables, strongly
orthogonal roots, Hermitian/tube classification, and the orientation check.

The orientation ("Or") condition asks whether det(s_X) = +1 on the fixed
Cartan for every X in a maximal abelian subspace of the (-1)-part whose
exp(-2X) is central in the simply connected compact group.  The continuous
case analysis collapses to a finite sweep: each admissible X is captured by
a sign vector eps in {+-1}^r on the strongly orthogonal roots, feasibility
of the Cartan component is an exact lattice-membership test, and the
determinant is read off an integer matrix composed with a Weyl transport.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .chevalley import StructureConstants, structure_constants
from .kac import (
    AffineDiagram,
    KacCoordinates,
    LeviDescription,
    _int_det,
    affine_diagram,
    affine_diagram_symmetries,
    eigenspace_dimensions,
    fixed_subalgebra,
    kac_automorphism,
)
from .roots import LieError, SimpleType, build_root_system, transport_core

_SC_CACHE: dict = {}


def _sc_for(stype: SimpleType) -> StructureConstants:
    sc = _SC_CACHE.get(stype)
    if sc is None:
        sc = structure_constants(build_root_system(stype))
        _SC_CACHE[stype] = sc
    return sc


@dataclass(frozen=True)
class Involution:
    """An order-2 automorphism with its eigenspace split and folded data."""

    auto: object
    dim_u0: int
    dim_u1: int
    folded_rank: int
    restricted_simple_basis: tuple  # psi_i as pairing vectors on the folded Cartan
    levi: LeviDescription
    pair_names: tuple | None
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def coords(self) -> KacCoordinates:
        return self.auto.coords

    @property
    def rs(self):
        return self.auto.rs

    @property
    def stype(self) -> SimpleType:
        return self.rs.stype


def involution(coords: KacCoordinates, sc: StructureConstants | None = None) -> Involution:
    if coords.m != 2:
        raise LieError(f"type {coords.describe()} has order {coords.m}, not 2")
    if sc is None:
        sc = _sc_for(coords.diagram.base)
    auto = kac_automorphism(coords, sc)
    dims = eigenspace_dimensions(auto)
    levi = fixed_subalgebra(coords)
    rs = sc.rs
    diag = coords.diagram
    psis = tuple(
        _restricted(rs, diag, rs.simple_index(orbit[0])) for orbit in diag.orbits
    )
    names = _pair_names(coords, levi)
    inv = Involution(auto, dims[0], dims[1], diag.folded_rank, psis, levi, names)
    if inv.dim_u0 != levi.dim:
        raise LieError("eigenspace and diagram routes disagree")  # pragma: no cover
    return inv


def _restricted(rs, diag: AffineDiagram, root_index: int) -> tuple:
    """Pairing vector of a root with the folded coroot sums H-bar_i."""
    row = rs.pairing_simple[root_index]
    return tuple(sum(row[i] for i in orbit) for orbit in diag.orbits)


# -- strongly orthogonal roots ------------------------------------------------


@dataclass(frozen=True)
class StronglyOrthogonalSet:
    """Maximal set of pairwise strongly orthogonal roots in the (-1)-part."""

    gammas: tuple  # root indices, in pick order

    def __len__(self):
        return len(self.gammas)


def candidate_pool(inv: Involution):
    """Positive roots alpha with nu(alpha) = alpha and g_alpha in the (-1)-part."""
    auto = inv.auto
    rs = inv.rs
    out = []
    for r in range(rs.n_pos):
        if auto.perm[r] != r:
            continue
        sign, e = auto.scalar(r)
        if sign * (-1) ** e == -1:
            out.append(r)
    return out


def strongly_orthogonal_set(inv: Involution, descending: bool = False) -> StronglyOrthogonalSet:
    """Greedy maximal strongly orthogonal set; ascending height by default.

    The verdict of the orientation check is independent of the pick order;
    the `descending` variant exists to exercise exactly that.
    """
    rs = inv.rs
    pool = candidate_pool(inv)
    if descending:
        pool = pool[::-1]
    chosen = []
    for cand in pool:
        if all(_strongly_orthogonal(rs, cand, g) for g in chosen):
            chosen.append(cand)
    for cand in pool:  # maximality by exhaustion
        if cand not in chosen and all(_strongly_orthogonal(rs, cand, g) for g in chosen):
            raise LieError("greedy strongly orthogonal set is not maximal")  # pragma: no cover
    return StronglyOrthogonalSet(tuple(chosen))


def _strongly_orthogonal(rs, a: int, b: int) -> bool:
    return a != b and rs.sum_index(a, b) == -2 and rs.sum_index(a, rs.neg_index(b)) == -2


# -- Hermitian / tube classification ------------------------------------------


class HermitianKind(Enum):
    NON_HERMITIAN = "NonHermitian"
    HERMITIAN_NON_TUBE = "HermitianNonTube"
    HERMITIAN_TUBE = "HermitianTube"


def _fixed_data(inv: Involution) -> "FixedRootData":
    data = inv._cache.get("fixed")
    if data is None:
        data = FixedRootData(inv)
        inv._cache["fixed"] = data
    return data


def hermitian_tube_classify(inv: Involution) -> HermitianKind:
    """Hermitian iff the fixed subalgebra has a 1-dimensional centre; tube iff
    Z = sum_j e_j iH_{gamma_j}* is central in it for some signs e_j (all
    simple pairings vanish).

    The sign freedom absorbs the choice of class representative: conjugating
    the involution can replace members of the canonical strongly orthogonal
    set by their negatives, which flips columns of the pairing matrix.
    """
    if inv.levi.center_dim != 1:
        return HermitianKind.NON_HERMITIAN
    data = _fixed_data(inv)
    gammas = strongly_orthogonal_set(inv).gammas
    rs = inv.rs
    cols = [[_pairing(rs, rep, g) for rep in data.basis_reps] for g in gammas]
    for eps in itertools.product((1, -1), repeat=max(0, len(gammas) - 1)):
        signs = (1,) + eps
        if all(
            sum(s * col[i] for s, col in zip(signs, cols)) == 0
            for i in range(len(data.basis_reps))
        ):
            return HermitianKind.HERMITIAN_TUBE
    return HermitianKind.HERMITIAN_NON_TUBE


def _pairing(rs, i: int, j: int) -> int:
    """<root_i, root_j^v> for arbitrary root indices."""
    return rs.pairing(i, j)


# -- the root system of the fixed subalgebra ----------------------------------


class FixedRootData:
    """Delta_0 = roots of the fixed subalgebra, as folded pairing vectors.

    Carries a representative unfolded root per element, the simple basis
    read off the s_i = 0 vertices of the affine diagram, string-based Cartan
    integers and the positive system those vertices generate.
    """

    def __init__(self, inv: Involution):
        auto = inv.auto
        rs = inv.rs
        diag = auto.coords.diagram
        self.inv = inv
        self.rs = rs
        self.diag = diag
        coords_of = {}
        seen_pairs = set()
        for r in range(2 * rs.n_pos):
            if auto.perm[r] == r:
                sign, e = auto.scalar(r)
                if sign * (-1) ** e != 1:
                    continue
            else:
                key = frozenset((r, auto.perm[r]))
                if key in seen_pairs:
                    continue
                seen_pairs.add(key)
            c = _restricted(rs, diag, r)
            if not any(c):
                raise LieError("root restricts to zero")  # pragma: no cover
            if c in coords_of:
                raise LieError("fixed subalgebra has a repeated root")  # pragma: no cover
            coords_of[c] = r
        self.coords_of = coords_of
        # basis: affine vertices with s = 0
        s = auto.coords.s
        psis = [_restricted(rs, diag, rs.simple_index(orbit[0])) for orbit in diag.orbits]
        alpha0 = tuple(
            -sum(a * p[t] for a, p in zip(diag.labels, psis))
            for t in range(diag.folded_rank)
        )
        functionals = [alpha0] + psis
        self.basis = []
        self.basis_reps = []
        for v in range(diag.folded_rank + 1):
            if s[v] == 0:
                c = functionals[v]
                if c not in coords_of:
                    raise LieError("basis vertex missing from Delta_0")  # pragma: no cover
                self.basis.append(c)
                self.basis_reps.append(coords_of[c])
        self._string_cache = {}
        self._solver = _ExpansionSolver(self.basis)
        self.positives = [c for c in coords_of if self._expansion_sign(c) > 0]

    def cartan_int(self, coords, i: int) -> int:
        key = (coords, i)
        val = self._string_cache.get(key)
        if val is not None:
            return val
        base = self.basis[i]
        if coords == base:
            val = 2
        elif coords == tuple(-c for c in base):
            val = -2
        else:
            p = 0
            cur = tuple(a - b for a, b in zip(coords, base))
            while cur in self.coords_of:
                p += 1
                cur = tuple(a - b for a, b in zip(cur, base))
            q = 0
            cur = tuple(a + b for a, b in zip(coords, base))
            while cur in self.coords_of:
                q += 1
                cur = tuple(a + b for a, b in zip(cur, base))
            val = p - q
        self._string_cache[key] = val
        return val

    def _expansion_sign(self, coords) -> int:
        x = self._solver.solve(coords)
        pos = all(v >= 0 for v in x)
        neg = all(v <= 0 for v in x)
        if pos == neg:
            raise LieError("mixed-sign expansion in Delta_0")  # pragma: no cover
        return 1 if pos else -1

    def transport(self, image, validate=False):
        # image membership in Delta_0 is asserted by the caller; the full
        # positive-system validation is redundant on this internal path
        return transport_core(
            list(self.coords_of), self.positives, self.basis, self.cartan_int,
            image, validate=validate,
        )

    def coroot_folded(self, rep: int) -> tuple:
        """g_0-coroot of the Delta_0 root with representative `rep`, in folded
        coordinates (one integer per nu-orbit of simple roots)."""
        rs = self.rs
        auto = self.inv.auto
        vec = list(rs.coroot_vector(rep))
        if auto.perm[rep] != rep:
            vec = [a + b for a, b in zip(vec, rs.coroot_vector(auto.perm[rep]))]
        # beta(h) for h = sum vec_phi H_phi*
        row = rs.pairing_simple[rep]
        bh = sum(v * row[i] for i, v in enumerate(vec))
        out = []
        for orbit in self.diag.orbits:
            vals = {vec[i] for i in orbit}
            if len(vals) != 1:
                raise LieError("coroot is not orbit-constant")  # pragma: no cover
            num = 2 * vals.pop()
            if num % bh:
                raise LieError("non-integral folded coroot")  # pragma: no cover
            out.append(num // bh)
        return tuple(out)


class _ExpansionSolver:
    """Integer expansion over a fixed independent set of pairing vectors.

    Inverts one square subsystem up front; each solve is a matrix product
    plus a full consistency check of the remaining coordinates.
    """

    def __init__(self, basis):
        self.basis = [tuple(b) for b in basis]
        t = len(basis)
        nf = len(basis[0]) if basis else 0
        rows = []
        mat = []
        for i in range(nf):
            cand = mat + [[Fraction(b[i]) for b in basis]]
            if _rank(cand) > len(mat):
                mat = cand
                rows.append(i)
            if len(rows) == t:
                break
        if len(rows) != t:
            raise LieError("basis pairing vectors are dependent")  # pragma: no cover
        self.rows = rows
        inv = _invert(mat)
        den = 1
        for row in inv:
            for v in row:
                den = den * v.denominator // _int_gcd(den, v.denominator)
        self.den = den
        self.inv_int = [[int(v * den) for v in row] for row in inv]

    def solve(self, coords):
        sub = [coords[i] for i in self.rows]
        out = []
        for row in self.inv_int:
            num = sum(row[j] * sub[j] for j in range(len(sub)))
            if num % self.den:
                raise LieError("non-integral expansion in Delta_0")  # pragma: no cover
            out.append(num // self.den)
        for i, c in enumerate(coords):
            if sum(b[i] * xv for b, xv in zip(self.basis, out)) != c:
                raise LieError("expansion inconsistent")  # pragma: no cover
        return tuple(out)


def _int_gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _rank(mat):
    m = [row[:] for row in mat]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c] / m[rank][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def _invert(mat):
    t = len(mat)
    aug = [[Fraction(mat[i][j]) for j in range(t)] + [Fraction(1 if j == i else 0) for j in range(t)] for i in range(t)]
    for c in range(t):
        piv = next(r for r in range(c, t) if aug[r][c])
        aug[c], aug[piv] = aug[piv], aug[c]
        scale = aug[c][c]
        aug[c] = [x / scale for x in aug[c]]
        for r in range(t):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[t:] for row in aug]


# -- the orientation condition -------------------------------------------------


@dataclass(frozen=True)
class OrWitness:
    """One feasible sign vector with its exact determinant.

    basis_permutation records how s_X permutes the simple roots of the fixed
    subalgebra (e.g. whether equal-rank ideals are swapped), for audit.
    """

    eps: tuple
    feasibility: tuple  # the half-integer constraint vector 2f, all even checks passed
    det: int
    basis_permutation: tuple


@dataclass(frozen=True)
class OrVerdict:
    satisfied: bool
    witnesses: tuple
    gammas: tuple
    shortcut: str | None = None


def condition_or(inv: Involution, force_generic: bool = False) -> OrVerdict:
    """Decide the orientation condition for the adjoint group.

    Fast paths (each a one-line fact about the setting): trivial centre of
    the simply connected compact group (E8, F4, G2); an empty strongly
    orthogonal set (the abelian subspace is purely Cartan); a Hermitian
    non-tube pair.  Everything else runs the generic sweep.
    """
    so = strongly_orthogonal_set(inv)
    if not force_generic:
        if inv.stype.name in ("E8", "F4", "G2"):
            return OrVerdict(True, (), so.gammas, shortcut="trivial-center")
        if len(so) == 0:
            return OrVerdict(True, (), so.gammas, shortcut="cartan-only")
        if hermitian_tube_classify(inv) is HermitianKind.HERMITIAN_NON_TUBE:
            return OrVerdict(True, (), so.gammas, shortcut="hermitian-non-tube")
    if len(so) == 0:
        return OrVerdict(True, (), so.gammas, shortcut=None)
    return _condition_or_generic(inv, so)


def _condition_or_generic(inv: Involution, so: StronglyOrthogonalSet) -> OrVerdict:
    rs = inv.rs
    auto = inv.auto
    diag = auto.coords.diagram
    data = _fixed_data(inv)
    gammas = so.gammas
    r = len(gammas)
    n = rs.rank
    nu_bar = diag.nu
    # columns of the Cartan-component constraint matrix: one per 2-orbit
    orbit_reps = sorted({min(i, nu_bar[i]) for i in range(n) if nu_bar[i] != i})
    m_rows = [
        [rs.cartan[i][p] - rs.cartan[i][nu_bar[p]] for p in orbit_reps] for i in range(n)
    ]
    kernel = _integer_left_kernel(m_rows)
    gcoords = [_restricted(rs, diag, g) for g in gammas]
    gcoroots = [_fold_coroot(rs, diag, g) for g in gammas]
    simple_pairings = [
        [_pairing(rs, rs.simple_index(i), g) for g in gammas] for i in range(n)
    ]
    witnesses = []
    all_plus_ok = False
    for eps in itertools.product((1, -1), repeat=r):
        flips = [j for j, e in enumerate(eps) if e == -1]
        f2 = [sum(simple_pairings[i][j] for j in flips) for i in range(n)]
        if any(sum(l * f for l, f in zip(lam, f2)) % 2 for lam in kernel):
            continue
        det, base_perm = _witness_det(data, gammas, gcoords, gcoroots, flips)
        witnesses.append(OrWitness(eps, tuple(f2), det, base_perm))
        if not flips:
            all_plus_ok = det == 1
    if not all_plus_ok:
        raise LieError("identity sign vector must have determinant +1")  # pragma: no cover
    satisfied = all(w.det == 1 for w in witnesses)
    return OrVerdict(satisfied, tuple(witnesses), gammas)


def _witness_det(data: FixedRootData, gammas, gcoords, gcoroots, flips) -> int:
    rs = data.rs
    nf = data.diag.folded_rank
    # image of the positive system under Ad(sigma_X)
    image = []
    for c in data.positives:
        rep = data.coords_of[c]
        out = list(c)
        for j in flips:
            pair = _pairing(rs, rep, gammas[j])
            if pair:
                for t in range(nf):
                    out[t] -= pair * gcoords[j][t]
        tc = tuple(out)
        if tc not in data.coords_of:
            raise LieError(
                "Ad(sigma_X) does not preserve the fixed root system"
            )  # pragma: no cover
        image.append(tc)
    word, parity = data.transport(image)
    # s_X as an integer matrix on the folded Cartan: tau_eps composed with
    # the transporting Weyl word, each reflection a rank-one update
    mat = _identity(nf)
    for i in reversed(word):
        _reflect_columns(mat, data.basis[i], data.coroot_folded(data.basis_reps[i]))
    for j in reversed(flips):
        _reflect_columns(mat, gcoords[j], gcoroots[j])
    det = _int_det(mat)
    if det != parity * (-1) ** len(flips):
        raise LieError("determinant cross-check failed")  # pragma: no cover
    return det, _basis_permutation(data, gammas, gcoords, word, flips)


def _basis_permutation(data: FixedRootData, gammas, gcoords, word, flips):
    """How s_X permutes the basis of the fixed root system (audit data)."""
    rs = data.rs
    nf = data.diag.folded_rank
    out = []
    lookup = {c: i for i, c in enumerate(data.basis)}
    for coords in data.basis:
        c = coords
        for i in reversed(word):
            pair = data.cartan_int(c, i)
            c = tuple(x - pair * b for x, b in zip(c, data.basis[i]))
        rep = data.coords_of[c]
        moved = list(c)
        for j in flips:
            pair = _pairing(rs, rep, gammas[j])
            if pair:
                for t in range(nf):
                    moved[t] -= pair * gcoords[j][t]
        out.append(lookup[tuple(moved)])
    return tuple(out)


def _reflect_columns(mat, fun_coords, coroot):
    """In place: mat <- S mat with S: H |-> H - fun(H) * coroot."""
    nf = len(mat)
    vals = [sum(fun_coords[t] * mat[t][j] for t in range(nf)) for j in range(nf)]
    for i in range(nf):
        ci = coroot[i]
        if ci:
            row = mat[i]
            for j in range(nf):
                row[j] -= ci * vals[j]


def _identity(nf):
    return [[1 if i == j else 0 for j in range(nf)] for i in range(nf)]


def _fold_coroot(rs, diag: AffineDiagram, root_index: int) -> tuple:
    vec = rs.coroot_vector(root_index)
    out = []
    for orbit in diag.orbits:
        vals = {vec[i] for i in orbit}
        if len(vals) != 1:
            raise LieError("coroot is not orbit-constant")  # pragma: no cover
        out.append(vals.pop())
    return tuple(out)


def _integer_left_kernel(m_rows):
    """Basis of {lambda in Z^n : lambda M = 0} by unimodular row reduction."""
    n = len(m_rows)
    cols = len(m_rows[0]) if n else 0
    h = [list(row) for row in m_rows]
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    pivot_row = 0
    for c in range(cols):
        # clear column c below pivot_row with gcd steps
        while True:
            nz = [i for i in range(pivot_row, n) if h[i][c]]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda i: abs(h[i][c]))
            i0 = nz[0]
            for i in nz[1:]:
                qd = h[i][c] // h[i0][c]
                h[i] = [a - qd * b for a, b in zip(h[i], h[i0])]
                u[i] = [a - qd * b for a, b in zip(u[i], u[i0])]
        nz = [i for i in range(pivot_row, n) if h[i][c]]
        if nz:
            i0 = nz[0]
            h[pivot_row], h[i0] = h[i0], h[pivot_row]
            u[pivot_row], u[i0] = u[i0], u[pivot_row]
            pivot_row += 1
    return [u[i] for i in range(n) if not any(h[i])]


# -- involution classes and the two tables ------------------------------------


def involution_classes(stype: SimpleType):
    """All order-2 classes up to conjugation: pairs of label-1 vertices (k=1)
    or single label-1 vertices (k=2), deduped by affine-diagram symmetries."""
    out = []
    folds = [1]
    if (stype.series == "A" and stype.rank >= 2) or stype.series == "D" or stype.name == "E6":
        folds.append(2)
    for k in folds:
        diag = affine_diagram(stype, k)
        labels = (1,) + diag.labels
        size = len(labels)
        raw = []
        if k == 1:
            ones = [i for i, a in enumerate(labels) if a == 1]
            for x in range(len(ones)):
                for y in range(x + 1, len(ones)):
                    s = [0] * size
                    s[ones[x]] = s[ones[y]] = 1
                    raw.append(tuple(s))
            for i, a in enumerate(labels):
                if a == 2:
                    s = [0] * size
                    s[i] = 1
                    raw.append(tuple(s))
        else:
            for i, a in enumerate(labels):
                if a == 1:
                    s = [0] * size
                    s[i] = 1
                    raw.append(tuple(s))
        syms = affine_diagram_symmetries(diag)
        seen = set()
        for s in raw:
            orbit = {tuple(s[p.index(i)] for i in range(size)) for p in syms}
            rep = min(orbit)
            if rep not in seen:
                seen.add(rep)
                out.append(KacCoordinates(diag, rep))
    out.sort(key=lambda c: (c.diagram.k, c.s))
    return out


def classify_involution(coords: KacCoordinates):
    """Family key and parameter identifying the class the way the tables do."""
    stype = coords.diagram.base
    series, rank = stype.series, stype.rank
    k = coords.diagram.k
    ones = [i for i, v in enumerate(coords.s) if v]
    nf = coords.diagram.folded_rank
    if series == "A":
        n = rank + 1
        if k == 1:
            # the class is the cyclic distance of the two vertices on a_n^(1)
            d = ones[1] - ones[0]
            return {"family": "A-inner", "n": n, "p": min(d, n - d)}
        if n % 2 == 1:
            return {"family": "A-outer-so", "n": n}
        return {"family": "A-outer-sp" if ones[0] in (0, 1) else "A-outer-so", "n": n}
    if series == "B":
        if ones == [0, 1]:
            return {"family": "B-pair", "n": rank}
        return {"family": "B-inner", "n": rank, "p": ones[0]}
    if series == "C":
        if len(ones) == 2:
            return {"family": "C-pair", "n": rank}
        p = ones[0]
        return {"family": "C-inner", "n": rank, "p": min(p, rank - p)}
    if series == "D":
        n = rank
        if k == 2:
            p = ones[0]
            return {"family": "D-outer", "n": n, "p": min(p, (nf) - p)}
        if len(ones) == 2:
            i, j = ones
            low = {0, 1}
            if (i in low) == (j in low):
                return {"family": "D-pair-so2", "n": n}
            return {"family": "D-pair-gl", "n": n}
        p = ones[0]
        return {"family": "D-inner", "n": n, "p": min(p, n - p)}
    key = {
        ("E6", 1, True): "E6-so10",
        ("E6", 1, False): "E6-a1a5",
        ("E7", 1, True): "E7-e6",
        ("E8", 1, False): None,
        ("F4", 1, False): None,
        ("G2", 1, False): None,
    }
    if stype.name == "E6" and k == 2:
        return {"family": "E6-f4" if coords.s[0] == 1 else "E6-c4", "n": 6}
    if stype.name == "E6":
        return {"family": "E6-so10" if len(ones) == 2 else "E6-a1a5", "n": 6}
    if stype.name == "E7":
        if len(ones) == 2:
            return {"family": "E7-e6", "n": 7}
        return {"family": "E7-a7" if ones[0] == 2 else "E7-a1d6", "n": 7}
    if stype.name == "E8":
        return {"family": "E8-d8" if ones[0] == 1 else "E8-a1e7", "n": 8}
    if stype.name == "F4":
        return {"family": "F4-a1c3" if ones[0] == 1 else "F4-b4", "n": 4}
    if stype.name == "G2":
        return {"family": "G2-a1a1", "n": 2}
    raise LieError(f"unclassified involution {coords.describe()}")  # pragma: no cover


_EXCEPTIONAL_NAMES = {
    "E6-so10": ("SO(10,C)xSO(2,C)/SO(10)xSO(2)", "(e6(-14), so(10)+R)"),
    "E6-a1a5": ("SL(2,C)xSL(6,C)/SU(2)xSU(6)", "(e6(2), su(2)+su(6))"),
    "E6-f4": ("F4^C/F4", "(e6(-26), f4)"),
    "E6-c4": ("Sp(4,C)/Sp(4)", "(e6(6), sp(4))"),
    "E7-e6": ("E6^CxSO(2,C)/E6xSO(2)", "(e7(-25), e6+R)"),
    "E7-a7": ("SL(8,C)/SU(8)", "(e7(7), su(8))"),
    "E7-a1d6": ("SL(2,C)xSO(12,C)/SU(2)xSO(12)", "(e7(-5), su(2)+so(12))"),
    "E8-d8": ("SO(16,C)/SO(16)", "(e8(8), so(16))"),
    "E8-a1e7": ("SL(2,C)xE7^C/SU(2)xE7", "(e8(-24), su(2)+e7)"),
    "F4-a1c3": ("SL(2,C)xSp(3,C)/SU(2)xSp(3)", "(f4(4), su(2)+sp(3))"),
    "F4-b4": ("SO(9,C)/SO(9)", "(f4(-20), so(9))"),
    "G2-a1a1": ("SL(2,C)xSL(2,C)/SU(2)xSU(2)", "(g2(2), su(2)+su(2))"),
}


def _pair_names(coords: KacCoordinates, levi: LeviDescription):
    info = classify_involution(coords)
    fam = info["family"]
    n = info["n"]
    p = info.get("p")
    if fam in _EXCEPTIONAL_NAMES:
        return _EXCEPTIONAL_NAMES[fam]
    if fam == "A-inner":
        return (
            f"S(GL({p},C)xGL({n - p},C))/S(U({p})xU({n - p}))",
            f"SU({p},{n - p})/S(U({p})xU({n - p}))",
        )
    if fam == "A-outer-sp":
        h = n // 2
        return (f"Sp({h},C)/Sp({h})", f"SU*({n})/Sp({h})")
    if fam == "A-outer-so":
        return (f"SO({n},C)/SO({n})", f"SL({n},R)/SO({n})")
    if fam == "B-pair":
        return _so_pair_names(2 * n - 1, 2)
    if fam == "B-inner":
        return _so_pair_names(2 * p, 2 * n - 2 * p + 1)
    if fam == "C-pair":
        return (f"GL({n},C)/U({n})", f"Sp({n},R)/U({n})")
    if fam == "C-inner":
        return (
            f"Sp({p},C)xSp({n - p},C)/Sp({p})xSp({n - p})",
            f"Sp({p},{n - p})/Sp({p})xSp({n - p})",
        )
    if fam == "D-pair-gl":
        return (f"GL({n},C)/U({n})", f"SO*({2 * n})/U({n})")
    if fam == "D-pair-so2":
        return _so_pair_names(2 * n - 2, 2)
    if fam == "D-inner":
        return _so_pair_names(2 * p, 2 * n - 2 * p)
    if fam == "D-outer":
        return _so_pair_names(2 * p + 1, 2 * n - 2 * p - 1)
    return None  # pragma: no cover


def _so_pair_names(a: int, b: int):
    """Names for an SO(a) x SO(b) pair; trivial SO(0)/SO(1) factors are dropped."""
    num = "x".join(f"SO({x},C)" for x in (a, b) if x >= 2)
    den = "x".join(f"SO({x})" for x in (a, b) if x >= 2)
    return (f"{num}/{den}", f"SO_0({a},{b})/{den}")


def table_types(max_rank: int = 12):
    """The simple types the involution tables are instantiated over."""
    out = [SimpleType("A", r) for r in range(1, max_rank)]
    out += [SimpleType("B", r) for r in range(3, max_rank + 1)]
    out += [SimpleType("C", r) for r in range(3, max_rank + 1)]
    out += [SimpleType("D", 3)]
    out += [SimpleType("D", r) for r in range(4, max_rank + 1)]
    out += [SimpleType.parse(t) for t in ("E6", "E7", "E8", "F4", "G2")]
    return out


_ROW_CACHE: dict = {}


def table_rows(stype: SimpleType, force_generic: bool = False):
    """Regenerate the Or- and dimension-table rows for one simple type."""
    key = (stype, force_generic)
    cached = _ROW_CACHE.get(key)
    if cached is not None:
        return [dict(r) for r in cached]
    rows = _table_rows_uncached(stype, force_generic)
    _ROW_CACHE[key] = rows
    return [dict(r) for r in rows]


def _table_rows_uncached(stype: SimpleType, force_generic: bool):
    classes = involution_classes(stype)
    if stype == SimpleType("D", 3):
        classes = [c for c in classes if c.diagram.k == 2]
    rows = []
    for coords in classes:
        inv = involution(coords)
        verdict = condition_or(inv, force_generic=force_generic)
        info = classify_involution(coords)
        names = inv.pair_names or ("", "")
        rows.append(
            {
                "g": stype.name,
                "k": coords.diagram.k,
                "coords": coords.describe(),
                "family": info["family"],
                "p": info.get("p"),
                "x_sigma": names[0],
                "x_sigma_theta": names[1],
                "dim_x_sigma": inv.dim_u0,
                "dim_x_sigma_theta": inv.dim_u1,
                "or_satisfied": verdict.satisfied,
            }
        )
    return rows


def emit_tables(which: str = "or", max_rank: int = 12, fmt: str = "json") -> str:
    """Byte-stable rendering of the regenerated tables.

    which="or": every class with its verdict.  which="dims": dimensions of
    the two symmetric spaces, restricted to the classes where the
    orientation condition holds.
    """
    import json

    rows = []
    for stype in table_types(max_rank):
        rows.extend(table_rows(stype))
    if which == "dims":
        rows = [r for r in rows if r["or_satisfied"]]
        keep = ("g", "k", "coords", "family", "x_sigma", "x_sigma_theta",
                "dim_x_sigma", "dim_x_sigma_theta")
    elif which == "or":
        keep = ("g", "k", "coords", "family", "x_sigma", "x_sigma_theta",
                "or_satisfied")
    else:
        raise LieError(f"unknown table {which!r}")
    rows = [{key: r[key] for key in keep} for r in rows]
    if fmt == "json":
        return json.dumps(rows, sort_keys=True, indent=0)
    if fmt != "text":
        raise LieError(f"unknown format {fmt!r}")
    widths = {key: max([len(key)] + [len(str(r[key])) for r in rows]) for key in keep}
    lines = ["  ".join(key.ljust(widths[key]) for key in keep)]
    for r in rows:
        lines.append("  ".join(str(r[key]).ljust(widths[key]) for key in keep))
    return "\n".join(lines)


def or_satisfied_min_dims(stype: SimpleType):
    """The geometric-cycle degrees for a type: min(dim pair) over the rows
    where the orientation condition holds; empty when there are none."""
    degrees = set()
    for row in table_rows(stype):
        if row["or_satisfied"]:
            degrees.add(min(row["dim_x_sigma"], row["dim_x_sigma_theta"]))
    return sorted(degrees)
