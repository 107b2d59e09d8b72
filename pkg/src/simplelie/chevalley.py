"""Chevalley basis with signed integer structure constants.

The basis is {H_psi*, E_alpha} with [E_alpha, E_beta] = N(alpha,beta)
E_{alpha+beta} and |N| = 1 - p, where beta + n*alpha (p <= n <= q) is the
alpha-string through beta.  Signs are fixed by the extraspecial-pair
convention: positive roots are totally ordered (height, then the fixed
tie-break); for each non-simple gamma the decomposition gamma = alpha + beta
with alpha minimal gets N = +(1-p), and every other value follows from the
standard identities.  `verify_structure_constants` is the machine proof that
the resulting table is a Lie algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import _kernels
from .roots import LieError, Root, RootSystem, build_root_system


@dataclass(frozen=True)
class StructureConstants:
    """Signed integers N(alpha,beta) over a fixed root system.

    `pos_table` stores values for ordered pairs of positive-root indices;
    mixed and negative pairs are derived on demand through `n_value`.
    Treat instances as immutable; sharing across threads is safe.
    """

    rs: RootSystem
    pos_table: dict
    extraspecial: dict = field(default_factory=dict)
    _mixed_cache: dict = field(default_factory=dict, repr=False)

    def n_value(self, i: int, j: int) -> int:
        """N(root_i, root_j); 0 when root_i + root_j is neither a root nor zero."""
        return _n_value(self, i, j)

    def n_root(self, alpha, beta) -> int:
        return self.n_value(self.rs.index_of(alpha), self.rs.index_of(beta))

    def defined_pairs(self):
        """All ordered index pairs (i, j) with root_i + root_j a root."""
        rs = self.rs
        m = 2 * rs.n_pos
        for i in range(m):
            for j in range(m):
                if rs.sum_index(i, j) >= 0:
                    yield i, j


def structure_constants(rs: RootSystem) -> StructureConstants:
    """Build the full N-table for `rs` with extraspecial-pair signs."""
    table = {}
    extraspecial = {}
    sc = StructureConstants(rs, table, extraspecial)
    npos = rs.n_pos
    # positive roots are already listed in (height, tie-break) order
    for g in range(npos):
        decomps = []
        for a in range(g):
            b = rs.index.get(
                tuple(x - y for x, y in zip(rs._coeffs[g], rs._coeffs[a]))
            )
            if b is not None and b < npos and a <= b:
                decomps.append((a, b))
        if not decomps:
            continue  # simple root
        a1, b1 = decomps[0]  # alpha minimal: the extraspecial pair
        extraspecial[g] = (a1, b1)
        n0 = 1 - _string_p(rs, a1, b1)
        table[(a1, b1)] = n0
        table[(b1, a1)] = -n0
        for a, b in decomps[1:]:
            val = _derive_special(sc, g, a, b, a1, b1)
            table[(a, b)] = val
            table[(b, a)] = -val
    return sc


def _string_p(rs: RootSystem, ia: int, ib: int) -> int:
    """p of the alpha-string through beta (number of downward steps, <= 0)."""
    a = rs._coeffs[ia]
    cur = tuple(x - y for x, y in zip(rs._coeffs[ib], a))
    p = 0
    while cur in rs.index:
        p -= 1
        cur = tuple(x - y for x, y in zip(cur, a))
    return p


def _derive_special(sc, g, a, b, a1, b1):
    """N(a,b) for a non-extraspecial special pair, via the Jacobi identity
    on (E_{-alpha1}, E_alpha, E_beta)."""
    rs = sc.rs
    na1 = rs.neg_index(a1)
    t = 0
    if rs.sum_index(na1, a) >= 0:
        mid = rs.sum_index(na1, a)
        t += _n_value(sc, na1, a) * _n_value(sc, mid, b)
    if rs.sum_index(b, na1) >= 0:
        mid = rs.sum_index(b, na1)
        t += _n_value(sc, b, na1) * _n_value(sc, mid, a)
    d = _n_value(sc, g, na1)
    val = Fraction(-t, d)
    if val.denominator != 1:
        raise LieError("non-integral structure constant")  # pragma: no cover
    return int(val)


def _n_value(sc: StructureConstants, i: int, j: int) -> int:
    rs = sc.rs
    npos = rs.n_pos
    s = rs.sum_index(i, j)
    if s == -1:
        raise LieError("N(alpha, -alpha) is not a structure constant")
    if s == -2:
        return 0
    if i < npos and j < npos:
        return sc.pos_table[(i, j)]
    key = (i, j)
    cached = sc._mixed_cache.get(key)
    if cached is not None:
        return cached
    if i >= npos and j >= npos:
        val = -_n_value(sc, i - npos, j - npos)
    elif i >= npos:
        val = -_n_value(sc, j, i)
    else:
        # i positive, j negative
        if s < npos:
            # N(u,v) = -N(-v, u+v) * |u+v|^2 / |u|^2
            val = _scaled(sc, -_n_value(sc, j - npos, s), rs.norms[s], rs.norms[i])
        else:
            # N(u,v) = -N(u, -(u+v)) * |u+v|^2 / |v|^2
            val = _scaled(sc, -_n_value(sc, i, s - npos), rs.norms[s], rs.norms[j])
    sc._mixed_cache[key] = val
    return val


def _scaled(sc, base, num, den):
    v = Fraction(base * num, den)
    if v.denominator != 1:
        raise LieError("non-integral structure constant")  # pragma: no cover
    return int(v)


# -- formal vectors over the Chevalley basis -------------------------------
#
# A formal vector is a mapping from basis keys to exact coefficients, where
# the keys are ("H", i) for the simple coroot H_{psi_{i+1}}* and ("E", r)
# for the root vector at root index r.


def hkey(i):
    return ("H", i)


def ekey(r):
    return ("E", r)


def _add_to(acc, key, coeff):
    if not coeff:
        return
    cur = acc.get(key)
    new = coeff if cur is None else cur + coeff
    if new:
        acc[key] = new
    elif cur is not None:
        del acc[key]


def bracket(sc: StructureConstants, x, y):
    """Lie bracket of two formal vectors; exact Fraction coefficients."""
    rs = sc.rs
    out = {}
    for (kx, cx) in x.items():
        if not cx:
            continue
        for (ky, cy) in y.items():
            if not cy:
                continue
            c = Fraction(cx) * Fraction(cy)
            tx, ix = kx
            ty, iy = ky
            if tx == "H" and ty == "H":
                continue
            if tx == "H" and ty == "E":
                _add_to(out, ekey(iy), c * rs.pairing_simple[iy][ix])
            elif tx == "E" and ty == "H":
                _add_to(out, ekey(ix), -c * rs.pairing_simple[ix][iy])
            else:
                s = rs.sum_index(ix, iy)
                if s == -1:
                    for k, hc in enumerate(rs.coroot_vector(ix)):
                        _add_to(out, hkey(k), c * hc)
                elif s >= 0:
                    _add_to(out, ekey(s), c * sc.n_value(ix, iy))
    return out


# -- compact real form -----------------------------------------------------


@dataclass(frozen=True, order=True)
class CompactBasisIndex:
    """Index into the compact basis {iH_phi*, X_alpha, Y_alpha}.

    kind is "H" (phi a simple index), "X" or "Y" (alpha a positive-root
    index); the basis has rank + 2*|Delta+| elements.
    """

    kind: str
    index: int


def compact_basis(rs: RootSystem):
    out = [CompactBasisIndex("H", i) for i in range(rs.rank)]
    out += [CompactBasisIndex("X", r) for r in range(rs.n_pos)]
    out += [CompactBasisIndex("Y", r) for r in range(rs.n_pos)]
    return out


def compact_bracket(sc: StructureConstants, a: CompactBasisIndex, b: CompactBasisIndex):
    """Bracket of two compact-basis elements, expanded with integer coefficients.

    Uses X_a = E_a - E_{-a}, Y_a = i(E_a + E_{-a}); closure with integral
    coefficients is what makes the compact form an arithmetic object.
    X at a negative root folds back as X_{-a} = -X_a, Y_{-a} = +Y_a.
    """
    rs = sc.rs
    out = {}
    if a.kind == "H" and b.kind == "H":
        return out
    if a.kind == "H" or b.kind == "H":
        sign = 1
        if b.kind == "H":
            a, b = b, a
            sign = -1
        pair = rs.pairing_simple[b.index][a.index]
        # [iH, X_r] = pair * Y_r ;  [iH, Y_r] = -pair * X_r
        if b.kind == "X":
            _add_to(out, CompactBasisIndex("Y", b.index), sign * pair)
        else:
            _add_to(out, CompactBasisIndex("X", b.index), -sign * pair)
        return out
    if a.kind == "Y" and b.kind == "X":
        for key, coeff in compact_bracket(sc, b, a).items():
            _add_to(out, key, -coeff)
        return out
    r, s = a.index, b.index
    if r == s:
        if a.kind == b.kind:
            return out
        # kinds are ("X", "Y") here: [X_r, Y_r] = 2 iH_r*
        for k, hc in enumerate(rs.coroot_vector(r)):
            _add_to(out, CompactBasisIndex("H", k), 2 * hc)
        return out
    plus = rs.sum_index(r, s)
    minus = rs.sum_index(r, rs.neg_index(s))
    npl = sc.n_value(r, s) if plus >= 0 else 0
    nmi = sc.n_value(r, rs.neg_index(s)) if minus >= 0 else 0
    kinds = (a.kind, b.kind)
    if kinds in (("X", "X"), ("Y", "Y")):
        plus_sign = 1 if kinds == ("X", "X") else -1
        if plus >= 0:
            _add_to(out, CompactBasisIndex("X", plus), plus_sign * npl)
        if minus >= 0:
            eps = 1 if minus < rs.n_pos else -1
            _add_to(out, CompactBasisIndex("X", _pos_of(rs, minus)), -eps * nmi)
    else:  # ("X", "Y")
        if plus >= 0:
            _add_to(out, CompactBasisIndex("Y", plus), npl)
        if minus >= 0:
            _add_to(out, CompactBasisIndex("Y", _pos_of(rs, minus)), nmi)
    return out


def _pos_of(rs, idx):
    return idx if idx < rs.n_pos else idx - rs.n_pos


# -- verification ----------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ChevalleyReport:
    stype_name: str
    checks: tuple
    backend: str

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def __str__(self) -> str:
        lines = [f"chevalley verification for {self.stype_name} [{self.backend}]"]
        for c in self.checks:
            status = "pass" if c.passed else "FAIL"
            lines.append(f"  {c.name:<24} {status}{('  ' + c.detail) if c.detail else ''}")
        return "\n".join(lines)


def verify_structure_constants(sc: StructureConstants) -> ChevalleyReport:
    """Machine check: magnitudes, both antisymmetries, Jacobi on all triples.

    Never raises; failures are reported as data with a witness.
    """
    rs = sc.rs
    checks = []

    bad = None
    for i, j in sc.defined_pairs():
        n = sc.n_value(i, j)
        if abs(n) != 1 - _string_p(rs, i, j):
            bad = (i, j, n)
            break
    checks.append(
        CheckResult("magnitude |N| = 1-p", bad is None, f"witness {bad}" if bad else "")
    )

    bad = None
    m = 2 * rs.n_pos
    for i, j in sc.defined_pairs():
        if sc.n_value(i, j) != -sc.n_value(j, i):
            bad = (i, j)
            break
        if sc.n_value(i, j) != -sc.n_value(rs.neg_index(i), rs.neg_index(j)):
            bad = (i, j)
            break
    checks.append(
        CheckResult("antisymmetries", bad is None, f"witness {bad}" if bad else "")
    )

    # pairing additivity covers every Jacobi triple with a Cartan entry
    bad = None
    for i in range(m):
        for j in range(m):
            s = rs.sum_index(i, j)
            if s >= 0:
                for k in range(rs.rank):
                    if (
                        rs.pairing_simple[s][k]
                        != rs.pairing_simple[i][k] + rs.pairing_simple[j][k]
                    ):
                        bad = (i, j, k)
                        break
            if bad:
                break
        if bad:
            break
    checks.append(
        CheckResult("Cartan triples", bad is None, f"witness {bad}" if bad else "")
    )

    ok, count, witness = _jacobi_all_triples(sc)
    detail = f"{count} root triples"
    if not ok:
        detail = f"witness triple {witness}"
    checks.append(CheckResult("Jacobi identity", ok, detail))

    bad = None
    for i in range(m):
        try:
            rs.coroot_vector(i)
        except LieError:  # pragma: no cover
            bad = i
            break
    checks.append(
        CheckResult("integral coroots", bad is None, f"witness {bad}" if bad else "")
    )

    return ChevalleyReport(rs.stype.name, tuple(checks), _kernels.BACKEND)


def _jacobi_all_triples(sc: StructureConstants):
    """Exhaustive Jacobi check over unordered triples of root vectors."""
    rs = sc.rs
    m = 2 * rs.n_pos
    if rs._sum_table is None:
        rs._build_sum_table()
    nmat = [0] * (m * m)
    for i, j in sc.defined_pairs():
        nmat[i * m + j] = sc.n_value(i, j)
    coroot = [list(rs.coroot_vector(i)) for i in range(m)]
    rank = rs.rank
    pairing = [0] * (m * m)
    for c in range(m):
        ps = rs.pairing_simple[c]
        row = c * m
        for a in range(m):
            cr = coroot[a]
            pairing[row + a] = sum(ps[k] * cr[k] for k in range(rank))
    return _kernels.jacobi_scan(
        m, rs.rank, rs.n_pos, rs._sum_table, nmat, pairing, coroot
    )


def n_table_json(sc: StructureConstants) -> str:
    """JSON dump of the N-table keyed by positive-root index pairs."""
    import json

    entries = {f"{i},{j}": v for (i, j), v in sorted(sc.pos_table.items())}
    return json.dumps(
        {
            "type": sc.rs.stype.name,
            "convention": "extraspecial-positive",
            "n_table": entries,
        },
        sort_keys=True,
    )


def structure_constants_for(stype) -> StructureConstants:
    return structure_constants(build_root_system(stype))
