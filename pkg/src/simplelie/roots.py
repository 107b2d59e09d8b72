"""Exact root-system engine for the simple series A-G.

Roots are integer coefficient vectors over the simple basis; every pairing
goes through the Cartan matrix and its symmetrizer, so no floating point
appears anywhere.  Simple-root labeling follows the Dynkin diagrams used
throughout this package (branch node of E6/E7/E8 is psi_2, short roots last
in B, first in G2, etc.); the Cartan matrix in the JSON output pins the
convention for consumers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

SERIES_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 3,
    "D": lambda n: n >= 3,  # D3 = A3 is admitted: the involution tables need it
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


class LieError(ValueError):
    """Domain error raised on invalid types, non-roots and the like."""


@dataclass(frozen=True, order=True)
class SimpleType:
    """A simple series letter with a rank, e.g. E6 or D5."""

    series: str
    rank: int

    def __post_init__(self):
        check = SERIES_RANKS.get(self.series)
        if check is None:
            raise LieError(f"unknown series {self.series!r}; expected one of A-G")
        if not isinstance(self.rank, int) or not check(self.rank):
            raise LieError(
                f"rank {self.rank} out of range for series {self.series} "
                "(A n>=1, B n>=2, C n>=3, D n>=3, E 6..8, F 4, G 2)"
            )

    @staticmethod
    def parse(text: str) -> "SimpleType":
        text = text.strip()
        if not text or not text[0].isalpha():
            raise LieError(f"cannot parse simple type from {text!r}")
        return SimpleType(text[0].upper(), int(text[1:]))

    @property
    def name(self) -> str:
        return f"{self.series}{self.rank}"

    @property
    def dimension(self) -> int:
        """Dimension of the algebra: rank + number of roots."""
        return self.rank + 2 * num_positive_roots(self)

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Root:
    """A root as its integer coefficient vector over the simple basis."""

    coeffs: tuple

    def __post_init__(self):
        pos = all(c >= 0 for c in self.coeffs)
        neg = all(c <= 0 for c in self.coeffs)
        if (not pos and not neg) or not any(self.coeffs):
            raise LieError(f"mixed-sign or zero coefficient vector {self.coeffs} is not a root")

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    @property
    def is_positive(self) -> bool:
        return self.height > 0

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coeffs))

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coeffs) + ")"


def cartan_matrix(stype: SimpleType) -> tuple:
    """Cartan matrix A with A[i][j] = <psi_i, psi_j^v>, 0-based."""
    n = stype.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    s = stype.series
    if s in ("A", "B", "C"):
        for i in range(n - 1):
            bond(i, i + 1)
        if s == "B":
            a[n - 2][n - 1] = -2  # psi_n short
        elif s == "C":
            a[n - 1][n - 2] = -2  # psi_n long
    elif s == "D":
        for i in range(n - 3):
            bond(i, i + 1)
        bond(n - 3, n - 2)
        bond(n - 3, n - 1)
    elif s == "E":
        edges = [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]
        edges += [(6, 7)] if n >= 7 else []
        edges += [(7, 8)] if n == 8 else []
        for i, j in edges:
            bond(i - 1, j - 1)
    elif s == "F":
        bond(0, 1)
        bond(1, 2, aij=-2)  # psi_3, psi_4 short
        bond(2, 3)
    elif s == "G":
        bond(0, 1, aij=-1, aji=-3)  # psi_1 short
    return tuple(tuple(row) for row in a)


def symmetrizer(cartan: tuple) -> tuple:
    """Minimal positive integers d with A[i][j]*d[j] = A[j][i]*d[i].

    d[i] is half the squared length of psi_i, normalized so min(d) = 1.
    """
    n = len(cartan)
    d = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i != j and cartan[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * Fraction(cartan[j][i], cartan[i][j])
                    stack.append(j)
    scale = 1
    for x in d:
        scale = scale * x.denominator // _gcd(scale, x.denominator)
    ints = [int(x * scale) for x in d]
    g = 0
    for x in ints:
        g = _gcd(g, x)
    return tuple(x // g for x in ints)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _root_sort_key(coeffs):
    # Height first; ties broken so that psi_1 < psi_2 < ... (anti-lex).
    return (sum(coeffs), tuple(-c for c in coeffs))


def _enumerate_positive(cartan: tuple) -> list:
    """All positive roots as coefficient tuples, closed under string addition."""
    n = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        new = set()
        for beta in frontier:
            for i in range(n):
                # walk the psi_i-string downward through already-known roots
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                pairing = sum(beta[j] * cartan[j][i] for j in range(n))
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    cand = tuple(up)
                    if cand not in found:
                        new.add(cand)
        found |= new
        frontier = sorted(new)
    return sorted(found, key=_root_sort_key)


class RootSystem:
    """Immutable enumeration of a simple root system with exact pairings.

    `roots` lists all of Delta: the positive roots first (by height, then
    our fixed tie-break), then their negatives in mirror order, so index
    arithmetic `i <-> i +- n_pos` realizes alpha <-> -alpha.
    """

    def __init__(self, stype: SimpleType):
        self.stype = stype
        self.cartan = cartan_matrix(stype)
        self.symmetrizer = symmetrizer(self.cartan)
        pos = _enumerate_positive(self.cartan)
        self.n_pos = len(pos)
        self.rank = stype.rank
        self._coeffs = pos + [tuple(-c for c in beta) for beta in pos]
        self.roots = tuple(Root(c) for c in self._coeffs)
        self.index = {c: i for i, c in enumerate(self._coeffs)}
        b = self.cartan
        d = self.symmetrizer
        # form[i][j] = (psi_i, psi_j), an integer symmetric bilinear form
        self.form = tuple(
            tuple(b[i][j] * d[j] for j in range(self.rank)) for i in range(self.rank)
        )
        # pairing_simple[r][j] = <root_r, psi_j^v>
        self.pairing_simple = tuple(
            tuple(sum(c[i] * b[i][j] for i in range(self.rank)) for j in range(self.rank))
            for c in self._coeffs
        )
        self.norms = tuple(self._norm(c) for c in self._coeffs)
        self._sum_table = None
        self._coroots = None

    # -- basic queries ---------------------------------------------------

    def _norm(self, coeffs) -> int:
        n = self.rank
        f = self.form
        return sum(coeffs[i] * coeffs[j] * f[i][j] for i in range(n) for j in range(n))

    def bilinear(self, a, b) -> int:
        n = self.rank
        f = self.form
        return sum(a[i] * b[j] * f[i][j] for i in range(n) for j in range(n))

    def index_of(self, root) -> int:
        coeffs = root.coeffs if isinstance(root, Root) else tuple(root)
        try:
            return self.index[coeffs]
        except KeyError:
            raise LieError(f"{coeffs} is not a root of {self.stype}") from None

    def is_root(self, coeffs) -> bool:
        return tuple(coeffs) in self.index

    def neg_index(self, i: int) -> int:
        return i + self.n_pos if i < self.n_pos else i - self.n_pos

    def simple_index(self, i: int) -> int:
        """Index of psi_{i+1} in the root list (0-based argument)."""
        return self.index[tuple(1 if j == i else 0 for j in range(self.rank))]

    @property
    def positive(self):
        return self.roots[: self.n_pos]

    @property
    def highest_root(self) -> Root:
        return self.roots[self.n_pos - 1]

    def sum_index(self, i: int, j: int) -> int:
        """Index of root_i + root_j; -1 when the sum is zero, -2 when not a root."""
        if self._sum_table is None:
            self._build_sum_table()
        return self._sum_table[i * 2 * self.n_pos + j]

    def _build_sum_table(self):
        m = 2 * self.n_pos
        table = [-2] * (m * m)
        cs = self._coeffs
        idx = self.index
        for i in range(m):
            ci = cs[i]
            ni = self.neg_index(i)
            base = i * m
            for j in range(m):
                if j == ni:
                    table[base + j] = -1
                else:
                    s = tuple(x + y for x, y in zip(ci, cs[j]))
                    table[base + j] = idx.get(s, -2)
        self._sum_table = table

    def coroot_vector(self, i: int) -> tuple:
        """alpha^v expanded over the simple coroots; integer entries."""
        if self._coroots is None:
            table = []
            for r in range(2 * self.n_pos):
                c = self._coeffs[r]
                norm = self.norms[r]
                out = []
                for k in range(self.rank):
                    num = c[k] * 2 * self.symmetrizer[k]
                    if num % norm:
                        raise LieError("non-integral coroot expansion")  # pragma: no cover
                    out.append(num // norm)
                table.append(tuple(out))
            self._coroots = table
        return self._coroots[i]

    def pairing(self, i: int, j: int) -> int:
        """<root_i, root_j^v> for arbitrary root indices."""
        cr = self.coroot_vector(j)
        row = self.pairing_simple[i]
        return sum(row[k] * cr[k] for k in range(self.rank))

    def to_json(self) -> str:
        data = {
            "type": self.stype.name,
            "cartan": [list(r) for r in self.cartan],
            "positive_roots": [list(c) for c in self._coeffs[: self.n_pos]],
            "labeling_note": "paper-diagram",
        }
        return json.dumps(data, sort_keys=True)


@lru_cache(maxsize=None)
def build_root_system(stype: SimpleType) -> RootSystem:
    """Enumerate the full root system of a valid simple type."""
    return RootSystem(stype)


def num_positive_roots(stype: SimpleType) -> int:
    n = stype.rank
    s = stype.series
    if s == "A":
        return n * (n + 1) // 2
    if s in ("B", "C"):
        return n * n
    if s == "D":
        return n * (n - 1)
    return {("E", 6): 36, ("E", 7): 63, ("E", 8): 120, ("F", 4): 24, ("G", 2): 6}[(s, n)]


def cartan_pairing(rs: RootSystem, alpha, beta) -> int:
    """<alpha, beta^v> = alpha(H_beta*); note the asymmetric argument order."""
    i = rs.index_of(alpha)
    j = rs.index_of(beta)
    num = 2 * rs.bilinear(rs._coeffs[i], rs._coeffs[j])
    den = rs.norms[j]
    if num % den:
        raise LieError("non-integral Cartan pairing")  # pragma: no cover
    return num // den


def root_string(rs: RootSystem, alpha, beta):
    """The alpha-string through beta: (p, q) with beta + n*alpha a root for p<=n<=q."""
    ia = rs.index_of(alpha)
    ib = rs.index_of(beta)
    if ia == ib or ia == rs.neg_index(ib):
        raise LieError("root string through +-alpha itself is undefined")
    a = rs._coeffs[ia]
    b = rs._coeffs[ib]
    p = 0
    cur = tuple(x - y for x, y in zip(b, a))
    while cur in rs.index:
        p -= 1
        cur = tuple(x - y for x, y in zip(cur, a))
    q = 0
    cur = tuple(x + y for x, y in zip(b, a))
    while cur in rs.index:
        q += 1
        cur = tuple(x + y for x, y in zip(cur, a))
    return p, q


def exponents(stype: SimpleType):
    """The exponents d_1..d_l, in the traditional table order."""
    n = stype.rank
    s = stype.series
    if s == "A":
        return tuple(range(1, n + 1))
    if s in ("B", "C"):
        return tuple(range(1, 2 * n, 2))
    if s == "D":
        return tuple(range(1, 2 * n - 2, 2)) + (n - 1,)
    return {
        ("E", 6): (1, 4, 5, 7, 8, 11),
        ("E", 7): (1, 5, 7, 9, 11, 13, 17),
        ("E", 8): (1, 7, 11, 13, 17, 19, 23, 29),
        ("F", 4): (1, 5, 7, 11),
        ("G", 2): (1, 5),
    }[(s, n)]


# -- Weyl group transport ------------------------------------------------
#
# The transporter is generic over a "root datum": a finite set of coordinate
# tuples with a simple basis and a Cartan-integer callback.  The same core
# serves the unfolded system here and the fixed-subalgebra systems of the
# involution analysis.


def transport_core(all_roots, positives, simples, cartan_int, image, validate=True):
    """Reduced word w (as simple indices) with w(positives) == image, plus parity.

    `image` must be a positive system: half of `all_roots`, no opposite
    pairs, closed under root addition.
    """
    pos_set = frozenset(positives)
    if validate:
        _validate_positive_system(all_roots, pos_set, image)
    word = []
    current = set(image)
    guard = len(pos_set) + 1
    while current != pos_set:
        for i, s in enumerate(simples):
            neg = tuple(-c for c in s)
            if neg in current:
                current = {_reflect(beta, s, cartan_int(beta, i)) for beta in current}
                word.append(i)
                break
        else:  # pragma: no cover - excluded by validation
            raise LieError("transport failed to make progress")
        guard -= 1
        if guard < 0:  # pragma: no cover
            raise LieError("transport exceeded the inversion bound")
    # word applied left-to-right sends image to positives, so the transporter
    # itself is the product s_{i_1} ... s_{i_L} read in append order.
    return tuple(word), (-1) ** len(word)


def _reflect(beta, simple, pairing):
    return tuple(b - pairing * s for b, s in zip(beta, simple))


def _validate_positive_system(all_roots, pos_set, image):
    image = set(image)
    universe = set(all_roots)
    if len(image) != len(pos_set):
        raise LieError("image set has the wrong cardinality for a positive system")
    for beta in image:
        if beta not in universe:
            raise LieError(f"{beta} is not a root")
        if tuple(-c for c in beta) in image:
            raise LieError("image contains an opposite pair")
    for a in image:
        for b in image:
            s = tuple(x + y for x, y in zip(a, b))
            if s in universe and s not in image:
                raise LieError("image is not closed under root addition")


def transport_to_positive(rs: RootSystem, image_positive_set):
    """Weyl word transporting Delta+ onto the given positive system, with parity."""
    image = []
    for r in image_positive_set:
        image.append(r.coeffs if isinstance(r, Root) else tuple(r))
    simples = [tuple(1 if j == i else 0 for j in range(rs.rank)) for i in range(rs.rank)]

    def cartan_int(coeffs, i):
        return sum(coeffs[j] * rs.cartan[j][i] for j in range(rs.rank))

    return transport_core(rs._coeffs, rs._coeffs[: rs.n_pos], simples, cartan_int, image)


def apply_word(rs: RootSystem, word, coeffs):
    """Apply the Weyl word (product left-to-right) to a coefficient vector."""
    cur = tuple(coeffs)
    for i in reversed(word):
        pairing = sum(cur[j] * rs.cartan[j][i] for j in range(rs.rank))
        cur = tuple(c - pairing * (1 if j == i else 0) for j, c in enumerate(cur))
    return cur


def weyl_matrix(rs: RootSystem, word):
    """Integer matrix of the Weyl word acting on the coefficient lattice."""
    n = rs.rank
    cols = [apply_word(rs, word, tuple(1 if j == i else 0 for j in range(n))) for i in range(n)]
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
