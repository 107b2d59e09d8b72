import pytest

from simplelie.kac import kac_coordinates
from simplelie.roots import LieError, SimpleType
from simplelie.symspace import (
    HermitianKind,
    candidate_pool,
    classify_involution,
    condition_or,
    emit_tables,
    hermitian_tube_classify,
    involution,
    involution_classes,
    strongly_orthogonal_set,
    table_rows,
)


def _inv(name, k, s):
    return involution(kac_coordinates(name, k, s))


def test_involution_rejects_wrong_order():
    with pytest.raises(LieError):
        _inv("A2", 1, (1, 0, 0))  # order 1
    with pytest.raises(LieError):
        _inv("D4", 3, (1, 0, 0))  # order 3


def test_dimension_examples():
    for n in (3, 5, 8):
        inv = _inv(f"C{n}", 1, (1,) + (0,) * (n - 1) + (1,))
        assert (inv.dim_u0, inv.dim_u1) == (n * n, n * (n + 1))
    # inner class of su(n) at p = 2
    inv = _inv("A5", 1, (1, 0, 1, 0, 0, 0))
    n, p = 6, 2
    assert (inv.dim_u0, inv.dim_u1) == (p * p + (n - p) ** 2 - 1, 2 * p * (n - p))
    inv = _inv("F4", 1, (0, 0, 0, 0, 1))
    assert (inv.dim_u0, inv.dim_u1) == (36, 16)


def test_dims_sum_to_dimension():
    for stype in [SimpleType.parse(t) for t in ("A4", "B4", "C4", "D5", "E6", "F4", "G2")]:
        for coords in involution_classes(stype):
            inv = involution(coords)
            assert inv.dim_u0 + inv.dim_u1 == stype.dimension


def test_strongly_orthogonal_bn_example():
    n = 5
    inv = _inv(f"B{n}", 1, (1, 1) + (0,) * (n - 1))
    so = strongly_orthogonal_set(inv)
    rs = inv.rs
    got = [rs._coeffs[g] for g in so.gammas]
    assert got == [(1, 0, 0, 0, 0), (1, 2, 2, 2, 2)]


def test_strongly_orthogonal_e7_example():
    inv = _inv("E7", 1, (0, 0, 1, 0, 0, 0, 0, 0))
    so = strongly_orthogonal_set(inv)
    assert len(so) == 7
    assert inv.rs._coeffs[so.gammas[0]] == (0, 1, 0, 0, 0, 0, 0)  # psi_2 first


def test_strongly_orthogonal_known_sets():
    """Classical maximal sets, frozen coefficient for coefficient (order-free
    where the greedy tie-breaks differently)."""
    cases = [
        # gl(n)-type class of sp(2n): psi_n, 2psi_{n-1}+psi_n, ...
        ("C5", 1, (1, 0, 0, 0, 0, 1),
         [(0, 0, 0, 0, 1), (0, 0, 0, 2, 1), (0, 0, 2, 2, 1), (0, 2, 2, 2, 1), (2, 2, 2, 2, 1)]),
        # gl(n)-type class of so(2n), n even
        ("D6", 1, (1, 0, 0, 0, 0, 0, 1),
         [(0, 0, 0, 0, 0, 1), (0, 0, 1, 2, 1, 1), (1, 2, 2, 2, 1, 1)]),
        # e6 + C inside e7
        ("E7", 1, (1, 0, 0, 0, 0, 0, 0, 1),
         [(0, 0, 0, 0, 0, 0, 1), (0, 1, 1, 2, 2, 2, 1), (2, 2, 3, 4, 3, 2, 1)]),
        # su(2) + so(12) inside e7
        ("E7", 1, (0, 1, 0, 0, 0, 0, 0, 0),
         [(1, 0, 0, 0, 0, 0, 0), (1, 1, 2, 2, 1, 0, 0),
          (1, 1, 2, 2, 2, 2, 1), (1, 2, 2, 4, 3, 2, 1)]),
    ]
    for name, k, s, expected in cases:
        inv = _inv(name, k, s)
        got = [inv.rs._coeffs[g] for g in strongly_orthogonal_set(inv).gammas]
        assert got == expected, (name, s)
    set_cases = [
        # su(8) inside e7: seven roots, first pick psi_2
        ("E7", 1, (0, 0, 1, 0, 0, 0, 0, 0),
         {(0, 1, 0, 0, 0, 0, 0), (0, 1, 1, 2, 1, 0, 0), (1, 1, 1, 2, 1, 1, 0),
          (1, 1, 2, 2, 2, 1, 0), (0, 1, 1, 2, 2, 2, 1), (1, 1, 1, 2, 2, 1, 1),
          (1, 1, 2, 2, 1, 1, 1)}),
        # so(4) + so(7) inside so(11): the gamma/gamma' ladder at p = 2
        ("B5", 1, (0, 0, 1, 0, 0, 0),
         {(0, 1, 0, 0, 0), (0, 1, 2, 2, 2), (1, 1, 1, 0, 0), (1, 1, 1, 2, 2)}),
    ]
    for name, k, s, expected in set_cases:
        inv = _inv(name, k, s)
        got = {inv.rs._coeffs[g] for g in strongly_orthogonal_set(inv).gammas}
        assert got == expected, (name, s)


def test_strongly_orthogonal_pairwise():
    for name, k, s in [
        ("C4", 1, (1, 0, 0, 0, 1)),
        ("D5", 2, (0, 1, 0, 0, 0)),
        ("E6", 1, (0, 0, 1, 0, 0, 0, 0)),
    ]:
        inv = _inv(name, k, s)
        rs = inv.rs
        gammas = strongly_orthogonal_set(inv).gammas
        for i, a in enumerate(gammas):
            for b in gammas[i + 1:]:
                assert rs.sum_index(a, b) == -2
                assert rs.sum_index(a, rs.neg_index(b)) == -2
        # every pool member meets the defining sign test
        auto = inv.auto
        for r in candidate_pool(inv):
            sign, e = auto.scalar(r)
            assert auto.perm[r] == r and sign * (-1) ** e == -1


def test_hermitian_tube_examples():
    assert hermitian_tube_classify(_inv("C4", 1, (1, 0, 0, 0, 1))) is HermitianKind.HERMITIAN_TUBE
    assert (
        hermitian_tube_classify(_inv("E6", 1, (0, 1, 0, 0, 0, 0, 1)))
        is HermitianKind.HERMITIAN_NON_TUBE
    )
    assert hermitian_tube_classify(_inv("E6", 2, (1, 0, 0, 0, 0))) is HermitianKind.NON_HERMITIAN
    # su(p, n-p): tube exactly when n = 2p
    assert hermitian_tube_classify(_inv("A3", 1, (0, 1, 0, 1))) is HermitianKind.HERMITIAN_TUBE
    assert hermitian_tube_classify(_inv("A3", 1, (0, 0, 1, 1))) is HermitianKind.HERMITIAN_NON_TUBE
    # so(2n-2) + so(2): always tube
    assert hermitian_tube_classify(_inv("D5", 1, (1, 1, 0, 0, 0, 0))) is HermitianKind.HERMITIAN_TUBE


def test_condition_or_examples():
    v = condition_or(_inv("B4", 1, (0, 0, 0, 0, 1)))
    assert not v.satisfied and any(w.det == -1 for w in v.witnesses)
    assert condition_or(_inv("C4", 1, (1, 0, 0, 0, 1))).satisfied
    assert condition_or(_inv("C7", 1, (1,) + (0,) * 6 + (1,))).satisfied
    assert not condition_or(_inv("C5", 1, (1, 0, 0, 0, 0, 1))).satisfied
    v = condition_or(_inv("D3", 2, (0, 1, 0)))
    assert not v.satisfied
    for s in ((0, 1, 0, 0, 0, 0, 0, 0, 0), (0, 0, 0, 0, 0, 0, 0, 0, 1)):
        v = condition_or(_inv("E8", 1, s))
        assert v.satisfied and v.shortcut == "trivial-center"


def test_identity_sign_vector_always_positive():
    for name, k, s in [
        ("B4", 1, (0, 0, 1, 0, 0)),
        ("C6", 1, (0, 0, 0, 1, 0, 0, 0)),
        ("D6", 1, (1, 0, 0, 0, 0, 0, 1)),
        ("E7", 1, (0, 0, 1, 0, 0, 0, 0, 0)),
    ]:
        v = condition_or(_inv(name, k, s), force_generic=True)
        plus = next(w for w in v.witnesses if all(e == 1 for e in w.eps))
        assert plus.det == 1


def test_shortcuts_agree_with_generic():
    cases = [
        ("E8", 1, (0, 1, 0, 0, 0, 0, 0, 0, 0)),
        ("F4", 1, (0, 1, 0, 0, 0)),
        ("F4", 1, (0, 0, 0, 0, 1)),
        ("G2", 1, (0, 0, 1)),
        ("E6", 1, (0, 1, 0, 0, 0, 0, 1)),  # hermitian non-tube
        ("A5", 1, (1, 0, 1, 0, 0, 0)),
        ("A5", 2, (1, 0, 0, 0)),  # empty strongly orthogonal set
    ]
    for name, k, s in cases:
        inv = _inv(name, k, s)
        fast = condition_or(inv)
        slow = condition_or(inv, force_generic=True)
        assert fast.satisfied == slow.satisfied, (name, s)


def test_verdict_independent_of_greedy_order():
    from simplelie.symspace import _condition_or_generic

    for stype in [SimpleType.parse(t) for t in ("A4", "A5", "B4", "C5", "C4", "D5", "D6", "F4", "G2")]:
        for coords in involution_classes(stype):
            inv = involution(coords)
            asc = strongly_orthogonal_set(inv)
            desc = strongly_orthogonal_set(inv, descending=True)
            assert len(asc) == len(desc), coords.describe()
            v1 = condition_or(inv, force_generic=True)
            v2 = _condition_or_generic(involution(coords), desc)
            assert v1.satisfied == v2.satisfied, coords.describe()


def test_classify_involution_families():
    info = classify_involution(kac_coordinates("A5", 1, (1, 0, 0, 1, 0, 0)))
    assert info == {"family": "A-inner", "n": 6, "p": 3}
    info = classify_involution(kac_coordinates("D6", 2, (0, 0, 0, 1, 0, 0)))
    assert info == {"family": "D-outer", "n": 6, "p": 2}
    info = classify_involution(kac_coordinates("E7", 1, (0, 0, 1, 0, 0, 0, 0, 0)))
    assert info["family"] == "E7-a7"


def test_class_enumeration_counts():
    # su(n): floor(n/2) inner classes + two outer for even n >= 4, one for odd n >= 3
    for rank, expected in [(1, 1), (2, 2), (3, 4), (4, 3), (5, 5), (6, 4)]:
        assert len(involution_classes(SimpleType("A", rank))) == expected
    assert len(involution_classes(SimpleType("E", 6))) == 4
    assert len(involution_classes(SimpleType("E", 7))) == 3
    assert len(involution_classes(SimpleType("E", 8))) == 2
    assert len(involution_classes(SimpleType("F", 4))) == 2
    assert len(involution_classes(SimpleType("G", 2))) == 1


def test_emit_tables_formats():
    js = emit_tables("or", 4, "json")
    assert js == emit_tables("or", 4, "json")  # byte-stable
    import json

    rows = json.loads(js)
    assert all(set(r) >= {"g", "coords", "or_satisfied"} for r in rows)
    text = emit_tables("dims", 4, "text")
    assert "dim_x_sigma" in text.splitlines()[0]
    with pytest.raises(LieError):
        emit_tables("nope")


def test_pair_names_attached():
    inv = _inv("E6", 2, (1, 0, 0, 0, 0))
    assert inv.pair_names == ("F4^C/F4", "(e6(-26), f4)")
    inv = _inv("D3", 2, (0, 0, 1))
    assert inv.pair_names == ("SO(5,C)/SO(5)", "SO_0(1,5)/SO(5)")


def test_table_rows_d3_only_outer():
    rows = table_rows(SimpleType("D", 3))
    assert {r["coords"] for r in rows} == {"(0,0,1;2)", "(0,1,0;2)"}
    verds = {r["coords"]: r["or_satisfied"] for r in rows}
    assert verds == {"(0,0,1;2)": True, "(0,1,0;2)": False}
