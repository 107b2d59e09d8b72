from math import gcd

import pytest

from simplelie.kac import (
    Cyc3,
    affine_diagram,
    affine_diagram_symmetries,
    canonical_fold,
    compute_lowest_weight,
    eigenspace_dimensions,
    fixed_subalgebra,
    identify_simple_gcm,
    kac_automorphism,
    kac_coordinates,
    lift_diagram_automorphism,
    verify_fold,
)
from simplelie.roots import LieError, SimpleType
from simplelie.symspace import _sc_for

FOLDS = [
    ("A2", 2), ("A4", 2), ("A6", 2), ("A3", 2), ("A5", 2), ("A7", 2),
    ("D4", 2), ("D5", 2), ("D6", 2), ("E6", 2), ("D4", 3),
]


def test_cyc3_field():
    w = Cyc3(0, 1)
    assert w * w * w == Cyc3(1)
    assert w * w + w + 1 == Cyc3(0)
    x = Cyc3(2, 3)
    assert x / x == Cyc3(1)
    assert (x * w) / w == x


def test_affine_labels_examples():
    assert affine_diagram(SimpleType("A", 4), 2).labels == (2, 2)
    assert affine_diagram(SimpleType("D", 5), 2).labels == (1, 1, 1, 1)
    d = affine_diagram(SimpleType("A", 1), 1)
    assert d.labels == (1,) and d.gcm == ((2, -2), (-2, 2))
    assert affine_diagram(SimpleType("C", 4), 1).labels == (2, 2, 2, 1)
    assert affine_diagram(SimpleType("E", 6), 2).labels == (1, 2, 3, 2)
    assert affine_diagram(SimpleType("D", 4), 3).labels == (2, 1)


@pytest.mark.parametrize(
    "name,k",
    FOLDS + [("G2", 1), ("F4", 1), ("B3", 1), ("C3", 1), ("E7", 1), ("E8", 1), ("D3", 2)],
)
def test_labels_against_basis_action(name, k):
    """The hardcoded diagram data agrees with the lowest weight computed
    from the lifted action on the Chevalley basis."""
    stype = SimpleType.parse(name)
    _, labels = compute_lowest_weight(_sc_for(stype), k)
    assert labels == affine_diagram(stype, k).labels


def test_illegal_folds():
    with pytest.raises(LieError):
        affine_diagram(SimpleType("B", 3), 2)
    with pytest.raises(LieError):
        affine_diagram(SimpleType("D", 5), 3)
    with pytest.raises(LieError):
        canonical_fold(SimpleType("A", 1), 2)


def test_kac_coordinates_validation():
    with pytest.raises(LieError):
        kac_coordinates("A2", 1, (2, 0, 2))  # gcd 2
    with pytest.raises(LieError):
        kac_coordinates("A2", 1, (1, 0))  # wrong length
    with pytest.raises(LieError):
        kac_coordinates("A2", 1, (1, -1, 1))
    kc = kac_coordinates("A2", 1, (1, 0, 0))
    assert kc.m == 1 and kc.b == 1


def test_lift_identity_and_flips():
    sc = _sc_for(SimpleType("A", 2))
    _, q = lift_diagram_automorphism(sc, (0, 1))
    assert all(x == 1 for x in q)
    _, q = lift_diagram_automorphism(sc, (1, 0))
    assert q[sc.rs.n_pos - 1] == -1  # the a_2 fold flips the highest root vector
    sc3 = _sc_for(SimpleType("A", 3))
    _, q3 = lift_diagram_automorphism(sc3, (2, 1, 0))
    assert q3[sc3.rs.n_pos - 1] == 1
    with pytest.raises(LieError):
        lift_diagram_automorphism(sc3, (1, 0, 2))  # not a diagram symmetry


def test_order_of_nu_is_k():
    for name, k in FOLDS:
        stype = SimpleType.parse(name)
        diag = affine_diagram(stype, k)
        s = (1,) + (0,) * diag.folded_rank
        auto = kac_automorphism(kac_coordinates(name, k, s), _sc_for(stype))
        assert auto.m == k and auto.order() == k


def test_identity_automorphism():
    auto = kac_automorphism(kac_coordinates("A2", 1, (1, 0, 0)), _sc_for(SimpleType("A", 2)))
    assert auto.m == 1
    assert eigenspace_dimensions(auto) == {0: 8}


def test_a3_outer_involution_order():
    auto = kac_automorphism(kac_coordinates("A3", 2, (0, 0, 1)), _sc_for(SimpleType("A", 3)))
    assert auto.m == 2 and auto.order() == 2


@pytest.mark.parametrize(
    "name,k,s,center,factors",
    [
        ("A5", 2, (1, 0, 0, 0), 0, ("C3",)),
        ("A4", 2, (1, 0, 0), 0, ("B2",)),
        ("E6", 2, (1, 0, 0, 0, 0), 0, ("F4",)),
        ("E6", 2, (0, 1, 0, 0, 0), 0, ("C4",)),
        ("D4", 3, (1, 0, 0), 0, ("G2",)),
        ("C4", 1, (1, 0, 0, 0, 1), 1, ("A3",)),
        ("E6", 1, (0, 0, 1, 0, 0, 0, 0), 0, ("A1", "A5")),
        ("E8", 1, (0, 1, 0, 0, 0, 0, 0, 0, 0), 0, ("D8",)),
        ("F4", 1, (0, 0, 0, 0, 1), 0, ("B4",)),
        ("G2", 1, (0, 0, 1), 0, ("A1", "A1")),
    ],
)
def test_fixed_subalgebra_examples(name, k, s, center, factors):
    levi = fixed_subalgebra(kac_coordinates(name, k, s))
    assert levi.center_dim == center
    assert levi.factor_names() == factors


def test_identify_gcm_edge_cases():
    assert identify_simple_gcm([[2]]) == SimpleType("A", 1)
    assert identify_simple_gcm([[2, -1], [-2, 2]]) == SimpleType("B", 2)
    assert identify_simple_gcm([[2, -1], [-3, 2]]) == SimpleType("G", 2)
    # a path of three is reported as A3, never D3
    assert identify_simple_gcm([[2, -1, 0], [-1, 2, -1], [0, -1, 2]]) == SimpleType("A", 3)
    f4 = [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]]
    assert identify_simple_gcm(f4) == SimpleType("F", 4)


def test_eigenspace_examples():
    auto = kac_automorphism(kac_coordinates("D4", 3, (1, 0, 0)), _sc_for(SimpleType("D", 4)))
    assert eigenspace_dimensions(auto) == {0: 14, 1: 7, 2: 7}
    auto = kac_automorphism(kac_coordinates("E6", 2, (1, 0, 0, 0, 0)), _sc_for(SimpleType("E", 6)))
    assert eigenspace_dimensions(auto) == {0: 52, 1: 26}


def _all_coordinate_vectors(diag, max_m):
    """All gcd-1 coordinate vectors with order k*(s_0 + sum a_i s_i) <= max_m."""
    labels = (1,) + diag.labels
    k = diag.k
    out = []

    def rec(prefix, budget):
        i = len(prefix)
        if i == len(labels):
            if sum(a * s for a, s in zip(labels, prefix)) >= 1:
                g = 0
                for x in prefix:
                    g = gcd(g, x)
                if g == 1:
                    out.append(tuple(prefix))
            return
        for v in range(0, budget // labels[i] + 1):
            rec(prefix + [v], budget - labels[i] * v)

    rec([], max_m // k)
    return out


@pytest.mark.parametrize(
    "name,k",
    [("A2", 1), ("A3", 1), ("B3", 1), ("C3", 1), ("G2", 1), ("A4", 1), ("D5", 1),
     ("A4", 2), ("A5", 2), ("D4", 2), ("D4", 3), ("D5", 2)],
)
def test_exact_order_sweep(name, k):
    """Every type (s;k) with m <= 6 yields an automorphism of order exactly m."""
    stype = SimpleType.parse(name)
    sc = _sc_for(stype)
    diag = affine_diagram(stype, k)
    for s in _all_coordinate_vectors(diag, 6):
        coords = kac_coordinates(name, k, s)
        if coords.m > 6:
            continue
        auto = kac_automorphism(coords, sc)  # the constructor asserts the order
        assert auto.order() == coords.m


def test_oracle_equivalence_fixed_dim():
    """Diagram route and orbit-phase route agree on every involution class."""
    from simplelie.symspace import involution_classes

    for series, rank in [("A", r) for r in range(1, 9)] + [
        ("B", r) for r in range(2, 9)
    ] + [("C", r) for r in range(3, 9)] + [("D", r) for r in range(3, 9)] + [
        ("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)
    ]:
        stype = SimpleType(series, rank)
        sc = _sc_for(stype)
        for coords in involution_classes(stype):
            auto = kac_automorphism(coords, sc)
            dims = eigenspace_dimensions(auto)
            levi = fixed_subalgebra(coords)
            assert dims[0] == levi.dim, (stype.name, coords.describe())


def test_conjugation_sanity_under_affine_symmetries():
    cases = [
        ("A4", 1, (1, 0, 1, 0, 0)),
        ("A4", 1, (0, 1, 0, 0, 2)),
        ("D4", 1, (1, 0, 1, 0, 0)),
        ("E6", 1, (0, 0, 1, 0, 0, 0, 0)),
        ("A5", 2, (0, 0, 0, 1)),
        ("D5", 2, (0, 1, 0, 1, 0)),
    ]
    for name, k, s in cases:
        stype = SimpleType.parse(name)
        sc = _sc_for(stype)
        diag = affine_diagram(stype, k)
        base = eigenspace_dimensions(kac_automorphism(kac_coordinates(name, k, s), sc))
        for perm in affine_diagram_symmetries(diag):
            image = tuple(s[perm.index(i)] for i in range(len(s)))
            dims = eigenspace_dimensions(
                kac_automorphism(kac_coordinates(name, k, image), sc)
            )
            assert dims == base, (name, s, image)


def test_eigenspace_dims_independent_of_primitive_root():
    """Multiplying all phases by a unit b with b = 1 mod k gives the same
    residue-to-dimension map."""
    from dataclasses import replace

    cases = [("A4", 1, (1, 0, 1, 0, 0)), ("D5", 2, (1, 0, 1, 0, 0)), ("D4", 3, (1, 1, 0))]
    for name, k, s in cases:
        stype = SimpleType.parse(name)
        coords = kac_coordinates(name, k, s)
        auto = kac_automorphism(coords, _sc_for(stype))
        m = coords.m
        base = eigenspace_dimensions(auto)
        for b in range(1, m):
            if gcd(b, m) != 1 or b % k != 1 % k:
                continue
            variant = replace(auto, phase=tuple(p * b for p in auto.phase))
            assert variant.order() == m
            assert eigenspace_dimensions(variant) == base, (name, s, b)


@pytest.mark.parametrize("name,k", FOLDS)
def test_fold_suite(name, k):
    rep = verify_fold(SimpleType.parse(name), k)
    # highest root sits in the (-1)-eigenspace exactly for the even-rank A folds
    expected = 1 if (name[0] == "A" and int(name[1:]) % 2 == 0) else 0
    assert rep["delta_residue"] == expected
    assert rep["det_a"] != 0
    for a, g in rep["eigenspace_generation"].items():
        assert g["lowest_count"] == 1
        assert g["generated_full"] is True
    if k == 3:
        assert rep["eigenspace_generation"][1]["dim"] == 7
        assert rep["eigenspace_generation"][2]["dim"] == 7
        assert rep["weights_equal_12"] is True


def test_fold_matrix_shapes():
    rep = verify_fold(SimpleType("A", 4), 2)  # the a_{2n} fold, n = 2
    assert rep["a_matrix"] == ((2, -1), (-1, 3))
    rep = verify_fold(SimpleType("A", 5), 2)
    assert rep["a_matrix"] == ((2, -1), (-1, 2))
    rep = verify_fold(SimpleType("E", 6), 2)
    assert rep["a_matrix"] == ((2, -1), (-1, 2))
    rep = verify_fold(SimpleType("D", 5), 2)
    assert rep["a_matrix"] == ((2,),)
