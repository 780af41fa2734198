import math

import pytest

from ordbench import (
    InvalidModulus,
    NotAssociative,
    NotBounded,
    NotCommutative,
    NotJoinPreserving,
    build_poset,
    build_quantale,
    catalog_named,
    element_connection,
    eval_law,
    find_right_adjoint,
    is_principal,
    is_weak_principal,
    residual,
    zn_ideal_quantale,
)


@pytest.fixture(scope="module")
def frame3(f3):
    return build_quantale(f3, f3.meet)


@pytest.fixture(scope="module")
def z12():
    return zn_ideal_quantale(12)


def test_meet_frames_are_quantales(b2, f3):
    for L in (b2, f3):
        q = build_quantale(L, L.meet)
        assert q.unit == L.top and q.is_integral


def test_m3_meet_is_not_join_preserving(m3):
    with pytest.raises(NotJoinPreserving) as exc:
        build_quantale(m3, m3.meet)
    a, b, c = exc.value.witness
    # the witness reproduces the failure: a ^ (b v c) != (a ^ b) v (a ^ c)
    assert m3.meet[a][m3.join[b][c]] != m3.join[m3.meet[a][b]][m3.meet[a][c]]


def test_unbounded_lattice_rejected():
    antichain = build_poset("A2", ["x", "y"], [])
    with pytest.raises(NotBounded):
        build_quantale(antichain, ((0, 0), (0, 1)))


def test_non_commutative_rejected(c2):
    with pytest.raises(NotCommutative):
        build_quantale(c2, ((0, 0), (1, 1)))


def test_non_associative_rejected(c3):
    # symmetric but (1*1)*2 = 2*2 = 2 while 1*(1*2) = 1*0 = 0
    table = ((0, 0, 0), (0, 2, 0), (0, 0, 2))
    with pytest.raises(NotAssociative):
        build_quantale(c3, table)


def test_invalid_modulus():
    with pytest.raises(InvalidModulus):
        zn_ideal_quantale(1)


def test_z12_structure(z12):
    L = z12.lattice
    assert L.size == 6
    assert L.labels == ("(1)", "(2)", "(3)", "(4)", "(6)", "(12)")
    assert L.labels[L.bottom] == "(12)" and L.labels[L.top] == "(1)"
    assert z12.unit == L.index("(1)") and z12.is_integral
    assert L.labels[z12.product(L.index("(2)"), L.index("(3)"))] == "(6)"
    assert L.labels[z12.product(L.index("(4)"), L.index("(6)"))] == "(12)"


def test_zn_multiplication_is_ideal_product():
    for n in (4, 6, 12, 30):
        q = zn_ideal_quantale(n)
        divs = [int(lab[1:-1]) for lab in q.lattice.labels]
        for i, a in enumerate(divs):
            for j, b in enumerate(divs):
                assert divs[q.mult[i][j]] == math.gcd(a * b, n)


def test_residual_examples(z12, frame3):
    L = z12.lattice
    assert L.labels[residual(z12, L.index("(2)"), L.index("(3)"))] == "(2)"
    # dividing by the unit changes nothing
    for a in range(L.size):
        assert residual(z12, a, z12.unit) == a
    # bottom : m on the frame stays bottom
    assert residual(frame3, 0, 1) == 0


def test_residual_adjunction_property(z12, frame3):
    for q in (z12, frame3, zn_ideal_quantale(30)):
        L = q.lattice
        for a in range(L.size):
            for e in range(L.size):
                r = residual(q, a, e)
                for c in range(L.size):
                    assert L.leq[q.mult[c][e]][a] == L.leq[c][r]


def test_element_connection_unit_is_identity(z12):
    ec = element_connection(z12, z12.unit)
    n = z12.lattice.size
    assert ec.left.values == tuple(range(n))
    assert ec.right.values == tuple(range(n))
    assert ec.conn.rel == z12.lattice.leq


def test_element_connection_examples(z12, frame3):
    L = z12.lattice
    ec = element_connection(z12, L.index("(2)"))
    assert L.labels[ec.left.values[L.index("(3)")]] == "(6)"
    ec_m = element_connection(frame3, 1)
    assert ec_m.left.values == (0, 1, 1)


def test_element_connection_right_adjoint_matches_search(z12, frame3):
    # independent route: find_right_adjoint on the relation vs the residual table
    for q in (z12, frame3):
        for e in range(q.lattice.size):
            ec = element_connection(q, e)
            assert find_right_adjoint(ec.conn).values == ec.right.values


def test_every_z12_element_is_principal(z12):
    for e in range(z12.lattice.size):
        rep_i, rep_ii = is_principal(z12, e)
        assert rep_i.holds and rep_ii.holds
        lm0, rm0 = is_weak_principal(z12, e)
        assert lm0.holds and rm0.holds


def test_frame3_endpoints_principal(frame3):
    for e in (0, 2):  # bot and top
        rep_i, rep_ii = is_principal(frame3, e)
        assert rep_i.holds and rep_ii.holds


def test_frame3_middle_not_principal(frame3):
    rep_i, rep_ii = is_principal(frame3, 1)
    assert rep_i.holds is True
    assert rep_ii.holds is False
    assert rep_ii.witness.assignment == (("a", "m"), ("b", "bot"))
    assert rep_ii.witness.lhs_label == "m" and rep_ii.witness.rhs_label == "top"
    # reproduce the witness directly from the tables
    L = frame3.lattice
    a, b = rep_ii.witness.indices
    lhs = L.join[a][residual(frame3, b, 1)]
    rhs = residual(frame3, L.join[frame3.mult[a][1]][b], 1)
    assert (lhs, rhs) == (rep_ii.witness.lhs, rep_ii.witness.rhs) and lhs != rhs


def test_frame3_middle_not_weak_principal(frame3):
    lm0, rm0 = is_weak_principal(frame3, 1)
    assert lm0.holds is True
    assert rm0.holds is False
    assert rm0.witness.assignment == (("x", "m"),)


def test_principal_matches_reciprocity_laws_elementwise(z12, frame3):
    # the cross-check inside is_principal asserts this too; verify explicitly
    for q in (z12, frame3, zn_ideal_quantale(6)):
        for e in range(q.lattice.size):
            rep_i, rep_ii = is_principal(q, e)
            ec = element_connection(q, e)
            assert rep_i.holds == eval_law("LF0", ec).holds
            assert rep_ii.holds == eval_law("RF0", ec).holds


def test_principal_implies_weak_principal(frame3):
    quantales = [zn_ideal_quantale(n) for n in (4, 6, 12)] + [frame3]
    b2 = catalog_named("B2")
    quantales.append(build_quantale(b2, b2.meet))
    for q in quantales:
        for e in range(q.lattice.size):
            rep_i, rep_ii = is_principal(q, e)
            if rep_i.holds and rep_ii.holds:
                lm0, rm0 = is_weak_principal(q, e)
                assert lm0.holds and rm0.holds
