"""The signature (2, 4) lattice: isometries, discriminant form, complements."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hessk3 import lattice
from hessk3.lattice import (
    DISC_GENS,
    G0,
    G1,
    G2,
    GRAM,
    I42,
    MI42,
    MINUS_I6,
    QPRIME,
    U0,
    U1,
    U2,
    V_CLASSES,
    W0,
    W0_INV,
    block_parity,
    det_int,
    disc_act,
    disc_action,
    disc_add,
    disc_b,
    disc_group,
    disc_order,
    disc_q,
    disc_scale,
    is_in_enr,
    is_in_k3,
    is_orthogonal,
    mat_id,
    mat_inverse_int,
    mat_mul,
    mat_pow,
    orientation,
    orthogonal_complement,
    qpair,
    to_s5,
    translation_h,
    two_torsion,
)

D1, D2, D3, D4 = DISC_GENS

NAMED = (G0, G1, G2, U0, U1, U2, I42, MI42, MINUS_I6, W0, W0_INV)

# e1 -> -e2, e2 -> -e1: reflection in a norm 2 vector, so it swaps the two
# components of the period domain.
NEG_SWAP = (
    (0, -1, 0, 0, 0, 0),
    (-1, 0, 0, 0, 0, 0),
    (0, 0, 1, 0, 0, 0),
    (0, 0, 0, 1, 0, 0),
    (0, 0, 0, 0, 1, 0),
    (0, 0, 0, 0, 0, 1),
)

small_ints = st.integers(min_value=-5, max_value=5)
mvecs = st.tuples(small_ints, small_ints, small_ints, small_ints)


def test_gram_shape():
    assert det_int(GRAM) == 48
    assert GRAM == tuple(zip(*GRAM))
    assert all(GRAM[i][i] % 2 == 0 for i in range(6))
    # the tail form is the lower-right 4x4 block
    assert QPRIME == tuple(tuple(row[2:]) for row in GRAM[2:])


def test_matrix_helpers():
    assert mat_mul(G1, mat_inverse_int(G1)) == mat_id()
    assert mat_pow(G1, 3) == mat_mul(G1, mat_mul(G1, G1))
    assert mat_pow(U0, -1) == U0
    with pytest.raises(ValueError, match="singular matrix"):
        mat_inverse_int(((1, 1), (1, 1)))
    with pytest.raises(Exception, match="not integral"):
        mat_inverse_int(((2, 0), (0, 1)))


def test_named_generators_are_isometries():
    for g in NAMED:
        assert is_orthogonal(g)
    assert is_orthogonal(NEG_SWAP)
    assert not is_orthogonal(((2, 0, 0, 0, 0, 0),) + GRAM[1:])


@given(mvecs, mvecs)
def test_translations_form_a_group(ma, mb):
    ha = translation_h(*ma)
    hb = translation_h(*mb)
    assert is_orthogonal(ha)
    hsum = translation_h(*(a + b for a, b in zip(ma, mb)))
    assert mat_mul(ha, hb) == hsum
    assert mat_mul(ha, translation_h(*(-a for a in ma))) == mat_id()


def test_translation_identity():
    assert translation_h(0, 0, 0, 0) == mat_id()


def test_residual_family_closed_form():
    assert lattice.residual_m(1, 0) == G1
    assert lattice.residual_m(0, 1) == G2
    assert mat_mul(G1, G2) == mat_mul(G2, G1)
    assert lattice.residual_m(2, -1) == mat_mul(mat_pow(G1, 2), mat_pow(G2, -1))
    assert lattice.residual_m(-3, 4) == mat_mul(mat_pow(G1, -3), mat_pow(G2, 4))


def test_orientation_values():
    assert orientation(mat_id()) == "plus"
    assert orientation(MINUS_I6) == "plus"
    assert orientation(NEG_SWAP) == "minus"
    with pytest.raises(ValueError, match="orientation of a non-isometry"):
        orientation(tuple(tuple(2 * x for x in r) for r in mat_id()))


def test_orientation_is_multiplicative():
    pool = [G0, G1, U0, U1, I42, MINUS_I6, NEG_SWAP, translation_h(1, -2, 0, 3)]
    signs = {g: 1 if orientation(g) == "plus" else -1 for g in pool}
    for a in pool:
        for b in pool:
            prod = mat_mul(a, b)
            assert orientation(prod) == ("plus" if signs[a] * signs[b] > 0 else "minus")


def test_block_parity():
    assert block_parity(G0) == "antidiagonal"
    assert block_parity(W0) == "antidiagonal"
    for g in (G1, G2, U0, U1, U2, I42, MINUS_I6, translation_h(1, 2, -1, 0)):
        assert block_parity(g) == "diagonal"


def test_disc_group_order_and_exponents():
    group = disc_group()
    assert len(group) == 48
    assert disc_order(D1) == 2
    assert disc_order(D2) == 2
    assert disc_order(D3) == 6
    assert disc_order(D4) == 6
    assert len(two_torsion()) == 15


def test_disc_form_frozen_values():
    f = Fraction
    assert disc_q(D1) == 0
    assert disc_q(disc_add(D1, D2)) == 1
    assert disc_q(D3) == f(5, 3)
    assert disc_q(D4) == f(5, 3)
    assert disc_q(disc_scale(2, D3)) == f(2, 3)
    assert disc_b(D1, D2) == f(1, 2)
    assert disc_b(D3, D4) == f(5, 6)
    assert disc_b(D1, D3) == 0


def test_disc_polarization_identity():
    group = disc_group()
    for x in group:
        assert disc_b(x, x) == disc_q(x) % 1
        for y in group[::5]:
            lhs = disc_q(disc_add(x, y))
            rhs = (disc_q(x) + disc_q(y) + 2 * disc_b(x, y)) % 2
            assert lhs == rhs


def test_v_classes_are_isotropic_two_torsion():
    assert len(set(V_CLASSES)) == 5
    for v in V_CLASSES:
        assert disc_order(v) == 2
        assert disc_q(v) == 0
    # and they are the only nonzero classes with q = 0 among the two-torsion
    isotropic = [x for x in two_torsion() if disc_q(x) == 0]
    assert sorted(isotropic) == sorted(V_CLASSES)


TO_S5_CASES = [
    (G0, (0, 1, 2, 3, 4)),
    (MINUS_I6, (0, 1, 2, 3, 4)),
    (G1, (3, 1, 4, 0, 2)),
    (G2, (4, 1, 3, 2, 0)),
    (U0, (1, 0, 2, 3, 4)),
    (U1, (0, 1, 4, 3, 2)),
    (U2, (0, 1, 3, 4, 2)),
]


@pytest.mark.parametrize("g, perm", TO_S5_CASES)
def test_to_s5_frozen(g, perm):
    assert to_s5(g) == perm


def test_to_s5_is_a_right_action_hom():
    # result[i] = j means g(V_i) = V_j, so composition reads left to right
    pg1 = to_s5(G1)
    pu0 = to_s5(U0)
    prod = to_s5(mat_mul(U0, G1))
    assert prod == tuple(pu0[pg1[i]] for i in range(5))


def test_to_s5_rejects_non_isometry():
    with pytest.raises(ValueError, match="permutation action of a non-isometry"):
        to_s5(tuple(tuple(2 * x for x in r) for r in mat_id()))


def test_disc_action():
    assert disc_action(mat_id()) == DISC_GENS
    imgs = disc_action(G1)
    for d, im in zip(DISC_GENS, imgs):
        assert disc_q(im) == disc_q(d)
        assert disc_order(im) == disc_order(d)
        assert im == disc_act(G1, d)
    with pytest.raises(ValueError, match="discriminant action of a non-isometry"):
        disc_action(tuple(tuple(3 * x for x in r) for r in mat_id()))


def test_congruence_kernels():
    assert is_in_k3(mat_id())
    assert is_in_enr(mat_id())
    # translations act trivially on the whole discriminant group
    for m in ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (3, -2, 5, 1)):
        h = translation_h(*m)
        assert is_in_k3(h)
        assert is_in_enr(h)
    assert not is_in_k3(G1)
    assert not is_in_enr(G1)
    assert not is_in_k3(MINUS_I6)
    # -1 is trivial on two-torsion but not on the order six part
    assert is_in_enr(MINUS_I6)
    with pytest.raises(ValueError, match="not an isometry"):
        is_in_k3(tuple(tuple(2 * x for x in r) for r in mat_id()))
    with pytest.raises(ValueError, match="swaps the two components"):
        is_in_k3(NEG_SWAP)


def test_kernel_membership_matches_disc_action():
    # is_in_k3 must agree with literally fixing every coset
    for g in (mat_id(), translation_h(2, 1, 0, -1), G1, U0, MINUS_I6, I42):
        fixes_all = all(disc_act(g, x) == x for x in disc_group())
        assert is_in_k3(g) == fixes_all
        fixes_two = all(disc_act(g, x) == x for x in two_torsion())
        assert is_in_enr(g) == fixes_two


def test_orthogonal_complement_basic():
    e1 = (1, 0, 0, 0, 0, 0)
    basis, gram = orthogonal_complement(e1)
    assert len(basis) == 5
    for b in basis:
        assert qpair(e1, b) == 0
    assert gram == tuple(tuple(qpair(x, y) for y in basis) for x in basis)
    # e1 is isotropic, so it lies inside its own complement: degenerate Gram
    assert det_int(gram) == 0


def test_orthogonal_complement_nondegenerate():
    e5 = (0, 0, 0, 0, 1, 0)
    basis, gram = orthogonal_complement(e5)
    for b in basis:
        assert qpair(e5, b) == 0
    # U + U(2) + <-12>, determinant (-1)(-4)(-12)
    assert det_int(gram) == -48


def test_orthogonal_complement_rejections():
    with pytest.raises(ValueError, match="complement of the zero vector"):
        orthogonal_complement((0, 0, 0, 0, 0, 0))
    with pytest.raises(ValueError, match="vector is not primitive"):
        orthogonal_complement((2, 0, 0, 4, 0, 0))
