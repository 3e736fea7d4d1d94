import numpy as np
import pytest

from qhopf.algebra import (direct_product_algebra, permute_slots, split_semisimple, tensor,
                           truncated_polynomial_algebra)
from qhopf.catalog import associator_phi, cyclic_group_algebra, make_alpha, make_u_abelian, r_epsilon
from qhopf.errors import InputError, NotIdempotentModRadical, Unsupported
from qhopf.hopf import HopfStructure
from qhopf.quasi import (QuasiData, alt3, check_counit_normalization, check_pentagon,
                         check_quasi_coassoc, check_qybe, check_rmatrix, check_twist, half_binomial,
                         lift_idempotent, pseudotwist_transform, sqrt_one_plus, trivialize_rmatrix,
                         twisted_associator, verify_quasi)
from qhopf.truncexp import trunc_exp


def test_trivial_associator_passes(ka3):
    rep = verify_quasi(QuasiData(ka3))
    assert rep.passed, rep.failures()


@pytest.mark.parametrize("p", [2, 3, 5])
def test_phi_is_an_associator(p):
    h = make_alpha(p, 1)
    rep = verify_quasi(QuasiData(h, associator_phi(p, 1, h)))
    assert rep.passed, rep.failures()


def test_bad_associator_fails_pentagon(ka3):
    A = ka3.algebra
    x = A.gen("x")
    rep = check_pentagon(QuasiData(ka3, 1 + tensor(x, x, x)))
    assert not rep.passed
    assert not rep["pentagon"].residual.is_zero()


def test_counit_normalization(ka3):
    A = ka3.algebra
    x, one = A.gen("x"), A.one()
    assert check_counit_normalization(QuasiData(ka3, associator_phi(3, 1, ka3))).passed
    rep = check_counit_normalization(QuasiData(ka3, 1 + tensor(one, x, x * x)))
    assert not rep["counit_slot1"].passed


def test_quasi_coassociativity_detects_perturbation(ka3):
    C = np.array(ka3.comul)
    C[1, 2, 1] += 1    # Δ(x) picks up x^2⊗x
    bad = HopfStructure(ka3.algebra, C)
    assert not check_quasi_coassoc(QuasiData(bad)).passed
    assert check_quasi_coassoc(QuasiData(ka3, associator_phi(3, 1, ka3))).passed


def test_r_epsilon():
    h = cyclic_group_algebra(3, 2)
    A = h.algebra
    g = A.gen("g")
    R = r_epsilon(h, g)
    want = A.from_dict({(0, 0): 2, (0, 1): 2, (1, 0): 2, (1, 1): 1})
    assert R == want
    q = QuasiData(h, r_matrix=R)
    assert check_rmatrix(q).passed
    assert check_qybe(q).passed
    assert r_epsilon(h, A.one()) == A.one(2)


def test_trivial_rmatrix(ka3):
    q = QuasiData(ka3, r_matrix=ka3.algebra.one(2))
    assert check_rmatrix(q).passed and check_qybe(q).passed


def test_hexagons_fail_for_phi_with_trivial_r(ka3):
    q = QuasiData(ka3, associator_phi(3, 1, ka3), ka3.algebra.one(2))
    rep = check_rmatrix(q)
    assert not rep["hexagon_left"].passed
    assert rep["triangularity"].passed


def _skew_r(h, t=1):
    A = h.algebra
    x, y = A.gen("x1"), A.gen("x2")
    return trunc_exp((tensor(x, y) - tensor(y, x)) * t)


def test_skew_r_matrix_on_u(ug3):
    R = _skew_r(ug3)
    q = QuasiData(ug3, r_matrix=R)
    assert check_rmatrix(q).passed
    assert check_qybe(q).passed


def test_twist_equation(ka3, ud3):
    A = ka3.algebra
    x = A.gen("x")
    assert check_twist(ka3, A.one(2)).passed
    assert not check_twist(ka3, 1 + tensor(x, x)).passed
    from qhopf.catalog import skew_twist

    J = skew_twist(ud3, [[0, 1], [2, 0]])
    assert check_twist(ud3, J).passed


def test_twist_must_be_normalized(ka3):
    with pytest.raises(InputError):
        check_twist(ka3, ka3.algebra.one(2) * 2)


def test_pseudotwist_identity(ka3):
    q = QuasiData(ka3, associator_phi(3, 1, ka3))
    q2 = pseudotwist_transform(q, ka3.algebra.one(2))
    assert q2.associator == q.associator
    assert np.array_equal(q2.hopf.comul, ka3.comul)


def test_pseudotwist_associator_formula(ka3):
    A = ka3.algebra
    x = A.gen("x")
    J = 1 + tensor(x, x)
    q = pseudotwist_transform(QuasiData(ka3), J)
    assert q.associator == twisted_associator(ka3, A.one(3), J)
    assert q.associator != A.one(3)
    assert check_pentagon(q).passed


def test_pseudotwist_of_r_matrix(ug3):
    A = ug3.algebra
    x, y = A.gen("x1"), A.gen("x2")
    s = tensor(x, y) - tensor(y, x) * 2
    J = trunc_exp(s)
    q = pseudotwist_transform(QuasiData(ug3, r_matrix=A.one(2)), J)
    assert q.r_matrix == trunc_exp(s - permute_slots(s, (2, 1)))


def test_lift_idempotent():
    A = direct_product_algebra(split_semisimple(3, 1), truncated_polynomial_algebra(3, [3]))
    e0 = A.element([1, 0, 1, 0])    # (1, x)
    e = lift_idempotent(A, e0)
    assert e == A.element([1, 0, 0, 0])
    assert lift_idempotent(A, A.one()) == A.one()
    assert lift_idempotent(A, e) == e
    with pytest.raises(NotIdempotentModRadical):
        lift_idempotent(A, A.element([2, 0, 0, 0]))


def test_half_binomials():
    assert half_binomial(1, 5) == 3 and half_binomial(2, 5) == 3
    assert half_binomial(1, 3) == 2


def test_square_roots():
    A3 = truncated_polynomial_algebra(3, [3])
    s = sqrt_one_plus(A3, A3.gen("x").coords)
    assert s == A3.from_dict({0: 1, 1: 2, 2: 1})
    assert s * s == 1 + A3.gen("x")
    A5 = truncated_polynomial_algebra(5, [3])
    s = sqrt_one_plus(A5, A5.gen("x"))
    assert s == A5.from_dict({0: 1, 1: 3, 2: 3})
    assert sqrt_one_plus(A5, A5.zero()) == A5.one()


def test_square_root_rejections():
    A2 = truncated_polynomial_algebra(2, [2])
    with pytest.raises(Unsupported):
        sqrt_one_plus(A2, A2.gen("x"))
    A3 = truncated_polynomial_algebra(3, [3])
    with pytest.raises(InputError):
        sqrt_one_plus(A3, A3.one())


def test_trivialize_rmatrix(ug3):
    A = ug3.algebra
    J = trivialize_rmatrix(QuasiData(ug3, r_matrix=A.one(2)))
    assert J == A.one(2)
    R = _skew_r(ug3)
    J = trivialize_rmatrix(QuasiData(ug3, r_matrix=R))
    assert permute_slots(J, (2, 1)).inverse() * R * J == A.one(2)
    x, y = A.gen("x1"), A.gen("x2")
    assert J == trunc_exp((tensor(y, x) - tensor(x, y)) * 2)


def test_trivialize_rmatrix_needs_odd_p():
    h = make_alpha(2, 1)
    x = h.algebra.gen("x")
    with pytest.raises(Unsupported):
        trivialize_rmatrix(QuasiData(h, r_matrix=1 + tensor(x, x)))


def test_alt3():
    A = truncated_polynomial_algebra(3, [3, 3, 3])
    x, y, z = A.gen("x1"), A.gen("x2"), A.gen("x3")
    assert alt3(tensor(x, x, x)).is_zero()
    a = alt3(tensor(x, y, z))
    assert len(a.support()) == 6
    assert permute_slots(a, (2, 1, 3)) == -a
