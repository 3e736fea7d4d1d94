
import numpy as np
from hypothesis import given, settings, strategies as st

from qhopf import field
from qhopf.algebra import TensorElement, compose_perms, permute_slots, truncated_polynomial_algebra
from qhopf.catalog import make_alpha, make_alpha_product, make_u_dual
from qhopf.cohomology import AdditiveCochain, additive_differential, coboundary_of, hopf_coboundary
from qhopf.quasi import sqrt_one_plus
from qhopf.truncexp import trunc_exp, trunc_log

PRIMES = st.sampled_from([2, 3, 5, 7])
FAST = settings(max_examples=30, deadline=None)

A3 = truncated_polynomial_algebra(3, [3, 3])
KA = {3: make_alpha(3, 1), 5: make_alpha(5, 1)}
UD = {3: make_u_dual(3, 2)}


def coords(p, shape):
    n = int(np.prod(shape))
    return st.lists(st.integers(0, p - 1), min_size=n, max_size=n).map(
        lambda v: np.array(v, dtype=np.int64).reshape(shape))


@FAST
@given(st.data())
def test_rank_nullity(data):
    p = data.draw(PRIMES)
    r, c = data.draw(st.integers(1, 6)), data.draw(st.integers(1, 6))
    m = data.draw(coords(p, (r, c)))
    K = field.kernel_matrix(m, p)
    assert field.rank(m, p) + K.shape[0] == c
    assert not np.any(m @ K.T % p) if K.size else True


@FAST
@given(st.data())
def test_solve_returns_solutions(data):
    p = data.draw(PRIMES)
    m = data.draw(coords(p, (4, 3)))
    x = data.draw(coords(p, (3,)))
    b = m @ x % p
    y = field.solve_linear(m, b, p)
    assert y is not None and np.array_equal(m @ y % p, b)


def _elem(alg, arity):
    return coords(alg.p, (alg.dim,) * arity).map(lambda c: TensorElement(alg, c))


@FAST
@given(_elem(A3, 2), _elem(A3, 2), _elem(A3, 2))
def test_tensor_product_associative(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


@FAST
@given(_elem(A3, 2))
def test_inverse_when_counit_nonzero(a):
    if a.counit_value() == 0:
        return
    assert a * a.inverse() == A3.one(2)


@FAST
@given(st.permutations([1, 2, 3]), st.permutations([1, 2, 3]), _elem(A3, 3))
def test_permutation_composition(sigma, tau, t):
    assert permute_slots(permute_slots(t, tau), sigma) == permute_slots(t, compose_perms(sigma, tau))


def _ideal(alg, arity):
    from qhopf.algebra import project_to_ideal

    return _elem(alg, arity).map(project_to_ideal)


@FAST
@given(st.sampled_from([3, 5]), st.data())
def test_exp_is_a_homomorphism(p, data):
    A = KA[p].algebra
    s, t = data.draw(_ideal(A, 2)), data.draw(_ideal(A, 2))
    assert trunc_exp(s + t) == trunc_exp(s) * trunc_exp(t)
    assert trunc_log(trunc_exp(s)) == s


@FAST
@given(_ideal(UD[3].algebra, 2), _ideal(UD[3].algebra, 2))
def test_exp_homomorphism_u_dual(s, t):
    assert trunc_exp(s + t) == trunc_exp(s) * trunc_exp(t)


@FAST
@given(st.data())
def test_d_squared_is_zero(data):
    R = make_alpha_product(3, [1, 1]).algebra
    n = data.draw(st.integers(1, 2))
    c = AdditiveCochain(R, n, data.draw(coords(3, (8,) * n)))
    assert additive_differential(additive_differential(c)).is_zero()


@FAST
@given(_ideal(KA[3].algebra, 2))
def test_exp_intertwines_coboundaries(f):
    h = KA[3]
    assert trunc_exp(hopf_coboundary(f, h)) == coboundary_of(h, trunc_exp(f))


@FAST
@given(st.sampled_from([3, 5]), st.data())
def test_square_roots(p, data):
    A = truncated_polynomial_algebra(p, [3, 2])
    h = data.draw(_ideal(A, 1))
    s = sqrt_one_plus(A, h)
    assert s * s == 1 + h and s.counit_value() == 1


@settings(max_examples=15, deadline=None)
@given(st.data())
def test_spec_round_trip(data):
    from qhopf.quasi import QuasiData
    from qhopf.specfile import build, document_from_quasi, parse_spec, serialize_spec

    h = KA[3]
    phi = 1 + data.draw(_ideal(h.algebra, 3))
    doc = document_from_quasi(QuasiData(h, phi))
    again = parse_spec(serialize_spec(doc))
    assert again == doc
    assert build(again).associator == phi
