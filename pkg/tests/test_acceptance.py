"""Acceptance criteria 1-14.

Each criterion is a function returning (ok, detail).  The pytest tests below
assert on them; the terminal summary (see conftest.py) prints one line per
criterion, and ``python tests/test_acceptance.py`` prints the same lines
without pytest.
"""
import itertools
import sys
import time
from math import comb
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from qhopf import field  # noqa: E402
from qhopf.algebra import (direct_product_algebra, permute_slots, radical, split_semisimple,  # noqa: E402
                           tensor, truncated_polynomial_algebra)
from qhopf.catalog import (associator_phi, cyclic_group_algebra, function_algebra, kalpha_phi,  # noqa: E402
                           make_alpha, make_alpha_product, make_cyclic_group_algebra, make_u_abelian,
                           make_u_dual, minimality_check, scaling_automorphism, skew_twist)
from qhopf.cohomology import (AdditiveCochain, MultiplicativeCochain, additive_cohomology,  # noqa: E402
                              brute_force_h2_multiplicative, canonical_h3_basis, coboundary_of,
                              differential_matrix, hopf_coboundary, is_multiplicative_coboundary,
                              is_multiplicative_cocycle, multiplicative_coboundary, tensor_from_cochain,
                              trivialize_associator)
from qhopf.errors import Unsupported  # noqa: E402
from qhopf.hopf import associated_graded, check_bialgebra, dual_hopf, is_grouplike  # noqa: E402
from qhopf.quasi import (QuasiData, check_counit_normalization, check_pentagon, check_rmatrix,  # noqa: E402
                         check_twist, lift_idempotent, pseudotwist_transform, sqrt_one_plus,
                         trivialize_rmatrix)
from qhopf.truncexp import certify_nilpotent, trunc_exp, trunc_log, truncated_series  # noqa: E402

from oracles import gauge_coboundaries_over_gf27  # noqa: E402

RESULTS: dict = {}


def record(key, ok, detail):
    RESULTS[key] = (bool(ok), detail)
    return bool(ok), detail


def timed(fn, *args):
    t = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t


def random_pseudotwist(h, rng):
    A = h.algebra
    return A.one(2) + A.random_element(rng, 2, in_ideal=True)


def random_cocycle(h, n, rng):
    """Random arity-n tensor in I^{⊗n} of h with vanishing Hopf coboundary."""
    R = dual_hopf(h).algebra
    K = field.kernel_matrix(differential_matrix(R, n, sparse=False), R.p)
    coeffs = rng.integers(0, R.p, size=K.shape[0])
    m = R.dim - 1
    c = AdditiveCochain(R, n, (coeffs @ K % R.p).reshape((m,) * n))
    return tensor_from_cochain(c, h.algebra)


# 1 ---------------------------------------------------------------------------

def criterion_1():
    parts, ok = [], True
    for p in (2, 3, 5):
        q = kalpha_phi(p)
        (pent, norm), dt = timed(lambda: (check_pentagon(q).passed, check_counit_normalization(q).passed))
        good = pent and norm and dt < 1.0
        ok &= good
        parts.append(f"p={p} pentagon={pent} counit={norm} {dt:.3f}s")
    return record(1, ok, "; ".join(parts))


# 2 ---------------------------------------------------------------------------

def criterion_2():
    parts, ok = [], True
    for p in (3, 5):
        h = make_alpha(p, 1)
        phi = associator_phi(p, 1, h)
        cob = is_multiplicative_coboundary(MultiplicativeCochain(h, 3, phi))
        res = trivialize_associator(QuasiData(h, phi))
        spans = cob.cohomology.dim == 1 and cob.class_coords is not None and any(cob.class_coords)
        same = (not res.success) and np.array_equal(res.class_coords, cob.class_coords)
        good = (not cob) and spans and same
        ok &= good
        parts.append(f"p={p} absent={not cob} H3={cob.cohomology.dim} class={[int(v) for v in cob.class_coords]} "
                     f"trivialize_same={same}")
    return record(2, ok, "; ".join(parts))


# 3 ---------------------------------------------------------------------------

def criterion_3():
    parts, ok = [], True
    cases = [((p, r), make_alpha(p, r).algebra, (1, 2, 3), 1) for p, r in ((3, 1), (5, 1), (3, 2), (2, 2))]
    cases += [("a3xa3", make_alpha_product(3, [1, 1]).algebra, (3,), 4),
              ("a2xa2xa2", make_alpha_product(2, [1, 1, 1]).algebra, (3,), 10)]
    for name, R, degrees, want in cases:
        for n in degrees:
            rep, dt = timed(additive_cohomology, R, n)
            good = rep.dim == want and dt < 60
            ok &= good
            parts.append(f"{name} H{n}={rep.dim} ({dt:.2f}s)")
    return record(3, ok, "; ".join(parts))


# 4 ---------------------------------------------------------------------------

def criterion_4():
    parts, ok = [], True
    for p, rs in ((3, (1,)), (3, (1, 1)), (3, (2,)), (2, (1, 1, 1))):
        basis = canonical_h3_basis([(p, r) for r in rs])
        n = len(rs)
        coh = additive_cohomology(basis[0].base, 3)
        coords = [coh.class_coordinates(b) for b in basis]
        cocycles = all(c is not None for c in coords)
        indep = cocycles and field.rank(np.array(coords) % p, p) == len(basis)
        count = len(basis) == n * n + comb(n, 3) == coh.dim
        ok &= cocycles and indep and count
        parts.append(f"p={p} r={rs} count={len(basis)} H3={coh.dim} independent={indep}")
    return record(4, ok, "; ".join(parts))


# 5 ---------------------------------------------------------------------------

def criterion_5():
    R = function_algebra(3, 3).algebra
    dims = [additive_cohomology(R, n).dim for n in (1, 2, 3)]
    return record(5, dims == [0, 0, 0], f"GF(3)^3 H1..H3 = {dims}")


# 6 ---------------------------------------------------------------------------

def criterion_6_literal():
    h = cyclic_group_algebra(3, 3)
    rep, dt = timed(brute_force_h2_multiplicative, h)
    ok = rep["candidates"] == 81 and rep["gauge_candidates"] == 9 and rep["all_coboundaries"] and dt < 10
    detail = (f"candidates={rep['candidates']} cocycles={rep['cocycles']} gauge={rep['gauge_candidates']} "
              f"distinct d(F)={rep['distinct_coboundaries']} with_witness={rep['cocycles_with_witness']} "
              f"({dt:.2f}s)")
    return record("6-literal", ok, detail)


def criterion_6_extension():
    # the GF(3) gauge group only reaches 3 of the 9 cocycles; over GF(27) every one is d(F)
    h = cyclic_group_algebra(3, 3)
    rep, dt = timed(brute_force_h2_multiplicative, h)
    found = gauge_coboundaries_over_gf27()
    rational = {J.coords.tobytes() for J in rep["non_trivial"]}
    ok = rep["candidates"] == 81 and rational <= found and len(found) == rep["cocycles"] and dt < 10
    return record("6-extension", ok, f"{rep['cocycles']} cocycles, all d(F) with F in 1+I over GF(27)")


# 7 ---------------------------------------------------------------------------

def _el_trials(h, trials, rng):
    A = h.algebra
    for _ in range(trials):
        s = A.random_element(rng, 2, in_ideal=True)
        t = A.random_element(rng, 2, in_ideal=True)
        Es, Et = trunc_exp(s), trunc_exp(t)
        if not (trunc_log(Es) == s and trunc_exp(trunc_log(Es)) == Es):
            return False
        if not (trunc_exp(s + t) == Es * Et and trunc_log(Es * Et) == s + t):
            return False
    return True


def criterion_7(trials=200):
    rng = np.random.default_rng(7)
    parts, ok = [], True
    for p in (3, 5):
        for name, h in (("kalpha", make_alpha(p, 1)), ("u(g)*", make_u_dual(p, 2))):
            good, dt = timed(_el_trials, h, trials, rng)
            ok &= good
            parts.append(f"{name} p={p} {trials} trials {'ok' if good else 'FAILED'} ({dt:.1f}s)")
    # p = 2: the exponential is not the naive series on a sum
    A = truncated_polynomial_algebra(2, [2, 2], names=["x", "y"])
    T, U = tensor(A.gen("x"), A.gen("x")), tensor(A.gen("y"), A.gen("y"))
    nonadd = trunc_exp(T + U) == 1 + T + U + T * U and not (T * U).is_zero()
    ok &= nonadd
    parts.append(f"p=2 E(T+U)=1+T+U+TU {nonadd}")
    # E(d(1+g)) against d(E(1+g)) on k[Z/2]
    h = cyclic_group_algebra(2, 2)
    B = h.algebra
    u = B.one() + B.gen("g")
    Et = trunc_exp(hopf_coboundary(u, h))
    dEu = multiplicative_coboundary(MultiplicativeCochain(h, 1, truncated_series(u))).value
    r59 = Et == B.one(2) + tensor(u, u) and dEu == B.one(2) and Et != dEu
    ok &= r59
    parts.append(f"E(d(1+g))=1+(1+g)⊗(1+g) != 1=d(E(1+g)) {r59}")
    return record(7, ok, "; ".join(parts))


# 8 ---------------------------------------------------------------------------

def criterion_8(trials=100):
    rng = np.random.default_rng(8)
    parts, ok = [], True
    for name, h in (("kalpha_3", make_alpha(3, 1)), ("u(g)*_3", make_u_dual(3, 2))):
        assert certify_nilpotent(h.algebra)
        for n in (2, 3):
            good = True
            for _ in range(trials):
                phi = random_cocycle(h, n, rng)
                E = trunc_exp(phi)
                good &= (hopf_coboundary(phi, h).is_zero()
                         and is_multiplicative_cocycle(MultiplicativeCochain(h, n, E))
                         and trunc_log(E) == phi)
            ok &= good
            parts.append(f"{name} degree {n}: {good}")
        good = True
        for _ in range(trials):
            f = h.algebra.random_element(rng, 2, in_ideal=True)
            good &= trunc_exp(hopf_coboundary(f, h)) == coboundary_of(h, trunc_exp(f))
        ok &= good
        parts.append(f"{name} E(df)=d(E f): {good}")
    return record(8, ok, "; ".join(parts))


# 9 ---------------------------------------------------------------------------

def _local_catalog(p):
    return [make_alpha(p, 1).algebra, make_alpha(p, 2).algebra, cyclic_group_algebra(p, p).algebra,
            make_u_dual(p, 2).algebra,
            direct_product_algebra(split_semisimple(p, 2), truncated_polynomial_algebra(p, [3]))]


def criterion_9(trials=100):
    rng = np.random.default_rng(9)
    parts, ok = [], True
    for p in (3, 5):
        for A in _local_catalog(p):
            rad = radical(A)
            J = rad.layers[1]
            good = True
            for _ in range(trials):
                h = A.element(rng.integers(0, p, size=J.shape[0]) @ J % p)
                s = sqrt_one_plus(A, h)
                good &= s * s == 1 + h and rad.contains((s - A.one()).coords, 1)
            ok &= good
            parts.append(f"sqrt {A.name} p={p}: {good}")
    A2 = truncated_polynomial_algebra(2, [2])
    try:
        sqrt_one_plus(A2, A2.gen("x"))
        refused = False
    except Unsupported:
        refused = True
    ok &= refused
    parts.append(f"p=2 refused: {refused}")
    good = True
    for p in (3, 5):
        for k in (1, 2, 3):
            A = direct_product_algebra(split_semisimple(p, k), truncated_polynomial_algebra(p, [3, 3]))
            rad = radical(A)
            for _ in range(trials // 5):
                e0 = np.zeros(A.dim, dtype=np.int64)
                e0[:k] = rng.integers(0, 2, size=k)
                e0 = (e0 + rng.integers(0, p, size=rad.layers[1].shape[0]) @ rad.layers[1]) % p
                e = lift_idempotent(A, e0)
                good &= e * e == e and rad.contains((e - A.element(e0)).coords, 1)
    ok &= good
    parts.append(f"lift_idempotent exact and congruent: {good}")
    return record(9, ok, "; ".join(parts))


# 10 --------------------------------------------------------------------------

def criterion_10():
    parts, ok = [], True
    for p in (3, 5):
        # x^3 = 0 is compatible with primitive x only at p = 3; at p = 5 use x^5 = y^5 = 0
        h = make_u_abelian(p, 2)
        A = h.algebra
        x, y = A.gen("x1"), A.gen("x2")
        for t in (1, 2):
            R = trunc_exp((tensor(x, y) - tensor(y, x)) * t)
            q = QuasiData(h, r_matrix=R)
            axioms = check_rmatrix(q).passed
            J = trivialize_rmatrix(q)
            triv = permute_slots(J, (2, 1)).inverse() * R * J == A.one(2)
            ok &= axioms and triv
            parts.append(f"p={p} t={t} R-axioms={axioms} J21^-1 R J=1: {triv}")
    return record(10, ok, "; ".join(parts))


# 11 --------------------------------------------------------------------------

def _skew_r(h):
    A = h.algebra
    x, y = A.gen("x1"), A.gen("x2")
    return trunc_exp(tensor(x, y) - tensor(y, x))


def criterion_11(trials=50):
    rng = np.random.default_rng(11)
    ka3, ug3 = make_alpha(3, 1), make_u_abelian(3, 2)
    q_phi = QuasiData(ka3, associator_phi(3, 1, ka3))
    q_r = QuasiData(ug3, r_matrix=_skew_r(ug3))
    pent = rmat = True
    for _ in range(trials):
        pent &= check_pentagon(pseudotwist_transform(q_phi, random_pseudotwist(ka3, rng))).passed
        qj = pseudotwist_transform(q_r, random_pseudotwist(ug3, rng))
        rmat &= check_pentagon(qj).passed and check_rmatrix(qj).passed
    rt = True
    for h in (ka3, make_u_dual(3, 2)):
        for _ in range(trials // 5):
            F = random_pseudotwist(h, rng)
            q = QuasiData(h, coboundary_of(h, F))
            res = trivialize_associator(q)
            rt &= (res.success and res.final_associator == h.algebra.one(3)
                   and pseudotwist_transform(q, res.twist).associator == h.algebra.one(3))
    ok = pent and rmat and rt
    return record(11, ok, f"pentagon preserved {pent}; R-axioms preserved {rmat}; d(F) round trip {rt}")


# 12 --------------------------------------------------------------------------

def criterion_12(trials=10):
    rng = np.random.default_rng(12)
    parts, ok = [], True
    for n in (2, 3):
        for p in (3, 5):
            h = make_u_dual(p, n)
            good = True
            for _ in range(trials):
                s = np.triu(rng.integers(0, p, size=(n, n)), 1)
                s = (s - s.T) % p
                J = skew_twist(h, s)
                good &= check_twist(h, J).passed
                good &= minimality_check(h, J) == (field.rank(s, p) == n)
            ok &= good
            parts.append(f"dim {n} p={p}: {good}")
    return record(12, ok, "; ".join(parts))


# 13 --------------------------------------------------------------------------

def count_grouplikes(h):
    """Exhaustive: every vector of the algebra is tested (test-side enumeration)."""
    A = h.algebra
    return sum(is_grouplike(h, A.element(v)) for v in itertools.product(range(h.p), repeat=A.dim))


def criterion_13():
    h9 = make_cyclic_group_algebra(3, 2)
    G = associated_graded(h9)
    gr_ok = (G.hopf.dim == h9.dim and check_bialgebra(G.hopf).passed and G.is_radically_graded()
             and G.hopf.cocommutative and G.primitively_generated())
    kz, ka = cyclic_group_algebra(3, 3), make_alpha(3, 1)
    counts = (count_grouplikes(kz), count_grouplikes(ka))
    triv_plain = trivialize_associator(QuasiData(ka)).success
    triv_phi = trivialize_associator(kalpha_phi(3)).success
    ok = gr_ok and counts == (3, 1) and triv_plain and not triv_phi
    detail = (f"gr(k[Z/9]) graded/cocommutative/primitively generated dim 9: {gr_ok}; "
              f"grouplikes k[Z/3]={counts[0]} kalpha_3={counts[1]}; "
              f"trivialize kalpha_3: {'success' if triv_plain else 'obstruction'}, "
              f"(kalpha_3, Phi): {'success' if triv_phi else 'obstruction'}")
    return record(13, ok, detail)


# 14 --------------------------------------------------------------------------

def criterion_14():
    h = make_alpha(5, 1)
    S = scaling_automorphism(5, 2, h)
    ok = S.is_hopf_automorphism() and S(associator_phi(5, 1, h)) == associator_phi(5, 4, h)
    return record(14, ok, f"x -> 2x sends Phi_1 to Phi_4 at p=5: {ok}")


# pytest ----------------------------------------------------------------------

def test_criterion_01_pentagon_and_normalization():
    ok, detail = criterion_1()
    assert ok, detail


def test_criterion_02_phi_is_not_a_coboundary():
    ok, detail = criterion_2()
    assert ok, detail


def test_criterion_03_additive_cohomology_dims():
    ok, detail = criterion_3()
    assert ok, detail


def test_criterion_04_canonical_h3_basis():
    ok, detail = criterion_4()
    assert ok, detail


def test_criterion_05_semisimple_vanishing():
    ok, detail = criterion_5()
    assert ok, detail


@pytest.mark.xfail(strict=True, reason="over GF(3) only 3 of the 9 twist cocycles of k[Z/3] are d(F) "
                                       "with F in 1+I; see test_criterion_06_twists_trivial_over_gf27")
def test_criterion_06_brute_force_h2_as_stated():
    ok, detail = criterion_6_literal()
    assert ok, detail


def test_criterion_06_twists_trivial_over_gf27():
    ok, detail = criterion_6_extension()
    assert ok, detail


@pytest.mark.slow
def test_criterion_07_exp_log_suite():
    ok, detail = criterion_7()
    assert ok, detail


@pytest.mark.slow
def test_criterion_08_cocycle_transport():
    ok, detail = criterion_8()
    assert ok, detail


def test_criterion_09_square_roots_and_idempotents():
    ok, detail = criterion_9()
    assert ok, detail


def test_criterion_10_rmatrix_trivialization():
    ok, detail = criterion_10()
    assert ok, detail


@pytest.mark.slow
def test_criterion_11_pseudotwist_coherence():
    ok, detail = criterion_11()
    assert ok, detail


@pytest.mark.slow
def test_criterion_12_skew_twists():
    ok, detail = criterion_12()
    assert ok, detail


def test_criterion_13_gr_and_trichotomy():
    ok, detail = criterion_13()
    assert ok, detail


def test_criterion_14_scaling_orbit():
    ok, detail = criterion_14()
    assert ok, detail


def summary_lines(results=None) -> list[str]:
    results = RESULTS if results is None else results
    out = []
    for k in range(1, 15):
        keys = [k] if k != 6 else ["6-literal", "6-extension"]
        for key in keys:
            if key in results:
                ok, detail = results[key]
                out.append(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")
    return out


if __name__ == "__main__":
    fns = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6_literal,
           criterion_6_extension, criterion_7, criterion_8, criterion_9, criterion_10, criterion_11,
           criterion_12, criterion_13, criterion_14]
    for fn in fns:
        fn()
    print("\n".join(summary_lines()))
