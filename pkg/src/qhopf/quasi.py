"""Quasi-Hopf data: associator and R-matrix checks, pseudotwists, square roots."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .algebra import (Algebra, TensorElement, coface_apply, in_augmentation_power,
                      is_normalized, permute_slots, place_legs, radical, tensor)
from .errors import InputError, NotIdempotentModRadical, NotInvertible, Unsupported
from .hopf import HopfStructure
from .report import AxiomReport


@dataclass(frozen=True)
class QuasiData:
    hopf: HopfStructure
    associator: TensorElement | None = None
    r_matrix: TensorElement | None = None

    def __post_init__(self):
        A = self.hopf.algebra
        if self.associator is None:
            object.__setattr__(self, "associator", A.one(3))
        for t, n, what in ((self.associator, 3, "associator"), (self.r_matrix, 2, "R-matrix")):
            if t is None:
                continue
            if t.arity != n:
                raise InputError(f"{what} must have arity {n}, got {t.arity}")
            if not t.algebra.same_as(A):
                raise InputError(f"{what} lives over a different algebra")

    @property
    def phi(self) -> TensorElement:
        return self.associator

    @property
    def algebra(self) -> Algebra:
        return self.hopf.algebra

    def with_associator(self, phi):
        return QuasiData(self.hopf, phi, self.r_matrix)


def _D(t, slot, h):
    return coface_apply(t, slot, "delta", h)


def check_pentagon(q: QuasiData) -> AxiomReport:
    h, phi = q.hopf, q.associator
    one = h.algebra.one()
    lhs = _D(phi, 2, h) * _D(phi, 0, h)
    rhs = tensor(one, phi) * _D(phi, 1, h) * tensor(phi, one)
    rep = AxiomReport()
    rep.add("pentagon", lhs == rhs, lhs - rhs)
    return rep


def check_counit_normalization(q: QuasiData) -> AxiomReport:
    phi = q.associator
    one2 = q.algebra.one(2)
    rep = AxiomReport()
    for s in range(3):
        c = coface_apply(phi, s, "counit")
        rep.add(f"counit_slot{s + 1}", c == one2, c - one2)
    return rep


def check_quasi_coassoc(q: QuasiData) -> AxiomReport:
    h, phi = q.hopf, q.associator
    A = h.algebra
    phi_inv = phi.inverse()
    rep = AxiomReport()
    for i in range(A.dim):
        d = h.delta(A.basis(i))
        lhs = phi * _D(d, 0, h) * phi_inv
        rhs = _D(d, 1, h)
        if lhs != rhs:
            rep.add("quasi_coassociativity", False, lhs - rhs, f"fails on {A.labels[i]}")
            return rep
    rep.add("quasi_coassociativity", True)
    return rep


def _legs(t, positions):
    return place_legs(t, positions, 3)


def _hexagon_parts(q: QuasiData):
    phi, R = q.associator, q.r_matrix
    P = {k: permute_slots(phi, k) for k in ((1, 2, 3), (3, 1, 2), (1, 3, 2), (2, 3, 1), (2, 1, 3), (3, 2, 1))}
    Pinv = {}

    def inv(k):
        if k not in Pinv:
            Pinv[k] = P[k].inverse()
        return Pinv[k]

    R12, R13, R23 = _legs(R, (1, 2)), _legs(R, (1, 3)), _legs(R, (2, 3))
    return P, inv, R12, R13, R23


def check_rmatrix(q: QuasiData) -> AxiomReport:
    if q.r_matrix is None:
        raise InputError("no R-matrix attached")
    h, R = q.hopf, q.r_matrix
    A = h.algebra
    rep = AxiomReport()
    try:
        Rinv = R.inverse()
    except NotInvertible:
        rep.add("invertible", False, R, "R-matrix is not invertible")
        return rep
    bad = None
    for i in range(A.dim):
        d = h.delta(A.basis(i))
        lhs = permute_slots(d, (2, 1))
        rhs = R * d * Rinv
        if lhs != rhs:
            bad = (lhs - rhs, A.labels[i])
            break
    rep.add("quasi_cocommutativity", bad is None, bad[0] if bad else None,
            f"fails on {bad[1]}" if bad else "")
    R21 = permute_slots(R, (2, 1))
    rep.add("triangularity", Rinv == R21, Rinv - R21)
    P, inv, R12, R13, R23 = _hexagon_parts(q)
    lhs = _D(R, 0, h)
    rhs = P[(3, 1, 2)] * R13 * inv((1, 3, 2)) * R23 * P[(1, 2, 3)]
    rep.add("hexagon_left", lhs == rhs, lhs - rhs)
    lhs = _D(R, 1, h)
    rhs = inv((2, 3, 1)) * R13 * P[(2, 1, 3)] * R12 * inv((1, 2, 3))
    rep.add("hexagon_right", lhs == rhs, lhs - rhs)
    return rep


def check_qybe(q: QuasiData) -> AxiomReport:
    if q.r_matrix is None:
        raise InputError("no R-matrix attached")
    P, inv, R12, R13, R23 = _hexagon_parts(q)
    lhs = R12 * P[(3, 1, 2)] * R13 * inv((1, 3, 2)) * R23 * P[(1, 2, 3)]
    rhs = P[(3, 2, 1)] * R23 * inv((2, 3, 1)) * R13 * P[(2, 1, 3)] * R12
    rep = AxiomReport()
    rep.add("qybe", lhs == rhs, lhs - rhs)
    return rep


def verify_quasi(q: QuasiData) -> AxiomReport:
    from .hopf import check_bialgebra

    rep = AxiomReport()
    rep.merge(check_bialgebra(q.hopf), "bialgebra.")
    rep.merge(check_pentagon(q))
    rep.merge(check_counit_normalization(q))
    rep.merge(check_quasi_coassoc(q))
    if q.r_matrix is not None:
        rep.merge(check_rmatrix(q))
        rep.merge(check_qybe(q))
    return rep


def _require_pseudotwist(j: TensorElement):
    if j.arity != 2:
        raise InputError("a pseudotwist has arity 2")
    if not is_normalized(j):
        raise InputError("not a pseudotwist: counit contractions are not 1")


def check_twist(h: HopfStructure, j: TensorElement) -> AxiomReport:
    _require_pseudotwist(j)
    j.inverse()  # raises NotInvertible
    one = h.algebra.one()
    lhs = _D(j, 1, h) * tensor(one, j)
    rhs = _D(j, 0, h) * tensor(j, one)
    rep = AxiomReport()
    rep.add("twist_equation", lhs == rhs, lhs - rhs)
    return rep


def twisted_associator(h: HopfStructure, phi: TensorElement, j: TensorElement) -> TensorElement:
    """(1⊗J⁻¹)(id⊗Δ)(J⁻¹) Φ (Δ⊗id)(J)(J⊗1), with Δ the comultiplication of h."""
    one = h.algebra.one()
    jinv = j.inverse()
    return tensor(one, jinv) * _D(jinv, 1, h) * phi * _D(j, 0, h) * tensor(j, one)


def pseudotwist_transform(q: QuasiData, j: TensorElement) -> QuasiData:
    _require_pseudotwist(j)
    h = q.hopf
    A = h.algebra
    jinv = j.inverse()
    C = np.stack([(jinv * h.delta(A.basis(i)) * j).coords for i in range(A.dim)])
    new_h = HopfStructure(A, C, name=h.name)
    phi = twisted_associator(h, q.associator, j)
    R = None
    if q.r_matrix is not None:
        R = permute_slots(j, (2, 1)).inverse() * q.r_matrix * j
    return QuasiData(new_h, phi, R)


# idempotents and square roots -----------------------------------------------

def lift_idempotent(a: Algebra, e0) -> TensorElement:
    if not isinstance(e0, TensorElement):
        e0 = a.element(e0)
    filt = radical(a)
    if not filt.contains((e0 * e0 - e0).coords, 1):
        raise NotIdempotentModRadical("e0^2 - e0 is not in the radical")
    e = e0
    for _ in range(2 * max(1, filt.nilpotency).bit_length() + 2):
        nxt = 3 * (e * e) - 2 * (e * e * e)
        if nxt == e:
            break
        e = nxt
    if not (e * e == e):
        raise RuntimeError("idempotent iteration did not stabilise")
    return e


def _is_nilpotent(h: TensorElement) -> bool:
    D = h.algebra.dim ** h.arity
    x, k = h, 1
    while k < D:
        x = x * x
        k *= 2
        if x.is_zero():
            return True
    return x.is_zero()


def half_binomial(i: int, p: int) -> int:
    """binom(1/2, i) mod p via the integer binom((p^M + 1)/2, i), M = i + 1."""
    M = i + 1
    c = (p ** M + 1) // 2
    return comb(c, i) % p


def sqrt_one_plus(a: Algebra | None, h) -> TensorElement:
    """The square root of 1 + h lying in 1 + (nilpotents); p must be odd.

    ``h`` may be a TensorElement of any arity (then ``a`` may be None); the
    series only involves powers of h.
    """
    if not isinstance(h, TensorElement):
        h = a.element(h)
    p = h.p
    if p == 2:
        raise Unsupported("square roots of 1 + h need p odd")
    if not _is_nilpotent(h):
        raise InputError("h is not in the radical (not nilpotent)")
    out = h.algebra.one(h.arity)
    term = h.algebra.one(h.arity)
    i = 0
    while True:
        i += 1
        term = term * h
        if term.is_zero():
            return out
        out = out + term * half_binomial(i, p)


def trivialize_rmatrix(q: QuasiData) -> TensorElement:
    """J = R_21^{1/2}, so that J_21^{-1} R J = 1⊗1 (unipotent R, trivial associator)."""
    if q.r_matrix is None:
        raise InputError("no R-matrix attached")
    R = q.r_matrix
    if R.p == 2:
        raise Unsupported("R-matrix trivialisation by square roots needs p odd")
    if q.associator != q.algebra.one(3):
        raise InputError("trivialize_rmatrix expects a trivial associator")
    if R.counit_value() != 1 or not _is_nilpotent(R - 1):
        raise InputError("R is not unipotent (R - 1 is not nilpotent)")
    return sqrt_one_plus(None, permute_slots(R, (2, 1)) - 1)


def alt3(t: TensorElement) -> TensorElement:
    if t.arity != 3:
        raise InputError("alt3 takes an arity-3 tensor")
    P = lambda k: permute_slots(t, k)
    return (P((3, 1, 2)) - P((1, 3, 2)) + P((1, 2, 3)) + P((2, 3, 1))
            - P((2, 1, 3)) - P((3, 2, 1)))
