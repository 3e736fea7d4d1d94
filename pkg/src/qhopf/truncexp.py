"""Truncated exponential and logarithm on tensor powers of augmentation ideals.

For a commutative augmented algebra with x^p = 0 on its augmentation ideal I,
E sends (I^{⊗n}, +) isomorphically onto (1 + I^{⊗n}, ·) for n >= 2.  On a
decomposable T the value is the truncated series sum_{j<p} T^j / j!; on a
general tensor it is the product of those values over a decomposition into
decomposables.  The series is never applied to a sum directly.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dfield
from math import factorial

import numpy as np

from .algebra import (Algebra, TensorElement, adapted_coefficients, apply_slotwise,
                      coface_apply, in_augmentation_power)
from .errors import InputError, Unsupported


@dataclass(frozen=True)
class NilWitness:
    algebra: Algebra
    certified: bool
    failures: tuple = dfield(default=())   # labels of ideal basis vectors with nonzero p-th power
    reason: str = ""

    def __bool__(self):
        return self.certified


_WITNESS: dict = {}


def certify_nilpotent(a: Algebra) -> NilWitness:
    """Certify x^p = 0 on the augmentation ideal (basis check; enough when commutative)."""
    key = hash(a)
    hit = _WITNESS.get(key)
    if hit is not None and hit.algebra.same_as(a):
        return hit
    if not a.commutative:
        w = NilWitness(a, False, (), "algebra is not commutative")
    else:
        bad = []
        for u in a.augmentation_basis:
            if not (a.element(u) ** a.p).is_zero():
                bad.append(_vec_name(a, u))
        w = NilWitness(a, not bad, tuple(bad), "" if not bad else "p-th powers do not vanish")
    _WITNESS[key] = w
    return w


def _vec_name(a, v):
    return "+".join(a.labels[i] if v[i] == 1 else f"{v[i]}{a.labels[i]}" for i in np.flatnonzero(v))


def _require(t: TensorElement, min_arity: int, what: str):
    if t.arity < min_arity:
        raise Unsupported(f"{what} needs arity >= {min_arity}; additivity fails below that")
    w = certify_nilpotent(t.algebra)
    if not w:
        raise Unsupported(f"{t.algebra.name}: x^p = 0 on the augmentation ideal is not certified ({w.reason})")


def _inv_factorials(p):
    return [pow(factorial(j), -1, p) for j in range(p)]


def truncated_series(x: TensorElement) -> TensorElement:
    """sum_{j<p} x^j / j! for a single element (no homomorphism claim)."""
    p = x.p
    out = x.algebra.one(x.arity)
    term = x.algebra.one(x.arity)
    for j, f in enumerate(_inv_factorials(p)[1:], start=1):
        term = term * x
        if term.is_zero():
            break
        out = out + term * f
    return out


def log_series(s: TensorElement) -> TensorElement:
    """sum_{j=1}^{p-1} (-1)^{j-1} (s-1)^j / j; valid on images of decomposables only."""
    p = s.p
    y = s - 1
    out = s.algebra.zero(s.arity)
    term = s.algebra.one(s.arity)
    for j in range(1, p):
        term = term * y
        if term.is_zero():
            break
        out = out + term * ((-1) ** (j - 1) * pow(j, -1, p))
    return out


def _exp_of_ideal_tensor(t: TensorElement) -> TensorElement:
    alg, n, p = t.algebra, t.arity, t.p
    d = alg.dim
    Q = alg.adapted_matrix
    c = adapted_coefficients(t)
    # the last slot stays a general vector of I; earlier slots run over the basis of I
    c_last = np.tensordot(c, Q, axes=([n - 1], [1])) % p     # (a1..a_{n-1}, coords)
    invf = _inv_factorials(p)
    powers = []
    for a in range(d):
        col = alg.element(Q[:, a])
        pw = [alg.one().coords]
        for _ in range(1, p):
            pw.append((alg.element(pw[-1]) * col).coords)
        powers.append(pw)
    result = alg.one(n)
    idx = np.argwhere(c_last.reshape(d ** (n - 1), d).any(axis=1))
    for flat in idx:
        a = np.unravel_index(int(flat[0]), (d,) * (n - 1))
        if 0 in a:
            raise InputError("tensor is not supported on I^{⊗n}")
        w = alg.element(c_last[a])
        wp = [alg.one().coords]
        for _ in range(1, p):
            wp.append((alg.element(wp[-1]) * w).coords)
        factor = np.zeros((d,) * n, dtype=np.int64)
        for j in range(p):
            term = powers[a[0]][j]
            for s in a[1:]:
                term = np.multiply.outer(term, powers[s][j])
            term = np.multiply.outer(term, wp[j])
            factor = factor + term * invf[j]
        result = result * TensorElement(alg, factor)
    return result


def trunc_exp(t: TensorElement) -> TensorElement:
    _require(t, 2, "the truncated exponential")
    if not in_augmentation_power(t):
        raise InputError("argument must lie in I^{⊗n}")
    return _exp_of_ideal_tensor(t)


def trunc_log(s: TensorElement, max_rounds: int = 256) -> TensorElement:
    _require(s, 2, "the truncated logarithm")
    r = s - 1
    if not in_augmentation_power(r):
        raise InputError("argument must lie in 1 + I^{⊗n}")
    t = s.algebra.zero(s.arity)
    for _ in range(max_rounds):
        if r.is_zero():
            return t
        # r is the whole residual; its lowest filtration part is exact and the rest is corrected later
        t = t + r
        r = s * _exp_of_ideal_tensor(-t) - 1
    raise RuntimeError("truncated logarithm did not converge")


def _split_slots(t: TensorElement):
    """Decompose t ∈ A_1 + ... + A_n into (t0 ∈ I^{⊗n}, {i: t_i ∈ I^{⊗(n-1)}})."""
    alg, n, p = t.algebra, t.arity, t.p
    c = adapted_coefficients(t)
    Q = alg.adapted_matrix
    mask0 = np.zeros(c.shape, dtype=np.int64)
    for k in range(n):
        shape = [1] * n
        shape[k] = alg.dim
        mask0 = mask0 + (np.arange(alg.dim) == 0).reshape(shape)
    if np.any(c[mask0 >= 2]):
        raise InputError("tensor is not in A_1 + ... + A_n (a unit appears in two slots)")
    t0 = TensorElement(alg, apply_slotwise(TensorElement(alg, np.where(mask0 == 0, c, 0)), Q).coords)
    parts = {}
    for k in range(n):
        sub = np.take(np.where(mask0 == 1, c, 0), 0, axis=k)
        if sub.any():
            parts[k] = apply_slotwise(TensorElement(alg, sub), Q)
    return t0, parts


def trunc_exp_extended(t: TensorElement) -> TensorElement:
    """E on A_1 + ... + A_n, where A_i has the unit allowed in slot i (n >= 3)."""
    _require(t, 3, "the extended exponential")
    t0, parts = _split_slots(t)
    out = _exp_of_ideal_tensor(t0)
    for k, sub in parts.items():
        out = out * coface_apply(_exp_of_ideal_tensor(sub), k, "unit")
    return out


def trunc_log_extended(s: TensorElement) -> TensorElement:
    _require(s, 3, "the extended logarithm")
    t = s.algebra.zero(s.arity)
    r = s - 1
    for _ in range(256):
        if r.is_zero():
            return t
        t = t + r
        r = s * trunc_exp_extended(-t) - 1
    raise RuntimeError("extended logarithm did not converge")
