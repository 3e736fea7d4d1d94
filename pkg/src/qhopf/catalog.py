"""Named Hopf algebras, associators and twists used as fixtures and demos."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

import numpy as np

from . import field
from .algebra import (Algebra, TensorElement, apply_slotwise, monomial_label, permute_slots,
                      split_semisimple, tensor, truncated_polynomial_algebra)
from .errors import InputError, Unsupported
from .hopf import (CHECK_DIM_LIMIT, HopfStructure, check_bialgebra, dual_hopf, is_grouplike, primitives,
                   tensor_product_hopf)
from .quasi import QuasiData
from .truncexp import certify_nilpotent, trunc_exp


def _checked(h: HopfStructure) -> HopfStructure:
    if h.dim > CHECK_DIM_LIMIT:
        return h  # same formulas as the small cases, which are checked
    rep = check_bialgebra(h)
    if not rep:
        raise InputError(f"{h.name}: bialgebra axioms fail: {', '.join(rep.failures())}")
    return h


def _binomial_comul(A: Algebra, heights) -> np.ndarray:
    """Δ for generators that are all primitive, on the monomial basis."""
    expos = list(np.ndindex(*heights))
    index = {e: k for k, e in enumerate(expos)}
    d = len(expos)
    C = np.zeros((d, d, d), dtype=np.int64)
    for a, e in enumerate(expos):
        for b in itertools.product(*(range(k + 1) for k in e)):
            rest = tuple(x - y for x, y in zip(e, b))
            coef = 1
            for x, y in zip(e, b):
                coef *= comb(x, y)
            C[a, index[b], index[rest]] += coef
    return C % A.p


def make_alpha(p: int, r: int = 1) -> HopfStructure:
    """k[x]/(x^{p^r}) with x primitive."""
    p = field.check_prime(p)
    if r < 1:
        raise InputError("r must be at least 1")
    N = p ** r
    A = truncated_polynomial_algebra(p, [N], name=f"O(alpha_{p},{r})")
    return _checked(HopfStructure(A, _binomial_comul(A, [N]), name=A.name))


def make_alpha_product(p: int, rs) -> HopfStructure:
    rs = [int(r) for r in rs]
    if not rs:
        raise InputError("need at least one factor")
    heights = [p ** r for r in rs]
    names = ["x"] if len(rs) == 1 else [f"x{i + 1}" for i in range(len(rs))]
    name = "O(" + "x".join(f"alpha_{p},{r}" for r in rs) + ")"
    A = truncated_polynomial_algebra(field.check_prime(p), heights, names, name=name)
    return _checked(HopfStructure(A, _binomial_comul(A, heights), name=name))


def make_alpha_dual(p: int, r: int = 1) -> HopfStructure:
    """Divided powers x^(i), i < p^r: x^(i) x^(j) = binom(i+j, i) x^(i+j), Δ x^(n) = Σ x^(j)⊗x^(n-j)."""
    p = field.check_prime(p)
    N = p ** r
    M = np.zeros((N, N, N), dtype=np.int64)
    C = np.zeros((N, N, N), dtype=np.int64)
    for i in range(N):
        for j in range(N - i):
            M[i, j, i + j] = comb(i + j, i) % p
        for j in range(i + 1):
            C[i, j, i - j] = 1
    unit = np.zeros(N, dtype=np.int64)
    unit[0] = 1
    labels = ["1*"] + [f"x^{i}*" if i > 1 else "x*" for i in range(1, N)]
    A = Algebra(p, M, unit, unit.copy(), labels=labels, name=f"O(alpha_{p},{r})*")
    return _checked(HopfStructure(A, C, name=A.name))


def cyclic_group_algebra(p: int, order: int) -> HopfStructure:
    """k[Z/order] on the basis 1, g, ..., g^{order-1}."""
    p = field.check_prime(p)
    n = int(order)
    if n < 1:
        raise InputError("order must be positive")
    M = np.zeros((n, n, n), dtype=np.int64)
    C = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        C[i, i, i] = 1
        for j in range(n):
            M[i, j, (i + j) % n] = 1
    unit = np.zeros(n, dtype=np.int64)
    unit[0] = 1
    labels = ["1", "g"] + [f"g^{i}" for i in range(2, n)]
    A = Algebra(p, M, unit, np.ones(n, dtype=np.int64), labels=labels[:n], name=f"k[Z/{n}]")
    return _checked(HopfStructure(A, C, name=A.name))


def make_cyclic_group_algebra(p: int, n: int = 1) -> HopfStructure:
    """k[Z/p^n]."""
    return cyclic_group_algebra(p, p ** int(n))


def function_algebra(p: int, order: int) -> HopfStructure:
    """O(Z/order): functions on the cyclic group, pointwise product, augmented at 0."""
    return dual_hopf(cyclic_group_algebra(p, order))


def group_algebra(p: int, elements, product) -> HopfStructure:
    """kG from a list of elements (identity first) and a product function."""
    elements = list(elements)
    index = {g: k for k, g in enumerate(elements)}
    n = len(elements)
    M = np.zeros((n, n, n), dtype=np.int64)
    C = np.zeros((n, n, n), dtype=np.int64)
    for i, a in enumerate(elements):
        C[i, i, i] = 1
        for j, b in enumerate(elements):
            M[i, j, index[product(a, b)]] = 1
    unit = np.zeros(n, dtype=np.int64)
    unit[0] = 1
    A = Algebra(p, M, unit, np.ones(n, dtype=np.int64), labels=[str(g) for g in elements],
                name=f"kG{n}")
    return _checked(HopfStructure(A, C, name=A.name))


def symmetric_group_algebra(p: int, n: int = 3) -> HopfStructure:
    perms = sorted(itertools.permutations(range(n)))
    compose = lambda a, b: tuple(a[b[i]] for i in range(n))
    h = group_algebra(p, perms, compose)
    h.algebra.name = h.name = f"k[S{n}]"
    return h


def make_u_abelian(p: int, dim: int, p_power=None) -> HopfStructure:
    """u(g) for abelian g with basis x_1..x_dim, x_i primitive, x_i^p = Σ_j P[i][j] x_j."""
    p = field.check_prime(p)
    d = int(dim)
    P = np.zeros((d, d), dtype=np.int64) if p_power is None else np.asarray(p_power, dtype=np.int64)
    if P.shape != (d, d):
        raise InputError(f"p-power map must be a {d}x{d} matrix, got shape {P.shape}")
    P = P % p
    heights = [p] * d
    expos = list(np.ndindex(*heights))
    index = {e: k for k, e in enumerate(expos)}
    D = len(expos)

    def reduce(poly):
        # rewrite x_i^p -> Σ_j P[i, j] x_j until every exponent is below p
        out = {}
        stack = list(poly.items())
        while stack:
            e, c = stack.pop()
            c %= p
            if not c:
                continue
            big = next((i for i, k in enumerate(e) if k >= p), None)
            if big is None:
                out[e] = (out.get(e, 0) + c) % p
                continue
            base = list(e)
            base[big] -= p
            for j in range(d):
                if P[big, j]:
                    f = list(base)
                    f[j] += 1
                    stack.append((tuple(f), c * int(P[big, j])))
        return out

    M = np.zeros((D, D, D), dtype=np.int64)
    for a, ea in enumerate(expos):
        for b, eb in enumerate(expos):
            for e, c in reduce({tuple(x + y for x, y in zip(ea, eb)): 1}).items():
                M[a, b, index[e]] = c
    unit = np.zeros(D, dtype=np.int64)
    unit[0] = 1
    names = ["x"] if d == 1 else [f"x{i + 1}" for i in range(d)]
    A = Algebra(p, M, unit, unit.copy(), labels=[monomial_label(e, names) for e in expos],
                name=f"u(g{d})", check=D <= CHECK_DIM_LIMIT)
    return _checked(HopfStructure(A, _binomial_comul(A, heights), name=A.name))


def make_u_dual(p: int, dim: int) -> HopfStructure:
    """u(g)* for abelian g of the given dimension with zero p-power map."""
    return dual_hopf(make_u_abelian(p, dim))


def r_epsilon(h: HopfStructure, eps) -> TensorElement:
    """½(1⊗1 + 1⊗ε + ε⊗1 − ε⊗ε) for a grouplike ε with ε² = 1."""
    if h.p == 2:
        raise Unsupported("R_eps needs 1/2")
    A = h.algebra
    if not isinstance(eps, TensorElement):
        eps = A.element(eps)
    if not is_grouplike(h, eps):
        raise InputError("eps is not grouplike")
    if not (eps * eps == A.one()):
        raise InputError("eps does not square to 1")
    one = A.one()
    half = pow(2, -1, h.p)
    return (tensor(one, one) + tensor(one, eps) + tensor(eps, one) - tensor(eps, eps)) * half


def xi_coefficients(p: int) -> list[int]:
    """(1/i) binom(p-1, i-1) mod p for i = 1..p-1."""
    return [comb(p - 1, i - 1) * pow(i, -1, p) % p for i in range(1, p)]


def associator_phi(p: int, s: int = 1, hopf: HopfStructure | None = None) -> TensorElement:
    """Φ_s = 1 + s Σ_i (1/i) binom(p-1, i-1) x⊗x^i⊗x^{p-i} on O(alpha_p)."""
    h = hopf or make_alpha(p, 1)
    A = h.algebra
    entries = {(0, 0, 0): 1}
    for i, c in enumerate(xi_coefficients(p), start=1):
        key = (1, i, p - i)
        entries[key] = entries.get(key, 0) + c * s
    return A.from_dict(entries, 3)


def kalpha_phi(p: int, s: int = 1) -> QuasiData:
    h = make_alpha(p, 1)
    return QuasiData(h, associator_phi(p, s, h))


@dataclass(frozen=True)
class AlgebraMap:
    matrix: np.ndarray      # columns are images of basis vectors
    source: HopfStructure

    def __call__(self, t: TensorElement) -> TensorElement:
        return apply_slotwise(t, self.matrix)

    def is_hopf_automorphism(self) -> bool:
        h, S, p = self.source, self.matrix, self.source.p
        A = h.algebra
        mult_ok = np.array_equal(np.einsum("ia,jb,ijk->abk", S, S, A.mult) % p,
                                 np.einsum("abk,ck->abc", A.mult, S) % p)
        comul_ok = np.array_equal(np.einsum("ia,ijk->ajk", S, h.comul) % p,
                                  np.einsum("ajk,bj,ck->abc", h.comul, S, S) % p)
        unit_ok = np.array_equal(S @ A.unit % p, A.unit) and np.array_equal(A.counit @ S % p, A.counit)
        return mult_ok and comul_ok and unit_ok and field.rank(S, p) == A.dim


def scaling_automorphism(p: int, mu: int, hopf: HopfStructure | None = None) -> AlgebraMap:
    """x -> mu x on O(alpha_p)."""
    mu %= p
    if mu == 0:
        raise InputError("mu must be nonzero")
    h = hopf or make_alpha(p, 1)
    S = np.diag([pow(mu, i, p) for i in range(h.dim)]).astype(np.int64)
    return AlgebraMap(S, h)


def skew_twist(u_dual: HopfStructure, s, basis=None) -> TensorElement:
    """E(Σ s_ab x_a⊗x_b) over a basis x_a of primitives (default: primitives(u_dual))."""
    p = u_dual.p
    s = np.asarray(s, dtype=np.int64) % p
    w = certify_nilpotent(u_dual.algebra)
    if not w:
        raise Unsupported("x^p = 0 fails on the augmentation ideal; no truncated exponential")
    if s.ndim != 2 or s.shape[0] != s.shape[1] or np.any((s + s.T) % p) or np.any(np.diag(s)):
        raise InputError("s must be an antisymmetric square matrix")
    X = primitives(u_dual) if basis is None else np.asarray(basis, dtype=np.int64)
    if X.shape[0] != s.shape[0]:
        raise InputError(f"s has size {s.shape[0]} but there are {X.shape[0]} primitives")
    A = u_dual.algebra
    coords = np.einsum("ab,ai,bj->ij", s, X, X) % p
    return trunc_exp(TensorElement(A, coords))


def minimality_check(h: HopfStructure, j: TensorElement) -> bool:
    """Left tensorands of J_21^{-1} J span the whole algebra."""
    R = permute_slots(j, (2, 1)).inverse() * j
    return field.rank(R.coords.reshape(h.dim, h.dim), h.p) == h.dim


# presets ---------------------------------------------------------------------

PRESETS = {
    "alpha": "O(alpha_{p,r}) = k[x]/(x^{p^r}); params: r",
    "alpha_dual": "dual of O(alpha_{p,r}); params: r",
    "alpha_product": "O(alpha_{p,r1} x ... ); params: r1 r2 ...",
    "cyclic": "k[Z/p^n]; params: n",
    "zmod": "k[Z/m]; params: m",
    "functions": "O(Z/m), split semisimple; params: m",
    "u_abelian": "u(g), g abelian; params: dim [p-power matrix entries, row-major]",
    "u_dual": "u(g)* with zero p-power; params: dim",
    "kalpha_phi": "(O(alpha_p), Phi_s); params: s (default 1)",
    "zmod2_reps": "(k[Z/2], R_eps) with eps the generator; no params",
}


@dataclass(frozen=True)
class PresetSpec:
    name: str
    params: tuple = ()


def instantiate(p: int, preset: PresetSpec) -> QuasiData:
    name, a = preset.name, [int(x) for x in preset.params]

    def need(lo, hi=None):
        hi = lo if hi is None else hi
        if not lo <= len(a) <= hi:
            raise InputError(f"preset {name} takes {lo}..{hi} parameters, got {len(a)}")

    if name == "alpha":
        need(0, 1)
        return QuasiData(make_alpha(p, a[0] if a else 1))
    if name == "alpha_dual":
        need(0, 1)
        return QuasiData(make_alpha_dual(p, a[0] if a else 1))
    if name == "alpha_product":
        if not a:
            raise InputError("alpha_product needs at least one r")
        return QuasiData(make_alpha_product(p, a))
    if name == "cyclic":
        need(0, 1)
        return QuasiData(make_cyclic_group_algebra(p, a[0] if a else 1))
    if name == "zmod":
        need(1)
        return QuasiData(cyclic_group_algebra(p, a[0]))
    if name == "functions":
        need(1)
        return QuasiData(function_algebra(p, a[0]))
    if name == "u_abelian":
        if not a:
            raise InputError("u_abelian needs dim")
        d = a[0]
        if len(a) == 1:
            return QuasiData(make_u_abelian(p, d))
        if len(a) != 1 + d * d:
            raise InputError(f"u_abelian with dim {d} takes {d * d} p-power entries")
        return QuasiData(make_u_abelian(p, d, np.array(a[1:]).reshape(d, d)))
    if name == "u_dual":
        need(1)
        return QuasiData(make_u_dual(p, a[0]))
    if name == "kalpha_phi":
        need(0, 1)
        return kalpha_phi(p, a[0] if a else 1)
    if name == "zmod2_reps":
        need(0)
        h = cyclic_group_algebra(p, 2)
        return QuasiData(h, None, r_epsilon(h, h.algebra.gen("g")))
    raise InputError(f"unknown preset {name!r}")
