"""Bialgebra layer: comultiplication, primitives, grouplikes, duals and gr(H)."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import field
from .algebra import (Algebra, TensorElement, _contract, _exact_float, coface_apply, radical, tensor,
                      tensor_product_algebra)
from .errors import ChevalleyViolation, InputError, ResourceLimit
from .report import AxiomReport


class HopfStructure:
    """An algebra with comultiplication C[i, j, k] (Δe_i = Σ C[i,j,k] e_j⊗e_k).

    The counit is the algebra's augmentation.  Construction does not verify
    the axioms; call :func:`check_bialgebra` (catalog constructors do).
    """

    def __init__(self, algebra: Algebra, comul, cocommutative=None, name=None):
        C = np.asarray(comul, dtype=np.int64) % algebra.p
        d = algebra.dim
        if C.shape != (d, d, d):
            raise InputError(f"comultiplication must have shape {(d, d, d)}, got {C.shape}")
        C.setflags(write=False)
        self.algebra = algebra
        self.comul = C
        self.name = name or algebra.name
        self._claimed_cocomm = cocommutative

    @property
    def p(self):
        return self.algebra.p

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def counit(self):
        return self.algebra.counit

    @cached_property
    def cocommutative(self) -> bool:
        if self._claimed_cocomm is not None:
            return bool(self._claimed_cocomm)
        return bool(np.array_equal(self.comul, self.comul.transpose(0, 2, 1)))

    @property
    def commutative(self) -> bool:
        return self.algebra.commutative

    def delta(self, x: TensorElement) -> TensorElement:
        if x.arity != 1:
            raise InputError("delta() takes an arity-1 element; use coface_apply for slots")
        return coface_apply(x, 0, "delta", self)

    def __repr__(self):
        return f"HopfStructure({self.name}, p={self.p}, dim={self.dim})"


CHECK_DIM_LIMIT = 40  # the homomorphism check holds a d^5 intermediate


def check_bialgebra(h: HopfStructure) -> AxiomReport:
    A, C, p, d = h.algebra, h.comul, h.p, h.dim
    if d > CHECK_DIM_LIMIT:
        raise ResourceLimit(f"exhaustive bialgebra check is limited to dimension {CHECK_DIM_LIMIT}, got {d}")
    rep = AxiomReport()
    fl = _exact_float(d, p)
    left = np.moveaxis(_contract(C, C, ([1], [0]), p, fl), 1, 3)   # (Δ⊗id)Δ as (i, a, b, k)
    right = _contract(C, C, ([2], [0]), p, fl)                     # (id⊗Δ)Δ as (i, j, a, b)
    rep.add("coassociativity", np.array_equal(left, right), (left - right) % p)
    eye = np.eye(d, dtype=np.int64)
    l_cu = np.einsum("ijk,j->ik", C, A.counit) % p
    r_cu = np.einsum("ijk,k->ij", C, A.counit) % p
    rep.add("counit", np.array_equal(l_cu, eye) and np.array_equal(r_cu, eye),
            np.stack([(l_cu - eye) % p, (r_cu - eye) % p]))
    # Δ(e_a e_b) = Δ(e_a)Δ(e_b), computed in coordinates
    lhs = np.einsum("abk,kij->abij", A.mult, C) % p
    # Δ(e_a)Δ(e_b) by pairwise contraction: (a,x,y)(x,z,i) -> (a,y,z,i) -> (a,y,i,b,w) -> (a,i,b,j)
    T = _contract(C, A.mult, ([1], [0]), p, fl)
    T = _contract(T, C, ([2], [1]), p, fl)
    T = _contract(T, A.mult, ([1, 4], [0, 1]), p, fl)
    rhs = T.transpose(0, 2, 1, 3)
    unit_ok = np.array_equal(np.einsum("i,ijk->jk", A.unit, C) % p, np.outer(A.unit, A.unit) % p)
    rep.add("comultiplication_homomorphism", np.array_equal(lhs, rhs) and unit_ok, (lhs - rhs) % p)
    eps_prod = np.einsum("ijk,k->ij", A.mult, A.counit) % p
    eps_ok = np.array_equal(eps_prod, np.outer(A.counit, A.counit) % p) and int(A.counit @ A.unit % p) == 1
    rep.add("counit_homomorphism", eps_ok)
    if h._claimed_cocomm:
        rep.add("cocommutativity", np.array_equal(C, C.transpose(0, 2, 1)),
                (C - C.transpose(0, 2, 1)) % p)
    return rep


def primitives(h: HopfStructure) -> np.ndarray:
    """Basis (rows) of {x : Δx = x⊗1 + 1⊗x}."""
    A, d, p = h.algebra, h.dim, h.p
    u = A.unit
    cols = []
    for i in range(d):
        e = np.zeros(d, dtype=np.int64)
        e[i] = 1
        cols.append((h.comul[i] - np.outer(e, u) - np.outer(u, e)).reshape(-1))
    return field.kernel_matrix(np.column_stack(cols) % p, p)


def is_primitive(h: HopfStructure, x: TensorElement) -> bool:
    one = h.algebra.one()
    return h.delta(x) == tensor(x, one) + tensor(one, x)


def is_grouplike(h: HopfStructure, g) -> bool:
    if not isinstance(g, TensorElement):
        g = h.algebra.element(g)
    return h.delta(g) == tensor(g, g) and g.counit_value() == 1


_DUAL_CACHE: dict = {}


def dual_hopf(h: HopfStructure) -> HopfStructure:
    """Linear dual on the dual basis: product = transposed Δ, Δ = transposed product."""
    key = (h.p, h.algebra.mult.tobytes(), h.comul.tobytes(), h.algebra.unit.tobytes(),
           h.algebra.counit.tobytes())
    hit = _DUAL_CACHE.get(key)
    if hit is not None:
        return hit
    A = h.algebra
    mult = h.comul.transpose(1, 2, 0)          # e_j* e_k* = Σ_i C[i,j,k] e_i*
    comul = A.mult.transpose(2, 0, 1)          # Δ e_k* = Σ M[i,j,k] e_i*⊗e_j*
    labels = [f"{l}*" for l in A.labels]
    dual_alg = Algebra(h.p, mult, A.counit, A.unit, labels=labels, name=f"({A.name})*", check=False)
    out = HopfStructure(dual_alg, comul, name=f"({h.name})*")
    if len(_DUAL_CACHE) > 64:
        _DUAL_CACHE.clear()
    _DUAL_CACHE[key] = out
    return out


def tensor_product_hopf(a: HopfStructure, b: HopfStructure) -> HopfStructure:
    AB = tensor_product_algebra(a.algebra, b.algebra)
    da, db = a.dim, b.dim
    # Δ(x⊗y) = Σ (x'⊗y')⊗(x''⊗y'')
    C = np.einsum("ajk,bmn->abjmkn", a.comul, b.comul).reshape(da * db, da * db, da * db)
    return HopfStructure(AB, C, name=f"{a.name}⊗{b.name}")


# associated graded -----------------------------------------------------------

@dataclass
class GradedHopf:
    hopf: HopfStructure
    degrees: np.ndarray          # radical degree of each basis vector of gr
    basis: np.ndarray            # columns: adapted basis of the original algebra

    def is_radically_graded(self) -> bool:
        return graded_compatible(self.hopf, self.degrees)

    def primitively_generated(self) -> bool:
        prim = primitives(self.hopf)
        return generated_dimension(self.hopf.algebra, prim) == self.hopf.dim

    def degree_part(self, r: int) -> list[int]:
        return [i for i, g in enumerate(self.degrees) if g == r]


def generated_dimension(A: Algebra, gens) -> int:
    """Dimension of the unital subalgebra generated by the given vectors."""
    p = A.p
    red = field.Reducer(A.dim, p)
    red.add(A.unit)
    frontier = [np.asarray(g) % p for g in gens if red.add(g)]
    while frontier:
        new = []
        for u in frontier:
            for g in gens:
                v = np.einsum("i,j,ijk->k", u, np.asarray(g), A.mult) % p
                if red.add(v):
                    new.append(v)
        frontier = new
    return len(red)


def graded_compatible(h: HopfStructure, degrees) -> bool:
    """Multiplication adds and Δ preserves the given basis degrees."""
    deg = np.asarray(degrees)
    i, j, k = np.nonzero(h.algebra.mult)
    if np.any(deg[i] + deg[j] != deg[k]):
        return False
    i, j, k = np.nonzero(h.comul)
    return not np.any(deg[j] + deg[k] != deg[i])


def adapted_basis(filtration) -> tuple[np.ndarray, np.ndarray]:
    """Basis of A adapted to the radical filtration: columns and their degrees."""
    A = filtration.algebra
    layers = filtration.layers
    cols, degs = [], []
    N = filtration.nilpotency
    for r in range(N - 1, -1, -1):
        red = field.Reducer(A.dim, A.p)
        for row in layers[r + 1]:
            red.add(row)
        cand = [A.unit, *layers[r]] if r == 0 else layers[r]
        for row in cand:
            if red.add(row):
                cols.append(row % A.p)
                degs.append(r)
    order = np.argsort(degs, kind="stable")
    Q = np.column_stack([cols[k] for k in order])
    return Q, np.asarray(degs)[order]


def associated_graded(h: HopfStructure) -> GradedHopf:
    from .algebra import matrix_inverse

    A, p, d = h.algebra, h.p, h.dim
    filt = radical(A)
    Q, deg = adapted_basis(filt)
    # put the unit first among degree 0 so that gr has a tidy basis
    Qi = matrix_inverse(Q, p)
    I_rows = filt.radical
    # Hopf ideal: ε(I) = 0 and (π⊗π)Δ(I) = 0 with π the degree-0 projection
    if I_rows.size and np.any(I_rows @ A.counit % p):
        raise ChevalleyViolation("counit does not vanish on the radical")
    Cq = np.einsum("ai,ijk,bj,ck->abc", Q.T, h.comul, Qi, Qi) % p  # Δ in adapted coordinates
    Mq = np.einsum("ia,jb,ijk,ck->abc", Q, Q, A.mult, Qi) % p
    for a in range(d):
        ra = deg[a]
        nz = np.argwhere(Cq[a])
        for j, k in nz:
            if deg[j] + deg[k] < ra:
                raise ChevalleyViolation("radical is not a Hopf ideal: Δ lowers the filtration degree")
    keep_c = (deg[None, :, None] + deg[None, None, :]) == deg[:, None, None]
    keep_m = (deg[:, None, None] + deg[None, :, None]) == deg[None, None, :]
    Cg = np.where(keep_c, Cq, 0)
    Mg = np.where(keep_m, Mq, 0)
    unit = np.where(deg == 0, Qi @ A.unit % p, 0)
    counit = np.where(deg == 0, A.counit @ Q % p, 0)
    labels = [f"[{_vec_label(A, Q[:, k])}]" for k in range(d)]
    G = Algebra(p, Mg, unit, counit, labels=labels, name=f"gr({A.name})")
    return GradedHopf(HopfStructure(G, Cg, name=f"gr({h.name})"), deg, Q)


def _vec_label(A, v):
    terms = []
    for i in np.flatnonzero(v):
        terms.append(A.labels[i] if v[i] == 1 else f"{v[i]}{A.labels[i]}")
    return "+".join(terms)
