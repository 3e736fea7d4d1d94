"""Additive (bar complex) and multiplicative cohomology.

Additive cochains of degree n over an augmented algebra R are functionals on
I^{⊗n}, I = ker ε_R, stored as arrays of shape (m,) * n on a fixed basis
u_1..u_m of I.  For a Hopf algebra B the tensors in B^{⊗n} pair with
(B*)^{⊗n}; a tensor in I_B^{⊗n} is thereby a normalized cochain over R = B*.

Multiplicative cochains are normalized invertible tensors over a commutative
and cocommutative B, with coboundary d(F) = Π_i (∂_i F)^{(-1)^i}, where
∂_0 F = 1⊗F, ∂_i applies Δ in slot i and ∂_{n+1} F = F⊗1.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dfield

import numpy as np
import scipy.sparse as sp

from . import field
from .algebra import (Algebra, TensorElement, apply_slotwise, coface_apply,
                      in_augmentation_power, is_normalized, radical, tensor)
from .catalog import make_alpha_product, xi_coefficients
from .errors import InputError, ResourceLimit, Unsupported
from .hopf import HopfStructure, dual_hopf, graded_compatible, is_primitive
from .quasi import QuasiData, check_pentagon, check_twist, twisted_associator
from .truncexp import certify_nilpotent, trunc_exp, trunc_log

DEFAULT_BUDGET = 10**6
# representatives are only extracted below this many cochain coordinates
REPRESENTATIVE_LIMIT = 5000


# additive cochains -----------------------------------------------------------

@dataclass
class AdditiveCochain:
    base: Algebra
    degree: int
    coords: np.ndarray

    def __post_init__(self):
        m = ideal_dim(self.base)
        c = np.asarray(self.coords, dtype=np.int64) % self.base.p
        if c.shape != (m,) * self.degree:
            raise InputError(f"cochain coordinates must have shape {(m,) * self.degree}, got {c.shape}")
        self.coords = c

    @property
    def p(self):
        return self.base.p

    def flat(self) -> np.ndarray:
        return self.coords.reshape(-1)

    def is_zero(self) -> bool:
        return not self.coords.any()

    def __add__(self, other):
        return AdditiveCochain(self.base, self.degree, self.coords + other.coords)

    def __sub__(self, other):
        return AdditiveCochain(self.base, self.degree, self.coords - other.coords)

    def __neg__(self):
        return AdditiveCochain(self.base, self.degree, -self.coords)

    def __mul__(self, a: int):
        return AdditiveCochain(self.base, self.degree, self.coords * int(a))

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, AdditiveCochain) and self.degree == other.degree
                and self.base.same_as(other.base) and np.array_equal(self.coords, other.coords))

    def cup(self, other: "AdditiveCochain") -> "AdditiveCochain":
        """Cup product f∪g (a1..an+m) = f(a1..an) g(an+1..)."""
        return AdditiveCochain(self.base, self.degree + other.degree,
                               np.multiply.outer(self.coords, other.coords))

    def to_tensor(self, dual_algebra: Algebra) -> TensorElement:
        return tensor_from_cochain(self, dual_algebra)

    def __repr__(self):
        terms = []
        labels = ideal_labels(self.base)
        for idx in np.argwhere(self.coords):
            v = int(self.coords[tuple(idx)])
            word = "⊗".join(labels[i] for i in idx)
            terms.append(word if v == 1 else f"{v}*{word}")
        return f"AdditiveCochain(deg {self.degree}: {' + '.join(terms) or '0'})"


def ideal_basis(R: Algebra) -> np.ndarray:
    return R.augmentation_basis


def ideal_dim(R: Algebra) -> int:
    return R.augmentation_basis.shape[0]


def ideal_labels(R: Algebra) -> list[str]:
    out = []
    for u in R.augmentation_basis:
        nz = np.flatnonzero(u)
        out.append("+".join(R.labels[i] if u[i] == 1 else f"{u[i]}{R.labels[i]}" for i in nz))
    return out


def cochain_from_functional(R: Algebra, values, degree: int | None = None) -> AdditiveCochain:
    """Restrict a functional on R^{⊗n} (values on basis tensors) to I^{⊗n}."""
    values = np.asarray(values, dtype=np.int64) % R.p
    n = values.ndim if degree is None else degree
    U = ideal_basis(R)
    c = values
    for s in range(n):
        c = np.moveaxis(np.tensordot(U, c, axes=([1], [s])) % R.p, 0, s)
    return AdditiveCochain(R, n, c)


def cochain_from_tensor(t: TensorElement, R: Algebra) -> AdditiveCochain:
    """A tensor over B = R* as a cochain over R (pairing on dual bases)."""
    if t.algebra.dim != R.dim:
        raise InputError("tensor and base algebra have different dimensions")
    return cochain_from_functional(R, t.coords, t.arity)


def _dual_frame(R: Algebra) -> np.ndarray:
    """Matrix W with W @ pad(c) = vector t such that t(1) = 0 and t(u_a) = c_a."""
    from .algebra import matrix_inverse

    Q = R.adapted_matrix  # columns 1, u_1, ..., u_m
    return matrix_inverse(Q.T % R.p, R.p)


def tensor_from_cochain(c: AdditiveCochain, B: Algebra) -> TensorElement:
    R = c.base
    if B.dim != R.dim:
        raise InputError("dual algebra has the wrong dimension")
    W = _dual_frame(R)
    pad = np.zeros((R.dim,) * c.degree, dtype=np.int64)
    pad[(slice(1, None),) * c.degree] = c.coords
    return apply_slotwise(TensorElement(B, pad), W)


def ideal_product(R: Algebra) -> np.ndarray:
    """K[a, b, c] with u_a u_b = Σ_c K[a,b,c] u_c."""
    U = ideal_basis(R)
    prods = np.einsum("ai,bj,ijk->abk", U, U, R.mult) % R.p
    coords = np.tensordot(prods, R.adapted_inverse.T, axes=([2], [0])) % R.p
    if np.any(coords[..., 0]):
        raise InputError("augmentation ideal is not closed under multiplication")
    return coords[..., 1:]


def additive_differential(c: AdditiveCochain) -> AdditiveCochain:
    R, n, p = c.base, c.degree, c.p
    K = ideal_product(R)
    out = np.zeros((ideal_dim(R),) * (n + 1), dtype=np.int64)
    for i in range(1, n + 1):
        # slot i-1 of f receives the product of arguments i-1 and i
        t = np.tensordot(K, c.coords, axes=([2], [i - 1]))  # (a_i, a_{i+1}, other slots)
        t = np.moveaxis(t, [0, 1], [i - 1, i])
        out = out + (-1) ** i * t
    return AdditiveCochain(R, n + 1, out % p)


def differential_matrix(R: Algebra, n: int, sparse: bool | None = None):
    """Matrix of d: C^n -> C^{n+1} on flattened cochains (m^{n+1} x m^n)."""
    m, p = ideal_dim(R), R.p
    if n == 0:
        return sp.csr_matrix((m, 1), dtype=np.int64)
    K = ideal_product(R).reshape(m * m, m)
    Ks = sp.csr_matrix(K)
    D = None
    for i in range(1, n + 1):
        term = sp.kron(sp.kron(sp.identity(m ** (i - 1), dtype=np.int64, format="csr"), Ks),
                       sp.identity(m ** (n - i), dtype=np.int64, format="csr"), format="csr")
        term = term * ((-1) ** i)
        D = term if D is None else D + term
    D = D.tocsr()
    D.data %= p
    D.eliminate_zeros()
    if sparse is False:
        return D.toarray()
    return D


@dataclass
class CohomologyReport:
    degree: int
    dim_cocycles: int
    dim_coboundaries: int
    representatives: list | None = None
    base: Algebra | None = None
    _image: np.ndarray | None = dfield(default=None, repr=False)

    @property
    def dim(self) -> int:
        return self.dim_cocycles - self.dim_coboundaries

    dim_H = dim

    def class_coordinates(self, c: AdditiveCochain) -> np.ndarray | None:
        """Coordinates of [c] on the representatives, or None if c is not a cocycle."""
        if self.representatives is None:
            raise ResourceLimit("representatives were not computed for this degree")
        if not additive_differential(c).is_zero():
            return None
        cols = [*self._image] + [r.flat() for r in self.representatives]
        if not cols:
            return np.zeros(0, dtype=np.int64)
        x = field.solve_linear(np.column_stack(cols), c.flat(), c.p)
        if x is None:
            raise RuntimeError("cocycle not in the span of coboundaries and representatives")
        return x[len(self._image):]


def _check_budget(R: Algebra, n: int, budget: int):
    m = ideal_dim(R)
    if m ** (n + 1) > budget:
        raise ResourceLimit(f"cochain space of size {m}^{n + 1} exceeds the budget {budget}")


def additive_cohomology(R: Algebra, n: int, budget: int = DEFAULT_BUDGET,
                        representatives: bool = True) -> CohomologyReport:
    if n < 1:
        raise InputError("degree must be at least 1")
    _check_budget(R, n, budget)
    p, m = R.p, ideal_dim(R)
    Dn = differential_matrix(R, n)
    Dprev = differential_matrix(R, n - 1)
    rank_n = field.rank(Dn, p)
    rank_prev = field.rank(Dprev, p) if n > 1 else 0
    rep = CohomologyReport(n, m ** n - rank_n, rank_prev, None, R)
    if representatives and m ** n <= REPRESENTATIVE_LIMIT:
        Z = field.kernel_matrix(Dn, p)
        B = field.image_matrix(Dprev, p) if n > 1 else np.zeros((0, m ** n), dtype=np.int64)
        red = field.Reducer(m ** n, p)
        for row in B:
            red.add(row)
        reps = [AdditiveCochain(R, n, z.reshape((m,) * n)) for z in Z if red.add(z)]
        rep.representatives = reps
        rep._image = B
        if len(reps) != rep.dim:
            raise RuntimeError("representative count disagrees with the rank computation")
    return rep


def is_additive_coboundary(c: AdditiveCochain) -> AdditiveCochain | None:
    """Some f with df = c, or None."""
    R, n = c.base, c.degree
    if n == 1:
        return AdditiveCochain(R, 0, np.zeros(())) if c.is_zero() else None
    D = differential_matrix(R, n - 1, sparse=False)
    x = field.solve_linear(D, c.flat(), c.p)
    if x is None:
        return None
    return AdditiveCochain(R, n - 1, x.reshape((ideal_dim(R),) * (n - 1)))


# Hopf picture ---------------------------------------------------------------

def hopf_coboundary(t: TensorElement, h: HopfStructure) -> TensorElement:
    """1⊗t + Σ_i (-1)^i Δ_i t + (-1)^{n+1} t⊗1 for t ∈ B^{⊗n}."""
    n = t.arity
    out = coface_apply(t, 0, "unit")
    for i in range(1, n + 1):
        out = out + coface_apply(t, i - 1, "delta", h) * ((-1) ** i)
    out = out + coface_apply(t, n, "unit") * ((-1) ** (n + 1))
    return out


def xi_tensor(f: TensorElement) -> TensorElement:
    p = f.p
    out = f.algebra.zero(2)
    for i, c in enumerate(xi_coefficients(p), start=1):
        out = out + tensor(f ** i, f ** (p - i)) * c
    return out


def xi_map(b: HopfStructure, f) -> AdditiveCochain:
    """ξ(f) = Σ (1/i) binom(p-1, i-1) f^i⊗f^{p-i}, a 2-cocycle over the dual of b."""
    if not isinstance(f, TensorElement):
        f = b.algebra.element(f)
    if not is_primitive(b, f):
        raise InputError("xi_map needs a primitive element")
    return cochain_from_tensor(xi_tensor(f), dual_hopf(b).algebra)


def canonical_h3_basis(g_spec) -> list[AdditiveCochain]:
    """γ_ij = x_i*⊗β_j and x_i*⊗x_j*⊗x_l* (i<j<l) over R = O(Π alpha_{p,r_i})."""
    g_spec = [(int(p), int(r)) for p, r in g_spec]
    ps = {p for p, _ in g_spec}
    if len(ps) != 1:
        raise InputError("all factors must share the characteristic")
    p = ps.pop()
    rs = [r for _, r in g_spec]
    R = make_alpha_product(p, rs).algebra
    n = len(rs)
    heights = [p ** r for r in rs]
    expos = list(np.ndindex(*heights))
    index = {e: k for k, e in enumerate(expos)}

    def mono(j, l):
        e = [0] * n
        e[j] = l
        return index[tuple(e)]

    d = R.dim
    xs = []
    for j in range(n):
        v = np.zeros(d, dtype=np.int64)
        v[mono(j, 1)] = 1
        xs.append(v)
    betas = []
    for j in range(n):
        B = np.zeros((d, d), dtype=np.int64)
        N = heights[j]
        for l in range(1, N):
            B[mono(j, l), mono(j, N - l)] += 1
        betas.append(B)
    out = []
    for i in range(n):
        for j in range(n):
            out.append(cochain_from_functional(R, np.multiply.outer(xs[i], betas[j])))
    for i, j, l in itertools.combinations(range(n), 3):
        F = np.multiply.outer(np.multiply.outer(xs[i], xs[j]), xs[l])
        out.append(cochain_from_functional(R, F))
    return out


# multiplicative cochains -----------------------------------------------------

@dataclass
class MultiplicativeCochain:
    base: HopfStructure
    degree: int
    value: TensorElement

    def __post_init__(self):
        if self.value.arity != self.degree:
            raise InputError("value arity does not match the degree")
        if not is_normalized(self.value):
            raise InputError("multiplicative cochains must be normalized")

    def __eq__(self, other):
        return isinstance(other, MultiplicativeCochain) and self.value == other.value


def _require_commutative(h: HopfStructure):
    if not (h.commutative and h.cocommutative):
        raise Unsupported("multiplicative cohomology is implemented for commutative cocommutative bases")


def multiplicative_coboundary(f) -> MultiplicativeCochain:
    if isinstance(f, MultiplicativeCochain):
        h, F = f.base, f.value
    else:
        raise InputError("expected a MultiplicativeCochain")
    _require_commutative(h)
    n = F.arity
    out = coface_apply(F, 0, "unit")
    for i in range(1, n + 1):
        part = coface_apply(F, i - 1, "delta", h)
        out = out * (part if i % 2 == 0 else part.inverse())
    last = coface_apply(F, n, "unit")
    out = out * (last if (n + 1) % 2 == 0 else last.inverse())
    return MultiplicativeCochain(h, n + 1, out)


def coboundary_of(h: HopfStructure, F: TensorElement) -> TensorElement:
    return multiplicative_coboundary(MultiplicativeCochain(h, F.arity, F)).value


def is_multiplicative_cocycle(c: MultiplicativeCochain) -> bool:
    if c.degree == 2:
        return check_twist(c.base, c.value).passed
    if c.degree == 3:
        return check_pentagon(QuasiData(c.base, c.value)).passed
    raise Unsupported("cocycle test is implemented in degrees 2 and 3")


@dataclass
class CoboundaryResult:
    witness: MultiplicativeCochain | None
    obstruction: AdditiveCochain | None = None
    class_coords: np.ndarray | None = None
    cohomology: CohomologyReport | None = None

    def __bool__(self):
        return self.witness is not None


def _nil_or_raise(h: HopfStructure):
    w = certify_nilpotent(h.algebra)
    if not w:
        raise Unsupported(f"x^p = 0 is not certified on the augmentation ideal of {h.name}")


def is_multiplicative_coboundary(c: MultiplicativeCochain, budget: int = DEFAULT_BUDGET) -> CoboundaryResult:
    h, n = c.base, c.degree
    if n == 2:
        raise Unsupported("degree 2 is not handled through the logarithm")
    if n < 2:
        raise Unsupported("degree must be at least 3")
    _require_commutative(h)
    _nil_or_raise(h)
    R = dual_hopf(h).algebra
    phi = cochain_from_tensor(trunc_log(c.value), R)
    f = is_additive_coboundary(phi)
    if f is not None:
        F = trunc_exp(tensor_from_cochain(f, h.algebra))
        wit = MultiplicativeCochain(h, n - 1, F)
        if multiplicative_coboundary(wit).value != c.value:
            raise RuntimeError("exponential of the additive primitive does not reproduce the cochain")
        return CoboundaryResult(wit)
    rep = additive_cohomology(R, n, budget)
    coords = rep.class_coordinates(phi) if rep.representatives is not None else None
    return CoboundaryResult(None, phi, coords, rep)


def brute_force_h2_multiplicative(b: HopfStructure, budget: int = DEFAULT_BUDGET,
                                  candidates=None, witnesses=None) -> dict:
    """Exhaustive check of normalized 2-cocycles against gauge coboundaries d(F), F ∈ 1 + I."""
    _require_commutative(b)
    A, p = b.algebra, b.p
    U = A.augmentation_basis
    m = U.shape[0]
    if candidates is None:
        if p ** (m * m) > budget:
            raise ResourceLimit(f"{p}^{m * m} candidates exceed the budget {budget}")
        pairs = [np.multiply.outer(U[a], U[c]) for a in range(m) for c in range(m)]

        def gen():
            for coefs in itertools.product(range(p), repeat=m * m):
                t = sum((k * P for k, P in zip(coefs, pairs) if k), np.zeros((A.dim, A.dim), dtype=np.int64))
                yield A.one(2) + TensorElement(A, t)
        candidates = gen()
    if witnesses is None:
        if p ** m > budget:
            raise ResourceLimit(f"{p}^{m} gauge candidates exceed the budget {budget}")

        def wgen():
            for coefs in itertools.product(range(p), repeat=m):
                v = (np.asarray(coefs) @ U) % p if m else np.zeros(A.dim, dtype=np.int64)
                yield A.one() + A.element(v)
        witnesses = wgen()
    cobs = {}
    n_wit = 0
    for F in witnesses:
        n_wit += 1
        dF = coboundary_of(b, F)
        cobs.setdefault(dF.coords.tobytes(), F)
    n_cand, cocycles, unmatched = 0, 0, []
    for J in candidates:
        n_cand += 1
        if check_twist(b, J).passed:
            cocycles += 1
            if J.coords.tobytes() not in cobs:
                unmatched.append(J)
    return {
        "candidates": n_cand,
        "cocycles": cocycles,
        "gauge_candidates": n_wit,
        "distinct_coboundaries": len(cobs),
        "cocycles_with_witness": cocycles - len(unmatched),
        "all_coboundaries": not unmatched,
        "non_trivial": unmatched,
    }


# associator trivialization ---------------------------------------------------

@dataclass
class TrivializationResult:
    success: bool
    twist: TensorElement | None
    obstruction: AdditiveCochain | None
    final_associator: TensorElement
    rounds: int = 0
    obstruction_degree: int | None = None
    class_coords: np.ndarray | None = None
    cohomology: CohomologyReport | None = None

    def __bool__(self):
        return self.success


def radical_degrees(h: HopfStructure) -> np.ndarray:
    filt = radical(h.algebra)
    return np.array([filt.degree(h.algebra.basis(i)) for i in range(h.dim)])


def _degree_grid(deg, n):
    g = np.zeros((len(deg),) * n, dtype=np.int64)
    for s in range(n):
        shape = [1] * n
        shape[s] = len(deg)
        g = g + np.asarray(deg).reshape(shape)
    return g


def trivialize_associator(q: QuasiData, budget: int = DEFAULT_BUDGET) -> TrivializationResult:
    h = q.hopf
    _require_commutative(h)
    if q.r_matrix is not None:
        raise Unsupported("an R-matrix is attached; preserving it needs symmetrised twists, which are not implemented")
    A = h.algebra
    if q.associator == A.one(3):
        return TrivializationResult(True, A.one(2), None, q.associator, 0)
    if not check_pentagon(q).passed:
        raise InputError("associator does not satisfy the pentagon")
    deg = radical_degrees(h)
    if not graded_compatible(h, deg):
        raise InputError("basis is not radically homogeneous (product or coproduct mixes degrees)")
    R = dual_hopf(h).algebra
    grid2, grid3 = _degree_grid(deg, 2), _degree_grid(deg, 3)
    phi = q.associator
    one3 = A.one(3)
    total = A.one(2)
    rounds = 0
    while phi != one3:
        rounds += 1
        if rounds > 4 * int(grid3.max()) + 4:
            raise RuntimeError("trivialization did not terminate")
        resid = (phi - one3).coords
        r = int(grid3[resid != 0].min())
        part = TensorElement(A, np.where(grid3 == r, resid, 0))
        if not hopf_coboundary(part, h).is_zero():
            raise RuntimeError("lowest-degree part is not an additive cocycle")
        c = cochain_from_tensor(part, R)
        f = is_additive_coboundary(c)
        if f is None:
            rep = additive_cohomology(R, 3, budget)
            coords = rep.class_coordinates(c) if rep.representatives is not None else None
            return TrivializationResult(False, total, c, phi, rounds, r, coords, rep)
        ft = tensor_from_cochain(f, A)
        ft = TensorElement(A, np.where(grid2 == r, ft.coords, 0))
        F = A.one(2) + ft
        phi = twisted_associator(h, phi, F)
        total = total * F
    return TrivializationResult(True, total, None, phi, rounds)
