"""Structure-constant algebras over GF(p) and elements of their tensor powers.

An algebra of dimension d is stored as an int64 array ``mult`` of shape
(d, d, d) with e_i e_j = sum_k mult[i, j, k] e_k, a unit vector and an
augmentation (counit) row.  An element of the m-th tensor power is a
:class:`TensorElement` whose coordinates form an array of shape (d,) * m.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import field
from .errors import InputError, NotInvertible, ResourceLimit, Unsupported

MAX_ARITY = 4


def _exact_float(d: int, p: int) -> bool:
    # tensordot in float64 is exact while every partial sum stays below 2**52
    return d * d * (p - 1) ** 2 < 2**52


class Algebra:
    """Finite-dimensional associative unital algebra with an augmentation."""

    def __init__(self, p, mult, unit, counit=None, labels=None, name=None, check=True):
        self.p = field.check_prime(p)
        m = np.ascontiguousarray(np.asarray(mult, dtype=np.int64) % self.p)
        if m.ndim != 3 or len(set(m.shape)) != 1:
            raise InputError(f"structure constants must have shape (d, d, d), got {m.shape}")
        self.dim = d = m.shape[0]
        self.mult = m
        self.unit = np.asarray(unit, dtype=np.int64).reshape(-1) % self.p
        if self.unit.size != d:
            raise InputError("unit vector has the wrong length")
        if counit is None:
            counit = np.zeros(d, dtype=np.int64)
            counit[0] = 1
        self.counit = np.asarray(counit, dtype=np.int64).reshape(-1) % self.p
        if self.counit.size != d:
            raise InputError("counit vector has the wrong length")
        self.labels = list(labels) if labels is not None else [f"e{i}" for i in range(d)]
        if len(self.labels) != d:
            raise InputError("label count does not match dimension")
        self.name = name or f"A{d}"
        for arr in (self.mult, self.unit, self.counit):
            arr.setflags(write=False)
        if check:
            problems = self.axiom_failures()
            if problems:
                raise InputError(f"{self.name}: " + "; ".join(problems))

    # structure -------------------------------------------------------------
    def axiom_failures(self) -> list[str]:
        p, M, d = self.p, self.mult, self.dim
        out = []
        fl = _exact_float(d, p)
        flat = M.reshape(d * d, d)
        for i in range(d):  # (e_i e_j) e_k against e_i (e_j e_k), one i at a time
            left = _contract(M[i], M, ([1], [0]), p, fl)             # (j, k, m)
            right = _contract(flat, M[i], ([1], [0]), p, fl).reshape(d, d, d)
            if not np.array_equal(left, right):
                out.append("multiplication is not associative")
                break
        eye = np.eye(d, dtype=np.int64)
        if not (np.array_equal(np.einsum("i,ijk->jk", self.unit, M) % p, eye)
                and np.array_equal(np.einsum("j,ijk->ik", self.unit, M) % p, eye)):
            out.append("unit vector is not a two-sided unit")
        eps = self.counit
        if int(eps @ self.unit % p) != 1:
            out.append("counit does not send 1 to 1")
        if not np.array_equal(np.einsum("ijk,k->ij", M, eps) % p, np.outer(eps, eps) % p):
            out.append("counit is not multiplicative")
        return out

    @cached_property
    def mult_float(self) -> np.ndarray:
        return np.ascontiguousarray(self.mult, dtype=np.float64)

    @cached_property
    def monomial_table(self):
        """(K, V) with e_i e_j = V[i,j] e_{K[i,j]} when every product has at most one term, else None."""
        nz = self.mult != 0
        if nz.sum(axis=2).max() > 1:
            return None
        return self.mult.argmax(axis=2), self.mult.max(axis=2)

    @cached_property
    def commutative(self) -> bool:
        return bool(np.array_equal(self.mult, self.mult.transpose(1, 0, 2)))

    @cached_property
    def augmentation_basis(self) -> np.ndarray:
        """Basis of I = ker(counit) as rows."""
        return field.kernel_matrix(self.counit[None, :], self.p)

    @cached_property
    def adapted_matrix(self) -> np.ndarray:
        """Columns: the unit followed by the basis of I."""
        if self.dim == 1:
            return self.unit[:, None].copy()
        return np.column_stack([self.unit, *self.augmentation_basis])

    @cached_property
    def adapted_inverse(self) -> np.ndarray:
        """Coordinates with respect to (1, u_1, ..., u_{d-1})."""
        return matrix_inverse(self.adapted_matrix, self.p)

    def same_as(self, other: "Algebra") -> bool:
        return self is other or (
            self.p == other.p and self.dim == other.dim
            and np.array_equal(self.mult, other.mult)
            and np.array_equal(self.unit, other.unit)
            and np.array_equal(self.counit, other.counit))

    def __eq__(self, other):
        return isinstance(other, Algebra) and self.same_as(other)

    def __hash__(self):
        return hash((self.p, self.dim, self.mult.tobytes()))

    def __repr__(self):
        return f"Algebra({self.name}, p={self.p}, dim={self.dim})"

    # elements --------------------------------------------------------------
    def one(self, arity: int = 1) -> "TensorElement":
        c = self.unit
        for _ in range(arity - 1):
            c = np.multiply.outer(c, self.unit)
        return TensorElement(self, c)

    def zero(self, arity: int = 1) -> "TensorElement":
        return TensorElement(self, np.zeros((self.dim,) * arity, dtype=np.int64))

    def basis(self, *idx) -> "TensorElement":
        c = np.zeros((self.dim,) * len(idx), dtype=np.int64)
        c[tuple(idx)] = 1
        return TensorElement(self, c)

    def element(self, coords) -> "TensorElement":
        return TensorElement(self, np.asarray(coords, dtype=np.int64).reshape(self.dim))

    def gen(self, label: str) -> "TensorElement":
        return self.basis(self.labels.index(label))

    def from_dict(self, entries: dict, arity: int | None = None) -> "TensorElement":
        if arity is None:
            first = next(iter(entries), 0)
            arity = 1 if isinstance(first, (int, np.integer)) else len(first)
        c = np.zeros((self.dim,) * arity, dtype=np.int64)
        for idx, v in entries.items():
            if isinstance(idx, (int, np.integer)):
                idx = (idx,)
            if len(idx) != arity:
                raise InputError(f"index {idx} does not have arity {arity}")
            c[tuple(idx)] += v
        return TensorElement(self, c)

    def random_element(self, rng, arity=1, in_ideal=False) -> "TensorElement":
        c = rng.integers(0, self.p, size=(self.dim,) * arity, dtype=np.int64)
        t = TensorElement(self, c)
        return project_to_ideal(t) if in_ideal else t

    def left_matrix(self, a) -> np.ndarray:
        """Matrix of b -> a b."""
        return np.einsum("i,ijk->kj", np.asarray(a) % self.p, self.mult) % self.p


def matrix_inverse(q: np.ndarray, p: int) -> np.ndarray:
    n = q.shape[0]
    red, piv = field.rref(np.concatenate([q % p, np.eye(n, dtype=np.int64)], axis=1), p)
    if piv[:n] != list(range(n)):
        raise NotInvertible("matrix is singular")
    return red[:, n:]


class TensorElement:
    """Element of the m-fold tensor power of an algebra."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: Algebra, coords):
        c = np.asarray(coords, dtype=np.int64) % algebra.p
        if c.ndim == 0 or any(s != algebra.dim for s in c.shape):
            raise InputError(f"coordinates of shape {c.shape} do not fit dim {algebra.dim}")
        self.algebra = algebra
        self.coords = c

    @property
    def arity(self) -> int:
        return self.coords.ndim

    @property
    def p(self) -> int:
        return self.algebra.p

    def _check(self, other):
        if not isinstance(other, TensorElement):
            raise InputError("expected a TensorElement")
        if not self.algebra.same_as(other.algebra):
            raise InputError("tensor elements live over different algebras")
        if self.arity != other.arity:
            raise InputError(f"arity mismatch: {self.arity} vs {other.arity}")

    def __add__(self, other):
        if isinstance(other, (int, np.integer)):
            other = self.algebra.one(self.arity) * int(other)
        self._check(other)
        return TensorElement(self.algebra, self.coords + other.coords)

    __radd__ = __add__

    def __neg__(self):
        return TensorElement(self.algebra, -self.coords)

    def __sub__(self, other):
        if isinstance(other, (int, np.integer)):
            other = self.algebra.one(self.arity) * int(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return TensorElement(self.algebra, self.coords * (int(other) % self.p))
        return tensor_multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, np.integer)):
            return TensorElement(self.algebra, self.coords * (int(other) % self.p))
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            return tensor_invert(self) ** (-n)
        out, base = self.algebra.one(self.arity), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, np.integer)):
            return np.array_equal(self.coords, (self.algebra.one(self.arity) * int(other)).coords)
        return (isinstance(other, TensorElement) and self.arity == other.arity
                and self.algebra.same_as(other.algebra)
                and np.array_equal(self.coords, other.coords))

    def __hash__(self):
        return hash((self.coords.shape, self.coords.tobytes()))

    def is_zero(self) -> bool:
        return not self.coords.any()

    def inverse(self):
        return tensor_invert(self)

    def __matmul__(self, other):
        """Tensor product x ⊗ y."""
        return tensor(self, other)

    def counit_value(self) -> int:
        c = self.coords
        for _ in range(self.arity):
            c = np.tensordot(c, self.algebra.counit, axes=([0], [0]))
        return int(c) % self.p

    def support(self) -> dict:
        idx = np.argwhere(self.coords)
        return {tuple(int(i) for i in k): int(self.coords[tuple(k)]) for k in idx}

    def __repr__(self):
        return f"TensorElement({format_tensor(self)})"

    def __str__(self):
        return format_tensor(self)


def format_tensor(t: TensorElement) -> str:
    labels = t.algebra.labels
    terms = []
    for idx, v in sorted(t.support().items()):
        word = "⊗".join(labels[i] for i in idx)
        terms.append(word if v == 1 else f"{v}*{word}")
    return " + ".join(terms) if terms else "0"


def tensor(*factors: TensorElement) -> TensorElement:
    alg = factors[0].algebra
    c = factors[0].coords
    for f in factors[1:]:
        if not alg.same_as(f.algebra):
            raise InputError("tensor factors over different algebras")
        c = np.multiply.outer(c, f.coords)
    return TensorElement(alg, c)


# products --------------------------------------------------------------------

def _contract(x, y, axes, p, as_float):
    if as_float:
        r = np.tensordot(x.astype(np.float64), y.astype(np.float64), axes=axes)
        return np.rint(r).astype(np.int64) % p
    return np.tensordot(x, y, axes=axes) % p


SPARSE_CHUNK = 2_000_000  # index pairs handled per batch in the sparse product


def _sparse_multiply(a: TensorElement, b: TensorElement, table) -> TensorElement:
    # pair up the nonzero entries; each slot pair lands on a single basis element
    alg, m, p, d = a.algebra, a.arity, a.p, a.algebra.dim
    K, V = table
    ia, ib = np.nonzero(a.coords), np.nonzero(b.coords)
    va, vb = a.coords[ia], b.coords[ib]
    out = np.zeros(d ** m, dtype=np.int64)
    step = max(1, SPARSE_CHUNK // max(len(vb), 1))
    for lo in range(0, len(va), step):
        sl = slice(lo, lo + step)
        coef = np.multiply.outer(va[sl], vb) % p
        flat = np.zeros(coef.shape, dtype=np.int64)
        for s in range(m):
            pos = (ia[s][sl][:, None], ib[s][None, :])
            coef = coef * V[pos] % p
            flat = flat * d + K[pos]
        keep = coef != 0
        out += np.bincount(flat[keep], weights=coef[keep], minlength=d ** m).astype(np.int64) % p
    return TensorElement(alg, out.reshape((d,) * m) % p)


def tensor_multiply(a: TensorElement, b: TensorElement) -> TensorElement:
    """Slot-wise product in A^{⊗m}."""
    a._check(b)
    alg, m = a.algebra, a.arity
    p = alg.p
    if m > 1 and alg.monomial_table is not None:
        pairs = np.count_nonzero(a.coords) * np.count_nonzero(b.coords)
        if pairs * 8 < alg.dim ** (2 * m):
            return _sparse_multiply(a, b, alg.monomial_table)
    if _exact_float(alg.dim, p):
        # stay in float64 between contractions; every entry is reduced below p
        M = alg.mult_float
        if m == 1:
            d = alg.dim
            left = a.coords.astype(np.float64) @ M.reshape(d, d * d)
            out = np.mod(b.coords.astype(np.float64) @ left.reshape(d, d), p)
            return TensorElement(alg, out.astype(np.int64))
        T = np.mod(np.tensordot(a.coords.astype(np.float64), M, axes=([0], [0])), p)
        T = np.mod(np.tensordot(T, b.coords.astype(np.float64), axes=([m - 1], [0])), p)
        for _ in range(2, m + 1):
            T = np.moveaxis(np.mod(np.tensordot(T, M, axes=([0, m], [0, 1])), p), -1, m - 1)
        return TensorElement(alg, T.astype(np.int64))
    M = alg.mult
    # axes of T: remaining i's, finished k's, remaining j's
    T = _contract(a.coords, M, ([0], [0]), p, False)          # (i2..im, j1, k1)
    T = _contract(T, b.coords, ([m - 1], [0]), p, False)      # (i2..im, k1, j2..jm)
    for _ in range(2, m + 1):
        T = _contract(T, M, ([0, m], [0, 1]), p, False)
        T = np.moveaxis(T, -1, m - 1)
    return TensorElement(alg, T)


def left_multiplication_matrix(a: TensorElement) -> np.ndarray:
    alg, m = a.algebra, a.arity
    D = alg.dim ** m
    if D > 4096:
        raise ResourceLimit(f"left multiplication matrix of size {D} is too large")
    cols = []
    for k in range(D):
        e = np.zeros(D, dtype=np.int64)
        e[k] = 1
        cols.append(tensor_multiply(a, TensorElement(alg, e.reshape((alg.dim,) * m))).coords.reshape(-1))
    return np.column_stack(cols)


def tensor_invert(a: TensorElement) -> TensorElement:
    alg, m, p = a.algebra, a.arity, a.p
    c = a.counit_value()
    if c == 0:
        raise NotInvertible("counit of the element is zero")
    one = alg.one(m)
    x = one * field.inv(c, p)
    # Newton: the error 1 - a x squares each round, so nilpotent errors die fast
    for _ in range(14):
        err = one - a * x
        if err.is_zero():
            if not (x * a == one):
                break
            return x
        x = x + x * err
    L = left_multiplication_matrix(a)
    sol = field.solve_linear(L, one.coords.reshape(-1), p)
    if sol is None:
        raise NotInvertible("left multiplication is singular")
    x = TensorElement(alg, sol.reshape((alg.dim,) * m))
    if not (x * a == one):
        raise NotInvertible("element has a right inverse only")
    return x


# slot maps -------------------------------------------------------------------

def _comul_array(hopf):
    if hopf is None:
        raise InputError("this operation needs a comultiplication (pass a HopfStructure)")
    return hopf.comul if hasattr(hopf, "comul") else np.asarray(hopf, dtype=np.int64)


def coface_apply(t: TensorElement, slot: int, op: str, hopf=None) -> TensorElement:
    """Apply Δ ('delta'), ε ('counit') or insert 1 ('unit') at a 0-based slot."""
    alg, m, p = t.algebra, t.arity, t.p
    if op in ("delta", "Δ"):
        if not 0 <= slot < m:
            raise InputError(f"slot {slot} out of range for arity {m}")
        if m + 1 > MAX_ARITY + 1:
            raise InputError("arity too large")
        C = _comul_array(hopf)
        r = np.tensordot(t.coords, C, axes=([slot], [0])) % p   # (..rest.., j, k)
        r = np.moveaxis(r, [m - 1, m], [slot, slot + 1])
        return TensorElement(alg, r)
    if op in ("counit", "epsilon", "ε"):
        if not 0 <= slot < m:
            raise InputError(f"slot {slot} out of range for arity {m}")
        if m == 1:
            raise InputError("cannot contract the only slot")
        r = np.tensordot(t.coords, alg.counit, axes=([slot], [0])) % p
        return TensorElement(alg, r)
    if op in ("unit", "one", "insert-1"):
        if not 0 <= slot <= m:
            raise InputError(f"slot {slot} out of range for insertion into arity {m}")
        r = np.multiply.outer(t.coords, alg.unit)
        return TensorElement(alg, np.moveaxis(r, -1, slot))
    raise InputError(f"unknown coface map {op!r}")


def delta(t, slot, hopf):
    return coface_apply(t, slot, "delta", hopf)


def epsilon(t, slot):
    return coface_apply(t, slot, "counit")


def permute_slots(t: TensorElement, perm) -> TensorElement:
    """t_{i1...im}: the factor in slot k moves to position i_k (1-based)."""
    perm = [int(i) for i in perm]
    m = t.arity
    if sorted(perm) != list(range(1, m + 1)):
        raise InputError(f"{perm} is not a permutation of 1..{m}")
    axes = [0] * m
    for k, ik in enumerate(perm):
        axes[ik - 1] = k
    return TensorElement(t.algebra, np.transpose(t.coords, axes))


def compose_perms(sigma, tau):
    """The permutation acting as tau first, then sigma."""
    return tuple(sigma[t - 1] for t in tau)


def place_legs(t: TensorElement, positions, arity: int) -> TensorElement:
    """Embed t into a larger tensor power, its legs at the given 1-based positions.

    place_legs(R, (1, 3), 3) is R_13.
    """
    positions = list(positions)
    if len(positions) != t.arity or len(set(positions)) != t.arity:
        raise InputError("positions must list each leg of t once")
    r = t
    while r.arity < arity:
        r = coface_apply(r, r.arity, "unit")
    rest = [i for i in range(1, arity + 1) if i not in positions]
    return permute_slots(r, positions + rest)


def apply_slotwise(t: TensorElement, mat, target: Algebra | None = None, slots=None) -> TensorElement:
    """Apply a linear map (matrix acting on coordinate columns) to the given slots."""
    mat = np.asarray(mat, dtype=np.int64)
    target = target or t.algebra
    slots = range(t.arity) if slots is None else slots
    if target is not t.algebra and len(list(slots)) != t.arity:
        raise InputError("changing algebra needs every slot mapped")
    c = t.coords
    for s in slots:
        c = np.moveaxis(np.tensordot(mat, c, axes=([1], [s])) % t.p, 0, s)
    return TensorElement(target, c)


# ideal helpers ---------------------------------------------------------------

def in_augmentation_power(t: TensorElement) -> bool:
    """True when every counit contraction of t vanishes, i.e. t ∈ I^{⊗m}."""
    if t.arity == 1:
        return int(t.algebra.counit @ t.coords % t.p) == 0
    return all(epsilon(t, s).is_zero() for s in range(t.arity))


def is_normalized(t: TensorElement) -> bool:
    """All counit contractions equal the unit of one arity lower."""
    if t.arity == 1:
        return int(t.algebra.counit @ t.coords % t.p) == 1
    one = t.algebra.one(t.arity - 1)
    return all(epsilon(t, s) == one for s in range(t.arity))


def project_to_ideal(t: TensorElement) -> TensorElement:
    """Component of t in I^{⊗m} for the splitting A = k1 ⊕ I."""
    alg = t.algebra
    proj = np.eye(alg.dim, dtype=np.int64) - np.outer(alg.unit, alg.counit)
    return apply_slotwise(t, proj % alg.p)


def adapted_coefficients(t: TensorElement) -> np.ndarray:
    """Coordinates of t w.r.t. the basis (1, u_1, ..., u_{d-1}) in every slot."""
    return apply_slotwise(t, t.algebra.adapted_inverse).coords


# radical ---------------------------------------------------------------------

@dataclass
class RadicalFiltration:
    algebra: Algebra
    layers: list  # layers[r] = basis rows of I^r; layers[0] spans A; last layer is I^N = 0

    @property
    def nilpotency(self) -> int:
        """Smallest N with I^N = 0."""
        return len(self.layers) - 1

    @property
    def radical(self) -> np.ndarray:
        return self.layers[1] if len(self.layers) > 1 else self.layers[0][:0]

    def contains(self, v, r: int) -> bool:
        if r >= len(self.layers):
            return not np.any(np.asarray(v) % self.algebra.p)
        base = self.layers[r]
        red = field.Reducer(self.algebra.dim, self.algebra.p)
        for row in base:
            red.add(row)
        return not red.reduce(v).any()

    def degree(self, v) -> int:
        """Largest r with v ∈ I^r (the nilpotency index N for v = 0)."""
        v = v.coords if isinstance(v, TensorElement) else np.asarray(v)
        v = v % self.algebra.p
        if not v.any():
            return self.nilpotency
        r = 0
        while r + 1 < self.nilpotency and self.contains(v, r + 1):
            r += 1
        return r


def frobenius_matrix(a: Algebra, k: int = 1) -> np.ndarray:
    """Columns: coordinates of e_j^(p^k)."""
    cols = []
    for j in range(a.dim):
        x = a.basis(j)
        for _ in range(k):
            x = x ** a.p
        cols.append(x.coords)
    return np.column_stack(cols) if cols else np.zeros((0, 0), dtype=np.int64)


def _span(rows, width, p):
    red = field.Reducer(width, p)
    for r in rows:
        red.add(r)
    return np.array(red.rows, dtype=np.int64).reshape(len(red), width)


def radical(a: Algebra) -> RadicalFiltration:
    if not a.commutative:
        raise Unsupported("radical computation is implemented for commutative algebras only")
    p, d = a.p, a.dim
    K = 1
    while p ** K < d:
        K += 1
    I = field.kernel_matrix(frobenius_matrix(a, K), p)
    layers = [np.eye(d, dtype=np.int64)]
    cur = I
    while cur.shape[0]:
        layers.append(cur)
        prods = [np.einsum("i,j,ijk->k", u, v, a.mult) % p for u in cur for v in I]
        cur = _span(prods, d, p)
        if cur.shape[0] == layers[-1].shape[0]:
            raise InputError("radical is not nilpotent (Frobenius kernel computation failed)")
    layers.append(np.zeros((0, d), dtype=np.int64))
    return RadicalFiltration(a, layers)


# constructions ---------------------------------------------------------------

def _prod_labels(la, lb):
    out = []
    for x in la:
        for y in lb:
            if x == "1":
                out.append(y)
            elif y == "1":
                out.append(x)
            else:
                out.append(f"{x}{y}")
    return out


def tensor_product_algebra(a: Algebra, b: Algebra) -> Algebra:
    if a.p != b.p:
        raise InputError(f"characteristics differ: {a.p} vs {b.p}")
    da, db = a.dim, b.dim
    M = np.einsum("ace,bdf->abcdef", a.mult, b.mult).reshape(da * db, da * db, da * db)
    return Algebra(a.p, M, np.kron(a.unit, b.unit), np.kron(a.counit, b.counit),
                   labels=_prod_labels(a.labels, b.labels), name=f"{a.name}⊗{b.name}", check=False)


def direct_product_algebra(a: Algebra, b: Algebra) -> Algebra:
    """A × B; the augmentation is taken from the first factor."""
    if a.p != b.p:
        raise InputError(f"characteristics differ: {a.p} vs {b.p}")
    da, db = a.dim, b.dim
    d = da + db
    M = np.zeros((d, d, d), dtype=np.int64)
    M[:da, :da, :da] = a.mult
    M[da:, da:, da:] = b.mult
    unit = np.concatenate([a.unit, b.unit])
    counit = np.concatenate([a.counit, np.zeros(db, dtype=np.int64)])
    labels = [f"({x},0)" for x in a.labels] + [f"(0,{y})" for y in b.labels]
    return Algebra(a.p, M, unit, counit, labels=labels, name=f"{a.name}×{b.name}")


def truncated_polynomial_algebra(p: int, heights, names=None, name=None) -> Algebra:
    """k[x_1..x_n]/(x_i^{h_i}) on the monomial basis, augmented at 0."""
    heights = [int(h) for h in heights]
    names = names or (["x"] if len(heights) == 1 else [f"x{i + 1}" for i in range(len(heights))])
    expos = list(np.ndindex(*heights))
    index = {e: k for k, e in enumerate(expos)}
    d = len(expos)
    M = np.zeros((d, d, d), dtype=np.int64)
    for i, ei in enumerate(expos):
        for j, ej in enumerate(expos):
            s = tuple(a + b for a, b in zip(ei, ej))
            if all(x < h for x, h in zip(s, heights)):
                M[i, j, index[s]] = 1
    unit = np.zeros(d, dtype=np.int64)
    unit[0] = 1
    labels = [monomial_label(e, names) for e in expos]
    return Algebra(p, M, unit, unit.copy(), labels=labels, name=name, check=False)


def monomial_label(e, names) -> str:
    parts = []
    for n, k in zip(names, e):
        if k == 1:
            parts.append(n)
        elif k > 1:
            parts.append(f"{n}^{k}")
    return "".join(parts) if parts else "1"


def split_semisimple(p: int, n: int, point: int = 0) -> Algebra:
    """GF(p)^n with pointwise product, augmented at one point."""
    M = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        M[i, i, i] = 1
    counit = np.zeros(n, dtype=np.int64)
    counit[point] = 1
    return Algebra(p, M, np.ones(n, dtype=np.int64), counit,
                   labels=[f"d{i}" for i in range(n)], name=f"GF({p})^{n}")
