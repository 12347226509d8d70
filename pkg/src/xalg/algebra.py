"""Finite-dimensional associative algebras given by structure constants.

An element is a coordinate vector of field codes.  Batches of elements are
arrays of shape ``(N, dim)``.  Products are computed by lifting everything to
the prime subfield: an element of an algebra of dimension ``d`` over GF(p^k)
becomes a digit vector of length ``d*k`` over GF(p), and multiplication becomes
a GF(p)-bilinear map evaluated with float matrix products.  The lifted digit
vector read as a base-p number is exactly the element's integer code, so
enumerating ``range(q**d)`` walks the algebra in canonical code order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from . import linalg as la
from .ffield import FieldSpec
from .groups import Group, GroupHom

MAX_ELEMENTS = 2**22
_CHUNK_WORDS = 2**21


class AlgebraError(ValueError):
    pass


class EnumerationBoundError(RuntimeError):
    """Raised when an element scan would exceed the configured bound."""


class ActionError(AlgebraError):
    def __init__(self, law, witness, message=None):
        self.law = law
        self.witness = witness
        super().__init__(message or f"action law {law} fails at basis indices {witness}")


class MultiplierError(AlgebraError):
    pass


class Bilinear:
    """A bilinear map ``F^a x F^b -> F^c`` given by a code tensor ``T[i, j, :]``."""

    def __init__(self, field: FieldSpec, tensor):
        self.field = field
        T = np.asarray(tensor, dtype=np.int64)
        self.tensor = T
        a, b, c = T.shape
        self.shape = (a, b, c)
        k, p = field.k, field.p
        if k == 1:
            lifted = T
        else:
            s = p ** np.arange(k)
            P = field.mul(s[:, None], s[None, :])  # (k, k) products of digit basis scalars
            vals = field.mul(P[None, :, None, :, None], T[:, None, :, None, :])  # (a,k,b,k,c)
            lifted = field.to_digits(vals).reshape(a * k, b * k, c * k)
        A, B, C = lifted.shape
        self.lifted_shape = (A, B, C)
        self._flat = lifted.reshape(A, B * C).astype(np.float64)

    def apply_lifted(self, X, Y) -> np.ndarray:
        """Evaluate on digit arrays ``X (N, A)``, ``Y (N, B)`` returning digits ``(N, C)``."""
        p = self.field.p
        A, B, C = self.lifted_shape
        X = np.asarray(X)
        Y = np.asarray(Y)
        N = X.shape[0]
        if N == 0 or B * C == 0:
            return np.zeros((N, C), dtype=np.int64)
        out = np.empty((N, C), dtype=np.int64)
        step = max(1, _CHUNK_WORDS // max(1, B * C))
        for s in range(0, N, step):
            x = X[s : s + step].astype(np.float64)
            y = Y[s : s + step].astype(np.float64)
            T = np.fmod(x @ self._flat, p).reshape(-1, B, C)
            out[s : s + step] = np.fmod(np.matmul(y[:, None, :], T)[:, 0, :], p).astype(np.int64)
        return out

    def apply(self, X, Y) -> np.ndarray:
        """Evaluate on code arrays; leading axes broadcast."""
        F = self.field
        a, b, c = self.shape
        X = np.asarray(X, dtype=np.int64)
        Y = np.asarray(Y, dtype=np.int64)
        lead = np.broadcast_shapes(X.shape[:-1], Y.shape[:-1])
        if a == 0 or b == 0 or c == 0 or 0 in lead:
            return np.zeros(lead + (c,), dtype=np.int64)
        X = np.broadcast_to(X, lead + (a,)).reshape(-1, a)
        Y = np.broadcast_to(Y, lead + (b,)).reshape(-1, b)
        if F.k == 1:
            out = self.apply_lifted(X, Y)
        else:
            out = self.apply_lifted(F.to_digits(X).reshape(len(X), -1), F.to_digits(Y).reshape(len(Y), -1))
            out = F.from_digits(out.reshape(len(out), c, F.k))
        return out.reshape(lead + (c,))


class Algebra:
    """An associative algebra over ``field`` with basis ``b_0 .. b_{dim-1}``.

    ``structure[i, j]`` is the coordinate vector of ``b_i * b_j``.  The
    constructor verifies associativity on all basis triples.  ``unit`` may be
    given, omitted (``"auto"`` solves for it) or ``None`` for non-unital
    algebras.  ``parent``/``inclusion`` record an embedding into a larger
    algebra (``inclusion`` has shape ``(parent.dim, dim)``).
    """

    def __init__(
        self,
        field: FieldSpec,
        structure,
        labels=None,
        unit="auto",
        name=None,
        group: Group | None = None,
        parent: "Algebra | None" = None,
        inclusion=None,
        check: bool = True,
    ):
        self.field = field
        C = np.asarray(structure, dtype=np.int64)
        if C.size == 0:
            d = C.shape[0] if C.ndim == 3 else 0
            C = np.zeros((d, d, d), dtype=np.int64)
        d = C.shape[0]
        if C.shape != (d, d, d):
            raise AlgebraError(f"structure tensor must have shape (d, d, d), got {C.shape}")
        if np.any((C < 0) | (C >= field.order)):
            raise AlgebraError("structure constants are not valid field codes")
        self.dim = d
        self.structure = C
        self.structure.setflags(write=False)
        self.labels = list(labels) if labels is not None else [f"b{i}" for i in range(d)]
        self.name = name or f"Algebra({field.name}, dim {d})"
        self.group = group
        self.parent = parent
        self.inclusion = None if inclusion is None else np.asarray(inclusion, dtype=np.int64)
        self._bilinear = Bilinear(field, C)
        if check:
            w = self.associativity_witness()
            if w is not None:
                raise AlgebraError(f"{self.name}: not associative at basis triple {w}")
        if isinstance(unit, str) and unit == "auto":
            unit = self._solve_unit()
        elif unit is not None:
            unit = np.asarray(unit, dtype=np.int64)
            if check and not self._is_unit(unit):
                raise AlgebraError(f"{self.name}: given unit is not a two-sided identity")
        self.unit = unit

    # --- basic data -------------------------------------------------------
    @property
    def size(self) -> int:
        return self.field.order**self.dim

    @property
    def is_unital(self) -> bool:
        return self.unit is not None

    @cached_property
    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.structure, self.structure.transpose(1, 0, 2)))

    @property
    def lifted_dim(self) -> int:
        return self.dim * self.field.k

    def __repr__(self):
        return f"<{self.name}>"

    def zero(self) -> np.ndarray:
        return np.zeros(self.dim, dtype=np.int64)

    def basis_vector(self, i: int) -> np.ndarray:
        v = self.zero()
        v[i] = 1
        return v

    def basis(self) -> np.ndarray:
        return np.eye(self.dim, dtype=np.int64)

    def element(self, coords) -> "Element":
        return Element(self, np.asarray(coords, dtype=np.int64))

    def one(self) -> "Element":
        if self.unit is None:
            raise AlgebraError(f"{self.name} has no unit")
        return Element(self, self.unit)

    # --- arithmetic on code arrays --------------------------------------
    def mul(self, x, y) -> np.ndarray:
        return self._bilinear.apply(x, y)

    def mul_lifted(self, X, Y) -> np.ndarray:
        return self._bilinear.apply_lifted(X, Y)

    def add(self, x, y):
        return self.field.add(np.asarray(x), np.asarray(y))

    def sub(self, x, y):
        return self.field.sub(np.asarray(x), np.asarray(y))

    def scale(self, c, x):
        return self.field.mul(c, np.asarray(x))

    def power(self, x, e: int) -> np.ndarray:
        if e < 1:
            raise ValueError("power exponent must be >= 1")
        result = None
        base = np.asarray(x, dtype=np.int64)
        while e:
            if e & 1:
                result = base if result is None else self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def power_lifted(self, X, e: int) -> np.ndarray:
        result = None
        base = X
        while e:
            if e & 1:
                result = base if result is None else self.mul_lifted(result, base)
            e >>= 1
            if e:
                base = self.mul_lifted(base, base)
        return result

    def left_mult_matrix(self, x) -> np.ndarray:
        """Matrix of ``y -> x y`` (columns are images of basis vectors)."""
        x = np.asarray(x, dtype=np.int64)
        return self.mul(np.broadcast_to(x, (self.dim, self.dim)), self.basis()).T

    def right_mult_matrix(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        return self.mul(self.basis(), np.broadcast_to(x, (self.dim, self.dim))).T

    # --- codes and enumeration ------------------------------------------
    def to_lifted(self, X) -> np.ndarray:
        X = np.asarray(X, dtype=np.int64)
        if self.field.k == 1:
            return X
        return self.field.to_digits(X).reshape(X.shape[:-1] + (self.lifted_dim,))

    def from_lifted(self, L) -> np.ndarray:
        L = np.asarray(L, dtype=np.int64)
        if self.field.k == 1:
            return L
        return self.field.from_digits(L.reshape(L.shape[:-1] + (self.dim, self.field.k)))

    def code(self, x) -> np.ndarray | int:
        x = np.asarray(x, dtype=np.int64)
        w = self.field.order ** np.arange(self.dim, dtype=np.int64)
        c = x @ w
        return int(c) if np.ndim(c) == 0 else c

    def from_code(self, code) -> np.ndarray:
        code = np.asarray(code, dtype=np.int64)
        w = self.field.order ** np.arange(self.dim, dtype=np.int64)
        return (code[..., None] // w) % self.field.order

    def check_bound(self, count: int, max_elements: int = MAX_ELEMENTS):
        if count > max_elements:
            raise EnumerationBoundError(
                f"{self.name}: scanning {count} elements exceeds the bound {max_elements}"
            )

    def lifted_elements(self, start: int = 0, stop: int | None = None) -> np.ndarray:
        """Digit vectors of the elements with codes in ``[start, stop)``."""
        stop = self.size if stop is None else stop
        p = self.field.p
        codes = np.arange(start, stop, dtype=np.int64)
        return (codes[:, None] // p ** np.arange(self.lifted_dim, dtype=np.int64)) % p

    def elements(self, max_elements: int = MAX_ELEMENTS) -> np.ndarray:
        self.check_bound(self.size, max_elements)
        return self.from_code(np.arange(self.size, dtype=np.int64))

    # --- structural checks ----------------------------------------------
    def associativity_witness(self):
        d = self.dim
        if d == 0:
            return None
        C = self.structure
        E = self.basis()
        ij = C.reshape(d * d, d)
        left = self.mul(np.repeat(ij, d, axis=0), np.tile(E, (d * d, 1)))  # (b_i b_j) b_k
        jk = np.tile(ij, (d, 1))  # row (i, j, k) -> C[j, k]
        right = self.mul(np.repeat(E, d * d, axis=0), jk)  # b_i (b_j b_k)
        bad = np.flatnonzero(np.any(left != right, axis=1))
        if bad.size:
            t = int(bad[0])
            return (t // (d * d), (t // d) % d, t % d)
        return None

    def _is_unit(self, e) -> bool:
        E = self.basis()
        ee = np.broadcast_to(e, E.shape)
        return bool(np.array_equal(self.mul(ee, E), E) and np.array_equal(self.mul(E, ee), E))

    def _solve_unit(self):
        d = self.dim
        if d == 0:
            return np.zeros(0, dtype=np.int64)
        C = self.structure
        # e * b_j = b_j : sum_i e_i C[i, j, l] = delta_jl ; b_j * e = b_j likewise
        M1 = C.transpose(1, 2, 0).reshape(d * d, d)
        M2 = C.transpose(0, 2, 1).reshape(d * d, d)
        rhs = np.eye(d, dtype=np.int64).reshape(-1)
        sol = la.solve(self.field, np.concatenate([M1, M2]), np.concatenate([rhs, rhs]))
        return sol

    def same_structure(self, other: "Algebra") -> bool:
        return (
            isinstance(other, Algebra)
            and self.field == other.field
            and self.dim == other.dim
            and np.array_equal(self.structure, other.structure)
        )

    def root(self):
        """The outermost ambient algebra and the composite inclusion matrix into it."""
        a, M = self, la.identity(self.dim)
        while a.parent is not None:
            M = la.fdot(self.field, a.inclusion, M) if M.size else np.zeros((a.parent.dim, self.dim), dtype=np.int64)
            a = a.parent
        return a, M

    def is_zero(self) -> bool:
        return self.dim == 0

    @cached_property
    def whole(self) -> "Subspace":
        return Subspace(self, self.basis(), kind="ideal", check=False)

    @cached_property
    def zero_subspace(self) -> "Subspace":
        return Subspace(self, np.zeros((0, self.dim), dtype=np.int64), kind="ideal", check=False)

    def format_element(self, x) -> str:
        return format_vector(self.field, x, self.labels)


def format_vector(F: FieldSpec, x, labels) -> str:
    terms = []
    for c, lab in zip(np.asarray(x).tolist(), labels):
        if c == 0:
            continue
        terms.append(lab if c == 1 else f"{c}*{lab}")
    return " + ".join(terms) if terms else "0"


def inclusion_matrix(sub: Algebra, sup: Algebra):
    """Matrix embedding ``sub`` into ``sup`` when both sit in a common ambient algebra.

    Returns ``None`` when ``sub`` does not lie inside ``sup``.
    """
    if sub is sup:
        return la.identity(sub.dim)
    r1, M1 = sub.root()
    r2, M2 = sup.root()
    if r1 is not r2:
        if sub.same_structure(sup):
            return la.identity(sub.dim)
        return None
    F = sub.field
    cols = []
    for j in range(sub.dim):
        x = la.solve(F, M2, M1[:, j]) if sup.dim else (None if M1[:, j].any() else np.zeros(0, dtype=np.int64))
        if x is None:
            return None
        cols.append(x)
    if not cols:
        return np.zeros((sup.dim, 0), dtype=np.int64)
    return np.array(cols, dtype=np.int64).T


@dataclass(frozen=True, eq=False)
class Element:
    """An element of an algebra as a coordinate vector of field codes."""

    parent: Algebra
    coords: np.ndarray

    def __post_init__(self):
        if self.coords.shape != (self.parent.dim,):
            raise AlgebraError(f"expected {self.parent.dim} coordinates, got {self.coords.shape}")

    def _lift(self, other):
        if isinstance(other, Element):
            return other.coords
        return np.asarray(other, dtype=np.int64)

    def __add__(self, other):
        return Element(self.parent, self.parent.add(self.coords, self._lift(other)))

    def __sub__(self, other):
        return Element(self.parent, self.parent.sub(self.coords, self._lift(other)))

    def __neg__(self):
        return Element(self.parent, self.parent.field.neg(self.coords))

    def __mul__(self, other):
        if isinstance(other, Element):
            return Element(self.parent, self.parent.mul(self.coords, other.coords))
        return Element(self.parent, self.parent.scale(int(other), self.coords))

    def __rmul__(self, other):
        return Element(self.parent, self.parent.scale(int(other), self.coords))

    def __pow__(self, e: int):
        return Element(self.parent, self.parent.power(self.coords, e))

    def __eq__(self, other):
        return isinstance(other, Element) and np.array_equal(self.coords, other.coords)

    def __hash__(self):
        return hash((id(self.parent), self.code))

    @property
    def code(self) -> int:
        return self.parent.code(self.coords)

    def is_zero(self) -> bool:
        return not self.coords.any()

    def __repr__(self):
        return self.parent.format_element(self.coords)


class Subspace:
    """A subspace of an algebra with a canonical reduced-echelon basis.

    ``kind`` is one of ``"subspace"``, ``"subalgebra"``, ``"ideal"``; the
    closure property it names is verified unless ``check=False``.
    """

    KINDS = ("subspace", "subalgebra", "ideal")

    def __init__(self, parent: Algebra, vectors, kind: str = "subspace", check: bool = True, name=None):
        if kind not in self.KINDS:
            raise ValueError(f"unknown subspace kind {kind!r}")
        self.parent = parent
        self.basis, self.pivots = la.rref(parent.field, la.asmat(vectors, parent.dim), parent.dim)
        self.basis.setflags(write=False)
        self.kind = kind
        self.name = name
        if check:
            if kind == "subalgebra" and not self.is_closed():
                raise AlgebraError("subspace is not closed under multiplication")
            if kind == "ideal" and not is_ideal(parent, self):
                raise AlgebraError("subspace is not a two-sided ideal")

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def field(self) -> FieldSpec:
        return self.parent.field

    @property
    def size(self) -> int:
        return self.field.order**self.dim

    def __repr__(self):
        return f"<{self.kind} of dim {self.dim} in {self.parent.name}>"

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and (other.parent is self.parent or other.parent.same_structure(self.parent))
            and np.array_equal(other.basis, self.basis)
        )

    __hash__ = None

    def key(self) -> bytes:
        return self.basis.tobytes() + bytes([self.dim])

    def contains(self, v) -> np.ndarray | bool:
        return la.in_span(self.field, self.basis, self.pivots, v)

    def contains_subspace(self, other: "Subspace") -> bool:
        return bool(np.all(self.contains(other.basis))) if other.dim else True

    def coords(self, v) -> np.ndarray:
        """Coordinates with respect to the echelon basis (entries at pivot columns)."""
        v = np.asarray(v, dtype=np.int64)
        if not np.all(self.contains(v)):
            raise AlgebraError("vector is not in the subspace")
        return v[..., self.pivots]

    def products(self, other: "Subspace | None" = None) -> np.ndarray:
        """All products ``x y`` of basis vectors, ``x`` from self and ``y`` from other."""
        other = self if other is None else other
        if self.dim == 0 or other.dim == 0:
            return np.zeros((0, self.parent.dim), dtype=np.int64)
        X = np.repeat(self.basis, other.dim, axis=0)
        Y = np.tile(other.basis, (self.dim, 1))
        return self.parent.mul(X, Y)

    def is_closed(self) -> bool:
        return bool(np.all(self.contains(self.products()))) if self.dim else True

    def intersection(self, other: "Subspace") -> "Subspace":
        F = self.field
        # x = a S = b T  <=>  [S; -T]^T (a, b) = 0
        if self.dim == 0 or other.dim == 0:
            return Subspace(self.parent, np.zeros((0, self.parent.dim)), check=False)
        M = np.concatenate([self.basis, F.neg(other.basis)]).T
        ns = la.nullspace(F, M)
        vecs = la.fdot(F, ns[:, : self.dim], self.basis) if ns.size else np.zeros((0, self.parent.dim))
        return Subspace(self.parent, vecs, check=False)

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace(self.parent, np.concatenate([self.basis, other.basis]), check=False)

    def as_algebra(self, name=None) -> Algebra:
        """This subspace (closed under multiplication) as an algebra in its own basis.

        The result is cached, so repeated calls return the same object.
        """
        cached = getattr(self, "_algebra", None)
        if cached is not None:
            if name is not None:
                cached.name = name
            return cached
        if not self.is_closed():
            raise AlgebraError("subspace is not closed under multiplication")
        r = self.dim
        if r:
            prods = self.products().reshape(r, r, -1)
            C = prods[..., self.pivots]
        else:
            C = np.zeros((0, 0, 0), dtype=np.int64)
        labels = [_vector_label(self.parent, v, i) for i, v in enumerate(self.basis)]
        nm = name or self.name or ("0" if r == 0 else f"<{self.kind} of dim {r} in {self.parent.name}>")
        alg = Algebra(
            self.field,
            C,
            labels=labels,
            name=nm,
            parent=self.parent,
            inclusion=self.basis.T.copy(),
            check=False,
        )
        alg.subspace = self
        self._algebra = alg
        return alg


def _vector_label(a: Algebra, v, i):
    nz = np.flatnonzero(v)
    if len(nz) == 1 and v[nz[0]] == 1:
        return a.labels[nz[0]]
    return "(" + format_vector(a.field, v, a.labels) + ")"


def subspace_of(a: Algebra, vectors, kind="subspace") -> Subspace:
    return Subspace(a, vectors, kind=kind)


class AlgebraAction:
    """A two-sided action of ``acting`` (R) on ``acted`` (S).

    ``left[i, j]`` is the coordinate vector of ``r_i . s_j`` and
    ``right[i, j]`` that of ``s_j . r_i``.  ``right=None`` means the action is
    symmetric (``s . r = r . s``), which is the only case for commutative data.
    """

    def __init__(self, acting: Algebra, acted: Algebra, left, right=None, check: bool = True):
        self.acting = acting
        self.acted = acted
        dr, ds = acting.dim, acted.dim
        self.left = np.asarray(left, dtype=np.int64).reshape(dr, ds, ds)
        self.right = None if right is None else np.asarray(right, dtype=np.int64).reshape(dr, ds, ds)
        self._left_bl = Bilinear(acting.field, self.left)
        self._right_bl = self._left_bl if self.right is None else Bilinear(acting.field, self.right)
        if check:
            w = self.violation()
            if w is not None:
                raise ActionError(*w)

    @property
    def symmetric(self) -> bool:
        return self.right is None

    @property
    def right_tensor(self) -> np.ndarray:
        return self.left if self.right is None else self.right

    def act(self, r, s) -> np.ndarray:
        """``r . s`` on code arrays."""
        return self._left_bl.apply(r, s)

    def act_right(self, s, r) -> np.ndarray:
        """``s . r`` on code arrays."""
        return self._right_bl.apply(r, s)

    def violation(self):
        """First failing action law as ``(law, basis indices)`` or ``None``."""
        R, S = self.acting, self.acted
        dr, ds = R.dim, S.dim
        if dr == 0 or ds == 0:
            return None
        Er, Es = R.basis(), S.basis()
        # grids over (a, b, c) with a, b in R and c in S
        a = np.repeat(Er, dr * ds, axis=0)
        b = np.tile(np.repeat(Er, ds, axis=0), (dr, 1))
        c = np.tile(Es, (dr * dr, 1))
        rr = R.mul(a, b)
        checks = [
            ("(rr')s = r(r's)", self.act(rr, c), self.act(a, self.act(b, c))),
            ("s(rr') = (sr)r'", self.act_right(c, rr), self.act_right(self.act_right(c, a), b)),
            ("(rs)r' = r(sr')", self.act_right(self.act(a, c), b), self.act(a, self.act_right(c, b))),
        ]
        for law, lhs, rhs in checks:
            bad = np.flatnonzero(np.any(lhs != rhs, axis=1))
            if bad.size:
                t = int(bad[0])
                return law, (t // (dr * ds), (t // ds) % dr, t % ds)
        # grids over (a, c, e) with a in R and c, e in S
        a = np.repeat(Er, ds * ds, axis=0)
        c = np.tile(np.repeat(Es, ds, axis=0), (dr, 1))
        e = np.tile(Es, (dr * ds, 1))
        checks = [
            ("r(ss') = (rs)s'", self.act(a, S.mul(c, e)), S.mul(self.act(a, c), e)),
            ("(ss')r = s(s'r)", self.act_right(S.mul(c, e), a), S.mul(c, self.act_right(e, a))),
            ("(sr)s' = s(rs')", S.mul(self.act_right(c, a), e), S.mul(c, self.act(a, e))),
        ]
        for law, lhs, rhs in checks:
            bad = np.flatnonzero(np.any(lhs != rhs, axis=1))
            if bad.size:
                t = int(bad[0])
                return law, (t // (ds * ds), (t // ds) % ds, t % ds)
        return None

    def is_valid(self) -> bool:
        return self.violation() is None


def multiplication_action(a: Algebra, s: Subspace | None = None) -> AlgebraAction:
    """Action of ``a`` on an ideal ``s`` (default ``a`` itself) by multiplication."""
    s = a.whole if s is None else s
    S = s.as_algebra() if s is not a.whole else a
    dr, ds = a.dim, S.dim
    basis = s.basis
    if ds == 0:
        empty = np.zeros((dr, 0, 0), dtype=np.int64)
        return AlgebraAction(a, S, empty, None if a.is_commutative else empty, check=False)
    A = np.repeat(a.basis(), ds, axis=0)
    B = np.tile(basis, (dr, 1))
    left = s.coords(a.mul(A, B)).reshape(dr, ds, ds)
    right = None
    if not a.is_commutative:
        right = s.coords(a.mul(B, A)).reshape(dr, ds, ds)
    return AlgebraAction(a, S, left, right)


# --- group algebras -------------------------------------------------------

@lru_cache(maxsize=None)
def group_algebra(field: FieldSpec, group: Group) -> Algebra:
    """The group algebra ``field[group]`` with the group elements as basis."""
    n = group.n
    C = np.zeros((n, n, n), dtype=np.int64)
    i, j = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    C[i, j, group.mul] = 1
    unit = np.zeros(n, dtype=np.int64)
    unit[0] = 1
    return Algebra(
        field,
        C,
        labels=list(group.labels),
        unit=unit,
        name=f"{field.name}[{group.name}]",
        group=group,
        check=n <= 12,
    )


def functor_on_group_hom(sigma: GroupHom, field: FieldSpec):
    """The algebra map ``e_g -> e_sigma(g)`` induced by a group homomorphism."""
    from .homs import AlgHom

    src = group_algebra(field, sigma.source)
    tgt = group_algebra(field, sigma.target)
    M = np.zeros((tgt.dim, src.dim), dtype=np.int64)
    M[list(sigma.map), np.arange(src.dim)] = 1
    return AlgHom(src, tgt, M)


def augmentation_ideal(a: Algebra) -> Subspace:
    """Kernel of the coefficient-sum map of a group algebra."""
    if a.group is None:
        raise AlgebraError(f"{a.name} was not constructed as a group algebra")
    n = a.dim
    F = a.field
    vecs = np.zeros((n - 1, n), dtype=np.int64)
    for g in range(1, n):
        vecs[g - 1, g] = 1
        vecs[g - 1, 0] = F.neg(1)
    return Subspace(a, vecs, kind="ideal", check=False, name="Aug")


def augmentation_map(a: Algebra):
    from .homs import AlgHom

    if a.group is None:
        raise AlgebraError(f"{a.name} was not constructed as a group algebra")
    F = a.field
    triv = group_algebra(F, _trivial_group())
    return AlgHom(a, triv, np.ones((1, a.dim), dtype=np.int64))


def _trivial_group():
    from .groups import catalog

    return catalog((1, 1))


# --- subspaces generated by elements -------------------------------------

def _as_vectors(a, gens):
    dim = a.dim if isinstance(a, Algebra) else a.parent.dim
    rows = [g.coords if isinstance(g, Element) else np.asarray(g, dtype=np.int64) for g in gens]
    if not rows:
        return np.zeros((0, dim), dtype=np.int64)
    return np.array(rows, dtype=np.int64).reshape(len(rows), dim)


def _multipliers(a):
    if isinstance(a, Algebra):
        return a, a.basis()
    return a.parent, a.basis


def span_closure(a, gens, kind: str = "subalgebra") -> Subspace:
    """Smallest subalgebra or ideal of ``a`` containing ``gens``.

    ``a`` may be an algebra or a multiplicatively closed subspace; for the
    latter the ideal is taken relative to ``a`` and returned as a subspace of
    ``a.parent``.
    """
    if kind not in ("subalgebra", "ideal"):
        raise ValueError("kind must be 'subalgebra' or 'ideal'")
    parent, mults = _multipliers(a)
    F = parent.field
    current = Subspace(parent, _as_vectors(a, gens), check=False)
    while True:
        B = current.basis
        if B.shape[0] == 0:
            break
        if kind == "subalgebra":
            new = current.products()
        else:
            if mults.shape[0] == 0:
                break
            X = np.repeat(mults, B.shape[0], axis=0)
            Y = np.tile(B, (mults.shape[0], 1))
            new = np.concatenate([parent.mul(X, Y), parent.mul(Y, X)])
        grown = Subspace(parent, np.concatenate([B, new]), check=False)
        if grown.dim == current.dim:
            break
        current = grown
    return Subspace(parent, current.basis, kind=kind, check=False)


def is_ideal(a, s: Subspace) -> bool:
    """True iff ``a s`` and ``s a`` lie in ``s``."""
    parent, mults = _multipliers(a)
    if s.parent.dim != parent.dim:
        raise AlgebraError("dimension mismatch between algebra and subspace")
    if s.dim == 0 or mults.shape[0] == 0:
        return True
    X = np.repeat(mults, s.dim, axis=0)
    Y = np.tile(s.basis, (mults.shape[0], 1))
    prods = np.concatenate([parent.mul(X, Y), parent.mul(Y, X)])
    return bool(np.all(s.contains(prods)))


def is_subalgebra(s: Subspace) -> bool:
    return s.is_closed()


def square(s: Subspace | Algebra) -> Subspace:
    """The span of all products ``S S``."""
    if isinstance(s, Algebra):
        s = s.whole
    return Subspace(s.parent, s.products(), check=False)


def idempotent_elements(a: Algebra, max_elements: int = MAX_ELEMENTS) -> list[Element]:
    """All ``x`` with ``x^2 = x`` in ascending code order."""
    return [Element(a, v) for v in idempotent_vectors(a, max_elements)]


def idempotent_vectors(a: Algebra, max_elements: int = MAX_ELEMENTS) -> np.ndarray:
    a.check_bound(a.size, max_elements)
    found = []
    step = 2**16
    for start in range(0, a.size, step):
        X = a.lifted_elements(start, min(a.size, start + step))
        sq = a.mul_lifted(X, X)
        hit = np.all(sq == X, axis=1)
        found.append(X[hit])
    L = np.concatenate(found) if found else np.zeros((0, a.lifted_dim), dtype=np.int64)
    return a.from_lifted(L)


def annihilator(s) -> Subspace:
    """``{x in S : x S = S x = 0}`` as a subspace of S's parent (or of S itself)."""
    if isinstance(s, Algebra):
        s = s.whole
    parent, F, r = s.parent, s.field, s.dim
    if r == 0:
        return s
    # coefficient vectors c with sum_i c_i s_i * s_j = 0 and s_j * sum_i c_i s_i = 0
    X = np.repeat(s.basis, r, axis=0)
    Y = np.tile(s.basis, (r, 1))
    left = parent.mul(X, Y).reshape(r, r, -1)  # [i, j] = s_i s_j
    right = parent.mul(Y, X).reshape(r, r, -1)  # [i, j] = s_j s_i
    M = np.concatenate([left.reshape(r, -1), right.reshape(r, -1)], axis=1).T
    ns = la.nullspace(F, M, r)
    vecs = la.fdot(F, ns, s.basis) if ns.shape[0] else np.zeros((0, parent.dim), dtype=np.int64)
    return Subspace(parent, vecs, check=False)


def multiplier_algebra(s):
    """The algebra ``M(S)`` of multipliers and the canonical map ``S -> M(S)``.

    Multipliers are the linear maps ``m`` with ``m(xy) = m(x) y``; the
    product is composition.  Requires ``S`` commutative with ``Ann(S) = 0`` or
    ``S^2 = S``.  Returns ``(M, canonical)``; ``M.multiplier_matrices`` holds
    the basis multipliers as matrices acting on S.
    """
    from .homs import AlgHom

    S = s.as_algebra() if isinstance(s, Subspace) else s
    F, d = S.field, S.dim
    if not S.is_commutative:
        raise MultiplierError(f"{S.name} is not commutative; multipliers are only built for commutative S")
    ann = annihilator(S)
    sq = square(S)
    if ann.dim != 0 and sq.dim != d:
        raise MultiplierError(
            f"{S.name}: Ann(S) has dimension {ann.dim} (not 0) and S^2 has dimension {sq.dim} (not {d})"
        )
    C = S.structure
    # unknown m[a, b] at column a*d + b ; equation (i, j, a):
    #   sum_b C[i, j, b] m[a, b] - sum_l C[l, j, a] m[l, i] = 0
    nrows = d * d * d
    A = np.zeros((nrows, d * d), dtype=np.int64)
    for i in range(d):
        for j in range(d):
            for a in range(d):
                row = (i * d + j) * d + a
                A[row, a * d : (a + 1) * d] = C[i, j]
                for l in range(d):
                    col = l * d + i
                    A[row, col] = F.sub(A[row, col], C[l, j, a])
    basis = la.nullspace(F, A, d * d) if d else np.zeros((0, 0), dtype=np.int64)
    r = basis.shape[0]
    pivots = la.pivots_of(basis) if r else []
    mats = basis.reshape(r, d, d)
    if r:
        comp = la.fmatmul(F, mats[:, None], mats[None, :]).reshape(r, r, d * d)
        struct = comp[..., pivots]
        if not np.all(la.in_span(F, basis, pivots, comp.reshape(r * r, d * d))):
            raise MultiplierError("multipliers are not closed under composition")
    else:
        struct = np.zeros((0, 0, 0), dtype=np.int64)
    labels = [f"m{i}" for i in range(r)]
    M = Algebra(F, struct, labels=labels, name=f"M({S.name})")
    M.multiplier_matrices = mats
    # canonical map s -> left multiplication by s
    if d:
        Ls = np.stack([S.left_mult_matrix(S.basis_vector(i)).reshape(-1) for i in range(d)])
        if r and not np.all(la.in_span(F, basis, pivots, Ls)):
            raise MultiplierError("left multiplications are not multipliers")
        canon = Ls[:, pivots].T if r else np.zeros((0, d), dtype=np.int64)
    else:
        canon = np.zeros((r, 0), dtype=np.int64)
    return M, AlgHom(S, M, canon)


def semidirect_product(r: Algebra, s: Algebra, act: AlgebraAction):
    """The split extension ``R x| S`` on ``R (+) S``.

    Multiplication is ``(r, a)(r', a') = (r r', r.a' + a.r' + a a')``.
    Returns ``(A, embed_R, embed_S, project_R)``.
    """
    from .homs import AlgHom

    if not (act.acting.same_structure(r) and act.acted.same_structure(s)):
        raise AlgebraError("action does not match the given algebras")
    w = act.violation()
    if w is not None:
        raise ActionError(*w)
    F = r.field
    dr, ds = r.dim, s.dim
    n = dr + ds
    C = np.zeros((n, n, n), dtype=np.int64)
    C[:dr, :dr, :dr] = r.structure
    C[:dr, dr:, dr:] = act.left  # r_i . s_j
    C[dr:, :dr, dr:] = act.right_tensor.transpose(1, 0, 2)  # s_i . r_j
    C[dr:, dr:, dr:] = s.structure
    labels = list(r.labels) + [f"s.{lab}" for lab in s.labels]
    A = Algebra(F, C, labels=labels, name=f"{r.name} |X {s.name}")
    Er = np.zeros((n, dr), dtype=np.int64)
    Er[:dr] = la.identity(dr)
    Es = np.zeros((n, ds), dtype=np.int64)
    Es[dr:] = la.identity(ds)
    Pr = np.zeros((dr, n), dtype=np.int64)
    Pr[:, :dr] = la.identity(dr)
    A.semidirect_factors = (r, s)
    return A, AlgHom(r, A, Er), AlgHom(s, A, Es), AlgHom(A, r, Pr)


def direct_sum_zero(r: Algebra, s: Algebra) -> AlgebraAction:
    """The zero action of ``r`` on ``s``."""
    z = np.zeros((r.dim, s.dim, s.dim), dtype=np.int64)
    return AlgebraAction(r, s, z, None, check=False)


def zero_algebra(field: FieldSpec, dim: int = 0, name=None) -> Algebra:
    """The algebra of dimension ``dim`` with identically zero multiplication."""
    return Algebra(field, np.zeros((dim, dim, dim), dtype=np.int64), name=name or f"Zero({field.name}, dim {dim})")
