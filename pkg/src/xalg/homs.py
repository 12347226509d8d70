"""Algebra homomorphisms as matrices and exhaustive enumeration of them.

Every homomorphism ``phi: FG -> B`` sends the identity ``e_1`` to an
idempotent ``f`` and each ``e_g`` into the corner ``f B f``; it is determined by
the images ``u_i`` of the group generators.  Enumeration walks the idempotents
of ``B`` in code order, prefilters generator candidates by ``u^ord(g) = f`` and
then checks each tuple by propagating values along a spanning tree of the
Cayley graph of G and comparing every remaining edge.  Tuples are extended one
generator at a time so that relations inside the subgroup generated so far
prune early.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product

import numpy as np

from . import linalg as la
from .algebra import (
    MAX_ELEMENTS,
    Algebra,
    AlgebraError,
    Element,
    Subspace,
    format_vector,
    inclusion_matrix,
)
from .groups import Group

_BATCH_WORDS = 2**21


class HomError(ValueError):
    pass


class AlgHom:
    """A linear map between algebras that is multiplicative on basis pairs.

    ``matrix`` has shape ``(target.dim, source.dim)``; column ``j`` is the
    image of source basis vector ``j``.  Unital maps are not assumed.
    """

    def __init__(self, source: Algebra, target: Algebra, matrix, check: bool = True, name=None):
        if source.field != target.field:
            raise HomError("source and target are defined over different fields")
        M = np.asarray(matrix, dtype=np.int64).reshape(target.dim, source.dim)
        self.source = source
        self.target = target
        self.matrix = M
        self.matrix.setflags(write=False)
        self.name = name
        if check:
            w = self.multiplicativity_witness()
            if w is not None:
                raise HomError(f"map is not multiplicative at basis pair {w}")

    @property
    def field(self):
        return self.source.field

    def __call__(self, x):
        if isinstance(x, Element):
            return Element(self.target, self(x.coords))
        x = np.asarray(x, dtype=np.int64)
        if self.source.dim == 0:
            return np.zeros(x.shape[:-1] + (self.target.dim,), dtype=np.int64)
        return la.fdot(self.field, x, self.matrix.T)

    def multiplicativity_witness(self):
        S = self.source
        d = S.dim
        if d == 0:
            return None
        E = S.basis()
        X = np.repeat(E, d, axis=0)
        Y = np.tile(E, (d, 1))
        lhs = self(S.mul(X, Y))
        rhs = self.target.mul(self(X), self(Y))
        bad = np.flatnonzero(np.any(lhs != rhs, axis=1))
        if bad.size:
            t = int(bad[0])
            return (t // d, t % d)
        return None

    @property
    def is_multiplicative(self) -> bool:
        return self.multiplicativity_witness() is None

    @cached_property
    def kernel(self) -> Subspace:
        ns = la.nullspace(self.field, self.matrix, self.source.dim)
        return Subspace(self.source, ns, kind="ideal", name="ker")

    @cached_property
    def image(self) -> Subspace:
        return Subspace(self.target, self.matrix.T, kind="subalgebra", name="im")

    @property
    def rank(self) -> int:
        return self.image.dim

    @property
    def is_injective(self) -> bool:
        return self.kernel.dim == 0

    @property
    def is_surjective(self) -> bool:
        return self.image.dim == self.target.dim

    @property
    def is_bijective(self) -> bool:
        return self.is_injective and self.is_surjective

    @property
    def is_endomorphism(self) -> bool:
        return self.source is self.target or self.source.same_structure(self.target)

    @property
    def is_idempotent(self) -> bool:
        if not self.is_endomorphism:
            raise HomError("idempotency is only defined for endomorphisms")
        return bool(np.array_equal(la.fmatmul(self.field, self.matrix, self.matrix), self.matrix))

    def predicates(self) -> dict:
        out = {
            "is_injective": self.is_injective,
            "is_surjective": self.is_surjective,
            "is_bijective": self.is_bijective,
        }
        if self.is_endomorphism:
            out["is_idempotent_endo"] = self.is_idempotent
        return out

    def __matmul__(self, other: "AlgHom") -> "AlgHom":
        return compose(self, other)

    def __eq__(self, other):
        return (
            isinstance(other, AlgHom)
            and self.source.same_structure(other.source)
            and self.target.same_structure(other.target)
            and np.array_equal(self.matrix, other.matrix)
        )

    __hash__ = None

    def images_of(self, gens) -> list[str]:
        return [self.target.format_element(v) for v in self(np.asarray(gens, dtype=np.int64))]

    def __repr__(self):
        src = [self.source.format_element(v) for v in self.source.basis()]
        return f"[ {', '.join(src)} ] -> [ {', '.join(self.images_of(self.source.basis()))} ]"


def compose(g: AlgHom, h: AlgHom) -> AlgHom:
    """``g`` after ``h``."""
    if not (h.target is g.source or h.target.same_structure(g.source)):
        raise HomError("composition domain mismatch")
    if h.source.dim == 0 or g.target.dim == 0:
        M = np.zeros((g.target.dim, h.source.dim), dtype=np.int64)
    else:
        M = la.fmatmul(g.field, g.matrix, h.matrix)
    return AlgHom(h.source, g.target, M, check=False)


def identity_hom(a: Algebra) -> AlgHom:
    return AlgHom(a, a, la.identity(a.dim), check=False)


def zero_hom(src: Algebra, tgt: Algebra) -> AlgHom:
    return AlgHom(src, tgt, np.zeros((tgt.dim, src.dim), dtype=np.int64), check=False)


def inclusion_hom(sub: Algebra, sup: Algebra | None = None) -> AlgHom:
    """The inclusion of ``sub`` into ``sup`` (default: its parent)."""
    sup = sub.parent if sup is None else sup
    M = inclusion_matrix(sub, sup)
    if M is None:
        raise HomError(f"{sub.name} does not lie inside {sup.name}")
    return AlgHom(sub, sup, M, check=False)


def restrict(h: AlgHom, source: Algebra | None = None, target: Algebra | None = None) -> AlgHom:
    """Restrict ``h`` to a subalgebra of its source and corestrict to a subalgebra of its target."""
    source = h.source if source is None else source
    target = h.target if target is None else target
    F = h.field
    iS = inclusion_matrix(source, h.source)
    iT = inclusion_matrix(target, h.target)
    if iS is None or iT is None:
        raise HomError("restriction domains do not embed")
    imgs = la.fdot(F, h.matrix, iS) if source.dim and h.source.dim else np.zeros((h.target.dim, source.dim), dtype=np.int64)
    cols = []
    for j in range(source.dim):
        if target.dim == 0:
            if imgs[:, j].any():
                raise HomError("image does not lie in the requested target")
            cols.append(np.zeros(0, dtype=np.int64))
            continue
        x = la.solve(F, iT, imgs[:, j])
        if x is None:
            raise HomError("image does not lie in the requested target")
        cols.append(x)
    M = np.array(cols, dtype=np.int64).T if cols else np.zeros((target.dim, 0), dtype=np.int64)
    return AlgHom(source, target, M.reshape(target.dim, source.dim), check=False)


# --- construction from generator images -------------------------------------

def _group_basis_index(a: Algebra, v) -> int | None:
    nz = np.flatnonzero(v)
    if len(nz) == 1 and v[nz[0]] == 1:
        return int(nz[0])
    return None


def _coords(x, a: Algebra) -> np.ndarray:
    if isinstance(x, Element):
        if x.parent is not a and not x.parent.same_structure(a):
            raise HomError(f"element does not belong to {a.name}")
        return x.coords
    v = np.asarray(x, dtype=np.int64)
    if v.shape != (a.dim,):
        raise HomError(f"expected a vector of length {a.dim} for {a.name}")
    return v


def hom_from_generator_images(src: Algebra, tgt: Algebra, gens, images) -> AlgHom:
    """The homomorphism sending each of ``gens`` to the matching entry of ``images``.

    For a group algebra with gens taken from the group basis, images are
    propagated along the Cayley graph; otherwise the multiplicative closure of
    the generators is built and every linear dependency is checked against
    the images.  Conflicts raise :class:`HomError`.
    """
    gens = [_coords(g, src) for g in gens]
    images = [_coords(y, tgt) for y in images]
    if len(gens) != len(images):
        raise HomError("need exactly one image per generator")
    if src.group is not None and gens and all(_group_basis_index(src, g) is not None for g in gens):
        return _hom_by_cayley(src, tgt, [_group_basis_index(src, g) for g in gens], images)
    return _hom_by_closure(src, tgt, gens, images)


def _hom_by_cayley(src, tgt, gen_idx, images):
    G: Group = src.group
    assigned = {}
    for g, u in zip(gen_idx, images):
        if g in assigned and not np.array_equal(assigned[g], u):
            raise HomError(f"two images given for {G.labels[g]}")
        assigned[g] = u
    nontriv = [g for g in dict.fromkeys(gen_idx) if g != 0]
    if len(G.closure(nontriv)) != G.n:
        raise HomError("generators do not generate the group")
    if 0 in assigned:
        f = assigned[0]
    elif nontriv:
        g = nontriv[0]
        f = tgt.power(assigned[g], G.element_orders[g])
    else:
        raise HomError("no generators given")
    if not np.array_equal(tgt.mul(f, f), f):
        raise HomError("the image of the identity is not idempotent")
    for g in nontriv:
        u = assigned[g]
        if not (np.array_equal(tgt.mul(f, u), u) and np.array_equal(tgt.mul(u, f), u)):
            raise HomError(f"image of {G.labels[g]} is not in the corner of the identity's image")
    values = {0: f}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for g in nontriv:
            y = int(G.mul[x, g])
            v = tgt.mul(values[x], assigned[g])
            if y not in values:
                values[y] = v
                queue.append(y)
            elif not np.array_equal(values[y], v):
                raise HomError(f"conflicting values propagated to {G.labels[y]}")
    for g, u in assigned.items():
        if not np.array_equal(values[g], u):
            raise HomError(f"image of {G.labels[g]} conflicts with the propagated value")
    M = np.array([values[i] for i in range(G.n)], dtype=np.int64).T
    return AlgHom(src, tgt, M.reshape(tgt.dim, src.dim))


def _hom_by_closure(src, tgt, gens, images):
    F = src.field
    basis_rows: list[np.ndarray] = []
    image_rows: list[np.ndarray] = []
    echelon = np.zeros((0, src.dim), dtype=np.int64)
    pivots: list[int] = []

    def add(v, w):
        nonlocal echelon, pivots
        # express v in the current span; accept or check consistency
        if basis_rows:
            B = np.array(basis_rows).T
            c = la.solve(F, B, v)
        else:
            c = None if v.any() else np.zeros(0, dtype=np.int64)
        if c is not None:
            expect = la.fdot(F, c, np.array(image_rows)) if len(c) else np.zeros(tgt.dim, dtype=np.int64)
            if not np.array_equal(expect, w):
                raise HomError("generator images are inconsistent with a linear relation")
            return False
        basis_rows.append(v)
        image_rows.append(w)
        return True

    queue = deque()
    for g, u in zip(gens, images):
        if add(g, u):
            queue.append(len(basis_rows) - 1)
    while queue:
        i = queue.popleft()
        for g, u in zip(gens, images):
            for v, w in ((src.mul(basis_rows[i], g), tgt.mul(image_rows[i], u)),
                         (src.mul(g, basis_rows[i]), tgt.mul(u, image_rows[i]))):
                if add(v, w):
                    queue.append(len(basis_rows) - 1)
    if len(basis_rows) != src.dim:
        raise HomError("generators do not generate the source algebra")
    B = np.array(basis_rows).T  # columns = closure vectors
    W = np.array(image_rows).T
    # M B = W  =>  M = W B^{-1}
    Binv = np.array([la.solve(F, B, e) for e in np.eye(src.dim, dtype=np.int64)]).T
    M = la.fmatmul(F, W, Binv)
    return AlgHom(src, tgt, M)


# --- exhaustive enumeration ----------------------------------------------------

@dataclass(frozen=True)
class _Stage:
    tree: tuple  # (child, parent, generator position)
    checks: tuple  # (from, generator position, to)


@lru_cache(maxsize=None)
def _propagation_plan(G: Group) -> tuple[_Stage, ...]:
    gens = G.generators
    known = {0}
    stages = []
    for i in range(len(gens)):
        tree, checks = [], []
        old = set(known)
        queue = deque(sorted(known))
        while queue:
            x = queue.popleft()
            for j in range(i + 1):
                if x in old and j < i:
                    continue
                y = int(G.mul[x, gens[j]])
                if y not in known:
                    known.add(y)
                    tree.append((y, x, j))
                    queue.append(y)
                else:
                    checks.append((x, j, y))
        stages.append(_Stage(tuple(tree), tuple(checks)))
    return tuple(stages)


def _sort_by_code(L: np.ndarray, p: int) -> np.ndarray:
    if L.shape[0] <= 1:
        return L
    w = p ** np.arange(L.shape[1], dtype=np.int64)
    return L[np.argsort(L @ w, kind="stable")]


def corner_basis(b: Algebra, f) -> np.ndarray:
    """Echelon basis of ``f b f`` for an idempotent ``f`` (codes)."""
    if b.dim == 0:
        return np.zeros((0, 0), dtype=np.int64)
    E = b.basis()
    ff = np.broadcast_to(f, E.shape)
    return la.row_space(b.field, b.mul(b.mul(ff, E), ff), b.dim)


def _span_lifted(b: Algebra, basis) -> np.ndarray:
    """All elements of the GF(q)-span of ``basis`` as lifted digit vectors, in code order."""
    F = b.field
    p, k = F.p, F.k
    r = basis.shape[0]
    if r == 0:
        return np.zeros((1, b.lifted_dim), dtype=np.int64)
    scal = p ** np.arange(k)
    gens = F.mul(scal[None, :, None], basis[:, None, :]).reshape(r * k, b.dim)  # alpha^u * v
    LB = b.to_lifted(gens)
    n = p ** (r * k)
    digits = (np.arange(n, dtype=np.int64)[:, None] // p ** np.arange(r * k, dtype=np.int64)) % p
    L = (digits @ LB) % p
    return _sort_by_code(L, p)


def _lifted_idempotents(b: Algebra, max_elements: int) -> np.ndarray:
    b.check_bound(b.size, max_elements)
    found = []
    step = 2**16
    for start in range(0, b.size, step):
        X = b.lifted_elements(start, min(b.size, start + step))
        hit = np.all(b.mul_lifted(X, X) == X, axis=1)
        found.append(X[hit])
    return np.concatenate(found) if found else np.zeros((0, b.lifted_dim), dtype=np.int64)


def _require_group_algebra(src: Algebra) -> Group:
    if src.group is None:
        raise HomError(f"{src.name} is not a group algebra; enumeration needs a group-algebra source")
    return src.group


def iter_hom_batches(src: Algebra, tgt: Algebra, max_elements: int = MAX_ELEMENTS):
    """Yield ``(f, V)`` batches covering every homomorphism ``src -> tgt``.

    ``f`` is the lifted image of the identity; ``V`` has shape
    ``(N, |G|, tgt.lifted_dim)`` with ``V[n, g]`` the lifted image of ``e_g``.
    Batches arrive in canonical order: by the code of ``f``, then
    lexicographically by the codes of the generator images.
    """
    G = _require_group_algebra(src)
    if src.field != tgt.field:
        raise HomError("source and target are defined over different fields")
    plan = _propagation_plan(G)
    orders = G.gen_orders
    m = len(orders)
    n, D = G.n, tgt.lifted_dim
    if D == 0:
        f = np.zeros(0, dtype=np.int64)
        yield f, np.zeros((1, n, 0), dtype=np.int64)
        return
    for f in _lifted_idempotents(tgt, max_elements):
        fc = tgt.from_lifted(f)
        corner = _span_lifted(tgt, corner_basis(tgt, fc))
        cands = []
        for o in orders:
            pw = tgt.power_lifted(corner, o) if len(corner) else corner
            cands.append(corner[np.all(pw == f, axis=1)])
        V0 = np.zeros((1, n, D), dtype=np.int64)
        V0[0, 0] = f
        if m == 0:
            yield f, V0
            continue
        U0 = np.zeros((1, m, D), dtype=np.int64)
        for V in _extend(tgt, plan, cands, 0, V0, U0):
            if len(V):
                yield f, V


def _extend(tgt, plan, cands, stage, V, U):
    if stage == len(plan):
        yield V
        return
    cand = cands[stage]
    c = len(cand)
    if c == 0 or len(V) == 0:
        return
    n, D = V.shape[1], V.shape[2]
    per_chunk = max(1, _BATCH_WORDS // (n * D + U.shape[1] * D))
    step = max(1, per_chunk // c)
    st = plan[stage]
    for s in range(0, len(V), step):
        Vp, Up = V[s : s + step], U[s : s + step]
        rows = len(Vp) * c
        Vx = np.repeat(Vp, c, axis=0)
        Ux = np.repeat(Up, c, axis=0)
        Ux[:, stage] = np.tile(cand, (len(Vp), 1))
        for child, parent, j in st.tree:
            Vx[:, child] = tgt.mul_lifted(Vx[:, parent], Ux[:, j])
        ok = np.ones(rows, dtype=bool)
        for frm, j, to in st.checks:
            idx = np.flatnonzero(ok)
            if idx.size == 0:
                break
            prod = tgt.mul_lifted(Vx[idx, frm], Ux[idx, j])
            ok[idx] = np.all(prod == Vx[idx, to], axis=1)
        if ok.any():
            yield from _extend(tgt, plan, cands, stage + 1, Vx[ok], Ux[ok])


def batch_to_matrices(tgt: Algebra, V) -> np.ndarray:
    """Code matrices ``(N, tgt.dim, |G|)`` from a lifted batch."""
    return np.swapaxes(tgt.from_lifted(V), 1, 2)


def _basis_constraints(src: Algebra):
    """Group the relations ``phi(b_j) phi(b_k) = phi(b_j b_k)`` by the last basis index they involve."""
    C = src.structure
    d = src.dim
    stages = [[] for _ in range(d)]
    for j in range(d):
        for k in range(d):
            supp = np.flatnonzero(C[j, k])
            last = max([j, k] + supp.tolist())
            stages[last].append((j, k, [(int(l), int(C[j, k, l])) for l in supp]))
    return stages


def _extend_generic(tgt, E, stages, i, X):
    d = len(stages)
    if i == d:
        yield X
        return
    F = tgt.field
    e = len(E)
    step = max(1, _BATCH_WORDS // (e * (i + 1) * max(1, tgt.dim)))
    for s in range(0, len(X), step):
        Xp = X[s : s + step]
        Xx = np.concatenate([np.repeat(Xp, e, axis=0), np.tile(E, (len(Xp), 1))[:, None, :]], axis=1)
        ok = np.ones(len(Xx), dtype=bool)
        for j, k, terms in stages[i]:
            idx = np.flatnonzero(ok)
            if idx.size == 0:
                break
            lhs = tgt.mul(Xx[idx, j], Xx[idx, k])
            rhs = np.zeros_like(lhs)
            for l, c in terms:
                rhs = F.add(rhs, F.mul(c, Xx[idx, l]))
            ok[idx] = np.all(lhs == rhs, axis=1)
        if ok.any():
            yield from _extend_generic(tgt, E, stages, i + 1, Xx[ok])


def iter_generic_hom_matrices(src: Algebra, tgt: Algebra, max_elements: int = MAX_ELEMENTS):
    """Homomorphisms out of an arbitrary source by staged search over basis images.

    Yields matrix batches ``(N, tgt.dim, src.dim)`` ordered lexicographically by
    the codes of the images of ``b_0, b_1, ...``.  Relations are checked as
    soon as every basis vector they mention has an image, which prunes early
    for the small algebras this path is meant for.
    """
    if src.field != tgt.field:
        raise HomError("source and target are defined over different fields")
    if src.dim == 0:
        yield np.zeros((1, tgt.dim, 0), dtype=np.int64)
        return
    E = tgt.elements(max_elements)
    X0 = np.zeros((1, 0, tgt.dim), dtype=np.int64)
    for X in _extend_generic(tgt, E, _basis_constraints(src), 0, X0):
        yield np.swapaxes(X, 1, 2)


def all_homs(src: Algebra, tgt: Algebra, max_elements: int = MAX_ELEMENTS) -> list[AlgHom]:
    """Every algebra homomorphism ``src -> tgt``.

    Includes non-unital maps and the zero map.  Group-algebra sources are
    canonically ordered by the code of the image of the identity, then by
    generator-image codes; other sources fall back to a staged search over
    basis images (ordered by their codes).
    """
    if src.group is None:
        return [AlgHom(src, tgt, M) for B in iter_generic_hom_matrices(src, tgt, max_elements) for M in B]
    out = []
    seen = set()
    for _, V in iter_hom_batches(src, tgt, max_elements):
        for M in batch_to_matrices(tgt, V):
            key = M.tobytes()
            if key in seen:
                continue
            seen.add(key)
            out.append(AlgHom(src, tgt, M))
    return out


def count_homs(src: Algebra, tgt: Algebra, max_elements: int = MAX_ELEMENTS) -> int:
    if src.group is None:
        return sum(len(B) for B in iter_generic_hom_matrices(src, tgt, max_elements))
    return sum(len(V) for _, V in iter_hom_batches(src, tgt, max_elements))


def apply_batch(a: Algebra, V, Y) -> np.ndarray:
    """Apply each endomorphism of a batch to the matching lifted source element.

    ``V`` is ``(N, dim, D)`` (images of basis vectors, lifted) and ``Y`` is
    ``(N, D)`` lifted source elements; returns ``(N, D)``.
    """
    F = a.field
    p, k = F.p, F.k
    N, d, D = V.shape
    Vf = V.astype(np.float64)
    if k == 1:
        return np.fmod(np.einsum("ng,ngd->nd", Y.astype(np.float64), Vf), p).astype(np.int64)
    Yr = Y.reshape(N, d, k).astype(np.float64)
    Vr = Vf.reshape(N, d, D // k, k)
    acc = np.zeros((N, D), dtype=np.float64)
    for w in range(k):
        A = F.scalar_matrix(p**w).astype(np.float64)
        Ww = np.fmod(Vr @ A.T, p).reshape(N, d, D)  # lifted alpha^w * V[g]
        acc += np.einsum("ng,ngd->nd", Yr[:, :, w], Ww)
    return np.fmod(acc, p).astype(np.int64)


def idempotent_mask(a: Algebra, V) -> np.ndarray:
    """Which endomorphisms in a batch satisfy ``phi o phi = phi``.

    Two homomorphisms out of a group algebra agree as soon as they agree on
    the identity and the group generators.
    """
    G = a.group
    ok = np.ones(len(V), dtype=bool)
    for g in [0] + list(G.generators):
        y = V[:, g]
        ok &= np.all(apply_batch(a, V, y) == y, axis=1)
    return ok


def brute_force_homs(src: Algebra, tgt: Algebra) -> list[np.ndarray]:
    """Every multiplicative matrix, by scanning all ``q^(dim src * dim tgt)`` matrices.

    Prime fields only; used as an independent oracle in tests.
    """
    F = src.field
    if not F.is_prime_field:
        raise HomError("brute force oracle supports prime fields only")
    p = F.p
    ds, dt = src.dim, tgt.dim
    n = ds * dt
    if n == 0:
        return [np.zeros((dt, ds), dtype=np.int64)]
    codes = np.arange(p**n, dtype=np.int64)
    mats = ((codes[:, None] // p ** np.arange(n, dtype=np.int64)) % p).reshape(-1, dt, ds)
    Cs, Ct = src.structure, tgt.structure
    # phi(b_i b_j) = M C_s[i, j]; phi(b_i) phi(b_j) = sum_{a,b} M[a,i] M[b,j] C_t[a,b,:]
    lhs = np.einsum("nkl,ijl->nijk", mats, Cs) % p
    rhs = np.einsum("nai,nbj,abk->nijk", mats, mats, Ct) % p
    good = np.all((lhs == rhs).reshape(len(mats), -1), axis=1)
    return [m for m in mats[good]]
