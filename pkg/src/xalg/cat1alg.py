"""Cat1-algebras: tail and head ``s, t: A -> R`` with a common section ``e: R -> A``.

Axioms: ``s e = id_R = t e`` (Cat1Alg1) and ``(ker s)(ker t) = 0`` (Cat1Alg2).
Algebras here need not be commutative, so Cat1Alg2 is also checked in the
order ``(ker t)(ker s)`` whenever A is not commutative.
"""

from __future__ import annotations

import numpy as np

from . import linalg as la
from .algebra import Algebra, AlgebraError, Subspace, inclusion_matrix
from .homs import AlgHom, compose, identity_hom, inclusion_hom, restrict


class Cat1Error(AlgebraError):
    def __init__(self, law, witness=None, message=None):
        self.law = law
        self.witness = witness
        text = message or f"{law} fails"
        if witness is not None and message is None:
            text += f" at basis indices {witness}"
        super().__init__(text)


class Cat1Alg:
    """A (pre-)cat1-algebra ``[A => R]`` with tail ``s``, head ``t`` and embedding ``e``."""

    def __init__(self, tail: AlgHom, head: AlgHom, embedding: AlgHom, name=None, check: bool = True):
        A, R = tail.source, tail.target
        if not (head.source.same_structure(A) and head.target.same_structure(R)):
            raise Cat1Error("shape", message="tail and head must share source and range")
        if not (embedding.source.same_structure(R) and embedding.target.same_structure(A)):
            raise Cat1Error("shape", message="embedding must map the range into the source")
        self.tail = tail
        self.head = head
        self.embedding = embedding
        self._name = name
        if check:
            w = self.cat1_witness()
            if w is not None:
                raise Cat1Error(*w)

    @property
    def source(self) -> Algebra:
        return self.tail.source

    @property
    def range(self) -> Algebra:
        return self.tail.target

    @property
    def field(self):
        return self.source.field

    @property
    def name(self) -> str:
        return self._name or f"[{self.source.name}=>{self.range.name}]"

    @name.setter
    def name(self, value):
        self._name = value

    @property
    def size(self) -> tuple[int, int]:
        return (self.source.size, self.range.size)

    def __repr__(self):
        return self.name

    # --- axioms ------------------------------------------------------------
    def pre_cat1_witness(self):
        R = self.range
        I = la.identity(R.dim)
        for law, h in (("Cat1Alg1: s e = id", self.tail), ("Cat1Alg1: t e = id", self.head)):
            M = compose(h, self.embedding).matrix
            bad = np.flatnonzero(np.any(M != I, axis=0))
            if bad.size:
                return (law, (int(bad[0]),))
        return None

    def cat1_witness(self):
        w = self.pre_cat1_witness()
        if w is not None:
            return w
        A = self.source
        Ks, Kt = self.tail.kernel.basis, self.head.kernel.basis
        if Ks.shape[0] == 0 or Kt.shape[0] == 0:
            return None
        X = np.repeat(Ks, Kt.shape[0], axis=0)
        Y = np.tile(Kt, (Ks.shape[0], 1))
        orders = [("Cat1Alg2: (ker s)(ker t) = 0", A.mul(X, Y))]
        if not A.is_commutative:
            orders.append(("Cat1Alg2: (ker t)(ker s) = 0", A.mul(Y, X)))
        for law, prods in orders:
            bad = np.flatnonzero(prods.any(axis=1))
            if bad.size:
                t = int(bad[0])
                return (law, (t // Kt.shape[0], t % Kt.shape[0]))
        return None

    @property
    def is_pre_cat1(self) -> bool:
        return self.pre_cat1_witness() is None

    @property
    def is_cat1(self) -> bool:
        return self.cat1_witness() is None

    def kernel_of_tail(self) -> Subspace:
        return self.tail.kernel

    def __eq__(self, other):
        return (
            isinstance(other, Cat1Alg)
            and self.tail == other.tail
            and self.head == other.head
            and self.embedding == other.embedding
        )

    __hash__ = None

    def display(self) -> str:
        A, R = self.source, self.range
        lines = [
            f"Cat1-algebra {self.name} :-",
            f": source algebra has generators:",
            f"  [ {', '.join(A.format_element(v) for v in A.basis())} ]",
            f": range algebra has generators:",
            f"  [ {', '.join(R.format_element(v) for v in R.basis())} ]",
            ": tail homomorphism maps source generators to:",
            f"  [ {', '.join(self.tail.images_of(A.basis()))} ]",
            ": head homomorphism maps source generators to:",
            f"  [ {', '.join(self.head.images_of(A.basis()))} ]",
            ": range embedding maps range generators to:",
            f"  [ {', '.join(self.embedding.images_of(R.basis()))} ]",
        ]
        K = self.kernel_of_tail()
        if K.dim == 0:
            lines.append(": the kernel is trivial")
        else:
            lines.append(f": kernel has dimension {K.dim}")
        return "\n".join(lines)


# --- constructors -----------------------------------------------------------------

def cat1_by_tail_head_embedding(tail: AlgHom, head: AlgHom, embedding: AlgHom, name=None) -> Cat1Alg:
    return Cat1Alg(tail, head, embedding, name=name)


def cat1_by_endomorphisms(s: AlgHom, t: AlgHom, name=None) -> Cat1Alg:
    """The cat1-algebra on A over the common image R of idempotent endomorphisms.

    The embedding is the inclusion of R; since both maps are idempotent with
    image R they fix R pointwise, which is Cat1Alg1.
    """
    A = s.source
    if not (s.is_endomorphism and t.is_endomorphism and t.source.same_structure(A)):
        raise Cat1Error("shape", message="need two endomorphisms of the same algebra")
    for label, h in (("tail", s), ("head", t)):
        if not h.is_idempotent:
            raise Cat1Error("idempotent", message=f"{label} endomorphism is not idempotent")
    if s.image != t.image:
        raise Cat1Error("image", message="tail and head have different images")
    if s.image.dim == A.dim:
        R = A
        e = identity_hom(A)
    else:
        R = s.image.as_algebra()
        e = inclusion_hom(R, A)
    return Cat1Alg(restrict(s, target=R), restrict(t, target=R), e, name=name)


# --- sub-cat1-algebras ---------------------------------------------------------------

def _contained(sub: Subspace, vectors) -> np.ndarray:
    if vectors.shape[0] == 0:
        return np.ones(0, dtype=bool)
    return np.atleast_1d(sub.contains(vectors))


def sub_cat1(c: Cat1Alg, a_sub: Subspace, r_sub: Subspace, name=None) -> Cat1Alg:
    """Restriction of ``c`` to subalgebras of A and R."""
    A, R = c.source, c.range
    if a_sub.parent.dim != A.dim or r_sub.parent.dim != R.dim:
        raise Cat1Error("shape", message="subspaces do not belong to the cat1-algebra's algebras")
    for label, sub in (("source", a_sub), ("range", r_sub)):
        if not sub.is_closed():
            raise Cat1Error("subalgebra", message=f"{label} subspace is not a subalgebra")
    checks = [
        ("s(A') in R'", r_sub, c.tail(a_sub.basis) if a_sub.dim else np.zeros((0, R.dim), dtype=np.int64)),
        ("t(A') in R'", r_sub, c.head(a_sub.basis) if a_sub.dim else np.zeros((0, R.dim), dtype=np.int64)),
        ("e(R') in A'", a_sub, c.embedding(r_sub.basis) if r_sub.dim else np.zeros((0, A.dim), dtype=np.int64)),
    ]
    for law, sub, vecs in checks:
        ok = _contained(sub, vecs)
        if not ok.all():
            raise Cat1Error(law, (int(np.flatnonzero(~ok)[0]),))
    A2 = A if a_sub.dim == A.dim else a_sub.as_algebra()
    R2 = R if r_sub.dim == R.dim else r_sub.as_algebra()
    return Cat1Alg(
        restrict(c.tail, A2, R2),
        restrict(c.head, A2, R2),
        restrict(c.embedding, R2, A2),
        name=name,
    )


def is_sub_cat1(c: Cat1Alg, d: Cat1Alg) -> bool:
    """True iff ``d`` sits inside ``c`` with restricted tail, head and embedding."""
    iA = inclusion_matrix(d.source, c.source)
    iR = inclusion_matrix(d.range, c.range)
    if iA is None or iR is None:
        return False
    F = c.field

    def mm(X, Y, rows):
        if X.shape[1] == 0 or Y.shape[1] == 0:
            return np.zeros((rows, Y.shape[1]), dtype=np.int64)
        return la.fmatmul(F, X, Y)

    da, dr = d.source.dim, d.range.dim
    for big, small in ((c.tail, d.tail), (c.head, d.head)):
        if not np.array_equal(mm(iR, small.matrix, c.range.dim), mm(big.matrix, iA, c.range.dim)):
            return False
    return bool(np.array_equal(mm(iA, d.embedding.matrix, c.source.dim), mm(c.embedding.matrix, iR, c.source.dim)))


# --- morphisms --------------------------------------------------------------------

class Cat1Morphism:
    """A pair ``(phiA: A -> A', phiR: R -> R')`` commuting with tails, heads and embeddings."""

    def __init__(self, source: Cat1Alg, target: Cat1Alg, phiA: AlgHom, phiR: AlgHom, check: bool = True):
        if not (phiA.source.same_structure(source.source) and phiA.target.same_structure(target.source)):
            raise Cat1Error("shape", message="phiA must map A to A'")
        if not (phiR.source.same_structure(source.range) and phiR.target.same_structure(target.range)):
            raise Cat1Error("shape", message="phiR must map R to R'")
        self.source = source
        self.target = target
        self.phiA = phiA
        self.phiR = phiR
        if check:
            w = self.witness()
            if w is not None:
                raise Cat1Error(*w)

    def witness(self):
        C, D = self.source, self.target
        squares = [
            ("s' phiA = phiR s", compose(D.tail, self.phiA), compose(self.phiR, C.tail)),
            ("t' phiA = phiR t", compose(D.head, self.phiA), compose(self.phiR, C.head)),
            ("phiA e = e' phiR", compose(self.phiA, C.embedding), compose(D.embedding, self.phiR)),
        ]
        for law, lhs, rhs in squares:
            bad = np.flatnonzero(np.any(lhs.matrix != rhs.matrix, axis=0))
            if bad.size:
                return (law, (int(bad[0]),))
        return None

    @property
    def is_pre_cat1_morphism(self) -> bool:
        return self.witness() is None and self.source.is_pre_cat1 and self.target.is_pre_cat1

    @property
    def is_cat1_morphism(self) -> bool:
        return self.witness() is None and self.source.is_cat1 and self.target.is_cat1

    @property
    def is_injective(self) -> bool:
        return self.phiA.is_injective and self.phiR.is_injective

    @property
    def is_surjective(self) -> bool:
        return self.phiA.is_surjective and self.phiR.is_surjective

    @property
    def is_bijective(self) -> bool:
        return self.is_injective and self.is_surjective

    def image(self) -> Cat1Alg:
        return sub_cat1(self.target, self.phiA.image, self.phiR.image)

    def kernel(self) -> Cat1Alg:
        return sub_cat1(self.source, self.phiA.kernel, self.phiR.kernel)

    def __repr__(self):
        return f"[{self.source.name} => {self.target.name}]"

    def display(self) -> str:
        C, D = self.source, self.target
        return "\n".join([
            "Morphism of cat1-algebras :-",
            f": Source = {C.name}",
            f":  Range = {D.name}",
            ": Source Homomorphism maps source generators to:",
            f"  [ {', '.join(self.phiA.images_of(C.source.basis()))} ]",
            ": Range Homomorphism maps range generators to:",
            f"  [ {', '.join(self.phiR.images_of(C.range.basis()))} ]",
        ])


def cat1_morphism(c, d, phiA, phiR) -> Cat1Morphism:
    return Cat1Morphism(c, d, phiA, phiR)


def is_cat1_morphism(c, d, phiA, phiR) -> bool:
    try:
        m = Cat1Morphism(c, d, phiA, phiR, check=False)
    except Cat1Error:
        return False
    return m.is_cat1_morphism


def identity_cat1_morphism(c: Cat1Alg) -> Cat1Morphism:
    return Cat1Morphism(c, c, identity_hom(c.source), identity_hom(c.range))
