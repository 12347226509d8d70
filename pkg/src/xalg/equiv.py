"""The equivalence between crossed modules and cat1-algebras.

``cat1_of_xmod`` builds ``R |X S`` with ``s(r, a) = r``, ``t(r, a) = r + d(a)``
and ``e(r) = (r, 0)``.  ``xmod_of_cat1`` restricts the head to ``ker s`` and
lets R act through the embedding: ``r.a = e(r) a`` and ``a.r = a e(r)``.
The roundtrip witnesses ``a -> (0, a)`` and ``(r, a) -> e(r) + a`` are built
and verified as bijective morphisms.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg as la
from .algebra import AlgebraAction, semidirect_product
from .cat1alg import Cat1Alg, Cat1Morphism
from .homs import AlgHom, identity_hom, inclusion_hom
from .xmodalg import XModAlg, XModMorphism


class EquivalenceError(RuntimeError):
    """A roundtrip witness failed to verify; this indicates an internal bug."""


def cat1_of_xmod(x: XModAlg, name=None) -> Cat1Alg:
    R, S = x.range, x.source
    A, embed_r, _, project_r = semidirect_product(R, S, x.action)
    head = np.concatenate([la.identity(R.dim), x.boundary.matrix.reshape(R.dim, S.dim)], axis=1)
    t = AlgHom(A, R, head)
    return Cat1Alg(project_r, t, embed_r, name=name)


def xmod_of_cat1(c: Cat1Alg, name=None) -> XModAlg:
    A, R = c.source, c.range
    K = c.kernel_of_tail()
    if K.dim == A.dim:
        S, incl = A, identity_hom(A)
    else:
        S = K.as_algebra()
        incl = inclusion_hom(S, A)
    boundary = AlgHom(S, R, la.fdot(A.field, c.head.matrix, incl.matrix) if S.dim else np.zeros((R.dim, 0), dtype=np.int64))
    dr, dk = R.dim, K.dim
    if dr and dk:
        er = np.repeat(c.embedding(R.basis()), dk, axis=0)
        k = np.tile(K.basis, (dr, 1))
        left = K.coords(A.mul(er, k)).reshape(dr, dk, dk)
        right = None if A.is_commutative else K.coords(A.mul(k, er)).reshape(dr, dk, dk)
    else:
        left, right = np.zeros((dr, dk, dk), dtype=np.int64), None
    return XModAlg(boundary, AlgebraAction(R, S, left, right), name=name)


@dataclass
class XModCat1Iso:
    """Canonical isomorphism between an object and its image after a roundtrip."""

    original: object
    rebuilt: object
    morphism: object

    @property
    def is_bijective(self) -> bool:
        return self.morphism.is_bijective

    @property
    def structurally_equal(self) -> bool:
        return self.original == self.rebuilt


def roundtrip_iso_xmod(x: XModAlg) -> XModCat1Iso:
    """``x`` versus ``xmod_of_cat1(cat1_of_xmod(x))`` via ``a -> (0, a)`` and ``id_R``."""
    y = xmod_of_cat1(cat1_of_xmod(x))
    # ker s = {(0, a)} has echelon basis [0 | I], so coordinates agree with S's
    theta = AlgHom(x.source, y.source, la.identity(x.source.dim))
    phi = AlgHom(x.range, y.range, la.identity(x.range.dim))
    try:
        m = XModMorphism(x, y, theta, phi)
    except Exception as exc:
        raise EquivalenceError(f"crossed-module roundtrip witness failed: {exc}") from exc
    if not m.is_bijective:
        raise EquivalenceError("crossed-module roundtrip witness is not bijective")
    return XModCat1Iso(x, y, m)


def roundtrip_iso_cat1(c: Cat1Alg) -> XModCat1Iso:
    """``cat1_of_xmod(xmod_of_cat1(c))`` versus ``c`` via ``(r, a) -> e(r) + a``."""
    x = xmod_of_cat1(c)
    c2 = cat1_of_xmod(x)
    K = c.kernel_of_tail()
    R, A = c.range, c.source
    M = np.concatenate([c.embedding.matrix.reshape(A.dim, R.dim), K.basis.T.reshape(A.dim, K.dim)], axis=1)
    try:
        phiA = AlgHom(c2.source, A, M)
        m = Cat1Morphism(c2, c, phiA, identity_hom(R))
    except Exception as exc:
        raise EquivalenceError(f"cat1 roundtrip witness failed: {exc}") from exc
    if not m.is_bijective:
        raise EquivalenceError("cat1 roundtrip witness is not bijective")
    return XModCat1Iso(c, c2, m)
