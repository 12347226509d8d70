"""Crossed modules of algebras.

A crossed module is a homomorphism ``d: S -> R`` with an action of R on S
such that ``d(r.s) = r d(s)`` (XModAlg1) and ``d(s).s' = s s'`` (XModAlg2).
Group algebras of non-abelian groups are not commutative, so actions are
two-sided and both axioms are checked on each side:
``d(s.r) = d(s) r`` and ``s.d(s') = s s'``.  For commutative data the right
action is the left one and the extra checks coincide with the usual ones.
"""

from __future__ import annotations

import numpy as np

from . import linalg as la
from .algebra import (
    Algebra,
    AlgebraAction,
    AlgebraError,
    Subspace,
    annihilator,
    inclusion_matrix,
    is_ideal,
    multiplication_action,
    multiplier_algebra,
)
from .homs import AlgHom, compose, identity_hom, inclusion_hom, restrict, zero_hom


class XModError(AlgebraError):
    def __init__(self, law, witness=None, message=None):
        self.law = law
        self.witness = witness
        text = message or f"{law} fails"
        if witness is not None and message is None:
            text += f" at basis indices {witness}"
        super().__init__(text)


def _first_bad(lhs, rhs, shape):
    bad = np.flatnonzero(np.any(np.asarray(lhs) != np.asarray(rhs), axis=-1))
    if bad.size == 0:
        return None
    return tuple(int(x) for x in np.unravel_index(int(bad[0]), shape))


class XModAlg:
    """A (pre)crossed module ``boundary: S -> R`` with an action of R on S."""

    def __init__(self, boundary: AlgHom, action: AlgebraAction, name=None, check: bool = True):
        S, R = boundary.source, boundary.target
        if not (action.acting.same_structure(R) and action.acted.same_structure(S)):
            raise XModError("shape", message="action does not match the boundary's range and source")
        self.boundary = boundary
        self.action = action
        self._name = name
        if check:
            w = self.xmod_witness()
            if w is not None:
                raise XModError(*w)

    @property
    def source(self) -> Algebra:
        return self.boundary.source

    @property
    def range(self) -> Algebra:
        return self.boundary.target

    @property
    def field(self):
        return self.source.field

    @property
    def name(self) -> str:
        return self._name or f"[{self.source.name}->{self.range.name}]"

    @name.setter
    def name(self, value):
        self._name = value

    @property
    def size(self) -> tuple[int, int]:
        return (self.source.size, self.range.size)

    def __repr__(self):
        return self.name

    # --- axioms ------------------------------------------------------------
    def pre_xmod_witness(self):
        """``(law, basis indices)`` of the first failing action law or XModAlg1, else ``None``."""
        w = self.action.violation()
        if w is not None:
            return (f"action law {w[0]}", w[1])
        S, R, d, act = self.source, self.range, self.boundary, self.action
        if S.dim == 0 or R.dim == 0:
            return None
        r = np.repeat(R.basis(), S.dim, axis=0)
        s = np.tile(S.basis(), (R.dim, 1))
        shape = (R.dim, S.dim)
        bad = _first_bad(d(act.act(r, s)), R.mul(r, d(s)), shape)
        if bad is not None:
            return ("XModAlg1: d(r.s) = r d(s)", bad)
        bad = _first_bad(d(act.act_right(s, r)), R.mul(d(s), r), shape)
        if bad is not None:
            return ("XModAlg1: d(s.r) = d(s) r", bad)
        return None

    def xmod_witness(self):
        w = self.pre_xmod_witness()
        if w is not None:
            return w
        S, d, act = self.source, self.boundary, self.action
        if S.dim == 0:
            return None
        s = np.repeat(S.basis(), S.dim, axis=0)
        t = np.tile(S.basis(), (S.dim, 1))
        shape = (S.dim, S.dim)
        prod = S.mul(s, t)
        bad = _first_bad(act.act(d(s), t), prod, shape)
        if bad is not None:
            return ("XModAlg2: d(s).s' = s s'", bad)
        bad = _first_bad(act.act_right(s, d(t)), prod, shape)
        if bad is not None:
            return ("XModAlg2: s.d(s') = s s'", bad)
        return None

    @property
    def is_pre_xmod(self) -> bool:
        return self.pre_xmod_witness() is None

    @property
    def is_xmod(self) -> bool:
        return self.xmod_witness() is None

    # --- derived data ------------------------------------------------------
    def boundary_image(self) -> Subspace:
        return self.boundary.image

    def __eq__(self, other):
        return (
            isinstance(other, XModAlg)
            and self.boundary == other.boundary
            and np.array_equal(self.action.left, other.action.left)
            and np.array_equal(self.action.right_tensor, other.action.right_tensor)
        )

    __hash__ = None

    def display(self) -> str:
        S, R = self.source, self.range
        src_gens = [S.format_element(v) for v in S.basis()]
        lines = [
            f"Crossed module {self.name} :-",
            f": Source algebra {S.name} has generators:",
            f"  [ {', '.join(src_gens)} ]",
            f": Range algebra {R.name} has generators:",
            f"  [ {', '.join(R.format_element(v) for v in R.basis())} ]",
            ": Boundary homomorphism maps source generators to:",
            f"  [ {', '.join(self.boundary.images_of(S.basis()))} ]",
        ]
        return "\n".join(lines)


# --- constructors ---------------------------------------------------------------

def xmod_by_boundary_and_action(boundary: AlgHom, action: AlgebraAction, name=None) -> XModAlg:
    return XModAlg(boundary, action, name=name)


def _as_subspace(a: Algebra, i) -> Subspace:
    if isinstance(i, Subspace):
        return i
    if isinstance(i, Algebra) and i.parent is not None:
        M = inclusion_matrix(i, a)
        if M is None:
            raise XModError("shape", message=f"{i.name} does not lie in {a.name}")
        return Subspace(a, M.T, check=False)
    raise XModError("shape", message="expected an ideal given as a subspace")


def xmod_by_ideal(a: Algebra, ideal, name=None) -> XModAlg:
    """The inclusion of an ideal with the multiplication action."""
    s = _as_subspace(a, ideal)
    if s.parent is not a and not s.parent.same_structure(a):
        raise XModError("shape", message="ideal does not belong to the given algebra")
    if not is_ideal(a, s):
        raise XModError("ideal", message="subspace is not a two-sided ideal")
    if s.dim == a.dim:
        S = a
        boundary = identity_hom(a)
        act = multiplication_action(a)
    else:
        S = s.as_algebra()
        boundary = inclusion_hom(S, a)
        act = multiplication_action(a, s)
    return XModAlg(boundary, act, name=name)


def xmod_by_module(action: AlgebraAction, name=None) -> XModAlg:
    """``0: M -> R`` for an R-module M, viewed as an algebra with zero product."""
    M, R = action.acted, action.acting
    if M.structure.any():
        raise XModError("XModAlg2", message=f"{M.name} has nonzero multiplication; a module needs M M = 0")
    return XModAlg(zero_hom(M, R), action, name=name)


def xmod_by_central_extension(d: AlgHom, name=None) -> XModAlg:
    """A surjection ``d: S -> R`` with ``R`` acting through preimages: ``r.s = r~ s``.

    The action is well defined exactly when ``ker(d) S = 0`` (and
    ``S ker(d) = 0`` for the right action).
    """
    S, R = d.source, d.target
    F = S.field
    if not d.is_surjective:
        raise XModError("surjectivity", message="boundary of a central extension must be surjective")
    K = d.kernel
    if K.dim and S.dim:
        X = np.repeat(K.basis, S.dim, axis=0)
        Y = np.tile(S.basis(), (K.dim, 1))
        for side, prods in (("ker(d) S = 0", S.mul(X, Y)), ("S ker(d) = 0", S.mul(Y, X))):
            bad = np.flatnonzero(prods.any(axis=1))
            if bad.size:
                t = int(bad[0])
                raise XModError(side, (t // S.dim, t % S.dim), message=(
                    f"action is not well defined: {side} fails for kernel vector "
                    f"{S.format_element(K.basis[t // S.dim])} and {S.labels[t % S.dim]}"
                ))
    section = np.array([la.solve(F, d.matrix, e) for e in R.basis()], dtype=np.int64).reshape(R.dim, S.dim)
    if R.dim and S.dim:
        r = np.repeat(section, S.dim, axis=0)
        s = np.tile(S.basis(), (R.dim, 1))
        left = S.mul(r, s).reshape(R.dim, S.dim, S.dim)
        right = None if S.is_commutative else S.mul(s, r).reshape(R.dim, S.dim, S.dim)
    else:
        left = np.zeros((R.dim, S.dim, S.dim), dtype=np.int64)
        right = None
    return XModAlg(d, AlgebraAction(R, S, left, right), name=name)


def xmod_by_multiplier(s, name=None) -> XModAlg:
    """``S -> M(S)``, with multipliers acting by evaluation."""
    M, canon = multiplier_algebra(s)
    S = canon.source
    mats = M.multiplier_matrices
    left = mats.transpose(0, 2, 1) if M.dim else np.zeros((0, S.dim, S.dim), dtype=np.int64)
    return XModAlg(canon, AlgebraAction(M, S, left), name=name)


# --- sub-crossed modules -----------------------------------------------------------

def sub_xmod(x: XModAlg, s_sub: Subspace, r_sub: Subspace, name=None) -> XModAlg:
    """Restriction of ``x`` to a subalgebra of S and a subalgebra of R."""
    S, R = x.source, x.range
    if s_sub.parent.dim != S.dim or r_sub.parent.dim != R.dim:
        raise XModError("shape", message="subspaces do not belong to the crossed module's algebras")
    if not s_sub.is_closed():
        raise XModError("subalgebra", message="source subspace is not a subalgebra")
    if not r_sub.is_closed():
        raise XModError("subalgebra", message="range subspace is not a subalgebra")
    if s_sub.dim:
        img = x.boundary(s_sub.basis)
        ok = np.atleast_1d(r_sub.contains(img))
        if not ok.all():
            j = int(np.flatnonzero(~ok)[0])
            raise XModError("d(S') in R'", (j,), message=f"boundary of source basis vector {j} leaves the range subalgebra")
    ds, dr = s_sub.dim, r_sub.dim
    if ds and dr:
        r = np.repeat(r_sub.basis, ds, axis=0)
        s = np.tile(s_sub.basis, (dr, 1))
        sides = [("R'.S' in S'", x.action.act(r, s))]
        if not x.action.symmetric:
            sides.append(("S'.R' in S'", x.action.act_right(s, r)))
        for law, prods in sides:
            ok = np.atleast_1d(s_sub.contains(prods))
            if not ok.all():
                t = int(np.flatnonzero(~ok)[0])
                raise XModError(law, (t // ds, t % ds))
        left = s_sub.coords(sides[0][1]).reshape(dr, ds, ds)
        right = None if x.action.symmetric else s_sub.coords(sides[1][1]).reshape(dr, ds, ds)
    else:
        left, right = np.zeros((dr, ds, ds), dtype=np.int64), None
    S2 = S if ds == S.dim else s_sub.as_algebra()
    R2 = R if dr == R.dim else r_sub.as_algebra()
    boundary = restrict(x.boundary, S2, R2)
    return XModAlg(boundary, AlgebraAction(R2, S2, left, right), name=name)


def is_sub_xmod(x: XModAlg, y: XModAlg) -> bool:
    """True iff ``y`` sits inside ``x`` with the restricted boundary and action."""
    iS = inclusion_matrix(y.source, x.source)
    iR = inclusion_matrix(y.range, x.range)
    if iS is None or iR is None:
        return False
    F = x.field
    ds, dr = y.source.dim, y.range.dim
    if ds == 0:
        return True
    # boundary: iR d_y = d_x iS
    lhs = la.fdot(F, iR, y.boundary.matrix) if dr else np.zeros((x.range.dim, ds), dtype=np.int64)
    rhs = la.fdot(F, x.boundary.matrix, iS) if x.source.dim else np.zeros((x.range.dim, ds), dtype=np.int64)
    if not np.array_equal(lhs, rhs):
        return False
    if dr == 0:
        return True
    r = np.repeat(y.range.basis(), ds, axis=0)
    s = np.tile(y.source.basis(), (dr, 1))
    R_big, S_big = la.fdot(F, r, iR.T), la.fdot(F, s, iS.T)
    if not np.array_equal(la.fdot(F, y.action.act(r, s), iS.T), x.action.act(R_big, S_big)):
        return False
    return bool(np.array_equal(la.fdot(F, y.action.act_right(s, r), iS.T), x.action.act_right(S_big, R_big)))


# --- morphisms -------------------------------------------------------------------

class XModMorphism:
    """A pair ``(theta: S -> S', phi: R -> R')`` commuting with boundaries and actions."""

    def __init__(self, source: XModAlg, target: XModAlg, theta: AlgHom, phi: AlgHom, check: bool = True):
        if not (theta.source.same_structure(source.source) and theta.target.same_structure(target.source)):
            raise XModError("shape", message="theta must map source S to target S'")
        if not (phi.source.same_structure(source.range) and phi.target.same_structure(target.range)):
            raise XModError("shape", message="phi must map source R to target R'")
        self.source = source
        self.target = target
        self.theta = theta
        self.phi = phi
        if check:
            w = self.witness()
            if w is not None:
                raise XModError(*w)

    @property
    def source_hom(self) -> AlgHom:
        return self.theta

    @property
    def range_hom(self) -> AlgHom:
        return self.phi

    def witness(self):
        X, Y = self.source, self.target
        F = X.field
        S, R = X.source, X.range
        if S.dim:
            lhs = self.phi(X.boundary(S.basis()))
            rhs = Y.boundary(self.theta(S.basis()))
            bad = _first_bad(lhs, rhs, (S.dim,))
            if bad is not None:
                return ("phi d = d' theta", bad)
        if S.dim and R.dim:
            r = np.repeat(R.basis(), S.dim, axis=0)
            s = np.tile(S.basis(), (R.dim, 1))
            shape = (R.dim, S.dim)
            bad = _first_bad(self.theta(X.action.act(r, s)), Y.action.act(self.phi(r), self.theta(s)), shape)
            if bad is not None:
                return ("theta(r.s) = phi(r).theta(s)", bad)
            bad = _first_bad(self.theta(X.action.act_right(s, r)), Y.action.act_right(self.theta(s), self.phi(r)), shape)
            if bad is not None:
                return ("theta(s.r) = theta(s).phi(r)", bad)
        return None

    @property
    def is_pre_xmod_morphism(self) -> bool:
        return self.witness() is None and self.source.is_pre_xmod and self.target.is_pre_xmod

    @property
    def is_xmod_morphism(self) -> bool:
        return self.witness() is None and self.source.is_xmod and self.target.is_xmod

    @property
    def is_injective(self) -> bool:
        return self.theta.is_injective and self.phi.is_injective

    @property
    def is_surjective(self) -> bool:
        return self.theta.is_surjective and self.phi.is_surjective

    @property
    def is_bijective(self) -> bool:
        return self.is_injective and self.is_surjective

    def kernel(self) -> XModAlg:
        """``ker theta -> ker phi`` as a sub-crossed module of the source."""
        return sub_xmod(self.source, self.theta.kernel, self.phi.kernel)

    def image(self) -> XModAlg:
        """``im theta -> im phi`` as a sub-crossed module of the target."""
        return sub_xmod(self.target, self.theta.image, self.phi.image)

    def __repr__(self):
        return f"[{self.source.name} => {self.target.name}]"


def xmod_morphism(x, y, theta, phi) -> XModMorphism:
    return XModMorphism(x, y, theta, phi)


def is_xmod_morphism(x, y, theta, phi) -> bool:
    try:
        m = XModMorphism(x, y, theta, phi, check=False)
    except XModError:
        return False
    return m.is_xmod_morphism


def identity_morphism(x: XModAlg) -> XModMorphism:
    return XModMorphism(x, x, identity_hom(x.source), identity_hom(x.range))


def compose_morphisms(g: XModMorphism, f: XModMorphism) -> XModMorphism:
    return XModMorphism(f.source, g.target, compose(g.theta, f.theta), compose(g.phi, f.phi))


def kernel_annihilation_holds(x: XModAlg) -> bool:
    """``d(s).k = s k`` for basis s and every basis vector k of ``ker d``."""
    K = x.boundary.kernel
    S = x.source
    if K.dim == 0 or S.dim == 0:
        return True
    s = np.repeat(S.basis(), K.dim, axis=0)
    k = np.tile(K.basis, (S.dim, 1))
    return bool(np.array_equal(x.action.act(x.boundary(s), k), S.mul(s, k)))


__all__ = [
    "XModAlg",
    "XModError",
    "XModMorphism",
    "annihilator",
    "compose_morphisms",
    "identity_morphism",
    "is_sub_xmod",
    "is_xmod_morphism",
    "kernel_annihilation_holds",
    "sub_xmod",
    "xmod_by_boundary_and_action",
    "xmod_by_central_extension",
    "xmod_by_ideal",
    "xmod_by_module",
    "xmod_by_multiplier",
    "xmod_morphism",
]
