"""Small algebras shared by the test modules."""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from xalg import Algebra, catalog, field_make, group_algebra, xmod_by_ideal
from xalg.algebra import zero_algebra
from xalg.census import enumerate_cat1_structures

CRITERION1_ROWS = [
    (2, (1, 1), (2, 2, 1)),
    (3, (1, 1), (2, 2, 1)),
    (2, (2, 1), (3, 3, 2)),
    (3, (2, 1), (9, 6, 3)),
    (4, (2, 1), (5, 3, 2)),
    (2, (3, 1), (8, 5, 1)),
    (3, (3, 1), (10, 3, 1)),
    (4, (3, 1), (64, 23, 7)),
    (2, (4, 1), (9, 3, 1)),
    (3, (4, 1), (45, 18, 3)),
    (2, (4, 2), (65, 15, 13)),
    (2, (5, 1), (12, 5, 1)),
    (2, (6, 2), (39, 14, 4)),
    (2, (9, 1), (80, 17, 1)),
    (2, (9, 2), (20000, 809, 73)),
]

SMALL_GROUPS = [(1, 1), (2, 1), (3, 1), (4, 1), (4, 2), (5, 1), (6, 1), (6, 2)]


def _tensor(d, rules):
    C = np.zeros((d, d, d), dtype=np.int64)
    for (i, j), (k, c) in rules.items():
        C[i, j, k] = c
    return C


def truncated_poly(F, n, name=None):
    """F[x]/x^n with basis 1, x, .., x^(n-1)."""
    rules = {(i, j): (i + j, 1) for i in range(n) for j in range(n) if i + j < n}
    return Algebra(F, _tensor(n, rules), labels=["1"] + [f"x^{i}" for i in range(1, n)], name=name or f"{F.name}[x]/x^{n}")


def nilpotent_poly(F):
    """x F[x]/x^3 = span{x, x^2}: non-unital, cube zero."""
    return Algebra(F, _tensor(2, {(0, 0): (1, 1)}), labels=["x", "x^2"], unit=None, name=f"x{F.name}[x]/x^3")


def product_field(F, n):
    """F^n with orthogonal idempotent basis."""
    return Algebra(F, _tensor(n, {(i, i): (i, 1) for i in range(n)}), labels=[f"e{i}" for i in range(n)], name=f"{F.name}^{n}")


def upper_triangular(F):
    """Upper triangular 2x2 matrices, basis e11, e12, e22."""
    rules = {(0, 0): (0, 1), (0, 1): (1, 1), (1, 2): (1, 1), (2, 2): (2, 1)}
    return Algebra(F, _tensor(3, rules), labels=["e11", "e12", "e22"], name=f"T2({F.name})")


def row_ideal(F):
    """span{e11, e12} inside T2: non-commutative and non-unital."""
    return Algebra(F, _tensor(2, {(0, 0): (0, 1), (0, 1): (1, 1)}), labels=["e11", "e12"], unit=None, name=f"R2({F.name})")


def dual_numbers_times_field(F):
    """F[x]/x^2 x F with basis (1,0), (x,0), (0,1)."""
    rules = {(0, 0): (0, 1), (0, 1): (1, 1), (1, 0): (1, 1), (2, 2): (2, 1)}
    return Algebra(F, _tensor(3, rules), labels=["u", "x", "v"], name=f"{F.name}[x]/x^2 x {F.name}")


@lru_cache(maxsize=None)
def algebra_classes(p: int, n: int) -> tuple:
    """One structure tensor per isomorphism class of associative n-dim algebras over GF(p).

    Exhaustive over all p^(n^3) tensors, so only practical for n <= 2.
    """
    T = np.array(list(itertools.product(range(p), repeat=n**3)), dtype=np.int64).reshape(-1, n, n, n)
    lhs = np.einsum("aijm,amkl->aijkl", T, T) % p
    rhs = np.einsum("ajkm,aiml->aijkl", T, T) % p
    T = T[(lhs == rhs).reshape(len(T), -1).all(axis=1)]
    mats = [np.array(g, dtype=np.int64).reshape(n, n) for g in itertools.product(range(p), repeat=n * n)]
    eye = np.eye(n, dtype=np.int64)
    gl = []
    for g in mats:
        h = next((h for h in mats if np.array_equal(g @ h % p, eye)), None)
        if h is not None:
            gl.append((g, h))
    seen, reps = set(), []
    for C in T:
        if C.tobytes() in seen:
            continue
        # new basis b'_i = sum_r g[r, i] b_r, and b_k = sum_l h[l, k] b'_l
        seen.update((np.einsum("ri,sj,rsk,lk->ijl", g, g, C, h) % p).tobytes() for g, h in gl)
        reps.append(C)
    return tuple(reps)


@lru_cache(maxsize=None)
def small_algebras(p: int) -> tuple:
    """Algebras for the hom oracle: every class of dimension <= 2, plus a dimension-3 list."""
    F = field_make(p)
    algs = [zero_algebra(F, 0)]
    for n in (1, 2):
        algs += [Algebra(F, C, name=f"A{n}.{i}") for i, C in enumerate(algebra_classes(p, n))]
    algs += [
        zero_algebra(F, 3),
        group_algebra(F, catalog((3, 1))),
        truncated_poly(F, 3),
        product_field(F, 3),
        upper_triangular(F),
        dual_numbers_times_field(F),
    ]
    return tuple(algs)


def all_ideals(A) -> list:
    """Every two-sided ideal of A, as sums of principal ideals, in (dim, basis) order."""
    from xalg.algebra import span_closure

    principal = {}
    for v in A.elements():
        P = span_closure(A, [v], kind="ideal")
        principal.setdefault(P.key(), P)
    found = {A.zero_subspace.key(): A.zero_subspace}
    frontier = list(found.values())
    while frontier:
        nxt = []
        for I in frontier:
            for P in principal.values():
                J = I.sum(P)
                if J.key() not in found:
                    found[J.key()] = span_closure(A, J.basis, kind="ideal")
                    nxt.append(found[J.key()])
        frontier = nxt
    return sorted(found.values(), key=lambda I: (I.dim, I.basis.tolist()))


@lru_cache(maxsize=None)
def xmod_corpus() -> tuple:
    """xmod_by_ideal for every two-sided ideal of FG, F = GF(2), GF(3), |G| <= 6."""
    out = []
    for p in (2, 3):
        F = field_make(p)
        for g in SMALL_GROUPS:
            A = group_algebra(F, catalog(g))
            for I in all_ideals(A):
                out.append(xmod_by_ideal(A, I))
    return tuple(out)


@lru_cache(maxsize=None)
def cat1_corpus() -> tuple:
    """All cat1 structures produced by the census on the criterion-1 rows."""
    out = []
    for q, gid, _ in CRITERION1_ROWS:
        F = field_make(*_prime_power(q))
        A = group_algebra(F, catalog(gid))
        out.extend(enumerate_cat1_structures(A)[1])
    return tuple(out)


def _prime_power(q):
    from xalg.ffield import prime_power

    return prime_power(q)
