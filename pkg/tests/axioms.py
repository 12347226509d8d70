"""Axiom checks written directly against structure constants and field tables.

These deliberately avoid the library's bilinear kernels, witnesses and
linear algebra so they serve as an independent route for the property suite.
"""

from __future__ import annotations

import numpy as np


def lin(F, coeffs, vectors):
    """sum_i coeffs[i] * vectors[i] using only the field's add/mul."""
    n = vectors.shape[-1]
    acc = np.zeros(n, dtype=np.int64)
    for c, v in zip(coeffs, vectors):
        if c:
            acc = F.add(acc, F.mul(int(c), v))
    return np.asarray(acc, dtype=np.int64)


def mulvec(F, C, x, y):
    """Product of coordinate vectors under structure tensor C."""
    d = C.shape[2]
    acc = np.zeros(d, dtype=np.int64)
    for i in np.flatnonzero(x):
        for j in np.flatnonzero(y):
            acc = F.add(acc, F.mul(int(F.mul(int(x[i]), int(y[j]))), C[i, j]))
    return np.asarray(acc, dtype=np.int64)


def apply(F, M, x):
    return lin(F, x, M.T)


def e(n, i):
    v = np.zeros(n, dtype=np.int64)
    v[i] = 1
    return v


def xmod_violations(x) -> list:
    """Every failing basis instance of the action laws, XModAlg1 and XModAlg2 (both sides)."""
    F = x.field
    S, R = x.source, x.range
    CS, CR = S.structure, R.structure
    M = x.boundary.matrix.reshape(R.dim, S.dim)
    L = x.action.left
    Rt = x.action.right if x.action.right is not None else L
    ds, dr = S.dim, R.dim
    bad = []

    def act(T, r, s):  # r . s (or s . r via the right tensor) on coordinate vectors
        return mulvec(F, T, r, s) if ds else np.zeros(0, dtype=np.int64)

    for i in range(dr):
        for j in range(ds):
            dj = M[:, j]
            if not np.array_equal(apply(F, M, L[i, j]), mulvec(F, CR, e(dr, i), dj)):
                bad.append(("XModAlg1 left", i, j))
            if not np.array_equal(apply(F, M, Rt[i, j]), mulvec(F, CR, dj, e(dr, i))):
                bad.append(("XModAlg1 right", i, j))
    for a in range(ds):
        for b in range(ds):
            ss = CS[a, b]
            if not np.array_equal(act(L, M[:, a], e(ds, b)), ss):
                bad.append(("XModAlg2 left", a, b))
            if not np.array_equal(act(Rt, M[:, b], e(ds, a)), ss):
                bad.append(("XModAlg2 right", a, b))
    # (r r') . s = r . (r' . s)
    for i in range(dr):
        for k in range(dr):
            rr = CR[i, k]
            for j in range(ds):
                if not np.array_equal(act(L, rr, e(ds, j)), act(L, e(dr, i), L[k, j])):
                    bad.append(("action associativity", i, k, j))
    return bad


def cat1_violations(c) -> list:
    """Every failing basis instance of Cat1Alg1 and Cat1Alg2 (both orders)."""
    F = c.field
    A, R = c.source, c.range
    da, dr = A.dim, R.dim
    S = c.tail.matrix.reshape(dr, da)
    T = c.head.matrix.reshape(dr, da)
    E = c.embedding.matrix.reshape(da, dr)
    bad = []
    for j in range(dr):
        ej = E[:, j]
        if not np.array_equal(apply(F, S, ej), e(dr, j)):
            bad.append(("Cat1Alg1 s e", j))
        if not np.array_equal(apply(F, T, ej), e(dr, j)):
            bad.append(("Cat1Alg1 t e", j))
    if bad:
        return bad
    # ker s is spanned by a - e s(a), ker t by b - e t(b)
    ks = [F.sub(e(da, a), apply(F, E, S[:, a])) for a in range(da)]
    kt = [F.sub(e(da, b), apply(F, E, T[:, b])) for b in range(da)]
    C = A.structure
    for a in range(da):
        for b in range(da):
            if np.any(mulvec(F, C, ks[a], kt[b])):
                bad.append(("Cat1Alg2 (ker s)(ker t)", a, b))
            if np.any(mulvec(F, C, kt[b], ks[a])):
                bad.append(("Cat1Alg2 (ker t)(ker s)", b, a))
    return bad
