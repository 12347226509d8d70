"""Dense linear algebra over a FieldSpec on integer-code matrices."""

from __future__ import annotations

import numpy as np

from .ffield import FieldSpec


def asmat(M, ncols=None) -> np.ndarray:
    M = np.asarray(M, dtype=np.int64)
    if M.ndim == 1:
        M = M.reshape(1, -1) if M.size else np.zeros((0, ncols or 0), dtype=np.int64)
    if M.size == 0 and ncols is not None:
        M = M.reshape(M.shape[0], ncols)
    return M


def fdot(F: FieldSpec, A, B) -> np.ndarray:
    """Contract the last axis of ``A`` with the first axis of ``B``."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if F.is_prime_field:
        return np.tensordot(A, B, axes=1) % F.p
    n = A.shape[-1]
    out_shape = A.shape[:-1] + B.shape[1:]
    A2 = A.reshape(-1, n)
    B2 = B.reshape(n, -1)
    acc = np.zeros((A2.shape[0], B2.shape[1]), dtype=np.int64)
    for l in range(n):
        acc = F.add(acc, F.mul(A2[:, l, None], B2[None, l, :]))
    return acc.reshape(out_shape)


def fmatmul(F: FieldSpec, A, B) -> np.ndarray:
    """Batched matrix product (numpy ``@`` semantics)."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if F.is_prime_field:
        return np.matmul(A, B) % F.p
    n = A.shape[-1]
    acc = None
    for l in range(n):
        term = F.mul(A[..., :, l, None], B[..., None, l, :])
        acc = term if acc is None else F.add(acc, term)
    if acc is None:
        batch = np.broadcast_shapes(A.shape[:-2], B.shape[:-2])
        return np.zeros(batch + (A.shape[-2], B.shape[-1]), dtype=np.int64)
    return acc


def rref(F: FieldSpec, M, ncols=None):
    """Reduced row echelon form. Returns ``(R, pivots)`` with zero rows dropped."""
    R = asmat(M, ncols).copy()
    nrows, ncols = R.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            R[[r, i]] = R[[i, r]]
        R[r] = F.mul(R[r], F.inv(R[r, c]))
        factors = R[:, c].copy()
        factors[r] = 0
        rows = np.flatnonzero(factors)
        if rows.size:
            R[rows] = F.sub(R[rows], F.mul(factors[rows, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R[:r], pivots


def rank(F: FieldSpec, M) -> int:
    return len(rref(F, M)[1])


def row_space(F: FieldSpec, M, ncols=None) -> np.ndarray:
    return rref(F, M, ncols)[0]


def nullspace(F: FieldSpec, M, ncols=None) -> np.ndarray:
    """Basis (rows, in reduced echelon form) of ``{x : M x = 0}``."""
    M = asmat(M, ncols)
    n = M.shape[1]
    R, pivots = rref(F, M)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for t, fc in enumerate(free):
        basis[t, fc] = 1
        for i, pc in enumerate(pivots):
            basis[t, pc] = F.neg(R[i, fc])
    return rref(F, basis, n)[0]


def solve(F: FieldSpec, M, b):
    """One solution ``x`` of ``M x = b`` or ``None``."""
    M = asmat(M)
    b = np.asarray(b, dtype=np.int64).reshape(-1)
    n = M.shape[1]
    aug = np.concatenate([M, b[:, None]], axis=1)
    R, pivots = rref(F, aug)
    if n in pivots:
        return None
    x = np.zeros(n, dtype=np.int64)
    for i, pc in enumerate(pivots):
        x[pc] = R[i, n]
    return x


def reduce_against(F: FieldSpec, basis, pivots, v) -> np.ndarray:
    """Remainder of ``v`` (rows) after elimination by an rref ``basis``."""
    v = np.array(v, dtype=np.int64, copy=True)
    single = v.ndim == 1
    v = v.reshape(-1, basis.shape[1] if basis.size else v.shape[-1])
    for i, pc in enumerate(pivots):
        c = v[:, pc].copy()
        rows = np.flatnonzero(c)
        if rows.size:
            v[rows] = F.sub(v[rows], F.mul(c[rows, None], basis[i][None, :]))
    return v[0] if single else v


def in_span(F: FieldSpec, basis, pivots, v) -> np.ndarray | bool:
    r = reduce_against(F, basis, pivots, v)
    if r.ndim == 1:
        return not r.any()
    return ~r.any(axis=1)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def pivots_of(R) -> list[int]:
    """Pivot columns of a matrix already in reduced echelon form."""
    out = []
    for row in np.asarray(R):
        nz = np.flatnonzero(row)
        out.append(int(nz[0]))
    return out
