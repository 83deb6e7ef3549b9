"""Dense linear algebra over a :class:`~avlrc.galois.GF` field.

Matrices are 2-D int64 numpy arrays of field elements.  Row operations are
vectorized across rows, so elimination costs O(rank) numpy calls.
"""

from __future__ import annotations

import numpy as np

from .galois import GF


def as_matrix(M, ncols: int | None = None) -> np.ndarray:
    M = np.asarray(M, dtype=np.int64)
    if M.ndim == 1:
        M = M[None, :] if M.size else np.zeros((0, ncols or 0), dtype=np.int64)
    return M


def rref(F: GF, M) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form with zero rows dropped, and the pivot columns."""
    A = as_matrix(M).copy()
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if len(nz) == 0:
            continue
        i = r + nz[0]
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = F.mul(A[r], F.inv(A[r, c]))
        coef = A[:, c].copy()
        coef[r] = 0
        touched = np.nonzero(coef)[0]
        if len(touched):
            A[touched] = F.sub(A[touched], F.mul(coef[touched, None], A[r][None, :]))
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(F: GF, M) -> int:
    return len(rref(F, M)[1])


def matmul(F: GF, A, B) -> np.ndarray:
    A, B = np.asarray(A, dtype=np.int64), np.asarray(B, dtype=np.int64)
    squeeze = B.ndim == 1
    if squeeze:
        B = B[:, None]
    out = np.zeros(A.shape[:-1] + B.shape[1:], dtype=np.int64)
    for i in range(A.shape[-1]):
        out = F.add(out, F.mul(A[..., i, None], B[i]))
    return out[..., 0] if squeeze else out


def nullspace(F: GF, M) -> np.ndarray:
    """Basis (as rows) of {x : M x = 0}."""
    A = as_matrix(M)
    n = A.shape[1]
    R, piv = rref(F, A)
    free = [c for c in range(n) if c not in set(piv)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for row, f in enumerate(free):
        basis[row, f] = 1
        for i, pc in enumerate(piv):
            basis[row, pc] = F.neg(R[i, f])
    return basis


def left_nullspace(F: GF, M) -> np.ndarray:
    """Basis (as rows) of {y : y M = 0}."""
    return nullspace(F, as_matrix(M).T)


def solve(F: GF, A, b) -> np.ndarray | None:
    """One solution x of A x = b, or None when the system is inconsistent."""
    A = as_matrix(A)
    b = np.asarray(b, dtype=np.int64)
    aug = np.concatenate([A, b[:, None]], axis=1)
    R, piv = rref(F, aug)
    n = A.shape[1]
    if piv and piv[-1] == n:
        return None
    x = np.zeros(n, dtype=np.int64)
    for i, pc in enumerate(piv):
        x[pc] = R[i, n]
    return x


def inverse(F: GF, A) -> np.ndarray:
    A = as_matrix(A)
    k = A.shape[0]
    if A.shape[1] != k:
        raise ValueError("matrix is not square")
    R, piv = rref(F, np.concatenate([A, np.eye(k, dtype=np.int64)], axis=1))
    if len(piv) < k or piv[k - 1] != k - 1:
        raise np.linalg.LinAlgError("singular matrix")
    return R[:k, k:]


def same_row_space(F: GF, A, B) -> bool:
    RA, _ = rref(F, A)
    RB, _ = rref(F, B)
    return RA.shape == RB.shape and np.array_equal(RA, RB)


class IncrementalBasis:
    """Echelon basis grown one vector at a time.

    ``reduce`` returns the residue of a vector against the current basis;
    a zero residue means the vector lies in the span.
    """

    def __init__(self, F: GF, dim: int):
        self.F = F
        self.dim = dim
        self.rows: list[np.ndarray] = []
        self.pivots: list[int] = []

    def __len__(self):
        return len(self.rows)

    def reduce(self, v) -> np.ndarray:
        F = self.F
        v = np.asarray(v, dtype=np.int64)
        for row, pc in zip(self.rows, self.pivots):
            c = v[pc]
            if c:
                v = F.sub(v, F.mul(c, row))
        return v

    def add(self, v) -> bool:
        r = self.reduce(v)
        nz = np.nonzero(r)[0]
        if len(nz) == 0:
            return False
        pc = int(nz[0])
        self.rows.append(self.F.mul(r, self.F.inv(r[pc])))
        self.pivots.append(pc)
        return True
