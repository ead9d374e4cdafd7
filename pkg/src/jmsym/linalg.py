"""Exact linear algebra over F_p (numpy int64) and QQ (sympy DomainMatrix)."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix


def fp_rref(M, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_p and the pivot columns."""
    A = np.array(M, dtype=np.int64) % p
    if A.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if len(nz) == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        col = A[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if len(nzr):
            A[nzr] = (A[nzr] - np.outer(col[nzr], A[r])) % p
        pivots.append(c)
        r += 1
    return A, pivots


def fp_rank(M, p: int) -> int:
    A = np.array(M, dtype=np.int64)
    if A.size == 0:
        return 0
    # eliminate along the shorter side
    if A.shape[0] > A.shape[1]:
        A = A.T
    return len(fp_rref(A, p)[1])


def fp_inverse(M, p: int) -> np.ndarray:
    A = np.array(M, dtype=np.int64) % p
    k = A.shape[0]
    R, piv = fp_rref(np.hstack([A, np.eye(k, dtype=np.int64)]), p)
    if piv[:k] != list(range(k)):
        raise np.linalg.LinAlgError(f"matrix is singular mod {p}")
    return R[:, k:]


def fp_nullspace(M, p: int) -> np.ndarray:
    """Basis (as rows) of {x : M x = 0} over F_p."""
    A = np.array(M, dtype=np.int64) % p
    cols = A.shape[1]
    R, piv = fp_rref(A, p)
    free = [c for c in range(cols) if c not in set(piv)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, c in enumerate(piv):
            basis[i, c] = -R[r, f] % p
    return basis


@dataclass
class PrimeFieldMatrix:
    entries: np.ndarray
    p: int

    @property
    def shape(self):
        return self.entries.shape

    def rank(self) -> int:
        return fp_rank(self.entries, self.p)


def _qq(x):
    x = Fraction(x)
    return QQ(x.numerator, x.denominator)


def q_matrix(rows) -> DomainMatrix:
    rows = [list(r) for r in rows]
    ncols = len(rows[0]) if rows else 0
    return DomainMatrix([[_qq(x) for x in r] for r in rows], (len(rows), ncols), QQ)


def q_rank(rows) -> int:
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    return q_matrix(rows).rank()


def q_nullspace(rows) -> list[list[Fraction]]:
    """Basis of {x : M x = 0} over QQ, as lists of Fractions."""
    M = q_matrix(rows)
    ns = M.nullspace()
    return [[Fraction(int(x.numerator), int(x.denominator)) for x in r] for r in ns.to_list()]


def q_inverse_integral(rows) -> np.ndarray:
    """Inverse of a unimodular integer matrix, as an object array of ints."""
    M = DomainMatrix([[ZZ(int(x)) for x in r] for r in rows], (len(rows), len(rows)), ZZ)
    inv = M.to_field().inv()
    out = np.empty((len(rows), len(rows)), dtype=object)
    for i, r in enumerate(inv.to_list()):
        for j, x in enumerate(r):
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular")
            out[i, j] = int(x.numerator)
    return out


def q_solve_rows(basis_rows, target) -> list[Fraction] | None:
    """Coefficients c with sum c_i basis_rows[i] = target, or None if not in the span."""
    rows = [list(r) for r in basis_rows]
    k = len(rows)
    # columns: unknowns c_i; equations per coordinate
    A = [[rows[i][j] for i in range(k)] + [target[j]] for j in range(len(target))]
    R, piv = q_matrix(A).rref()
    if k in piv:
        return None
    R = R.to_list()
    sol = [Fraction(0)] * k
    for r, c in enumerate(piv):
        x = R[r][k]
        sol[c] = Fraction(int(x.numerator), int(x.denominator))
    return sol
