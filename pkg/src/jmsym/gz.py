"""The Gelfand-Zetlin subalgebra and the induction theorem, checked over QQ.

Linear algebra here works on coefficient vectors of length n!.  Left
multiplication by a transposition permutes the standard basis symmetrically,
so for a JM polynomial f the operator x -> f x is a symmetric matrix and
the common kernel of several such operators A_i is the kernel of sum A_i^2.
The same trick gives rank(R) = rank(R^T R) for the integer matrices below.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

import numpy as np
from sympy import ZZ
from sympy.matrices.normalforms import invariant_factors
from sympy.polys.matrices import DomainMatrix

from .algebra import Element, group
from .errors import PreconditionError
from .linalg import fp_nullspace, fp_rank, q_matrix, q_nullspace, q_rank
from .report import Report
from .seminormal import idempotent_E_t
from .tableaux import (Partition, all_standard_tableaux, enumerate_partitions, highest_tableau,
                       standard_tableaux)


def left_matrix(a: Element) -> np.ndarray:
    """Row w is the vector of a*w, so (a x).num = x.num @ left_matrix(a)."""
    G = group(a.n)
    return np.array([a.right_perm(w).num for w in G.perms], dtype=object)


def right_matrix(a: Element) -> np.ndarray:
    """Row w is the vector of w*a."""
    G = group(a.n)
    return np.array([a.left_perm(w).num for w in G.perms], dtype=object)


def _gram(R: np.ndarray) -> np.ndarray:
    return R.T @ R


def _rref_basis(rows) -> tuple[list[list[Fraction]], list[int]]:
    M = q_matrix(rows)
    R, piv = M.rref()
    R = R.to_list()
    basis = [[Fraction(int(x.numerator), int(x.denominator)) for x in R[i]] for i in range(len(piv))]
    return basis, list(piv)


def _in_span(v: Element, basis, pivots) -> bool:
    """Is v in the row space of the reduced echelon ``basis``?  Since the basis is the identity
    on the pivot columns, v lies in the span iff v = v[pivots] @ basis."""
    if not basis:
        return v.is_zero()
    D = lcm(*(x.denominator for row in basis for x in row))
    B = np.array([[x.numerator * (D // x.denominator) for x in row] for row in basis], dtype=object)
    return np.array_equal(v.num[pivots] @ B, v.num * D)


def gz_dimension_Q(n: int) -> int:
    return gz_closure(n)[0]


def gz_closure(n: int) -> tuple[int, int]:
    """(dimension, degree at which the span stabilised) of the algebra generated by L_1..L_n."""
    if n > 5:
        raise PreconditionError("gz_dimension_Q is capped at n <= 5")
    one = Element.one(n)
    basis = [one]
    frontier = [one]
    degree = 0
    while frontier and degree < n * (n - 1) // 2:
        degree += 1
        new = []
        for a in frontier:
            for k in range(2, n + 1):
                b = a.left_jm(k)
                if q_rank([x.vector() for x in basis + new + [b]]) > len(basis) + len(new):
                    new.append(b)
        basis += new
        frontier = new
    return len(basis), degree


@dataclass
class EigenspaceResult:
    lam: Partition
    basis: list[Element] = field(repr=False)
    dim: int = 0


def _eigen_operators(lam, p=None):
    lam = Partition(lam)
    tl = highest_tableau(lam)
    return [Element.jm(k, lam.n, p) - tl.content(k) for k in range(1, lam.n + 1)]


def eigenspace(lam, p=None) -> EigenspaceResult:
    """{x : L_i x = r_lambda(i) x for all i}; over F_p the result is only reported."""
    lam = Partition(lam)
    if lam.n > 5:
        raise PreconditionError("eigenspace is capped at n <= 5")
    n = lam.n
    ops = _eigen_operators(lam, p)
    if p is None:
        S = sum(_gram(left_matrix(f).T) for f in ops)
        ns = q_nullspace(S.tolist())
        basis = [Element.from_terms(n, zip(group(n).perms, v)) for v in ns]
    else:
        stacked = np.vstack([left_matrix(f).T.astype(np.int64) for f in ops])
        ns = fp_nullspace(stacked, p)
        basis = [Element.from_terms(n, zip(group(n).perms, v), p) for v in ns]
    return EigenspaceResult(lam, basis, len(basis))


def z_lambda_span(lam) -> np.ndarray:
    from .cellular import z_lambda
    return left_matrix(z_lambda(lam)).astype(object)


def eigenspace_check(lam, primes=(2, 3)) -> Report:
    from .cellular import z_lambda

    lam = Partition(lam)
    rep = Report(f"eigenspace {lam}")
    res = eigenspace(lam)
    f = len(standard_tableaux(lam))
    rep.add("dim eigenspace = |Std(lambda)|", lam, f, res.dim)
    ok = all((op * b).is_zero() for b in res.basis for op in _eigen_operators(lam))
    rep.add("eigen-equations hold", lam, True, ok)
    Z = z_lambda_span(lam)
    rz = q_rank(_gram(Z).tolist())
    rep.add("dim z_lambda QS_n", lam, f, rz)
    both = q_rank([b.vector() for b in res.basis] + Z.tolist())
    rep.add("eigenspace = z_lambda QS_n", lam, f, both)
    for p in primes:
        # z_lambda Z_(p) S_n is saturated iff its spanning set keeps full rank mod p
        rep.add("z_lambda QS_n cap Z_(p)S_n in z_lambda Z_(p)S_n", f"{lam} p={p}", f,
                fp_rank(np.array(Z % p, dtype=np.int64), p))
        rep.data[f"F_{p} eigenspace dim"] = eigenspace(lam, p).dim
    rep.data["z_lambda"] = z_lambda(lam).dumps()
    return rep


def lgz_matrix(lam) -> np.ndarray:
    """Rows w (L_i - r_lambda(i)) spanning LGZ_lambda = sum_i QS_n (L_i - r_lambda(i))."""
    return np.vstack([right_matrix(f) for f in _eigen_operators(lam)])


def elementary_divisors(R: np.ndarray) -> list[int]:
    M = DomainMatrix([[ZZ(int(x)) for x in row] for row in R.tolist()], R.shape, ZZ)
    return [int(d) for d in invariant_factors(M.to_Matrix()) if d != 0]


def induction_check(lam, primes=(2, 3), snf_max_n: int = 4) -> Report:
    """dim QS_n / LGZ_lambda = |Std(lambda)|, the JM character of the quotient, ev_lambda(E_t),
    and the p-torsion of the integral quotient."""
    lam = Partition(lam)
    n = lam.n
    if n > 5:
        raise PreconditionError("induction_check is capped at n <= 5")
    rep = Report(f"induction {lam}")
    N = group(n).order
    R = lgz_matrix(lam)
    basis, piv = _rref_basis(_gram(R).tolist())
    f = len(standard_tableaux(lam))
    rep.add("dim QS_n/LGZ_lambda = |Std(lambda)|", lam, f, N - len(basis))
    for k in range(2, n + 1):
        # trace of L_k on the whole algebra is 0, so the quotient trace is minus the trace on LGZ
        tr = Fraction(0)
        for b, c in zip(basis, piv):
            e = Element.from_terms(n, zip(group(n).perms, b))
            tr += e.left_jm(k).vector()[c]
        expected = sum(t.content(k) for t in standard_tableaux(lam))
        rep.add("trace of L_k on the quotient", f"{lam} k={k}", expected, -tr)
    tl = highest_tableau(lam)
    one = Element.one(n)
    for t in all_standard_tableaux(n):
        delta = 1 if t == tl else 0
        rep.add("ev_lambda(E_t) = delta", f"{lam} {t!r}", True,
                _in_span(idempotent_E_t(t) - one * delta, basis, piv))
    rq = len(basis)
    for p in primes:
        rep.data[f"torsion rank p={p}"] = rq - fp_rank(np.array(R % p, dtype=np.int64), p)
    if n <= snf_max_n:
        rep.data["elementary divisors"] = [d for d in elementary_divisors(R) if d != 1]
    return rep


def cell_action(lam) -> dict[int, list[list[Fraction]]]:
    """Matrices of sigma_k on C(lambda) in the basis x_{s lambda}: column s is sigma_k x_{s lambda}."""
    from .cellular import expand_in_murphy_basis, x_st

    lam = Partition(lam)
    tl = highest_tableau(lam)
    tabs = standard_tableaux(lam)
    n = lam.n
    out = {}
    for k in range(2, n + 1):
        cols = []
        for s in tabs:
            ex = expand_in_murphy_basis(Element.sigma(k, n) * x_st(s, tl))
            cols.append([ex[(u, tl)] for u in tabs])
        out[k] = [[cols[j][i] for j in range(len(tabs))] for i in range(len(tabs))]
    return out


def universal_property_check(lam, M: list[Element]) -> Report:
    """dim Hom(C(lambda), M) = dim {m in M : L_i m = r_lambda(i) m}.

    M is a list of elements spanning a left ideal of QS_n."""
    lam = Partition(lam)
    n = lam.n
    if n > 4:
        raise PreconditionError("universal_property_check is capped at n <= 4")
    rep = Report(f"universal {lam}")
    Mb, _ = _rref_basis([m.vector() for m in M])
    d = len(Mb)
    perms = group(n).perms
    Me = [Element.from_terms(n, zip(perms, b)) for b in Mb]
    closed = q_rank(Mb + [(Element.sigma(k, n) * m).vector() for m in Me for k in range(2, n + 1)]) == d
    rep.add("M is a left ideal", lam, True, closed)
    # eigenspace inside M: coefficients c with sum c_j (L_i - r_i) b_j = 0
    ops = _eigen_operators(lam)
    eq = [[(op * b).vector()[w] for b in Me] for op in ops for w in range(len(perms))]
    eig = d - q_rank(eq) if d else 0
    # module maps: images m_s = sum_j a_{s j} b_j with sigma_k m_s = sum_u rho_k[u][s] m_u
    tabs = standard_tableaux(lam)
    f = len(tabs)
    act = cell_action(lam)
    sigma_b = {k: [(Element.sigma(k, n) * b).vector() for b in Me] for k in range(2, n + 1)}
    rows = []
    for k in range(2, n + 1):
        rho = act[k]
        for s in range(f):
            for w in range(len(perms)):
                row = [Fraction(0)] * (f * d)
                for j in range(d):
                    row[s * d + j] += sigma_b[k][j][w]
                    for u in range(f):
                        if rho[u][s]:
                            row[u * d + j] -= rho[u][s] * Mb[j][w]
                rows.append(row)
    hom = f * d - q_rank(rows) if d else 0
    rep.add("dim Hom(C(lambda), M) = dim lambda-eigenspace of M", lam, eig, hom)
    rep.data.update(dim_M=d, hom=hom, eigenspace=eig)
    return rep


def left_ideal(generators: list[Element]) -> list[Element]:
    """Spanning set {w g} of the left ideal generated by ``generators``."""
    return [g.left_perm(w) for g in generators for w in group(generators[0].n).perms]


def non_freeness_demo(n: int = 3) -> Report:
    d = gz_dimension_Q(n)
    N = group(n).order
    rep = Report(f"non-freeness n={n}")
    rep.add("dim GZ_Q", n, len(all_standard_tableaux(n)), d)
    rep.data.update(dim_gz=d, dim_algebra=N, divides=N % d == 0)
    return rep


def gz_check(n: int) -> Report:
    """GZ dimension, E_t spanning set, power sums central, eigenspace and induction checks."""
    rep = Report(f"gz n={n}")
    f = len(all_standard_tableaux(n))
    rep.add("dim GZ_Q = |Std(n)|", n, f, gz_dimension_Q(n))
    rep.add("rank {E_t}", n, f, q_rank([idempotent_E_t(t).vector() for t in all_standard_tableaux(n)]))
    if n <= 4:
        for m in range(1, 4):
            ps = Element.zero(n)
            for k in range(1, n + 1):
                ps = ps + Element.jm(k, n) ** m
            central = all(Element.sigma(k, n) * ps == ps * Element.sigma(k, n) for k in range(2, n + 1))
            rep.add("power sum central", f"m={m}", True, central)
    for lam in enumerate_partitions(n):
        rep.extend(eigenspace_check(lam))
        rep.extend(induction_check(lam))
    return rep
