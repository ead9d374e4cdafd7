"""Murphy's standard basis, the xi-basis, Specht elements and the psi cellular basis.

Expansions in the basis {x_st} are done by inverting the (unimodular, 0/1)
matrix whose rows are the coefficient vectors of the x_st.  Basis pairs are
ordered by partition (reverse lexicographic), then s, then t in canonical
tableau order.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import accumulate, product

import numpy as np

from .algebra import Element, row_stabilizer_sum
from .errors import PreconditionError
from .linalg import fp_inverse, fp_rank, q_inverse_integral, q_rank
from .report import Report
from .seminormal import psi_L_applied
from .tableaux import (Partition, Tableau, class_of, d_of_tableau, dominance_leq,
                       enumerate_partitions, highest_tableau, lowest_tableau, pair_dominance_leq,
                       pair_succ, row_numbers, standard_tableaux)


# --- elements -------------------------------------------------------------

def x_lambda(lam, p=None) -> Element:
    lam = Partition(lam)
    return row_stabilizer_sum(highest_tableau(lam).rows, lam.n, p)


def y_lambda(lam, p=None) -> Element:
    lam = Partition(lam)
    return row_stabilizer_sum(highest_tableau(lam).rows, lam.n, p, signed=True)


def murphy_elements(lam, p=None) -> tuple[Element, Element]:
    return x_lambda(lam, p), y_lambda(lam, p)


def _conjugate_by(a: Element, s: Tableau, t: Tableau) -> Element:
    """d(s)^-1 a d(t)."""
    return a.left_perm(d_of_tableau(s).perm.inverse()).right_perm(d_of_tableau(t).perm)


def _same_shape(s: Tableau, t: Tableau):
    if s.shape != t.shape:
        raise PreconditionError(f"{s!r} and {t!r} have different shapes")
    return s.shape


def x_st(s: Tableau, t: Tableau, p=None) -> Element:
    return _conjugate_by(x_lambda(_same_shape(s, t), p), s, t)


def y_st(s: Tableau, t: Tableau, p=None) -> Element:
    return _conjugate_by(y_lambda(_same_shape(s, t), p), s, t)


def x_row_standard(t: Tableau, p=None) -> Element:
    """x_tt for any row-standard t: the row-stabilizer sum of t."""
    return row_stabilizer_sum(t.rows, t.n, p)


def xi_lambda(lam, p=None) -> Element:
    """prod_i (L_i + rho_lambda(i)), rho the row number in t^lambda."""
    lam = Partition(lam)
    acc = Element.one(lam.n, p)
    for i, rho in enumerate(row_numbers(lam), 1):
        acc = acc.left_jm(i, rho)
    return acc


def xi_st(s: Tableau, t: Tableau, p=None) -> Element:
    return _conjugate_by(xi_lambda(_same_shape(s, t), p), s, t)


def z_lambda(lam, p=None) -> Element:
    """x_lambda s_lambda y_{lambda'} with s_lambda = d(t_lambda)."""
    lam = Partition(lam)
    s_lam = d_of_tableau(lowest_tableau(lam)).perm
    return x_lambda(lam, p).right_perm(s_lam) * y_lambda(lam.conjugate(), p)


def z_lambda_s(lam, s: Tableau, p=None) -> Element:
    """z_lambda d(s'), s' the conjugate (lambda'-) tableau."""
    return z_lambda(lam, p).right_perm(d_of_tableau(s.conjugate()).perm)


def specht_elements(lam, p=None) -> tuple[Element, list[Element]]:
    lam = Partition(lam)
    return z_lambda(lam, p), [z_lambda_s(lam, s, p) for s in standard_tableaux(lam)]


# --- the Murphy basis and expansions --------------------------------------

Pair = tuple[Tableau, Tableau]


@dataclass(frozen=True)
class BasisExpansion:
    target: Element
    coefficients: dict = field(repr=False)

    def support(self) -> list[Pair]:
        return list(self.coefficients)

    def __getitem__(self, pair):
        return self.coefficients.get(pair, 0)


class MurphyBasis:
    """{x_st} for S_n together with the inverse of its coefficient matrix."""

    def __init__(self, n: int, p=None):
        if p is None and n > 5:
            raise PreconditionError("rational Murphy expansions are capped at n <= 5")
        if p is not None and n > 6:
            raise PreconditionError("mod-p Murphy expansions are capped at n <= 6")
        self.n = n
        self.p = p
        self.pairs: list[Pair] = [(s, t) for lam in enumerate_partitions(n)
                                  for s in standard_tableaux(lam) for t in standard_tableaux(lam)]
        self.index = {pair: i for i, pair in enumerate(self.pairs)}
        B = np.array([[int(c) for c in x_st(s, t).num] for s, t in self.pairs], dtype=np.int64)
        self.matrix = B
        if p is None:
            self.inverse = q_inverse_integral(B)
        else:
            self.inverse = fp_inverse(B, p)

    def coefficient_vector(self, a: Element) -> list:
        if a.n != self.n or a.p != self.p:
            raise PreconditionError("element does not live in this algebra")
        if self.p is None:
            v = a.num @ self.inverse
            return [Fraction(int(x), a.den) for x in v]
        return [int(x) for x in (a.num @ self.inverse) % self.p]

    def expand(self, a: Element) -> BasisExpansion:
        v = self.coefficient_vector(a)
        return BasisExpansion(a, {self.pairs[i]: c for i, c in enumerate(v) if c})


@lru_cache(maxsize=None)
def murphy_basis(n: int, p=None) -> MurphyBasis:
    return MurphyBasis(n, p)


def expand_in_murphy_basis(a: Element) -> BasisExpansion:
    return murphy_basis(a.n, a.p).expand(a)


def coeff_lambda(a: Element, lam) -> Fraction | int:
    """Coefficient of x_lambda in the Murphy expansion of a."""
    t = highest_tableau(lam)
    return expand_in_murphy_basis(a)[(t, t)]


# --- triangularity checks -------------------------------------------------

def _strictly_above(upper: Pair, lower: Pair) -> bool:
    return upper != lower and pair_dominance_leq(lower, upper)


def rstd_above(lam) -> list[tuple[tuple[int, ...], ...]]:
    """Row-standard fillings with l(lambda) rows (rows may be empty) that dominate t^lambda.

    A filling is given by the row f(i) of each entry i; dominance compares, for
    every k, the partial sums of the row counts of {1..k}.  Fillings with more
    rows can never dominate t^lambda, so l(lambda) rows suffice."""
    lam = Partition(lam)
    n, l = lam.n, len(lam)
    rho = row_numbers(lam)
    out = []
    for f in product(range(1, l + 1), repeat=n):
        counts, base, ok = [0] * l, [0] * l, True
        for k in range(n):
            counts[f[k] - 1] += 1
            base[rho[k] - 1] += 1
            if any(a < b for a, b in zip(accumulate(counts), accumulate(base))):
                ok = False
                break
        if ok:
            out.append(tuple(tuple(i + 1 for i in range(n) if f[i] == j) for j in range(1, l + 1)))
    return out


def xi_check(n: int) -> Report:
    """xi_lambda = sum of x_tt over the row-standard fillings t dominating t^lambda (t^lambda
    included); and in the Murphy expansion xi_lambda has coefficient 1 at (t^lambda, t^lambda),
    everything else strictly above it."""
    if n > 5:
        raise PreconditionError("xi_check is capped at n <= 5")
    rep = Report(f"xi n={n}")
    for lam in enumerate_partitions(n):
        tl = highest_tableau(lam)
        xi = xi_lambda(lam)
        total = Element.zero(n)
        for rows in rstd_above(lam):
            total = total + row_stabilizer_sum(rows, n)
        rep.add("xi_lambda = sum of x_tt over dominating row-standard t", lam, True, total == xi)
        ex = expand_in_murphy_basis(xi)
        others = [pq for pq in ex.support() if pq != (tl, tl)]
        rep.add("xi leading coefficient", lam, 1, ex[(tl, tl)])
        rep.add("xi support strictly above", lam, True, all(_strictly_above(pq, (tl, tl)) for pq in others))
    return rep


def xi_image_check(n: int) -> Report:
    """xi_{s lambda} and x_{s lambda} agree modulo the span of x_uv with (u,v) above (s, t^lambda)
    of the same shape or of a strictly dominating shape, i.e. in the cell module."""
    rep = Report(f"xi image n={n}")
    for lam in enumerate_partitions(n):
        tl = highest_tableau(lam)
        for s in standard_tableaux(lam):
            ex = expand_in_murphy_basis(xi_st(s, tl))
            bad = [(u, v) for (u, v), c in ex.coefficients.items()
                   if u.shape == lam and (u, v) != (s, tl)]
            rep.add("image of xi_{s lambda} in C(lambda) is x_{s lambda}", f"{lam} {s!r}", True,
                    not bad and ex[(s, tl)] == 1)
    return rep


def jm_triangularity_check(n: int, p=None) -> Report:
    """x_st L_k = r_t(k) x_st + sum_{(u,v) above (s,t)} c_uv x_uv.

    Two orders are tested: strict strong dominance of pairs (across shapes via
    compositions) and the order used for cellular triangularity (shape first)."""
    if n > 5:
        raise PreconditionError("jm_triangularity_check is capped at n <= 5")
    rep = Report(f"jm triangularity n={n} p={p}")
    basis = murphy_basis(n, p)
    for s, t in basis.pairs:
        x = x_st(s, t, p)
        for k in range(2, n + 1):
            ex = basis.expand(x.right_jm(k))
            r = t.content(k) if p is None else t.content(k) % p
            others = [pq for pq in ex.support() if pq != (s, t)]
            label = f"{s!r},{t!r},k={k}"
            rep.add("diagonal coefficient r_t(k)", label, r, ex[(s, t)])
            rep.add("support strictly dominates", label, True,
                    all(_strictly_above(pq, (s, t)) for pq in others))
            rep.add("support succ", label, True, all(pair_succ(pq, (s, t)) for pq in others))
    return rep


def vanishing_check(n: int) -> Report:
    """x_ab s_lambda y_{lambda'} = 0 unless Shape(b) is dominated by lambda."""
    if n > 4:
        raise PreconditionError("vanishing_check is capped at n <= 4")
    rep = Report(f"vanishing n={n}")
    for lam in enumerate_partitions(n):
        right = Element.perm(d_of_tableau(lowest_tableau(lam)).perm) * y_lambda(lam.conjugate())
        for mu in enumerate_partitions(n):
            if dominance_leq(mu, lam):
                continue
            zero = all((x_st(a, b) * right).is_zero()
                       for a in standard_tableaux(mu) for b in standard_tableaux(mu))
            rep.add("x_ab s_lambda y_lambda' = 0", f"lambda={lam}, shape(b)={mu}", True, zero)
    return rep


# --- the psi basis --------------------------------------------------------

def _u_elements(lam, p: int) -> dict[Tableau, Element]:
    return {t: psi_L_applied(t, p) for t in standard_tableaux(lam)}


def psi_elements(lam, p: int) -> dict[Pair, Element]:
    """psi_st = u_s^* xi_lambda u_t for s, t in Std(lambda)."""
    lam = Partition(lam)
    u = _u_elements(lam, p)
    xi = xi_lambda(lam, p)
    left = {s: u[s].star() * xi for s in u}
    return {(s, t): left[s] * u[t] for s in u for t in u}


def psi_basis(n: int, p: int) -> dict[Pair, Element]:
    if n > 6:
        raise PreconditionError("psi_basis is capped at n <= 6")
    out = {}
    for lam in enumerate_partitions(n):
        out.update(psi_elements(lam, p))
    return out


def psi_triangularity_and_basis_check(n: int, p: int) -> Report:
    if n > 5:
        raise PreconditionError("psi_triangularity_and_basis_check is capped at n <= 5")
    rep = Report(f"psi basis n={n} p={p}")
    psi = psi_basis(n, p)
    basis = murphy_basis(n, p)
    for (s, t), a in psi.items():
        ex = basis.expand(a)
        label = f"{s!r},{t!r}"
        rep.add("psi leading coefficient", label, 1, ex[(s, t)])
        rep.add("psi support succ", label, True,
                all(pair_succ(pq, (s, t)) for pq in ex.support() if pq != (s, t)))
        rep.add("psi_st^* = psi_ts", label, True, a.star() == psi[(t, s)])
    rank = fp_rank(np.array([a.num for a in psi.values()]), p)
    rep.add("psi rank", f"n={n}", len(basis.pairs), rank)
    return rep


# --- Gram matrices --------------------------------------------------------

@dataclass
class CellDatum:
    lam: Partition
    p: int | None
    tableaux: list[Tableau]
    gram_murphy: list[list]
    gram_psi: list[list] | None = None
    psi_order: list[Tableau] | None = None
    basis_x: dict = field(default_factory=dict, repr=False)

    @property
    def x_lambda(self) -> Element:
        return x_lambda(self.lam, self.p)

    @property
    def y_lambda(self) -> Element:
        return y_lambda(self.lam, self.p)

    @property
    def xi_lambda(self) -> Element:
        return xi_lambda(self.lam, self.p)

    @property
    def z_lambda(self) -> Element:
        return z_lambda(self.lam, self.p)


def gram_murphy(lam, p=None) -> list[list]:
    """(x_{s lambda}, x_{t lambda}) = coeff_lambda(x_lambda d(s) d(t)^-1 x_lambda)."""
    lam = Partition(lam)
    tl = highest_tableau(lam)
    tabs = standard_tableaux(lam)
    basis = murphy_basis(lam.n, p)
    left = {s: x_st(tl, s, p) for s in tabs}
    right = {t: x_st(t, tl, p) for t in tabs}
    return [[basis.expand(left[s] * right[t])[(tl, tl)] for t in tabs] for s in tabs]


def class_ordered_tableaux(lam, p: int) -> list[Tableau]:
    """Std(lambda) grouped by tableau class (canonical class order, then canonical tableau order)."""
    tabs = standard_tableaux(lam)
    return sorted(tabs, key=lambda t: (class_of(t, p).index, tabs.index(t)))


def gram_psi(lam, p: int) -> tuple[list[Tableau], list[list[int]]]:
    """<psi_{s lambda}, psi_{t lambda}>, rows ordered by tableau class."""
    lam = Partition(lam)
    tl = highest_tableau(lam)
    psi = psi_elements(lam, p)
    basis = murphy_basis(lam.n, p)
    order = class_ordered_tableaux(lam, p)
    G = [[basis.expand(psi[(tl, s)] * psi[(t, tl)])[(tl, tl)] for t in order] for s in order]
    return order, G


def gram_matrices(lam, p: int) -> CellDatum:
    lam = Partition(lam)
    if lam.n > 5:
        raise PreconditionError("gram_matrices is capped at n <= 5")
    order, gp = gram_psi(lam, p)
    tabs = list(standard_tableaux(lam))
    return CellDatum(lam, p, tabs, gram_murphy(lam), gp, order,
                     {(s, t): x_st(s, t) for s in tabs for t in tabs})


def gram_block_check(n: int, p: int) -> Report:
    rep = Report(f"gram blocks n={n} p={p}")
    for lam in enumerate_partitions(n):
        order, G = gram_psi(lam, p)
        off = [(i, j) for i in range(len(order)) for j in range(len(order))
               if G[i][j] and class_of(order[i], p) != class_of(order[j], p)]
        rep.add("psi Gram block-diagonal by class", lam, True, not off)
        rep.add("psi Gram symmetric", lam, True, all(G[i][j] == G[j][i] for i in range(len(G)) for j in range(i)))
        gm = [[int(Fraction(x).numerator * pow(Fraction(x).denominator, -1, p)) % p for x in row]
              for row in gram_murphy(lam)]
        rep.add("rank gram_murphy = rank gram_psi mod p", lam, fp_rank(gm, p), fp_rank(G, p))
    return rep


def murphy_basis_rank_check(n: int, p=None) -> Report:
    rep = Report(f"murphy basis rank n={n} p={p}")
    B = murphy_basis(n, p).matrix
    r = q_rank(B.tolist()) if p is None else fp_rank(B, p)
    rep.add("rank {x_st}", f"n={n}", len(B), r)
    return rep


def specht_rank_check(lam) -> Report:
    lam = Partition(lam)
    _, zs = specht_elements(lam)
    rep = Report(f"specht {lam}")
    rep.add("z_{lambda s} independent", lam, len(zs), q_rank([z.vector() for z in zs]))
    return rep


def gram_to_csv(tableaux, matrix) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    names = [repr(t) for t in tableaux]
    w.writerow([""] + names)
    for name, row in zip(names, matrix):
        w.writerow([name] + [str(x) for x in row])
    return buf.getvalue()

