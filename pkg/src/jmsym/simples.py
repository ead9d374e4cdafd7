"""Dimensions of the simple F_p S_n-modules from a_lambda E_lambda.

For a p-restricted partition lambda the rows d(t)^-1 a_lambda E_lambda
(t standard of shape lambda), reduced mod p, span F_p S_n a_lambda E_lambda
and the rank of that matrix is dim D(lambda).  The independent oracle is the
classical one: the rank mod p of the Gram matrix of the Specht module S^mu
inside the permutation module M^mu, over p-regular mu.
"""
from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction

import numpy as np

from .algebra import Element, group
from .errors import PreconditionError
from .linalg import PrimeFieldMatrix, fp_rank
from .report import Report
from .seminormal import idempotent_E_lambda_fast, idempotent_E_t
from .tableaux import (Partition, d_of_tableau, enumerate_partitions, hooks, p_regular,
                       p_restricted, row_standard_tableaux, standard_tableaux)

MAX_SIMPLES_N = 7


def _check_n(n: int):
    if n > MAX_SIMPLES_N:
        raise PreconditionError(f"n={n} exceeds {MAX_SIMPLES_N}")


def E_lambda(lam) -> Element:
    return idempotent_E_lambda_fast(Partition(lam))


def a_lambda(lam) -> int:
    """lcm of the denominators of the coefficients of E_lambda."""
    lam = Partition(lam)
    _check_n(lam.n)
    return E_lambda(lam).denominator_lcm()


def generator(lam, p: int) -> Element:
    """a_lambda E_lambda reduced mod p."""
    E = E_lambda(lam)
    return (E * E.denominator_lcm()).reduce_mod(p)


def d_matrix(lam, p: int) -> PrimeFieldMatrix:
    lam = Partition(lam)
    _check_n(lam.n)
    g = generator(lam, p)
    rows = [g.left_perm(d_of_tableau(t).perm.inverse()).num for t in standard_tableaux(lam)]
    return PrimeFieldMatrix(np.array(rows, dtype=np.int64), p)


def james_gram_oracle(mu, p: int) -> int:
    """rank mod p of the Gram matrix of {z_{mu s}} in the tabloid basis of x_mu F S_n."""
    from .cellular import z_lambda_s

    mu = Partition(mu)
    _check_n(mu.n)
    if not p_regular(mu, p):
        raise PreconditionError(f"{mu} is not {p}-regular")
    cosets = [d_of_tableau(t).perm.rank() for t in row_standard_tableaux(mu)]
    C = np.array([[int(z.num[c]) for c in cosets] for z in
                  (z_lambda_s(mu, s) for s in standard_tableaux(mu))], dtype=object)
    return fp_rank(np.array((C @ C.T) % p, dtype=np.int64), p)


@dataclass
class SimpleDimensionRecord:
    n: int
    p: int
    lam: Partition
    restricted: bool
    a_lambda: int
    matrix_rank: int
    gram_rank_murphy: int | None = None
    james_oracle_rank: int | None = None
    runtime_ms: float = 0.0

    @property
    def consistent(self) -> bool:
        return self.gram_rank_murphy is None or self.gram_rank_murphy == self.matrix_rank

    def to_json(self) -> dict:
        d = asdict(self)
        d["lambda"] = list(d.pop("lam"))
        return d


def dim_simple(lam, p: int, with_gram: bool | None = None, with_oracle: bool = True) -> SimpleDimensionRecord:
    lam = Partition(lam)
    if not p_restricted(lam, p):
        raise PreconditionError(
            f"{lam} is not {p}-restricted: F_p S_n a_lambda E_lambda is only the simple D(lambda) "
            "for p-restricted lambda and the other case is not used")
    start = time.perf_counter()
    rank = d_matrix(lam, p).rank()
    if with_gram is None:
        with_gram = lam.n <= 5
    gram = None
    if with_gram:
        from .cellular import gram_murphy
        G = [[_mod(x, p) for x in row] for row in gram_murphy(lam)]
        gram = fp_rank(G, p)
    oracle = james_gram_oracle(lam.conjugate(), p) if with_oracle else None
    ms = (time.perf_counter() - start) * 1000
    return SimpleDimensionRecord(lam.n, p, lam, True, a_lambda(lam), rank, gram, oracle, round(ms, 3))


def _mod(x, p: int) -> int:
    x = Fraction(x)
    return x.numerator * pow(x.denominator, -1, p) % p


@dataclass
class DimensionTable:
    n: int
    p: int
    records: list[SimpleDimensionRecord]
    oracle_dims: list[int] = field(default_factory=list)

    @property
    def dims(self) -> list[int]:
        return sorted(r.matrix_rank for r in self.records)

    @property
    def multiset_match(self) -> bool:
        return Counter(self.dims) == Counter(self.oracle_dims)

    @property
    def passed(self) -> bool:
        return self.multiset_match and all(r.consistent for r in self.records)

    def __iter__(self):
        return iter(self.records)

    def __len__(self):
        return len(self.records)


def _record_job(args):
    lam, p, with_gram = args
    return dim_simple(lam, p, with_gram=with_gram)


def dimension_table(n: int, p: int, processes: int | None = None, with_gram: bool | None = None) -> DimensionTable:
    """Records for every p-restricted lambda of n, plus the oracle multiset over p-regular mu.

    Records come back in canonical partition order whatever the number of processes."""
    _check_n(n)
    lams = [lam for lam in enumerate_partitions(n) if p_restricted(lam, p)]
    jobs = [(lam, p, with_gram) for lam in lams]
    if processes and processes > 1:
        with ProcessPoolExecutor(processes) as pool:
            records = list(pool.map(_record_job, jobs))
    else:
        records = [_record_job(j) for j in jobs]
    oracle = sorted(james_gram_oracle(mu, p) for mu in enumerate_partitions(n) if p_regular(mu, p))
    return DimensionTable(n, p, records, oracle)


def conjecture_check(lam) -> Report:
    """Every coefficient of E_lambda is 1/(k_w h_lambda) with k_w a nonzero integer.

    The same test is run on the other E_t of shape lambda; those results are
    recorded in ``data`` and never counted as failures."""
    lam = Partition(lam)
    if lam.n > 6:
        raise PreconditionError("conjecture_check is capped at n <= 6")
    h = hooks(lam).h_lambda
    rep = Report(f"conjecture {lam}")

    def violations(E: Element):
        return [w for w, c in E.terms().items() if (1 / (c * h)).denominator != 1]

    bad = violations(E_lambda(lam))
    rep.add("E_lambda coefficients of the form 1/(k h_lambda)", lam, 0, len(bad))
    rep.data["violations"] = [list(w) for w in bad]
    rep.data["E_t_violations"] = {repr(t): len(violations(idempotent_E_t(t)))
                                  for t in standard_tableaux(lam)[1:]}
    return rep


def generator_identity_check(lam) -> Report:
    """x_lambda s_lambda y_lambda' s_lambda^-1 x_lambda is a nonzero multiple of E_lambda."""
    from .cellular import x_lambda, z_lambda
    from .tableaux import lowest_tableau

    lam = Partition(lam)
    if lam.n > 4:
        raise PreconditionError("generator_identity_check is capped at n <= 4")
    s_inv = d_of_tableau(lowest_tableau(lam)).perm.inverse()
    m = z_lambda(lam).right_perm(s_inv) * x_lambda(lam)
    E = E_lambda(lam)
    w = next(iter(E.terms()))
    c = m.coeff(w) / E.coeff(w)
    rep = Report(f"generator {lam}")
    rep.add("m_lambda = c E_lambda, c != 0", lam, True, c != 0 and m == E * c)
    rep.data["c"] = str(c)
    return rep


def closure_check(lam, p: int, samples: int = 50, seed: int = 0) -> Report:
    """Adding rows w a_lambda E_lambda for random w leaves the rank of the D-matrix unchanged."""
    lam = Partition(lam)
    rng = np.random.default_rng(seed)
    D = d_matrix(lam, p)
    g = generator(lam, p)
    G = group(lam.n)
    extra = [g.left_perm(G.perms[int(i)]).num for i in rng.integers(0, G.order, samples)]
    r0 = D.rank()
    r1 = fp_rank(np.vstack([D.entries, np.array(extra, dtype=np.int64)]), p)
    rep = Report(f"closure {lam} p={p}")
    rep.add("rank stable under left multiplication", lam, r0, r1)
    return rep


def rank_identity_check(n: int, p: int) -> Report:
    """fp_rank(D(lambda)) = rank of the Murphy Gram matrix mod p, every p-restricted lambda."""
    rep = Report(f"rank identity n={n} p={p}")
    for lam in enumerate_partitions(n):
        if p_restricted(lam, p):
            rec = dim_simple(lam, p, with_gram=True, with_oracle=False)
            rep.add("rank D(lambda) = rank gram_murphy", lam, rec.gram_rank_murphy, rec.matrix_rank)
    return rep
