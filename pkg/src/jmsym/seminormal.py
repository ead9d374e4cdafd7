"""Jucys-Murphy elements and the idempotents built from them.

Covers the seminormal idempotents E_t, the integral elements F_t, the
tableau-class idempotents E_T, the characteristic-zero intertwiners and the
mod-p intertwiners obtained by inverting L_{k-1} - L_k on E_T F_p S_n.

Sign conventions.  With h_{t,k} = r_t(k-1) - r_t(k) and permutations acting
on the right, the relation sigma_k L_k = L_{k-1} sigma_k + 1 forces

    (sigma_k + 1/h_{t,k}) E_t  =  E_{t sigma_k} (sigma_k + 1/h_{t,k}) E_t,

so the factor that carries E_t to its neighbour carries a plus sign when h
is evaluated on the tableau being acted on.  Consequently, for the products
``Phi_t = prod (sigma - 1/h)`` and ``Psi_t = prod (sigma + 1/h)`` (h read off
the earlier tableau of each step) one gets ``E_lambda Psi_t = Phi_t E_t`` and
``E_lambda = z_lambda Phi_t^* / h_lambda`` for the lowest tableau t, and the
mod-p step is ``v -> sigma_k v + (L_{k-1} - L_k)^{-1} v``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import Element
from .perms import simple
from .errors import ConsistencyError, PreconditionError
from .report import Report
from .tableaux import (Partition, Tableau, TableauClass, all_standard_tableaux, class_of,
                       d_of_tableau, highest_tableau, hooks, lowest_tableau, standard_tableaux,
                       tableau_classes)

MAX_IDEMPOTENT_N = 8


def jm_element(k: int, n: int, p=None) -> Element:
    return Element.jm(k, n, p)


def _power_formula_holds(n: int, k: int, m: int, a: int) -> bool:
    s = Element.sigma(k, n)
    A = Element.jm(k, n) - a
    B = Element.jm(k - 1, n) - a
    rhs = B ** m * s
    for i in range(m):
        rhs = rhs + B ** i * A ** (m - i - 1)
    return s * A ** m == rhs


def jm_relations_check(n: int) -> Report:
    """Commutation relations between the L_k and the simple transpositions."""
    if n > 6:
        raise PreconditionError("jm_relations_check is capped at n <= 6")
    rep = Report(f"jm_relations n={n}")
    L = {k: Element.jm(k, n) for k in range(1, n + 1)}
    for k in range(2, n + 1):
        s = Element.sigma(k, n)
        rep.add("sigma_k L_k = L_{k-1} sigma_k + 1", f"k={k}", True, s * L[k] == L[k - 1] * s + 1)
        rep.add("sigma_k L_{k-1} = L_k sigma_k - 1", f"k={k}", True, s * L[k - 1] == L[k] * s - 1)
        for l in range(1, n + 1):
            if l not in (k - 1, k):
                rep.add("sigma_k L_l = L_l sigma_k", f"k={k},l={l}", True, s * L[l] == L[l] * s)
        for m in range(1, 5):
            for a in (0, 1, 2):
                rep.add("power formula", f"k={k},m={m},a={a}", True, _power_formula_holds(n, k, m, a))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rep.add("L_i L_j = L_j L_i", f"i={i},j={j}", True, L[i] * L[j] == L[j] * L[i])
    return rep


@lru_cache(maxsize=None)
def idempotent_E_t(t: Tableau, full_range: bool = False) -> Element:
    """E_t = prod_i prod_{c != r_t(i)} (L_i - c) / (r_t(i) - c) over QQ.

    The literal product runs over -n < c < n.  Since L_i has its spectrum in
    -i < c < i, the default restricts to that window; both give the same
    element for every tableau (``full_range=True`` evaluates the literal form).
    Factors are applied as left multiplications, i ascending then c ascending.
    """
    n = t.n
    if n > MAX_IDEMPOTENT_N:
        raise PreconditionError(f"n={n} exceeds {MAX_IDEMPOTENT_N}")
    acc = Element.one(n)
    for i in range(1, n + 1):
        r = t.content(i)
        window = range(-n + 1, n) if full_range else range(-i + 1, i)
        for c in window:
            if c != r:
                acc = acc.left_jm(i, -c) / (r - c)
        if acc.is_zero():
            return acc
    return acc


def idempotent_E_lambda(lam) -> Element:
    return idempotent_E_t(highest_tableau(lam))


def char0_intertwiners(t: Tableau) -> tuple[Element, Element]:
    """(Phi_t, Psi_t) along the canonical reduced word of d(t).

    Phi_t = prod_j (sigma_{k_j} - 1/h_j), Psi_t = prod_j (sigma_{k_j} + 1/h_j),
    with h_j the radial length of the j-th chain tableau at k_j."""
    tw = d_of_tableau(t)
    n = t.n
    phi = Element.one(n)
    psi = Element.one(n)
    for k, tj in zip(tw.word, tw.chain):
        h = tj.content(k - 1) - tj.content(k)
        if h == 0:
            raise ConsistencyError(f"zero radial length at step sigma_{k} of {t!r}")
        phi = phi * (Element.sigma(k, n) - Fraction(1, h))
        psi = psi * (Element.sigma(k, n) + Fraction(1, h))
    return phi, psi


@lru_cache(maxsize=None)
def idempotent_E_lambda_fast(lam, cross_check: bool | None = None) -> Element:
    """E_lambda = z_lambda Phi_{t_lambda}^* / h_lambda, t_lambda the lowest tableau."""
    from .cellular import z_lambda

    lam = Partition(lam)
    t = lowest_tableau(lam)
    tw = d_of_tableau(t)
    n = lam.n
    # Phi^* is the product of the same factors in reverse order; apply them on the right
    E = z_lambda(lam)
    for k, tj in reversed(list(zip(tw.word, tw.chain))):
        h = tj.content(k - 1) - tj.content(k)
        E = E.right_perm(simple(k, n)) - E * Fraction(1, h)
    E = E / hooks(lam).h_lambda
    if cross_check is None:
        cross_check = lam.n <= 5
    if cross_check and E != idempotent_E_t(highest_tableau(lam)):
        raise ConsistencyError(f"fast E_lambda disagrees with the product formula for {lam}")
    return E


def f_idempotent(t: Tableau, p: int) -> tuple[Element, int]:
    """F_t (factors with c != r_t(i) mod p only) and its denominator w^{Shape(t)}."""
    n = t.n
    acc = Element.one(n)
    w = 1
    for i in range(1, n + 1):
        r = t.content(i)
        for c in range(-n + 1, n):
            if (r - c) % p:
                acc = acc.left_jm(i, -c)
                w *= r - c
    return acc / w, w


@dataclass(frozen=True)
class ClassIdempotent:
    cls: TableauClass
    element_Q: Element
    element_p: Element


@lru_cache(maxsize=None)
def class_idempotent(T: TableauClass) -> ClassIdempotent:
    """E_T = sum of E_t over the class, checked p-integral, and its reduction."""
    acc = Element.zero(T.n)
    for t in T.members:
        acc = acc + idempotent_E_t(t)
    if not acc.is_p_integral(T.p):
        raise ConsistencyError(f"E_T for class {T.index} (p={T.p}) is not {T.p}-integral")
    return ClassIdempotent(T, acc, acc.reduce_mod(T.p))


def class_idempotent_of(t: Tableau, p: int) -> ClassIdempotent:
    return class_idempotent(class_of(t, p))


def eigen_relation_check(n: int) -> Report:
    """(L_k - r_t(k)) E_t = 0, L_k = sum_t r_t(k) E_t and sum_t E_t = 1."""
    if n > 5:
        raise PreconditionError("eigen_relation_check is capped at n <= 5")
    rep = Report(f"eigen n={n}")
    tabs = all_standard_tableaux(n)
    for k in range(1, n + 1):
        total = Element.zero(n)
        for t in tabs:
            E = idempotent_E_t(t)
            rep.add("(L_k - r_t(k)) E_t = 0", f"{t!r},k={k}", True, E.left_jm(k, -t.content(k)).is_zero())
            total = total + E * t.content(k)
        rep.add("L_k = sum r_t(k) E_t", f"k={k}", True, total == Element.jm(k, n))
    total = Element.zero(n)
    for t in tabs:
        total = total + idempotent_E_t(t)
    rep.add("sum E_t = 1", f"n={n}", True, total == Element.one(n))
    return rep


def murphy_formula_check(T: TableauClass, ms=(1, 2, 4, 8, 16)) -> Report:
    """p-adic behaviour of 1 - (1 - F_t)^m as an approximation of E_T.

    With t the first member of T, the identity
        E_T = 1 - (1 - F_t)^m + sum_{s in T} (1 - w^{Shape(s)}/w^{Shape(t)})^m E_s
    holds exactly for every m; the integral part 1 - (1 - F_t)^m differs from
    E_T by the sum, whose p-valuation grows with m.  The report records
    exactness of the identity and the valuation of the gap for each m."""
    if isinstance(ms, int):
        ms = (ms,)
    p = T.p
    t = T.members[0]
    n = T.n
    E_T = class_idempotent(T).element_Q
    F, w = f_idempotent(t, p)
    ws = {s: f_idempotent(s, p)[1] for s in T.members}
    one = Element.one(n)
    rep = Report(f"murphy formula class={T.index} p={p}")
    vals = []
    for m in ms:
        approx = one - (one - F) ** m
        tail = Element.zero(n)
        for s in T.members:
            tail = tail + idempotent_E_t(s) * (1 - Fraction(ws[s], w)) ** m
        rep.add("identity exact", f"class {T.index}, m={m}", True, approx + tail == E_T)
        v = (approx - E_T).valuation(p)
        vals.append(v)
        rep.data.setdefault("valuations", {})[m] = v
    rep.add("gap valuation nondecreasing", f"class {T.index}", True,
            all(a <= b for a, b in zip(vals, vals[1:])))
    rep.data["m0"] = next((m for m, v in zip(ms, vals) if v >= 1), None)
    return rep


@dataclass(frozen=True)
class HLInverse:
    """(L_{k-1} - L_k)^{-1} on the right ideal E_T F_p S_n as a geometric series.

    ``G = sum_{i < nu} (-1)^i h^{-(i+1)} N^i E_T`` with N = L_{k-1} - L_k - h."""
    cls: TableauClass
    k: int
    h: int
    G: Element
    nilpotency_degree: int

    def coefficients(self) -> list[int]:
        p = self.cls.p
        hinv = pow(self.h % p, -1, p)
        return [(-1) ** i * pow(hinv, i + 1, p) % p for i in range(self.nilpotency_degree)]

    def apply(self, v: Element) -> Element:
        """G v for v in E_T F_p S_n, evaluated with Jucys-Murphy left multiplications."""
        out = v * 0
        term = v
        for c in self.coefficients():
            out = out + term * c
            term = _shifted_radial(term, self.k, self.h)
        return out


def _shifted_radial(v: Element, k: int, h: int) -> Element:
    """(L_{k-1} - L_k - h) v."""
    return v.left_jm(k - 1, -h) - v.left_jm(k)


@lru_cache(maxsize=None)
def hl_inverse(T: TableauClass, k: int) -> HLInverse:
    p = T.p
    n = T.n
    h = T.r(k - 1) - T.r(k)
    if h % p == 0:
        raise PreconditionError(f"h = {h} is 0 mod {p}: sigma_{k} stays inside class {T.index}")
    E = class_idempotent(T).element_p
    powers = [E]
    while not powers[-1].is_zero():
        if len(powers) > n * p:
            raise ConsistencyError(f"L_{k-1} - L_k - {h} is not nilpotent on E_T within n*p steps")
        powers.append(_shifted_radial(powers[-1], k, h))
    nu = len(powers) - 1
    hinv = pow(h % p, -1, p)
    G = E * 0
    for i in range(nu):
        G = G + powers[i] * ((-1) ** i * pow(hinv, i + 1, p))
    return HLInverse(T, k, h, G, nu)


def psi_L_applied(t: Tableau, p: int) -> Element:
    """u_t = Psi_{L,d(t)} E_{[t]} over F_p, factors applied right to left.

    A step sigma_k between chain tableaux of different classes acts as
    v -> sigma_k v + G v with G = hl_inverse(class, k); a step inside one class
    acts as v -> sigma_k v - v."""
    tw = d_of_tableau(t)
    n = t.n
    v = class_idempotent_of(t, p).element_p
    for j in range(len(tw.word), 0, -1):
        k = tw.word[j - 1]
        cur, prev = class_of(tw.chain[j], p), class_of(tw.chain[j - 1], p)
        sv = Element.sigma(k, n, p) * v
        if cur == prev:
            v = sv - v
        else:
            v = sv + hl_inverse(cur, k).apply(v)
    return v


def commutation_lemma_check(n: int, p: int) -> Report:
    """sigma_k E_T = E_T sigma_k when t sigma_k stays in [t]; and E_S + E_T
    commutes with sigma_k when s = t sigma_k leaves the class."""
    rep = Report(f"commutation n={n} p={p}")
    seen = set()
    for t in all_standard_tableaux(n):
        for k in range(2, n + 1):
            s = t * simple(k, n)
            if not s.is_standard:
                continue
            T, S = class_of(t, p), class_of(s, p)
            sig = Element.sigma(k, n, p)
            if S == T:
                key = ("same", T.index, k)
                if key in seen:
                    continue
                seen.add(key)
                E = class_idempotent(T).element_p
                rep.add("sigma_k E_T = E_T sigma_k", f"class {T.index},k={k}", True, sig * E == E * sig)
            else:
                key = ("pair", frozenset((T.index, S.index)), k)
                if key in seen:
                    continue
                seen.add(key)
                E = class_idempotent(T).element_p + class_idempotent(S).element_p
                rep.add("(E_S + E_T) sigma_k = sigma_k (E_S + E_T)",
                        f"classes {T.index},{S.index},k={k}", True, sig * E == E * sig)
    return rep


def due_to_murphy_check(t: Tableau, k: int, p: int, js=(1, 2, 3)) -> Report:
    """((L_k - r_S(k)) / (r_T(k) - r_S(k)))^(p^j) (E_S + E_T) - E_T -> 0 p-adically."""
    n = t.n
    s = t * simple(k, n)
    T, S = class_of(t, p), class_of(s, p)
    if T == S:
        raise PreconditionError("t and t sigma_k lie in the same class")
    a, b = S.r(k), T.r(k) - S.r(k)
    E_T = class_idempotent(T).element_Q
    E = E_T + class_idempotent(S).element_Q
    rep = Report(f"due_to_murphy {t!r} k={k} p={p}")
    vals = []
    for j in js:
        v = E
        for _ in range(p ** j):
            v = v.left_jm(k, -a) / b
        vals.append((v - E_T).valuation(p))
    rep.data["valuations"] = dict(zip(js, vals))
    rep.add("valuation >= 1 and increasing", f"{t!r},k={k}", True,
            vals[-1] >= 1 and all(x <= y for x, y in zip(vals, vals[1:])))
    return rep
