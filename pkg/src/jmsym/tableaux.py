"""Partitions, tableaux, residues, tableau classes and hooks.

Nodes are indexed matrix-style from 1: node ``(i, j)`` is row ``i``, column
``j`` and has content ``j - i``.  Permutations act on tableaux from the
right by relabelling entries, so ``t * w`` replaces each entry ``k`` by
``w(k)``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import factorial, prod

from .errors import DomainError, SizeError
from .perms import Permutation, simple

MAX_COMBINATORIAL_N = 10


class Partition(tuple):
    """Weakly decreasing tuple of positive integers, no trailing zeros."""

    def __new__(cls, parts=()):
        parts = tuple(int(x) for x in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(x <= 0 for x in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {parts}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for x in self if x > j) for j in range(self[0]))

    def nodes(self):
        for i, row in enumerate(self, 1):
            for j in range(1, row + 1):
                yield (i, j)

    def __repr__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"


def conjugate(lam) -> Partition:
    return Partition(lam).conjugate()


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order, e.g. (3), (2,1), (1,1,1)."""
    if not 1 <= n <= MAX_COMBINATORIAL_N:
        raise SizeError(f"n={n} outside 1..{MAX_COMBINATORIAL_N}")
    return list(_partitions(n, n))


@lru_cache(maxsize=None)
def _partitions(n: int, bound: int) -> tuple[Partition, ...]:
    if n == 0:
        return (Partition(),)
    out = []
    for first in range(min(n, bound), 0, -1):
        for rest in _partitions(n - first, first):
            out.append(Partition((first,) + rest))
    return tuple(out)


def _partial_sums(parts, length):
    total, out = 0, []
    for i in range(length):
        total += parts[i] if i < len(parts) else 0
        out.append(total)
    return out


def composition_dominance_leq(lam, mu) -> bool:
    """Dominance on compositions (zero entries allowed), via partial sums."""
    if sum(lam) != sum(mu):
        raise DomainError(f"{tuple(lam)} and {tuple(mu)} have different sizes")
    m = max(len(lam), len(mu))
    return all(a <= b for a, b in zip(_partial_sums(lam, m), _partial_sums(mu, m)))


def dominance_leq(lam, mu) -> bool:
    return composition_dominance_leq(Partition(lam), Partition(mu))


def p_restricted(lam, p: int) -> bool:
    lam = Partition(lam)
    padded = tuple(lam) + (0,)
    return all(a - b <= p - 1 for a, b in zip(padded, padded[1:]))


def p_regular(lam, p: int) -> bool:
    return all(c < p for c in Counter(Partition(lam)).values())


def shapes_equivalent(lam, mu, p: int) -> bool:
    """Same multiset of contents mod p (the block relation)."""
    def residues(shape):
        return Counter((j - i) % p for i, j in Partition(shape).nodes())
    return residues(lam) == residues(mu)


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        entries = sorted(x for r in rows for x in r)
        if entries != list(range(1, len(entries) + 1)):
            raise ValueError(f"entries must be 1..n exactly once: {rows}")
        Partition(len(r) for r in rows)

    @cached_property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    @property
    def n(self) -> int:
        return self.shape.n

    @cached_property
    def _positions(self) -> dict[int, tuple[int, int]]:
        return {x: (i, j) for i, r in enumerate(self.rows, 1) for j, x in enumerate(r, 1)}

    def node(self, k: int) -> tuple[int, int]:
        return self._positions[k]

    def content(self, k: int) -> int:
        i, j = self._positions[k]
        return j - i

    def row_of(self, k: int) -> int:
        return self._positions[k][0]

    @cached_property
    def residues(self) -> tuple[int, ...]:
        return tuple(self.content(k) for k in range(1, self.n + 1))

    @property
    def is_row_standard(self) -> bool:
        return all(a < b for r in self.rows for a, b in zip(r, r[1:]))

    @property
    def is_standard(self) -> bool:
        if not self.is_row_standard:
            return False
        return all(self.rows[i][j] < self.rows[i + 1][j]
                   for i in range(len(self.rows) - 1) for j in range(len(self.rows[i + 1])))

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for r in self.rows for x in r)

    def composition(self, k: int) -> tuple[int, ...]:
        """Row counts of the entries <= k (a composition, zeros kept)."""
        return tuple(sum(1 for x in r if x <= k) for r in self.rows)

    def row_sequence(self) -> tuple[int, ...]:
        return tuple(self.row_of(k) for k in range(1, self.n + 1))

    def __mul__(self, w):
        if not isinstance(w, Permutation):
            return NotImplemented
        if w.n != self.n:
            raise DomainError("degree mismatch")
        return Tableau(tuple(tuple(w(x) for x in r) for r in self.rows))

    def conjugate(self) -> "Tableau":
        shape = self.shape.conjugate()
        return Tableau(tuple(tuple(self.rows[i][j] for i in range(shape[j])) for j in range(len(shape))))

    def to_json(self):
        return [list(r) for r in self.rows]

    @classmethod
    def from_json(cls, rows):
        return cls(tuple(tuple(r) for r in rows))

    def __repr__(self) -> str:
        return "T" + "/".join("".join(map(str, r)) if self.n < 10 else ",".join(map(str, r)) for r in self.rows)


def highest_tableau(lam) -> Tableau:
    """t^lambda: 1..n filled in along rows."""
    lam = Partition(lam)
    rows, k = [], 1
    for part in lam:
        rows.append(tuple(range(k, k + part)))
        k += part
    return Tableau(tuple(rows))


def lowest_tableau(lam) -> Tableau:
    """t_lambda: 1..n filled in along columns."""
    return highest_tableau(Partition(lam).conjugate()).conjugate()


def row_numbers(lam) -> tuple[int, ...]:
    """rho_lambda(i): the row of t^lambda containing i."""
    return highest_tableau(lam).row_sequence()


def residue_sequence(t: Tableau) -> tuple[int, ...]:
    return t.residues


def tableau_dominance_leq(s: Tableau, t: Tableau) -> bool:
    """s is dominated by t, comparing the compositions of {1..k} for every k.

    Works for tableaux of different shapes (row-standard or not)."""
    if s.n != t.n:
        raise DomainError("tableaux of different sizes")
    for k in range(1, s.n + 1):
        a, b = s.composition(k), t.composition(k)
        m = max(len(a), len(b))
        if not all(x <= y for x, y in zip(_partial_sums(a, m), _partial_sums(b, m))):
            return False
    return True


def pair_dominance_leq(pair, other) -> bool:
    """(s, t) <= (s1, t1) in the strong dominance order."""
    (s, t), (s1, t1) = pair, other
    return tableau_dominance_leq(s, s1) and tableau_dominance_leq(t, t1)


def pair_succ(upper, lower) -> bool:
    """Strict order used for cellular triangularity: ``upper`` succ ``lower``.

    Either the shapes agree and ``upper`` strictly dominates ``lower`` as a
    pair, or the shape of ``upper`` strictly dominates that of ``lower``."""
    (u, v), (s, t) = upper, lower
    mu, nu = u.shape, s.shape
    if mu == nu:
        return (u, v) != (s, t) and pair_dominance_leq((s, t), (u, v))
    return mu != nu and dominance_leq(nu, mu)


@lru_cache(maxsize=None)
def standard_tableaux(lam) -> tuple[Tableau, ...]:
    """Std(lambda) sorted by row sequence (row of 1, row of 2, ...).

    Sorting by row sequence is a linear extension of decreasing dominance, so
    t^lambda comes first."""
    lam = Partition(lam)
    if lam.n > MAX_COMBINATORIAL_N:
        raise SizeError(f"n={lam.n} exceeds {MAX_COMBINATORIAL_N}")
    out = []

    def fill(shape, placed):
        # placed[k-1] is the row of entry k; grow by adding the next entry to an addable node
        k = len(placed) + 1
        if k > lam.n:
            out.append(tuple(placed))
            return
        for i in range(len(lam)):
            if shape[i] < lam[i] and (i == 0 or shape[i - 1] > shape[i]):
                shape[i] += 1
                placed.append(i)
                fill(shape, placed)
                placed.pop()
                shape[i] -= 1

    fill([0] * len(lam), [])
    tabs = []
    for rows_of in sorted(out):
        rows = [[] for _ in lam]
        for k, i in enumerate(rows_of, 1):
            rows[i].append(k)
        tabs.append(Tableau(tuple(tuple(r) for r in rows)))
    return tuple(tabs)


@lru_cache(maxsize=None)
def row_standard_tableaux(lam) -> tuple[Tableau, ...]:
    """All row-standard lambda-tableaux, sorted by row sequence."""
    lam = Partition(lam)
    out = []

    def fill(counts, placed):
        if len(placed) == lam.n:
            out.append(tuple(placed))
            return
        for i in range(len(lam)):
            if counts[i] < lam[i]:
                counts[i] += 1
                placed.append(i)
                fill(counts, placed)
                placed.pop()
                counts[i] -= 1

    fill([0] * len(lam), [])
    tabs = []
    for rows_of in out:
        rows = [[] for _ in lam]
        for k, i in enumerate(rows_of, 1):
            rows[i].append(k)
        tabs.append(Tableau(tuple(tuple(r) for r in rows)))
    return tuple(tabs)


@lru_cache(maxsize=None)
def all_standard_tableaux(n: int) -> tuple[Tableau, ...]:
    """Std(n): partitions in reverse-lex order, tableaux in canonical order."""
    return tuple(t for lam in enumerate_partitions(n) for t in standard_tableaux(lam))


@dataclass(frozen=True)
class TableauClass:
    p: int
    residue_seq: tuple[int, ...]
    members: tuple[Tableau, ...]
    index: int = 0

    @property
    def n(self) -> int:
        return len(self.residue_seq)

    @property
    def shapes(self) -> tuple[Partition, ...]:
        return tuple(dict.fromkeys(t.shape for t in self.members))

    @property
    def representative(self) -> Tableau:
        return self.members[0]

    def r(self, k: int) -> int:
        """Integer representative of the class residue at k (first member's content)."""
        return self.members[0].content(k)

    def __contains__(self, t) -> bool:
        return t in self.members

    def to_json(self):
        return {"p": self.p, "residue_seq": list(self.residue_seq),
                "members": [t.to_json() for t in self.members]}


@lru_cache(maxsize=None)
def tableau_classes(n: int, p: int) -> tuple[TableauClass, ...]:
    """Partition Std(n) by residue sequence mod p, in order of first appearance."""
    groups: dict[tuple[int, ...], list[Tableau]] = {}
    for t in all_standard_tableaux(n):
        groups.setdefault(tuple(r % p for r in t.residues), []).append(t)
    return tuple(TableauClass(p, key, tuple(members), index)
                 for index, (key, members) in enumerate(groups.items()))


def class_of(t: Tableau, p: int) -> TableauClass:
    key = tuple(r % p for r in t.residues)
    for cls in tableau_classes(t.n, p):
        if cls.residue_seq == key:
            return cls
    raise DomainError(f"{t!r} is not standard")


@dataclass(frozen=True)
class TableauWord:
    """d(t) with a fixed reduced word and the chain of tableaux it passes through.

    ``word = [k_1, ..., k_N]`` means d(t) = sigma_{k_1} ... sigma_{k_N} with
    sigma_k = (k-1, k); ``chain[0]`` is t^lambda and ``chain[j] = chain[j-1] * sigma_{k_j}``.
    """
    perm: Permutation
    word: tuple[int, ...]
    chain: tuple[Tableau, ...]


@lru_cache(maxsize=None)
def d_of_tableau(t: Tableau) -> TableauWord:
    """Reduced word for d(t), built by peeling from t down to t^lambda.

    At every step the largest k whose entry sits strictly above k-1 is swapped
    with k-1; this shortens d by one and keeps every tableau in the chain
    standard when t is."""
    n = t.n
    perm = Permutation(t.reading_word())
    backwards, cur = [], t
    chain_back = [t]
    while True:
        k = next((k for k in range(n, 1, -1) if cur.row_of(k) < cur.row_of(k - 1)), None)
        if k is None:
            break
        cur = cur * simple(k, n)
        backwards.append(k)
        chain_back.append(cur)
    if cur != highest_tableau(t.shape):
        raise ValueError(f"{t!r} cannot be reached from t^lambda by row-lowering swaps")
    return TableauWord(perm, tuple(reversed(backwards)), tuple(reversed(chain_back)))


@dataclass(frozen=True)
class HookData:
    shape: Partition
    hook_lengths: dict = field(repr=False)
    h_lambda: int
    gamma_lambda: int
    gamma_t: dict = field(repr=False)


def hook_lengths(lam) -> dict[tuple[int, int], int]:
    lam = Partition(lam)
    conj = lam.conjugate()
    return {(i, j): lam[i - 1] - j + conj[j - 1] - i + 1 for i, j in lam.nodes()}


def hook_quotient(t: Tableau) -> Fraction:
    """gamma_t = prod_{i>=2} gamma_{t,i}.

    gamma_{t,i} is the product of h/(h-1) over the nodes in the row holding i,
    hooks computed in the shape of the entries <= i, hooks of length 1 omitted."""
    g = Fraction(1)
    for i in range(2, t.n + 1):
        sub = Partition(x for x in t.composition(i) if x)
        hooks = hook_lengths(sub)
        row = t.row_of(i)
        for j in range(1, sub[row - 1] + 1):
            h = hooks[(row, j)]
            if h > 1:
                g *= Fraction(h, h - 1)
    return g


def hooks(lam) -> HookData:
    lam = Partition(lam)
    hl = hook_lengths(lam)
    return HookData(
        shape=lam,
        hook_lengths=hl,
        h_lambda=prod(hl.values()),
        gamma_lambda=prod(factorial(x) for x in lam),
        gamma_t={t: hook_quotient(t) for t in standard_tableaux(lam)},
    )


def parse_partition(text: str) -> Partition:
    """'3,1' -> (3,1)."""
    return Partition(int(x) for x in text.replace(" ", "").split(",") if x)
