"""Permutations of {1..n} acting on the right.

The convention is that points are acted on from the right and products are
read left to right: ``x^(a*b) = (x^a)^b``.  With this convention the product
of transpositions ``(1,2)*(2,3)`` sends 1 -> 3 -> 2 -> 1.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from math import factorial

from .errors import DomainError


class Permutation(tuple):
    """One-line notation: ``p[i-1]`` is the image of ``i``."""

    def __new__(cls, images):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, n: int, *cycles) -> "Permutation":
        images = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a - 1] = b
        return cls(images)

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, x: int) -> int:
        return self[x - 1]

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(other) != len(self):
            raise DomainError(f"cannot multiply permutations of degrees {len(self)} and {len(other)}")
        return Permutation(other[x - 1] for x in self)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, x in enumerate(self, 1):
            inv[x - 1] = i
        return Permutation(inv)

    def length(self) -> int:
        """Coxeter length, i.e. the number of inversions."""
        return sum(1 for i in range(len(self)) for j in range(i + 1, len(self)) if self[i] > self[j])

    def sign(self) -> int:
        return -1 if self.length() % 2 else 1

    def rank(self) -> int:
        """Lehmer-code index; identity is 0 and the order is lexicographic."""
        n = len(self)
        r = 0
        for i in range(n):
            smaller = sum(1 for j in range(i + 1, n) if self[j] < self[i])
            r += smaller * factorial(n - 1 - i)
        return r

    @classmethod
    def unrank(cls, n: int, r: int) -> "Permutation":
        items = list(range(1, n + 1))
        out = []
        for i in range(n - 1, -1, -1):
            q, r = divmod(r, factorial(i))
            out.append(items.pop(q))
        return cls(out)

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(1, len(self) + 1):
            if start in seen or self(start) == start:
                seen.add(start)
                continue
            cyc, x = [], start
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self(x)
            out.append(tuple(cyc))
        return out

    def __repr__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return f"Permutation(id, n={len(self)})"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc)


def transposition(i: int, j: int, n: int) -> Permutation:
    if not (1 <= i <= n and 1 <= j <= n) or i == j:
        raise DomainError(f"bad transposition ({i},{j}) in S_{n}")
    return Permutation.from_cycles(n, (i, j))


def simple(k: int, n: int) -> Permutation:
    """The simple transposition sigma_k = (k-1, k), for 2 <= k <= n."""
    if not 2 <= k <= n:
        raise DomainError(f"sigma_{k} does not exist in S_{n}")
    return transposition(k - 1, k, n)


def perm_multiply(a: Permutation, b: Permutation) -> Permutation:
    return a * b


def perm_inverse(a: Permutation) -> Permutation:
    return a.inverse()


def word_to_perm(word, n: int) -> Permutation:
    """Product sigma_{k_1} sigma_{k_2} ... of simple transpositions."""
    p = Permutation.identity(n)
    for k in word:
        p = p * simple(k, n)
    return p


@lru_cache(maxsize=None)
def all_perms(n: int) -> tuple[Permutation, ...]:
    """All of S_n, indexed by rank."""
    return tuple(Permutation(p) for p in permutations(range(1, n + 1)))
