"""Exact group-algebra arithmetic for S_n over QQ and over F_p.

Elements are stored as dense coefficient vectors indexed by permutation rank.
Over QQ the vector holds Python integers (numpy object dtype) together with a
single positive common denominator, kept in lowest terms; over F_p it is an
int64 vector with entries in [0, p).  Products only iterate over the nonzero
support of the sparser operand.
"""
from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd

import numpy as np

from .errors import DomainError, IntegralityError, SizeError
from .perms import Permutation, all_perms, simple, transposition

MAX_ALGEBRA_N = 8
_TABLE_N = 6  # full n! x n! index tables are built up to this degree


def _lehmer_ranks(arr: np.ndarray) -> np.ndarray:
    """Ranks of the rows of a (m, n) array of 0-based one-line permutations."""
    m, n = arr.shape
    ranks = np.zeros(m, dtype=np.int64)
    for i in range(n):
        smaller = (arr[:, i + 1:] < arr[:, i:i + 1]).sum(axis=1)
        ranks += smaller * factorial(n - 1 - i)
    return ranks


class SymmetricGroup:
    """Index tables for S_n; use :func:`group` to get the cached instance."""

    def __init__(self, n: int):
        if not 1 <= n <= MAX_ALGEBRA_N:
            raise SizeError(f"group algebra supports 1 <= n <= {MAX_ALGEBRA_N}, got {n}")
        self.n = n
        self.order = factorial(n)
        self.perms = all_perms(n)
        self.array = np.array(self.perms, dtype=np.int64).reshape(self.order, n) - 1
        inv = np.argsort(self.array, axis=1)
        self.inverse_index = _lehmer_ranks(inv)
        self._left_tables = None
        self._right_tables = None
        self._index_cache: dict = {}

    def rank(self, w: Permutation) -> int:
        return w.rank()

    def _compose_ranks(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Ranks of a_i * b_i for stacked 0-based perms (right action: b after a)."""
        return _lehmer_ranks(np.take_along_axis(b, a, axis=1))

    def left_index(self, g: int) -> np.ndarray:
        """idx with (g * x)[w] = x[idx[w]], i.e. idx[w] = rank(g^-1 w)."""
        key = ("L", g)
        if key not in self._index_cache:
            ginv = self.array[self.inverse_index[g]]
            a = np.broadcast_to(ginv, self.array.shape)
            self._index_cache[key] = self._compose_ranks(np.ascontiguousarray(a), self.array)
        return self._index_cache[key]

    def right_index(self, g: int) -> np.ndarray:
        """idx with (x * g)[w] = x[idx[w]], i.e. idx[w] = rank(w g^-1)."""
        key = ("R", g)
        if key not in self._index_cache:
            ginv = self.array[self.inverse_index[g]]
            b = np.broadcast_to(ginv, self.array.shape)
            self._index_cache[key] = self._compose_ranks(self.array, np.ascontiguousarray(b))
        return self._index_cache[key]

    @property
    def left_tables(self) -> np.ndarray:
        """T[u, w] = rank(u^-1 w)."""
        if self._left_tables is None:
            self._left_tables = np.stack([self.left_index(u) for u in range(self.order)])
        return self._left_tables

    @property
    def right_tables(self) -> np.ndarray:
        """T[v, w] = rank(w v^-1)."""
        if self._right_tables is None:
            self._right_tables = np.stack([self.right_index(v) for v in range(self.order)])
        return self._right_tables


@lru_cache(maxsize=None)
def group(n: int) -> SymmetricGroup:
    return SymmetricGroup(n)


def _check_p(p):
    if p is not None and (p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1))):
        raise DomainError(f"{p} is not prime")


class Element:
    """An element of QQ S_n (``p is None``) or F_p S_n."""

    __slots__ = ("n", "p", "num", "den")

    def __init__(self, n: int, p, num: np.ndarray, den: int = 1, normalize: bool = True):
        self.n = n
        self.p = p
        self.num = num
        self.den = den
        if normalize:
            self._normalize()

    # construction -----------------------------------------------------
    @classmethod
    def zero(cls, n: int, p=None) -> "Element":
        _check_p(p)
        G = group(n)
        if p is None:
            return cls(n, None, np.zeros(G.order, dtype=object), 1, normalize=False)
        return cls(n, p, np.zeros(G.order, dtype=np.int64), 1, normalize=False)

    @classmethod
    def from_terms(cls, n: int, terms, p=None) -> "Element":
        """From an iterable of (Permutation, coefficient) pairs; repeats are summed."""
        out = cls.zero(n, p)
        if p is None:
            den = 1
            fracs = [(w, Fraction(c)) for w, c in terms]
            for _, c in fracs:
                den = den * c.denominator // gcd(den, c.denominator)
            num = out.num
            for w, c in fracs:
                num[w.rank()] += c.numerator * (den // c.denominator)
            return cls(n, None, num, den)
        num = out.num
        for w, c in terms:
            num[w.rank()] = (num[w.rank()] + int(c)) % p
        return cls(n, p, num, 1, normalize=False)

    @classmethod
    def perm(cls, w: Permutation, coeff=1, p=None) -> "Element":
        return cls.from_terms(len(w), [(w, coeff)], p)

    @classmethod
    def one(cls, n: int, p=None) -> "Element":
        return cls.perm(Permutation.identity(n), 1, p)

    @classmethod
    def scalar(cls, n: int, c, p=None) -> "Element":
        return cls.perm(Permutation.identity(n), c, p)

    @classmethod
    def jm(cls, k: int, n: int, p=None) -> "Element":
        """L_k = (1,k) + ... + (k-1,k); L_1 = 0."""
        if not 1 <= k <= n:
            raise DomainError(f"L_{k} undefined in S_{n}")
        return cls.from_terms(n, [(transposition(i, k, n), 1) for i in range(1, k)], p)

    @classmethod
    def sigma(cls, k: int, n: int, p=None) -> "Element":
        return cls.perm(simple(k, n), 1, p)

    # normalisation ----------------------------------------------------
    def _normalize(self):
        if self.p is None:
            g = gcd(*(int(x) for x in self.num[self.num != 0]), int(self.den))
            if self.den < 0:
                g = -g
            if g not in (0, 1):
                self.num = self.num // g
                self.den = self.den // g
            elif g == 0:
                self.den = 1
        else:
            self.num = self.num % self.p

    def _like(self, num, den=1, normalize=True) -> "Element":
        return Element(self.n, self.p, num, den, normalize)

    def _check(self, other: "Element"):
        if not isinstance(other, Element):
            raise DomainError(f"expected an Element, got {type(other).__name__}")
        if other.n != self.n or other.p != self.p:
            raise DomainError(f"domain mismatch: (n={self.n}, p={self.p}) vs (n={other.n}, p={other.p})")

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Element):
            return self + Element.scalar(self.n, other, self.p)
        self._check(other)
        if self.p is None:
            den = self.den * other.den // gcd(self.den, other.den)
            return self._like(self.num * (den // self.den) + other.num * (den // other.den), den)
        return self._like(self.num + other.num)

    __radd__ = __add__

    def __neg__(self):
        return self._like(-self.num, self.den, normalize=self.p is not None)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def _scale(self, c) -> "Element":
        if self.p is None:
            c = Fraction(c)
            return self._like(self.num * c.numerator, self.den * c.denominator)
        c = Fraction(c)
        if c.denominator % self.p == 0:
            raise IntegralityError(f"scalar {c} is not invertible mod {self.p}")
        c = c.numerator * pow(c.denominator, -1, self.p) % self.p
        return self._like(self.num * c)

    def __mul__(self, other):
        if not isinstance(other, Element):
            return self._scale(other)
        self._check(other)
        return self._like(_convolve(self, other), self.den * other.den)

    def __rmul__(self, other):
        return self._scale(other)

    def __truediv__(self, c):
        return self._scale(Fraction(1) / Fraction(c))

    def __pow__(self, m: int):
        out = Element.one(self.n, self.p)
        base = self
        while m:
            if m & 1:
                out = out * base
            base = base * base
            m >>= 1
        return out

    def left_perm(self, w: Permutation) -> "Element":
        """w * self."""
        idx = group(self.n).left_index(w.rank())
        return self._like(self.num[idx], self.den, normalize=False)

    def right_perm(self, w: Permutation) -> "Element":
        """self * w."""
        idx = group(self.n).right_index(w.rank())
        return self._like(self.num[idx], self.den, normalize=False)

    def left_jm(self, k: int, shift=0) -> "Element":
        """(L_k + shift) * self, using the k-1 transpositions of L_k directly."""
        G = group(self.n)
        acc = self.num * 0
        for i in range(1, k):
            acc = acc + self.num[G.left_index(transposition(i, k, self.n).rank())]
        if shift:
            if self.p is None:
                shift = Fraction(shift)
                return self._like(acc * shift.denominator + self.num * shift.numerator,
                                  self.den * shift.denominator)
            acc = acc + self.num * (int(shift) % self.p)
        return self._like(acc, self.den)

    def right_jm(self, k: int, shift=0) -> "Element":
        """self * (L_k + shift)."""
        return self.star().left_jm(k, shift).star()

    def star(self) -> "Element":
        """The anti-automorphism w -> w^-1."""
        return self._like(self.num[group(self.n).inverse_index], self.den, normalize=False)

    # inspection -------------------------------------------------------
    def coeff(self, w: Permutation):
        c = self.num[w.rank()]
        return Fraction(int(c), self.den) if self.p is None else int(c)

    def coeff_identity(self):
        return self.coeff(Permutation.identity(self.n))

    def terms(self) -> dict:
        """Nonzero coefficients keyed by Permutation, in rank order."""
        perms = group(self.n).perms
        idx = np.nonzero(self.num)[0]
        if self.p is None:
            return {perms[i]: Fraction(int(self.num[i]), self.den) for i in idx}
        return {perms[i]: int(self.num[i]) for i in idx}

    def support_size(self) -> int:
        return int(np.count_nonzero(self.num))

    def is_zero(self) -> bool:
        return not np.any(self.num)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Element.scalar(self.n, other, self.p)
        if not isinstance(other, Element):
            return NotImplemented
        return (self.n, self.p, self.den) == (other.n, other.p, other.den) and np.array_equal(self.num, other.num)

    __hash__ = None

    def vector(self) -> list:
        """Coefficient list in rank order (Fractions over QQ, ints over F_p)."""
        if self.p is None:
            return [Fraction(int(x), self.den) for x in self.num]
        return [int(x) for x in self.num]

    def __repr__(self) -> str:
        items = list(self.terms().items())
        if not items:
            return "0"
        shown = " + ".join(f"{c}*{w!r}" for w, c in items[:6])
        more = f" + ...({len(items) - 6} more)" if len(items) > 6 else ""
        dom = "QQ" if self.p is None else f"F_{self.p}"
        return f"<S_{self.n} over {dom}: {shown}{more}>"

    # integrality ------------------------------------------------------
    def denominator_lcm(self) -> int:
        if self.p is not None:
            return 1
        return int(self.den)

    def is_p_integral(self, p: int) -> bool:
        if self.p is not None:
            return True
        return self.den % p != 0

    def reduce_mod(self, p: int) -> "Element":
        """Image under Z_(p) S_n -> F_p S_n."""
        _check_p(p)
        if self.p is not None:
            if self.p != p:
                raise DomainError(f"cannot reduce an F_{self.p} element mod {p}")
            return self
        if self.den % p == 0:
            bad = next(w for w, c in self.terms().items() if c.denominator % p == 0)
            raise IntegralityError(f"coefficient of {bad!r} has denominator divisible by {p}")
        inv = pow(int(self.den) % p, -1, p)
        num = np.array([int(x) % p * inv % p for x in self.num], dtype=np.int64)
        return Element(self.n, p, num, 1, normalize=False)

    def valuation(self, p: int):
        """Minimum p-adic valuation of the coefficients (inf for zero)."""
        if self.p is not None:
            raise DomainError("valuations are defined on rational elements")
        if self.is_zero():
            return float("inf")
        v_den = _vp(int(self.den), p)
        return min(_vp(int(x), p) for x in self.num[self.num != 0]) - v_den

    # serialisation ----------------------------------------------------
    def to_json(self) -> dict:
        if self.p is None:
            terms = [[list(w), f"{c.numerator}/{c.denominator}"] for w, c in self.terms().items()]
            domain = "QQ"
        else:
            terms = [[list(w), f"{c} mod {self.p}"] for w, c in self.terms().items()]
            domain = f"F{self.p}"
        return {"n": self.n, "domain": domain, "terms": terms}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, data) -> "Element":
        if isinstance(data, str):
            data = json.loads(data)
        n, domain = data["n"], data["domain"]
        if domain == "QQ":
            terms = [(Permutation(w), Fraction(c)) for w, c in data["terms"]]
            return cls.from_terms(n, terms)
        p = int(domain[1:])
        terms = [(Permutation(w), int(c.split(" mod ")[0])) for w, c in data["terms"]]
        return cls.from_terms(n, terms, p)


def _vp(x: int, p: int) -> int:
    if x == 0:
        return 10 ** 9
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def _convolve(a: Element, b: Element) -> np.ndarray:
    """Numerator vector of a*b: c[w] = sum_u a[u] b[u^-1 w]."""
    G = group(a.n)
    ia = np.nonzero(a.num)[0]
    ib = np.nonzero(b.num)[0]
    if len(ia) == 0 or len(ib) == 0:
        return a.num * 0
    if a.n <= _TABLE_N:
        if len(ia) <= len(ib):
            out = a.num[ia] @ b.num[G.left_tables[ia]]
        else:
            out = b.num[ib] @ a.num[G.right_tables[ib]]
        return out % a.p if a.p is not None else out
    out = a.num * 0
    if len(ia) <= len(ib):
        for u in ia:
            out = out + a.num[u] * b.num[G.left_index(int(u))]
            if a.p is not None:
                out %= a.p
    else:
        for v in ib:
            out = out + b.num[v] * a.num[G.right_index(int(v))]
            if a.p is not None:
                out %= a.p
    return out


def alg_add(a: Element, b: Element) -> Element:
    return a + b


def alg_scale(a: Element, c) -> Element:
    return a * c


def alg_multiply(a: Element, b: Element) -> Element:
    return a * b


def star(a: Element) -> Element:
    return a.star()


def coeff_identity(a: Element):
    return a.coeff_identity()


def trace_pair(a: Element, b: Element):
    """<a, b> = coefficient of the identity in ab."""
    a._check(b)
    inv = group(a.n).inverse_index
    if a.p is None:
        return Fraction(int(np.dot(a.num, b.num[inv])), a.den * b.den)
    return int(np.dot(a.num, b.num[inv]) % a.p)


def p_integral(a: Element, p: int) -> bool:
    return a.is_p_integral(p)


def reduce_mod_p(a: Element, p: int) -> Element:
    return a.reduce_mod(p)


def denominator_lcm(a: Element) -> int:
    return a.denominator_lcm()


def row_stabilizer_sum(rows, n: int, p=None, signed: bool = False) -> Element:
    """Sum (optionally signed) over the permutations preserving each row set."""
    from itertools import permutations as _perms, product
    blocks = [tuple(r) for r in rows if len(r) > 1]
    terms = []
    for choice in product(*[list(_perms(b)) for b in blocks]):
        images = list(range(1, n + 1))
        for block, img in zip(blocks, choice):
            for x, y in zip(block, img):
                images[x - 1] = y
        w = Permutation(images)
        terms.append((w, w.sign() if signed else 1))
    return Element.from_terms(n, terms, p)
