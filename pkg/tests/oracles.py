"""Independent reference computations used by the tests.

Nothing here imports the package's idempotent or basis code: characters come
from the Murnaghan-Nakayama rule and tableau counts from brute force.
"""
from functools import lru_cache
from itertools import permutations


def cycle_type(images):
    n = len(images)
    seen = [False] * n
    out = []
    for i in range(n):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = images[j] - 1
                length += 1
            out.append(length)
    return tuple(sorted(out, reverse=True))


def _beta(lam, length):
    lam = list(lam) + [0] * (length - len(lam))
    return [lam[i] + length - 1 - i for i in range(length)]


@lru_cache(maxsize=None)
def character(lam, mu):
    """chi^lam(mu) by removing rim hooks of size mu[0] via beta numbers."""
    lam = tuple(x for x in lam if x)
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    length = len(lam) + r
    beta = _beta(lam, length)
    total = 0
    bs = set(beta)
    for b in beta:
        if b - r >= 0 and (b - r) not in bs:
            sign = (-1) ** sum(1 for c in beta if b - r < c < b)
            new = sorted([c for c in beta if c != b] + [b - r], reverse=True)
            parts = tuple(new[i] - (length - 1 - i) for i in range(length))
            total += sign * character(tuple(x for x in parts if x), rest)
    return total


def count_standard(lam):
    """Number of standard tableaux by brute force over all fillings."""
    n = sum(lam)
    count = 0
    for perm in permutations(range(1, n + 1)):
        rows, k = [], 0
        for part in lam:
            rows.append(perm[k:k + part])
            k += part
        ok = all(r[i] < r[i + 1] for r in rows for i in range(len(r) - 1))
        ok = ok and all(rows[i][j] < rows[i + 1][j] for i in range(len(rows) - 1)
                        for j in range(len(rows[i + 1])))
        count += ok
    return count


def partitions(n, bound=None):
    bound = n if bound is None else bound
    if n == 0:
        yield ()
        return
    for k in range(min(n, bound), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest
