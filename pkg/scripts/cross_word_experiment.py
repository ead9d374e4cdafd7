"""Does u_t mod p depend on the reduced word chosen for d(t)?

For every standard t we enumerate all peeling sequences (every k whose entry
sits above k-1 may be swapped at each step; the chain stays standard) and
build u_t along each.  The package fixes one canonical word; this script only
reports how often the alternatives agree with it.

    python3 scripts/cross_word_experiment.py --n 4 --primes 2 3
"""
import argparse
import json
from collections import Counter

from jmsym.algebra import Element
from jmsym.seminormal import class_idempotent_of, hl_inverse, psi_L_applied
from jmsym.tableaux import all_standard_tableaux, class_of, highest_tableau
from jmsym.perms import simple


def peelings(t):
    """All (word, chain) pairs from t^lambda up to t, chain[0] = t^lambda."""
    n = t.n
    ks = [k for k in range(n, 1, -1) if t.row_of(k) < t.row_of(k - 1)]
    if not ks:
        assert t == highest_tableau(t.shape)
        yield (), (t,)
        return
    for k in ks:
        for word, chain in peelings(t * simple(k, n)):
            yield word + (k,), chain + (t,)


def u_along(word, chain, p):
    n = chain[0].n
    v = class_idempotent_of(chain[-1], p).element_p
    for j in range(len(word), 0, -1):
        k = word[j - 1]
        cur, prev = class_of(chain[j], p), class_of(chain[j - 1], p)
        sv = Element.sigma(k, n, p) * v
        v = sv - v if cur == prev else sv + hl_inverse(cur, k).apply(v)
    return v


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--primes", type=int, nargs="+", default=[2, 3])
    args = ap.parse_args()
    summary = {}
    for p in args.primes:
        stats = Counter()
        for t in all_standard_tableaux(args.n):
            ref = psi_L_applied(t, p)
            words = list(peelings(t))
            agree = sum(u_along(w, c, p) == ref for w, c in words)
            stats["tableaux"] += 1
            stats["words"] += len(words)
            stats["agreeing words"] += agree
            stats["word-independent tableaux"] += agree == len(words)
        summary[p] = dict(stats)
        print(f"n={args.n} p={p}: {dict(stats)}")
    print(json.dumps(summary, indent=2))


if __name__ == "__main__":
    main()
