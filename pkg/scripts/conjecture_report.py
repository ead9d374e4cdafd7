"""Coefficient shape of E_lambda and of the other E_t, n <= 6.

Counts coefficients that are not 1/(k h_lambda) for an integer k.  Only
E_lambda is gated by the tests; the E_t counts are printed for comparison.
"""
import argparse

from jmsym.simples import conjecture_check
from jmsym.tableaux import enumerate_partitions


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=6)
    args = ap.parse_args()
    for n in range(1, args.max_n + 1):
        for lam in enumerate_partitions(n):
            rep = conjecture_check(lam)
            others = rep.data["E_t_violations"]
            flagged = {t: c for t, c in others.items() if c}
            print(f"{lam}: E_lambda violations {len(rep.data['violations'])}, "
                  f"other E_t with violations {len(flagged)}/{len(others)}")


if __name__ == "__main__":
    main()
