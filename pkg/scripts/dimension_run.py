"""Extended dimension tables, including n = 7 (outside the acceptance gate).

    python3 scripts/dimension_run.py --n 7 --primes 2 3 5 7 --processes 4
"""
import argparse
import json
import time

from jmsym.simples import dimension_table


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=7)
    ap.add_argument("--primes", type=int, nargs="+", default=[2, 3, 5, 7])
    ap.add_argument("--processes", type=int, default=1)
    ap.add_argument("--json", help="write all records here")
    args = ap.parse_args()
    out = []
    for p in args.primes:
        start = time.perf_counter()
        table = dimension_table(args.n, p, processes=args.processes, with_gram=False)
        per_lambda = sum(r.matrix_rank == r.james_oracle_rank for r in table)
        print(f"n={args.n} p={p}: dims {table.dims} oracle {table.oracle_dims} "
              f"match={table.multiset_match} per-lambda agreement {per_lambda}/{len(table)} "
              f"({time.perf_counter() - start:.1f}s)")
        out.append({"n": args.n, "p": p, "match": table.multiset_match,
                    "records": [r.to_json() for r in table]})
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(out, fh, indent=1)


if __name__ == "__main__":
    main()
