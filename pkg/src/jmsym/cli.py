"""Command line entry point: ``jmsym {dims,verify,idempotent,basis}``.

Exit codes: 0 success, 1 a verification or cross-check failed, 2 usage
error or size cap exceeded, 3 cache integrity failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .cache import IdempotentCache
from .errors import CacheIntegrityError, PreconditionError
from .report import Report
from .tableaux import Partition, enumerate_partitions, parse_partition

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CACHE = 0, 1, 2, 3
CAPS = {"dims": 7, "verify-fast": 4, "verify-full": 5, "idempotent": 7, "basis": 5}
SUITES = ("all", "jm", "idempotents", "murphy", "intertwiners", "xi", "psi", "gram", "gz", "simples")


@dataclass
class RunConfig:
    command: str
    n: int
    p: int | None = None
    lam: Partition | None = None
    format: str = "table"
    check_level: str = "fast"
    cache_dir: Path | None = None
    threads: int = 1
    suite: str = "all"
    cls: int | None = None
    kind: str = "psi"
    gram: str | None = None


class UsageError(Exception):
    pass


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def _validate(cfg: RunConfig):
    key = cfg.command if cfg.command != "verify" else f"verify-{cfg.check_level}"
    if not 1 <= cfg.n <= CAPS[key]:
        raise UsageError(f"{cfg.command}: n must be between 1 and {CAPS[key]}")
    if cfg.p is not None and not _is_prime(cfg.p):
        raise UsageError(f"p={cfg.p} is not prime")
    if cfg.lam is not None and cfg.lam.n != cfg.n:
        raise UsageError(f"lambda={cfg.lam} is not a partition of {cfg.n}")


# --- dims -----------------------------------------------------------------

def cmd_dims(cfg: RunConfig, out=sys.stdout) -> int:
    from .simples import DimensionTable, dim_simple, dimension_table

    if cfg.p is None:
        raise UsageError("dims needs --p")
    if cfg.lam is not None:
        try:
            rec = dim_simple(cfg.lam, cfg.p)
        except PreconditionError as exc:
            raise UsageError(str(exc)) from exc
        table = DimensionTable(cfg.n, cfg.p, [rec], [])
        records, ok = [rec], rec.consistent and (rec.james_oracle_rank in (None, rec.matrix_rank))
    else:
        table = dimension_table(cfg.n, cfg.p, processes=cfg.threads)
        records, ok = table.records, table.passed
    fields = ["n", "p", "lambda", "restricted", "a_lambda", "matrix_rank", "gram_rank_murphy",
              "james_oracle_rank"]
    rows = [r.to_json() for r in records]
    for r in rows:
        r.pop("runtime_ms")
    if cfg.format == "json":
        for r in rows:
            out.write(json.dumps(r, separators=(",", ":")) + "\n")
    elif cfg.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({**r, "lambda": ",".join(map(str, r["lambda"]))})
        out.write(buf.getvalue())
    else:
        out.write(f"{'lambda':<16}{'a_lambda':>12}{'dim':>6}{'gram':>6}{'oracle':>8}\n")
        for r in rows:
            lam = "(" + ",".join(map(str, r["lambda"])) + ")"
            g = "-" if r["gram_rank_murphy"] is None else r["gram_rank_murphy"]
            o = "-" if r["james_oracle_rank"] is None else r["james_oracle_rank"]
            out.write(f"{lam:<16}{r['a_lambda']:>12}{r['matrix_rank']:>6}{g:>6}{o:>8}\n")
        if cfg.lam is None:
            out.write(f"multiset {table.dims} vs oracle {table.oracle_dims}: "
                      f"{'match' if table.multiset_match else 'MISMATCH'}\n")
    return EXIT_OK if ok else EXIT_FAIL


# --- verify ---------------------------------------------------------------

def _cached_class_check(cfg: RunConfig, n: int, p: int) -> Report:
    """Class idempotents served through the cache must equal a fresh computation."""
    from .seminormal import class_idempotent
    from .tableaux import tableau_classes

    cache = IdempotentCache(cfg.cache_dir)
    rep = Report(f"cache n={n} p={p}")
    for T in tableau_classes(n, p):
        fresh = class_idempotent(T).element_Q
        got, _ = cache.get_or_compute(n, f"class{T.index}_p{p}", "QQ", lambda: fresh)
        rep.add("cached E_T matches", f"class {T.index}", True, got == fresh)
    return rep


def idempotent_suite(n: int, p: int) -> Report:
    from .algebra import Element
    from .seminormal import class_idempotent, idempotent_E_t
    from .tableaux import all_standard_tableaux, tableau_classes

    rep = Report(f"idempotents n={n} p={p}")
    tabs = all_standard_tableaux(n)
    E = {t: idempotent_E_t(t) for t in tabs}
    one = Element.one(n)
    for s in tabs:
        rep.add("E_t^2 = E_t", repr(s), True, E[s] * E[s] == E[s])
        for t in tabs:
            if s != t:
                rep.add("E_s E_t = 0", f"{s!r},{t!r}", True, (E[s] * E[t]).is_zero())
    total = Element.zero(n)
    for t in tabs:
        total = total + E[t]
    rep.add("sum E_t = 1", f"n={n}", True, total == one)
    classes = tableau_classes(n, p)
    cis = [class_idempotent(T) for T in classes]
    for dom in ("QQ", f"F{p}"):
        els = [c.element_Q if dom == "QQ" else c.element_p for c in cis]
        for i, a in enumerate(els):
            rep.add(f"E_T idempotent over {dom}", f"class {i}", True, a * a == a)
            for j, b in enumerate(els):
                if i != j:
                    rep.add(f"E_S E_T = 0 over {dom}", f"classes {i},{j}", True, (a * b).is_zero())
        total = els[0] * 0
        for a in els:
            total = total + a
        rep.add(f"sum E_T = 1 over {dom}", f"n={n}", True, total == (one if dom == "QQ" else Element.one(n, p)))
    for c in cis:
        rep.add("E_T p-integral", f"class {c.cls.index}", True, c.element_Q.is_p_integral(p))
    return rep


def absorption_suite(n: int, p: int) -> Report:
    from .seminormal import class_idempotent_of, psi_L_applied
    from .tableaux import all_standard_tableaux, highest_tableau

    rep = Report(f"absorption n={n} p={p}")
    for t in all_standard_tableaux(n):
        u = psi_L_applied(t, p)
        E = class_idempotent_of(highest_tableau(t.shape), p).element_p
        rep.add("E_[t^lambda] u_t = u_t", repr(t), True, E * u == u)
        rep.add("u_t != 0", repr(t), True, not u.is_zero())
    return rep


def run_suite(cfg: RunConfig) -> list[Report]:
    from . import cellular, gz, seminormal, simples
    from .tableaux import p_restricted, tableau_classes

    n, p = cfg.n, cfg.p
    want = (lambda s: cfg.suite in ("all", s))
    reports: list[Report] = []
    if want("jm"):
        reports.append(seminormal.jm_relations_check(n))
        reports.append(seminormal.eigen_relation_check(n))
    if want("idempotents"):
        reports.append(idempotent_suite(n, p))
        reports.append(_cached_class_check(cfg, n, p))
    if want("murphy"):
        reports += [seminormal.murphy_formula_check(T) for T in tableau_classes(n, p)]
    if want("intertwiners"):
        reports.append(absorption_suite(n, p))
        reports.append(seminormal.commutation_lemma_check(n, p))
    if want("xi"):
        reports.append(cellular.xi_check(n))
        reports.append(cellular.xi_image_check(n))
        reports.append(cellular.jm_triangularity_check(n))
    if want("psi"):
        reports.append(cellular.psi_triangularity_and_basis_check(n, p))
    if want("gram"):
        reports.append(cellular.gram_block_check(n, p))
    if want("gz"):
        reports.append(gz.gz_check(n))
    if want("simples"):
        table = simples.dimension_table(n, p)
        rep = Report(f"simples n={n} p={p}")
        rep.add("dimension multiset = oracle multiset", f"n={n}", table.oracle_dims, table.dims)
        reports.append(rep)
        reports.append(simples.rank_identity_check(n, p))
        for lam in enumerate_partitions(n):
            if p_restricted(lam, p):
                reports.append(simples.closure_check(lam, p))
    return reports


def cmd_verify(cfg: RunConfig, out=sys.stdout) -> int:
    if cfg.p is None:
        raise UsageError("verify needs --p")
    try:
        reports = run_suite(cfg)
    except CacheIntegrityError as exc:
        print(f"cache integrity failure: {exc}", file=sys.stderr)
        return EXIT_CACHE
    checks = [c.to_json() for r in reports for c in r.checks]
    if cfg.format == "json":
        out.write(json.dumps(checks, separators=(",", ":")) + "\n")
    else:
        for r in reports:
            out.write(f"{'PASS' if r.passed else 'FAIL'}  {r.name}  ({len(r.checks)} checks)\n")
            for c in r.failures[:10]:
                out.write(f"      {c.check} [{c.label}] expected {c.expected} got {c.got}\n")
    failed = sum(not c["pass"] for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} checks passed", file=sys.stderr)
    return EXIT_OK if failed == 0 else EXIT_FAIL


# --- idempotent -------------------------------------------------------------

def cmd_idempotent(cfg: RunConfig, out=sys.stdout) -> int:
    from .seminormal import class_idempotent, idempotent_E_lambda_fast
    from .tableaux import tableau_classes

    cache = IdempotentCache(cfg.cache_dir)
    if cfg.lam is not None:
        label = "lambda_" + "-".join(map(str, cfg.lam))
        element, hit = cache.get_or_compute(cfg.n, label, "QQ", lambda: idempotent_E_lambda_fast(cfg.lam))
        record = {"kind": "E_lambda", "lambda": list(cfg.lam)}
        if cfg.p is not None:
            record["p_integral"] = element.is_p_integral(cfg.p)
    elif cfg.cls is not None:
        if cfg.p is None:
            raise UsageError("--class needs --p")
        classes = tableau_classes(cfg.n, cfg.p)
        if not 0 <= cfg.cls < len(classes):
            raise UsageError(f"class id must be in 0..{len(classes) - 1}")
        T = classes[cfg.cls]
        element, hit = cache.get_or_compute(cfg.n, f"class{T.index}_p{cfg.p}", "QQ",
                                            lambda: class_idempotent(T).element_Q)
        record = {"kind": "E_T", "p": cfg.p, "class": T.to_json(), "p_integral": element.is_p_integral(cfg.p)}
    else:
        raise UsageError("idempotent needs --lambda or --p/--class")
    record["element"] = element.to_json()
    out.write(json.dumps(record, separators=(",", ":"), sort_keys=True) + "\n")
    print("served from cache" if hit else "computed and cached", file=sys.stderr)
    return EXIT_OK


# --- basis ------------------------------------------------------------------

def cmd_basis(cfg: RunConfig, out=sys.stdout) -> int:
    from . import cellular
    from .tableaux import standard_tableaux

    lams = [cfg.lam] if cfg.lam is not None else enumerate_partitions(cfg.n)
    if cfg.gram is not None:
        if cfg.p is None and cfg.gram == "psi":
            raise UsageError("the psi Gram matrix needs --p")
        for lam in lams:
            if cfg.gram == "psi":
                order, G = cellular.gram_psi(lam, cfg.p)
            else:
                order, G = list(standard_tableaux(lam)), cellular.gram_murphy(lam, cfg.p)
            out.write(f"# lambda={lam}\n")
            out.write(cellular.gram_to_csv(order, G))
        return EXIT_OK
    if cfg.kind == "psi" and cfg.p is None:
        raise UsageError("the psi basis needs --p")
    for lam in lams:
        tabs = standard_tableaux(lam)
        if cfg.kind == "psi":
            elements = cellular.psi_elements(lam, cfg.p)
        else:
            elements = {(s, t): cellular.x_st(s, t, cfg.p) for s in tabs for t in tabs}
        for (s, t), a in elements.items():
            out.write(json.dumps({"s": s.to_json(), "t": t.to_json(), "element": a.to_json()},
                                 separators=(",", ":")) + "\n")
    return EXIT_OK


# --- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="jmsym", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, need_p=False):
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--p", type=int, required=need_p)
        sp.add_argument("--lambda", dest="lam", type=parse_partition)
        sp.add_argument("--cache-dir", type=Path)
        sp.add_argument("--threads", type=int, default=1)

    d = sub.add_parser("dims", help="dimensions of the simple modules")
    common(d, need_p=True)
    d.add_argument("--format", choices=("json", "csv", "table"), default="table")

    v = sub.add_parser("verify", help="run the verification suites")
    v.add_argument("suite", nargs="?", choices=SUITES, default="all")
    common(v, need_p=True)
    v.add_argument("--check-level", choices=("fast", "full"), default="fast")
    v.add_argument("--format", choices=("json", "table"), default="table")

    i = sub.add_parser("idempotent", help="print E_lambda or a class idempotent")
    common(i)
    i.add_argument("--class", dest="cls", type=int)

    b = sub.add_parser("basis", help="dump psi_st or x_st, or a Gram matrix as CSV")
    common(b)
    b.add_argument("--kind", choices=("psi", "x"), default="psi")
    b.add_argument("--gram", choices=("psi", "murphy"))
    return ap


def config_from_args(args) -> RunConfig:
    return RunConfig(command=args.command, n=args.n, p=args.p, lam=args.lam,
                     format=getattr(args, "format", "table"),
                     check_level=getattr(args, "check_level", "fast"), cache_dir=args.cache_dir,
                     threads=args.threads, suite=getattr(args, "suite", "all"),
                     cls=getattr(args, "cls", None), kind=getattr(args, "kind", "psi"),
                     gram=getattr(args, "gram", None))


COMMANDS = {"dims": cmd_dims, "verify": cmd_verify, "idempotent": cmd_idempotent, "basis": cmd_basis}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = config_from_args(args)
    try:
        _validate(cfg)
        return COMMANDS[cfg.command](cfg, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CacheIntegrityError as exc:
        print(f"cache integrity failure: {exc}", file=sys.stderr)
        return EXIT_CACHE


if __name__ == "__main__":
    sys.exit(main())
