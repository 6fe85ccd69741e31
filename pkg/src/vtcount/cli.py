"""Command-line front end.

    vtcount ramanujan 6 4
    vtcount ramanujan --table 10 12 --csv
    vtcount count 5 2 0 --unordered
    vtcount subset-sum 5            # every residue b
    vtcount vt size 5 0
    vtcount vt weights 5 0 --json
    vtcount necklace 2 5 --quasi
    vtcount necklace --density 3 6
    vtcount verify --suite all --max-n 12

``count`` and ``subset-sum`` take the modulus n directly.  ``vt`` takes the
code length n and works modulo n + 1 internally.

Exit codes: 0 success, 1 verification mismatch, 2 usage error,
3 capacity error.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
import time

from . import arith, congruence as cg, necklaces as nk, vt
from ._errors import CapacityError, exact_div
from .verify import SUITES, run_suite

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _fmt(x) -> str:
    # ints and Fractions render exactly through str(); never via float
    return str(x)


def _ramanujan(a):
    if a.table:
        nmax, mmax = a.table
        if nmax < 1:
            raise UsageError("table needs n >= 1")
        rows = [{"n": n, "m": m, "value": arith.ramanujan_sum(n, m)}
                for n in range(1, nmax + 1) for m in range(0, mmax + 1)]
        return {"n_max": nmax, "m_max": mmax}, [r["value"] for r in rows], rows
    if a.n is None or a.m is None:
        raise UsageError("ramanujan needs N M or --table N_MAX M_MAX")
    v = arith.ramanujan_sum(a.n, a.m)
    return {"n": a.n, "m": a.m}, v, [{"n": a.n, "m": a.m, "value": v}]


def _count(a):
    spec = cg.CongruenceSpec(a.n, a.k, a.b)
    v = cg.count_distinct_positive(spec) if a.positive else cg.count_distinct(spec)
    if a.unordered:
        v = exact_div(v, arith.factorial(spec.k))
    params = {"n": spec.n, "k": spec.k, "b": spec.b,
              "positive": a.positive, "unordered": a.unordered}
    return params, v, [{"n": spec.n, "k": spec.k, "b": spec.b, "value": v}]


def _subset_sum(a):
    fn = cg.subset_sum_count_excl if a.exclude_n else cg.subset_sum_count
    bs = range(a.n) if a.b is None else [a.b % a.n]
    rows = [{"n": a.n, "b": b, "value": fn(a.n, b)} for b in bs]
    params = {"n": a.n, "b": a.b, "exclude_n": a.exclude_n}
    result = rows[0]["value"] if a.b is not None else [r["value"] for r in rows]
    return params, result, rows


def _vt(a):
    spec = vt.VTSpec(a.n, a.b)
    params = {"n": spec.n, "b": spec.b}
    if a.what == "size":
        v = vt.vt_size(spec)
        return params, v, [{"n": spec.n, "b": spec.b, "value": v}]
    if a.what == "weights":
        dist = vt.vt_weight_distribution(spec)
        rows = [{"n": spec.n, "b": spec.b, "k": k, "value": c} for k, c in enumerate(dist)]
        return params, list(dist), rows
    words = [str(w) for w in vt.vt_enumerate(spec)]
    return params, words, [{"n": spec.n, "b": spec.b, "codeword": w} for w in words]


def _necklace(a):
    if a.density is not None:
        if len(a.args) != 1:
            raise UsageError("necklace --density K takes exactly one length N")
        n, k = a.args[0], a.density
        fn = nk.fixed_density_lyndon if a.lyndon else nk.fixed_density_necklaces
        v = fn(n, k)
        return {"n": n, "k": k, "lyndon": a.lyndon}, v, [{"n": n, "k": k, "value": v}]
    if len(a.args) != 2:
        raise UsageError("necklace takes Q N (or --density K N)")
    q, n = a.args
    v = nk.quasi_necklace_poly(q, n) if a.quasi else nk.necklace_poly(q, n)
    return {"q": q, "n": n, "quasi": a.quasi}, v, [{"q": q, "n": n, "value": v}]


def _emit(a, command, params, result, rows, elapsed_ms, out):
    if a.quiet:
        return
    if a.json:
        rec = {
            "command": command,
            "params": params,
            "result": [_fmt(x) for x in result] if isinstance(result, list) else _fmt(result),
            "elapsed_ms": round(elapsed_ms, 3),
        }
        json.dump(rec, out)
        out.write("\n")
    elif a.csv:
        w = csv.DictWriter(out, fieldnames=list(rows[0]) if rows else ["value"], lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: _fmt(v) for k, v in r.items()})
    elif isinstance(result, list):
        for x in result:
            print(_fmt(x), file=out)
    else:
        print(_fmt(result), file=out)


def _verify(a, out) -> int:
    t0 = time.perf_counter()
    results = run_suite(a.suite, a.max_n)
    elapsed = (time.perf_counter() - t0) * 1000
    ok = all(r.passed for r in results)
    if not a.quiet:
        if a.json:
            json.dump({
                "command": "verify",
                "params": {"suite": a.suite, "max_n": a.max_n},
                "result": [{"name": r.name, "checks": str(r.checks), "passed": r.passed,
                            "counterexample": r.counterexample} for r in results],
                "elapsed_ms": round(elapsed, 3),
            }, out)
            out.write("\n")
        else:
            for r in results:
                print(r.line(), file=out)
            total = sum(r.checks for r in results)
            print(f"{'OK' if ok else 'MISMATCH'}: {total} checks", file=out)
    return EXIT_OK if ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                     help="emit one JSON record; big integers as decimal strings")
    fmt.add_argument("--csv", action="store_true", default=argparse.SUPPRESS,
                     help="emit a CSV table with a header row")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS,
                        help="print nothing; rely on the exit status")

    p = argparse.ArgumentParser(prog="vtcount", parents=[common],
                                description="Exact counts for distinct-coordinate congruences, "
                                            "VT codes and necklaces.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("ramanujan", parents=[common], help="Ramanujan sum c_n(m)")
    r.add_argument("n", type=int, nargs="?")
    r.add_argument("m", type=int, nargs="?")
    r.add_argument("--table", type=int, nargs=2, metavar=("N_MAX", "M_MAX"),
                   help="c_n(m) for 1<=n<=N_MAX, 0<=m<=M_MAX")
    r.set_defaults(func=_ramanujan)

    c = sub.add_parser("count", parents=[common],
                       help="solutions of x_1+...+x_k = b (mod n) with distinct x_i")
    c.add_argument("n", type=int, help="modulus")
    c.add_argument("k", type=int)
    c.add_argument("b", type=int)
    c.add_argument("--positive", action="store_true", help="all x_i nonzero mod n")
    c.add_argument("--unordered", action="store_true", help="divide out the k! orderings")
    c.set_defaults(func=_count)

    s = sub.add_parser("subset-sum", parents=[common],
                       help="subsets of {1..n} with sum = b (mod n)")
    s.add_argument("n", type=int, help="modulus")
    s.add_argument("b", type=int, nargs="?", help="residue; omit for every b")
    s.add_argument("--exclude-n", action="store_true", help="subsets of {1..n-1} instead")
    s.set_defaults(func=_subset_sum)

    v = sub.add_parser("vt", parents=[common],
                       help="Varshamov-Tenengolts code VT_b(n) (modulus n+1)")
    v.add_argument("what", choices=["size", "weights", "enum"])
    v.add_argument("n", type=int, help="code length (modulus is n+1)")
    v.add_argument("b", type=int, nargs="?", default=0)
    v.set_defaults(func=_vt)

    nkp = sub.add_parser("necklace", parents=[common],
                         help="necklace polynomial M(q,n) or fixed-density counts")
    nkp.add_argument("args", type=int, nargs="+", metavar="Q N | N")
    nkp.add_argument("--quasi", action="store_true", help="M'(q,n) = M(q,n)/2, exact rational")
    nkp.add_argument("--density", type=int, metavar="K", help="binary necklaces with K ones")
    nkp.add_argument("--lyndon", action="store_true", help="with --density: Lyndon words only")
    nkp.set_defaults(func=_necklace)

    ver = sub.add_parser("verify", parents=[common], help="run oracle-equivalence sweeps")
    ver.add_argument("--max-n", type=int, default=12)
    ver.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    ver.set_defaults(func=None)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    # results routinely exceed the default 4300-digit str() guard
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    p = build_parser()
    try:
        a = p.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    for flag in ("json", "csv", "quiet"):
        if not hasattr(a, flag):
            setattr(a, flag, False)
    try:
        if a.command == "verify":
            if a.max_n < 1:
                raise UsageError("--max-n must be positive")
            return _verify(a, out)
        t0 = time.perf_counter()
        params, result, rows = a.func(a)
        elapsed = (time.perf_counter() - t0) * 1000
    except CapacityError as e:
        print(f"vtcount: capacity error: {e}", file=sys.stderr)
        return EXIT_CAPACITY
    except (UsageError, ValueError) as e:
        print(f"vtcount: {e}", file=sys.stderr)
        return EXIT_USAGE
    _emit(a, a.command, params, result, rows, elapsed, out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
