"""Command-line front end.

Exit codes: 0 when every check passed, 1 when a check failed (a witness is
printed), 2 for usage, input or budget errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from math import comb

from . import __version__
from .core import EdgeListError, read_edge_list, write_edge_list, format_edge_list
from .extremal import (
    M_of,
    fact1_identity_check,
    fact2_sweep,
    fact4_q0_check,
    n1_exact,
    n1_formula,
    a_of,
)
from .matching import max_matching
from .search import (
    BRUTE_MAX_TRIPLES,
    SHIFTED_MAX_NODES,
    BudgetExceeded,
    bruteforce_search,
    m_shifted,
)
from .shifting import stabilize

OK, FAIL, USAGE = 0, 1, 2


def _emit(args, command: str, params: dict, results, text_lines: list[str], started: float) -> None:
    if getattr(args, "json", False):
        report = {
            "command": command,
            "parameters": params,
            "results": results,
            "version": __version__,
            "elapsed_s": round(time.perf_counter() - started, 3),
        }
        print(json.dumps(report, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_nu(args) -> int:
    F = read_edge_list(args.file)
    M = max_matching(F)
    print(f"nu = {len(M)}")
    for e in M:
        print(" ".join(map(str, e)))
    return OK


def cmd_shift(args) -> int:
    F = read_edge_list(args.file)
    G = stabilize(F)
    if args.out == "-":
        sys.stdout.write(format_edge_list(G))
    else:
        write_edge_list(G, args.out)
    return OK


def cmd_verify(args) -> int:
    started = time.perf_counter()
    if args.mode == "brute":
        if args.one:
            print("--one is only supported with --mode shifted", file=sys.stderr)
            return USAGE
        res = bruteforce_search(args.n, args.s, max_triples=args.max_triples)
    else:
        res = m_shifted(args.n, args.s, one_only=args.one, max_nodes=args.max_nodes)
    M = M_of(args.n, args.s)
    good = res.m <= M
    verdict = "OK" if good else "VIOLATION"
    lines = [f"m={res.m} M={M} {verdict}"]
    if not good:
        lines.append(format_edge_list(res.witness).rstrip("\n"))
    results = {
        "m": res.m,
        "M": M,
        "ok": good,
        "mode": res.mode,
        "nodes_explored": res.nodes_explored,
        "witness": [list(e) for e in res.witness],
    }
    params = {"n": args.n, "s": args.s, "mode": args.mode, "one": args.one}
    _emit(args, "verify", params, results, lines, started)
    return OK if good else FAIL


def cmd_n1(args) -> int:
    started = time.perf_counter()
    rows, lines, bad = [], [f"{'s':>6} {'formula':>8} {'search':>8}"], []
    for s in range(1, args.s_max + 1):
        f, e = n1_formula(s), n1_exact(s)
        rows.append({"s": s, "formula": f, "search": e})
        lines.append(f"{s:>6} {f:>8} {e:>8}" + ("" if f == e else "  MISMATCH"))
        if f != e:
            bad.append(s)
    _emit(args, "n1", {"s_max": args.s_max}, {"rows": rows, "mismatches": bad}, lines, started)
    return FAIL if bad else OK


def cmd_facts(args) -> int:
    from .board import check_case1_ineq, check_eq8_bound, check_final_ineq, check_xyz
    from .weights import W_complete

    started = time.perf_counter()
    S = args.s_max
    first_bad = fact2_sweep(S)
    checks = {
        "fact2": first_bad is None,
        "fact1": all(fact1_identity_check(n, s)
                     for s in range(1, min(S, 60) + 1) for n in range(s + 1, 4 * s + 5)),
        "fact4": fact4_q0_check(S),
        "eq8": all(check_eq8_bound(s) for s in range(3, S + 1)),
        "case1": all(check_case1_ineq(s) for s in range(3, S + 1)),
        "final": all(check_final_ineq(s) for s in range(25, S + 1)),
        "xyz_12_9": all(check_xyz(12, 9, s) for s in range(14, S + 1)),
    }
    if args.weights:
        checks["W_identity"] = all(
            comb(s, 3) * W_complete(s) == a_of(s) for s in range(3, min(S, 1000) + 1)
        )
    lines = [f"{name:<11} {'ok' if v else 'FAILED'}" for name, v in checks.items()]
    if first_bad is not None:
        lines.append(f"fact2 first failure at s={first_bad}")
    results = {"checks": checks, "fact2_first_failure": first_bad}
    _emit(args, "facts", {"s_max": S, "weights": args.weights}, results, lines, started)
    return OK if all(checks.values()) else FAIL


def _board_job(job):
    from .board import check_ineq7

    s, mode, n, budget = job
    return check_ineq7(s, mode, n, max_inner_nodes=budget)


def cmd_board(args) -> int:
    from .board import format_config

    started = time.perf_counter()
    if args.s_min < 4 or args.s_max < args.s_min:
        print("need 4 <= s-min <= s-max", file=sys.stderr)
        return USAGE
    jobs = []
    for s in range(args.s_min, args.s_max + 1):
        if args.mode == "bound":
            jobs.append((s, "bound", None, args.max_inner_nodes))
        else:
            ns = [args.n] if args.n is not None else [n1_exact(s) - 1, n1_exact(s)]
            for n in ns:
                if n < 3 * s + 3:
                    print(f"exact mode needs n >= 3s+3 (s={s}, n={n})", file=sys.stderr)
                    return USAGE
                jobs.append((s, "exact", n, args.max_inner_nodes))
    if args.threads > 1:
        with ProcessPoolExecutor(args.threads) as pool:
            reports = list(pool.map(_board_job, jobs))
    else:
        reports = [_board_job(j) for j in jobs]
    lines = []
    for r in reports:
        tag = f"s={r.s}" + (f" n={r.n}" if r.n is not None else "")
        lines.append(f"{tag} mode={r.mode} verified={str(r.verified).lower()} "
                     f"max={r.max_config_weight} W={r.W} configs={r.configs_explored}")
        if not r.verified:
            lines.append("  witness: " + format_config(r.witness))
    params = {"s_min": args.s_min, "s_max": args.s_max, "mode": args.mode, "n": args.n}
    _emit(args, "board-check", params, [r.to_json() for r in reports], lines, started)
    return OK if all(r.verified for r in reports) else FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="erdos3", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("nu", help="matching number of an edge-list file")
    q.add_argument("file")
    q.set_defaults(func=cmd_nu)

    q = sub.add_parser("shift", help="stabilize an edge-list file")
    q.add_argument("file")
    q.add_argument("out", nargs="?", default="-", help="output path (default stdout)")
    q.set_defaults(func=cmd_shift)

    q = sub.add_parser("verify", help="exact m(n, s) against M(n, s)")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--s", type=int, required=True)
    q.add_argument("--mode", choices=("brute", "shifted"), default="shifted")
    q.add_argument("--one", action="store_true", help="restrict to families with property ONE")
    q.add_argument("--max-nodes", type=int, default=SHIFTED_MAX_NODES)
    q.add_argument("--max-triples", type=int, default=BRUTE_MAX_TRIPLES)
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_verify)

    q = sub.add_parser("n1", help="closed form versus search for n1(s)")
    q.add_argument("--s-max", type=int, default=100)
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_n1)

    q = sub.add_parser("facts", help="numeric facts and scalar inequalities up to s-max")
    q.add_argument("--s-max", type=int, default=10_000)
    q.add_argument("--weights", action="store_true", help="also check C(s,3) W(s) = a(s)")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_facts)

    q = sub.add_parser("board-check", help="exhaustive board weight check")
    q.add_argument("--s-min", type=int, default=25)
    q.add_argument("--s-max", type=int, default=25)
    q.add_argument("--mode", choices=("exact", "bound"), default="bound")
    q.add_argument("--n", type=int, default=None,
                   help="exact mode only; default checks n1(s)-1 and n1(s)")
    q.add_argument("--max-inner-nodes", type=int, default=5_000_000)
    q.add_argument("--threads", type=int, default=1)
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_board)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EdgeListError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except BudgetExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return USAGE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
