"""Command-line interface.

Subcommands:

    flow-kn      flow polynomial of K_n (partitions | egf | tutte routes)
    chi          characteristic polynomial of a matroid spec
    chi-pg-dual  chi of the dual of PG(n-1, q), closed form
    tutte-pg     Tutte polynomial of PG(n-1, q), closed form
    verify       run one duality identity on one target
    oracle       brute-force counts and the broken-circuit chi
    bench        time the flow-kn routes and compare checksums

Matroid specs: "uniform:m,n", "graphic:<path-to-json>", "pg:n,p", each
optionally suffixed ":dual".  Graph files hold {"n": ..., "edges": ...}.

All results are printed as JSON on stdout with sorted keys and decimal
string coefficients, so output is byte-stable.  Exit codes: 0 success,
2 rejected input (bad parameters or size guards), 3 an identity or
cross-method check failed.

MATPOLY_THREADS is honored as metadata (reported in bench output); the
computations themselves are deterministic single-threaded exact
arithmetic regardless of its value.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from time import monotonic

from .algebra import BiPoly, IntPoly
from .duality import GRAPH_KINDS, IdentityKind, verify_identity
from .errors import BadParams, BudgetExceeded, MatpolyError, TooLarge
from .flowkn import flow_kn_egf, flow_kn_partitions, flow_kn_tutte
from .graphs import MultiGraph, graph_from_json
from .invariants import chi_subset
from .matroids import Matroid, make_graphic, make_pg, make_uniform
from .oracles import chi_via_broken_circuits, count_colorings, count_nz_flows
from .projective import chi_pg_dual, tutte_pg


def poly_json(p: IntPoly) -> dict:
    return {"var": "x", "coeffs": [str(c) for c in p.coeffs]}


def bipoly_json(p: BiPoly) -> dict:
    return {
        "vars": ["x", "y"],
        "coeffs": [
            {"dx": i, "dy": j, "c": str(c)}
            for (i, j), c in sorted(p.terms.items())
        ],
    }


def poly_checksum(p) -> str:
    """Sum of absolute coefficient values, mod 2^64, as hex."""
    if isinstance(p, BiPoly):
        total = sum(abs(c) for c in p.terms.values())
    else:
        total = sum(abs(c) for c in p.coeffs)
    return f"0x{total & (2**64 - 1):016x}"


def parse_matroid_spec(spec: str):
    """Return (matroid, graph-or-None) for a spec string; the graph is
    only available for non-dualized graphic specs."""
    body = spec
    dualize = False
    if body.endswith(":dual"):
        dualize = True
        body = body[: -len(":dual")]
    kind, sep, rest = body.partition(":")
    if not sep:
        raise BadParams(f"malformed matroid spec {spec!r}")
    if kind == "uniform":
        try:
            m_str, n_str = rest.split(",")
            m = make_uniform(int(m_str), int(n_str))
        except ValueError as exc:
            raise BadParams(f"bad uniform spec {spec!r}") from exc
        g = None
    elif kind == "pg":
        try:
            n_str, p_str = rest.split(",")
        except ValueError as exc:
            raise BadParams(f"bad pg spec {spec!r}") from exc
        m = make_pg(int(n_str), int(p_str))
        g = None
    elif kind == "graphic":
        g = graph_from_json(rest)
        m = make_graphic(g, label=body)
    else:
        raise BadParams(f"unknown matroid kind {kind!r}")
    if dualize:
        m = m.dual()
        m.label = spec
        g = None
    return m, g


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _parse_samples(text):
    if text is None:
        return None
    try:
        return [Fraction(tok) for tok in text.split(",") if tok.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise BadParams(f"cannot parse samples {text!r}") from exc


def cmd_flow_kn(args) -> int:
    if args.method == "partitions":
        poly = flow_kn_partitions(args.n)
    elif args.method == "egf":
        poly = flow_kn_egf(args.n)
    else:
        poly = flow_kn_tutte(args.n, budget_s=args.budget_s)
    _emit({"method": args.method, "n": args.n, "poly": poly_json(poly)})
    return 0


def cmd_chi(args) -> int:
    m, _g = parse_matroid_spec(args.matroid)
    poly = chi_subset(m)
    _emit({"matroid": args.matroid, "method": "subset", "poly": poly_json(poly)})
    return 0


def cmd_chi_pg_dual(args) -> int:
    poly = chi_pg_dual(args.n, args.q)
    _emit({"n": args.n, "poly": poly_json(poly), "q": args.q})
    return 0


def cmd_tutte_pg(args) -> int:
    poly = tutte_pg(args.n, args.q)
    _emit({"n": args.n, "poly": bipoly_json(poly), "q": args.q})
    return 0


def cmd_verify(args) -> int:
    kind = IdentityKind(args.identity)
    m, g = parse_matroid_spec(args.matroid)
    if kind in GRAPH_KINDS:
        if g is None:
            raise BadParams(f"{kind.value} needs a plain graphic:<file> target")
        target = g
    else:
        target = m
    report = verify_identity(
        kind, target, samples=_parse_samples(args.samples), label=args.matroid
    )
    _emit(report.to_json())
    return 0 if report.passed else 3


def cmd_oracle(args) -> int:
    if args.what in ("colorings", "flows"):
        if args.graph is None:
            raise BadParams("--graph is required for counting oracles")
        g = graph_from_json(args.graph)
        if args.q is None:
            raise BadParams("--q is required for counting oracles")
        if args.what == "colorings":
            count = count_colorings(g, args.q)
        else:
            count = count_nz_flows(g, args.q)
        _emit(
            {"count": str(count), "graph": args.graph, "oracle": args.what,
             "q": args.q}
        )
        return 0
    if args.matroid is None:
        raise BadParams("--matroid is required for chi-bc")
    m, _g = parse_matroid_spec(args.matroid)
    poly = chi_via_broken_circuits(m)
    _emit({"matroid": args.matroid, "oracle": "chi-bc", "poly": poly_json(poly)})
    return 0


def cmd_bench(args) -> int:
    methods = [tok for tok in args.methods.split(",") if tok]
    runners = {
        "partitions": lambda n: flow_kn_partitions(n),
        "egf": lambda n: flow_kn_egf(n),
        "tutte": lambda n: flow_kn_tutte(n, budget_s=args.budget_s),
    }
    for meth in methods:
        if meth not in runners:
            raise BadParams(f"unknown method {meth!r}")
    rows = []
    sums: dict = {}
    dead = set()
    for n in range(1, args.n_max + 1):
        for meth in methods:
            if meth in dead:
                continue
            t0 = monotonic()
            try:
                poly = runners[meth](n)
            except BudgetExceeded:
                rows.append(
                    {
                        "checksum": None,
                        "method": meth,
                        "n": n,
                        "status": "budget-exceeded",
                        "wall_ms": round((monotonic() - t0) * 1000, 3),
                    }
                )
                dead.add(meth)
                continue
            rows.append(
                {
                    "checksum": poly_checksum(poly),
                    "method": meth,
                    "n": n,
                    "status": "ok",
                    "wall_ms": round((monotonic() - t0) * 1000, 3),
                }
            )
            sums.setdefault(n, set()).add(poly_checksum(poly))
    consistent = all(len(s) == 1 for s in sums.values())
    workers = int(os.environ.get("MATPOLY_THREADS", "1") or "1")
    _emit({"consistent": consistent, "rows": rows, "workers": workers})
    return 0 if consistent else 3


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="matpoly",
        description="exact matroid/graph polynomial computations",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("flow-kn", help="flow polynomial of K_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--method", choices=("partitions", "egf", "tutte"), default="partitions"
    )
    p.add_argument("--budget-s", type=float, default=None)
    p.set_defaults(fn=cmd_flow_kn)

    p = sub.add_parser("chi", help="characteristic polynomial of a matroid")
    p.add_argument("--matroid", required=True)
    p.set_defaults(fn=cmd_chi)

    p = sub.add_parser("chi-pg-dual", help="chi of the dual of PG(n-1,q)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(fn=cmd_chi_pg_dual)

    p = sub.add_parser("tutte-pg", help="Tutte polynomial of PG(n-1,q)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(fn=cmd_tutte_pg)

    p = sub.add_parser("verify", help="check a duality identity")
    p.add_argument(
        "--identity",
        required=True,
        choices=[k.value for k in IdentityKind],
    )
    p.add_argument("--matroid", required=True)
    p.add_argument("--samples", default=None)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force cross-checks")
    p.add_argument("what", choices=("colorings", "flows", "chi-bc"))
    p.add_argument("--graph", default=None)
    p.add_argument("--matroid", default=None)
    p.add_argument("--q", type=int, default=None)
    p.set_defaults(fn=cmd_oracle)

    p = sub.add_parser("bench", help="time flow-kn methods, compare checksums")
    p.add_argument("target", choices=("flow-kn",))
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--methods", default="partitions,egf")
    p.add_argument("--budget-s", type=float, default=60.0)
    p.set_defaults(fn=cmd_bench)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (BadParams, TooLarge) as exc:
        print(
            json.dumps(
                {"error": {"message": str(exc), "type": type(exc).__name__}},
                sort_keys=True,
            ),
            file=sys.stderr,
        )
        return 2
    except MatpolyError as exc:
        # integrality escapes and blown budgets are bug signals, not
        # usage errors; report and fail loudly
        print(
            json.dumps(
                {"error": {"message": str(exc), "type": type(exc).__name__}},
                sort_keys=True,
            ),
            file=sys.stderr,
        )
        return 1


if __name__ == "__main__":
    sys.exit(main())
