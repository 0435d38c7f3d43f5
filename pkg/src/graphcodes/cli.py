"""Command-line interface: build, verify, bound, search, table, factorize.

Exit codes: 0 success / verification pass, 1 verification fail (or a search
that proved a claimed size wrong), 2 usage or capability errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from math import comb

from . import bounds, constructions, search
from .core import edge_slots
from .errors import GraphCodesError
from .factorization import starter_factorization, verify_p1f
from .family import load_family, save_family
from .linalg import LinearFamily
from .predicates import parse_predicate
from .verify import (
    VerifyReport,
    verify_dual_family,
    verify_dual_sampled,
    verify_family,
    verify_linear_family,
)


def _fmt_size(x: int) -> str:
    if x >= 1 << 16 and x & (x - 1) == 0:
        return f"2^{x.bit_length() - 1}"
    return str(x)


def _fmt_log2(x: Fraction) -> str:
    if x.denominator == 1:
        return f"2^{x.numerator}"
    return f"2^{float(x)}"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# bound/table row assembly


def _bound_report(pred_name: str, n: int) -> bounds.BoundReport:
    if pred_name == "connected":
        upper = 1 << bounds.product_upper_bound(n, edge_slots(n - 1))
        return bounds.BoundReport(
            n, "connected", 1 << (n - 1), "split-clique", upper,
            Fraction(n - 1), "product bound via dual-isolated",
        )
    if pred_name == "2conn":
        upper_exp = bounds.product_upper_bound(n, edge_slots(n - 1) + 1)
        upper = 1 << upper_exp
        if n % 2 == 0:
            lower, source = 1 << (n - 2), "even-split"
        elif n == 3:
            lower, source = 2, "odd-2conn"
        else:
            lower = (1 << (n - 2)) - comb(n - 2, (n - 3) // 2)
            source = "odd-2conn"
        return bounds.BoundReport(
            n, "2conn", lower, source, upper, Fraction(upper_exp),
            "product bound via dual-pendant",
        )
    if pred_name == "3conn":
        exp = ((1 << (n - 1)) // n).bit_length() - 1
        upper = 1 << exp
        if n >= 3 and (n + 1) & n == 0:  # n = 2^k - 1
            k = n.bit_length()
            lower, source = 1 << (n - k - 1), "hamming-3conn"
        else:
            lower, source = None, None
        return bounds.BoundReport(
            n, "3conn-linear", lower, source, upper, Fraction(exp),
            "power-of-two cap under the product bound via dual-lowdeg",
        )
    if pred_name == "hampath":
        built = n % 2 == 1 and _is_prime(n)
        lower, source = (1 << (n - 1), "hampath") if built else (None, None)
        return bounds.BoundReport(
            n, "hampath", lower, source, 1 << (n - 1), Fraction(n - 1),
            "product bound via dual-isolated",
        )
    if pred_name == "hamcycle":
        built = n % 2 == 0 and _is_prime(n - 1)
        lower, source = (1 << (n - 2), "hamcycle") if built else (None, None)
        return bounds.BoundReport(
            n, "hamcycle", lower, source, 1 << (n - 2), Fraction(n - 2),
            "product bound via dual-pendant",
        )
    if pred_name == "star":
        m = bounds.star_upper_bound(n)
        return bounds.BoundReport(
            n, "star", m, "star family", m, None, "edge-coloring bound",
        )
    if pred_name in ("k3", "oddcycle"):
        exp = bounds.subgraph_upper_bound(n, 3)
        sizes = {3: 2, 4: 4, 5: 16, 6: 64}
        lower = source = None
        if pred_name == "k3" and n in sizes:
            lower, source = sizes[n], f"k3-{n}"
        if pred_name == "oddcycle":
            if n in sizes:
                lower, source = sizes[n], f"k3-{n}"
            elif n == 7:
                lower, source = 512, "codd-7"
        return bounds.BoundReport(
            n, pred_name, lower, source, 1 << exp, Fraction(exp),
            "subgraph bound via the triangle-free edge maximum",
        )
    raise GraphCodesError(f"no bound row for predicate {pred_name!r}")


def _dual_star_report(n: int) -> dict:
    lo, hi = bounds.shearer_dual_star_bounds(n)
    return {
        "n": n,
        "predicate": "star-dual",
        "lower_log2": lo,
        "upper_log2": hi,
        "tight": lo == hi,
    }


def _report_to_dict(rep: bounds.BoundReport) -> dict:
    return {
        "n": rep.n,
        "predicate": rep.predicate,
        "lower": rep.lower,
        "lower_source": rep.lower_source,
        "upper": rep.upper,
        "upper_source": rep.upper_source,
        "tight": rep.tight,
    }


# ---------------------------------------------------------------------------
# subcommands


def _cmd_build(args) -> int:
    if args.family not in constructions.REGISTRY:
        known = ", ".join(sorted(constructions.REGISTRY))
        raise GraphCodesError(f"unknown family {args.family!r}; known: {known}")
    param_names, builder = constructions.REGISTRY[args.family]
    params = []
    prov_params = {}
    for name in param_names:
        value = getattr(args, name if name != "host" else "host")
        if value is None:
            raise GraphCodesError(f"family {args.family!r} needs --{name}")
        if name == "host":
            loaded = load_family(value)
            if len(loaded.graphs) != 1:
                raise GraphCodesError("host file must hold exactly one graph")
            value = loaded.graphs[0]
            prov_params["host"] = value.to_hex()
        else:
            prov_params[name] = value
        params.append(value)
    fam = builder(*params)
    if isinstance(fam, LinearFamily):
        provenance = {"construction": args.family, **prov_params,
                      "rank": fam.rank}
        if args.out:
            save_family(args.out, fam.n, fam.basis, role="basis",
                        provenance=provenance)
        size, claimed = 1 << fam.rank, 1 << fam.rank
        detail = f"basis of {len(fam.basis)} generators, rank {fam.rank}"
    else:
        provenance = dict(fam.provenance)
        if args.out:
            save_family(args.out, fam.n, fam.graphs, provenance=provenance)
        size, claimed = len(fam), fam.claimed_size
        detail = f"{len(fam)} graphs"
    if args.json:
        print(json.dumps({"family": args.family, "n": fam.n, "size": size,
                          "claimed_size": claimed, "detail": detail,
                          "out": args.out}))
    else:
        print(f"{args.family}: {detail}; size {_fmt_size(size)}, "
              f"claimed {_fmt_size(claimed)}")
        if args.out:
            print(f"wrote {args.out}")
    return 0


def _witness_text(report: VerifyReport) -> str:
    (i, j), diff = report.witness
    return f"witness pair ({i}, {j}); difference edges {diff.edges()}"


def _cmd_verify(args) -> int:
    pred = parse_predicate(args.pred)
    loaded = load_family(args.family_file)
    linear = args.linear or loaded.role == "basis"
    if args.sample:
        if not args.dual:
            raise GraphCodesError("--sample is only available for dual checks")
        fam = loaded.to_graph_family()
        report = verify_dual_sampled(fam, pred, pairs=args.sample, seed=args.seed)
    elif linear:
        if args.dual:
            raise GraphCodesError("linear verification has no dual mode")
        fam = LinearFamily(loaded.n, loaded.graphs)
        report = verify_linear_family(fam, pred)
    else:
        fam = loaded.to_graph_family()
        if args.dual:
            report = verify_dual_family(fam, pred, workers=args.threads)
        else:
            report = verify_family(fam, pred, workers=args.threads)
    if args.json:
        payload = {
            "passed": report.passed,
            "mode": report.mode,
            "pairs_checked": report.pairs_checked,
        }
        if report.witness:
            (i, j), diff = report.witness
            payload["witness"] = {"pair": [i, j], "difference": diff.to_hex()}
        print(json.dumps(payload))
    else:
        verdict = "PASS" if report.passed else "FAIL"
        print(f"{verdict} [{report.mode}] checked {report.pairs_checked}"
              f" {'members' if report.mode == 'linear' else 'pairs'}")
        if report.witness:
            print(_witness_text(report))
    return 0 if report.passed else 1


def _cmd_bound(args) -> int:
    rep = _bound_report(args.pred, args.n)
    if args.json:
        payload = _report_to_dict(rep)
        if args.pred == "star":
            dual = _dual_star_report(args.n)
            payload["dual"] = {
                "lower_log2": str(dual["lower_log2"]),
                "upper_log2": str(dual["upper_log2"]),
                "tight": dual["tight"],
            }
        print(json.dumps(payload))
        return 0
    print(f"predicate {rep.predicate}, n={rep.n}")
    if rep.lower is not None:
        print(f"M >= {_fmt_size(rep.lower)} ({rep.lower_source})")
    print(f"M <= {_fmt_size(rep.upper)} ({rep.upper_source})")
    print(f"tight: {'yes' if rep.tight else 'no'}")
    if args.pred == "star":
        dual = _dual_star_report(args.n)
        print(
            f"dual: {_fmt_log2(dual['lower_log2'])} <= D <= "
            f"{_fmt_log2(dual['upper_log2'])}"
            f" ({'tight' if dual['tight'] else 'not tight'})"
        )
    return 0


def _cmd_search(args) -> int:
    pred = parse_predicate(args.pred)
    kwargs = {"budget_nodes": args.budget_nodes, "time_ms": args.time_ms}
    if args.mode == "good":
        result = search.max_good_family(args.n, pred, **kwargs)
    elif args.mode == "dual":
        result = search.max_dual_family(args.n, pred, **kwargs)
    else:
        result = search.max_linear_family(args.n, pred, **kwargs)
    if args.out:
        save_family(args.out, result.certificate.n, result.certificate.graphs,
                    provenance=dict(result.certificate.provenance))
    if args.json:
        print(json.dumps({
            "optimum": result.optimum, "status": result.status,
            "explored": result.explored, "rank": result.rank,
            "out": args.out,
        }))
    else:
        line = (f"optimum {result.optimum} [{result.status}], "
                f"explored {result.explored} nodes")
        if result.rank is not None:
            line += f", rank {result.rank}"
        print(line)
        if args.out:
            print(f"certificate written to {args.out}")
    if args.expect is not None and result.status == "exact" \
            and result.optimum < args.expect:
        print(f"search proved the optimum is {result.optimum} < {args.expect}",
              file=sys.stderr)
        return 1
    return 0


def _table_rows(lo: int, hi: int) -> list[dict]:
    rows = []
    for n in range(lo, hi + 1):
        rows.append(_report_to_dict(_bound_report("connected", n)))
        rows.append(_report_to_dict(_bound_report("2conn", n)))
        if n >= 3 and (n + 1) & n == 0:
            rows.append(_report_to_dict(_bound_report("3conn", n)))
        if n % 2 and _is_prime(n):
            rows.append(_report_to_dict(_bound_report("hampath", n)))
        if n % 2 == 0 and _is_prime(n - 1):
            rows.append(_report_to_dict(_bound_report("hamcycle", n)))
        rows.append(_report_to_dict(_bound_report("star", n)))
        dual = _dual_star_report(n)
        rows.append({
            "n": n, "predicate": "star-dual",
            "lower": 1 << int(dual["lower_log2"]),
            "lower_source": "edge-cover superset family",
            "upper": None,
            "upper_source": f"projection bound {_fmt_log2(dual['upper_log2'])}",
            "tight": dual["tight"],
        })
        if 3 <= n <= 6:
            rows.append(_report_to_dict(_bound_report("k3", n)))
        if 3 <= n <= 7:
            rows.append(_report_to_dict(_bound_report("oddcycle", n)))
    return rows


def _cmd_table(args) -> int:
    try:
        lo_text, hi_text = args.range.split("..")
        lo, hi = int(lo_text), int(hi_text)
    except ValueError as exc:
        raise GraphCodesError(f"bad range {args.range!r}; expected a..b") from exc
    if not 3 <= lo <= hi <= 14:
        raise GraphCodesError("range must satisfy 3 <= a <= b <= 14")
    rows = _table_rows(lo, hi)
    if args.json:
        print(json.dumps(rows, default=str))
        return 0
    header = f"{'n':>3}  {'predicate':<14} {'size':>12} {'bound':>12}  tight"
    print(header)
    print("-" * len(header))
    for row in rows:
        size = _fmt_size(row["lower"]) if row["lower"] is not None else "-"
        if row["upper"] is not None:
            bound = _fmt_size(row["upper"])
        else:
            bound = row["upper_source"].rsplit(" ", 1)[-1]
        tick = "tight" if row["tight"] else ""
        print(f"{row['n']:>3}  {row['predicate']:<14} {size:>12} {bound:>12}  {tick}")
    return 0


def _cmd_factorize(args) -> int:
    f = starter_factorization(args.m)
    perfect = verify_p1f(f)
    if args.out:
        save_family(
            args.out, f.m, f.matchings, role="factorization",
            provenance={"construction": "starter-factorization", "m": f.m,
                        "perfect": perfect},
        )
    if args.json:
        print(json.dumps({"m": f.m, "matchings": len(f.matchings),
                          "perfect": perfect, "out": args.out}))
    else:
        print(f"K_{f.m}: {len(f.matchings)} matchings, "
              f"{'perfect' if perfect else 'not perfect'}")
        if args.out:
            print(f"wrote {args.out}")
    return 0


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphcodes",
        description="Construct, verify, bound, and search families of labeled "
        "graphs whose pairwise symmetric differences satisfy a predicate.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="construct a family and write it")
    p_build.add_argument("--family", required=True,
                         help=", ".join(sorted(constructions.REGISTRY)))
    p_build.add_argument("--n", type=int)
    p_build.add_argument("--k", type=int)
    p_build.add_argument("--p", type=int)
    p_build.add_argument("--r", type=int)
    p_build.add_argument("--host", help="family file holding one host graph")
    p_build.add_argument("--out", help="output family file")
    p_build.add_argument("--json", action="store_true")

    p_verify = sub.add_parser("verify", help="certify a family file")
    p_verify.add_argument("family_file")
    p_verify.add_argument("--pred", required=True)
    p_verify.add_argument("--dual", action="store_true",
                          help="require that no difference satisfies the predicate")
    p_verify.add_argument("--linear", action="store_true",
                          help="treat the file as a basis and check the span")
    p_verify.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                          help="worker processes for pairwise checks "
                               "(default: available parallelism)")
    p_verify.add_argument("--sample", type=int,
                          help="spot-check this many random pairs (dual only)")
    p_verify.add_argument("--seed", type=int, default=0,
                          help="seed for sampled checks")
    p_verify.add_argument("--json", action="store_true")

    p_bound = sub.add_parser("bound", help="print bound reports")
    p_bound.add_argument("--pred", required=True)
    p_bound.add_argument("--n", type=int, required=True)
    p_bound.add_argument("--json", action="store_true")

    p_search = sub.add_parser("search", help="exact extremal search (small n)")
    p_search.add_argument("--pred", required=True)
    p_search.add_argument("--n", type=int, required=True)
    p_search.add_argument("--mode", choices=("good", "dual", "linear"),
                          required=True)
    p_search.add_argument("--budget-nodes", type=int, default=None)
    p_search.add_argument("--time-ms", type=int, default=None)
    p_search.add_argument("--out", help="write the certificate family here")
    p_search.add_argument("--expect", type=int,
                          help="exit 1 if the exact optimum is below this")
    p_search.add_argument("--json", action="store_true")

    p_table = sub.add_parser("table", help="theorem table over a range of n")
    p_table.add_argument("--range", required=True, help="a..b with 3<=a<=b<=14")
    p_table.add_argument("--json", action="store_true")

    p_fact = sub.add_parser("factorize", help="one-factorization of K_m")
    p_fact.add_argument("--m", type=int, required=True)
    p_fact.add_argument("--out", help="output family file")
    p_fact.add_argument("--json", action="store_true")

    return parser


_COMMANDS = {
    "build": _cmd_build,
    "verify": _cmd_verify,
    "bound": _cmd_bound,
    "search": _cmd_search,
    "table": _cmd_table,
    "factorize": _cmd_factorize,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except GraphCodesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
