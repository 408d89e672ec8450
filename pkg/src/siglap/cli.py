"""Command-line interface.

Commands: mu-inf, geninv, verify, et, qinf.  All rationals are printed in
canonical ``p/q`` form (``q`` omitted when 1), never as decimals.  With
``--json`` a single JSON object goes to stdout and diagnostics to stderr.

Exit codes: 0 ok, 2 malformed input, 3 violated hypothesis (disconnected or
bipartite input where the theory needs otherwise), 4 internal inconsistency.
"""

import argparse
import json
import sys
from fractions import Fraction

from .errors import ConsistencyError, HypothesisError, InputError
from .etfamily import ETParams, build_et, closed_form_min_norm, et_report
from .geninv import min_norm_bicyclic_median, min_norm_generalized_inverse, verify_duality
from .graphs import Graph, emit_edge_list, is_bipartite, is_connected, parse_edge_list
from .spectral import mu_infinity, q_infinity_formula, q_infinity_lp

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_HYPOTHESIS = 3
EXIT_INTERNAL = 4


def _rat(q: Fraction) -> str:
    return str(q)


def _input_summary(g: Graph) -> dict:
    bip, _ = is_bipartite(g)
    return {"n": g.n, "m": g.m, "connected": is_connected(g), "bipartite": bip}


def _load_graph(path: str) -> Graph:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    return parse_edge_list(text)


def _emit(report: dict, args, human_lines) -> None:
    if args.json:
        print(json.dumps(report))
    elif not args.quiet:
        for line in human_lines:
            print(line)


def _graph_header(g: Graph) -> str:
    s = _input_summary(g)
    return (
        f"graph: n={s['n']} m={s['m']} "
        f"connected={'yes' if s['connected'] else 'no'} "
        f"bipartite={'yes' if s['bipartite'] else 'no'}"
    )


def cmd_mu_inf(args) -> int:
    g = _load_graph(args.file)
    res = mu_infinity(g)
    report = {
        "command": "mu-inf",
        "input": _input_summary(g),
        "results": {
            "mu": _rat(res.mu),
            "optimal_x": [_rat(v) for v in res.optimal_x],
            "tight_edge": res.tight_edge + 1,
            "fixed_coord": res.fixed_coord + 1,
        },
        "status": "ok",
    }
    _emit(report, args, [
        _graph_header(g),
        f"mu_infinity = {res.mu}",
        "optimal_x = (" + ", ".join(_rat(v) for v in res.optimal_x) + ")",
        f"tight_edge = e{res.tight_edge + 1}",
        f"fixed_coord = v{res.fixed_coord + 1}",
    ])
    return EXIT_OK


def cmd_geninv(args) -> int:
    g = _load_graph(args.file)
    if args.median:
        res = min_norm_bicyclic_median(g)
        method = "median"
    else:
        res = min_norm_generalized_inverse(g)
        method = "lp"
    results = {
        "norm": _rat(res.norm),
        "row_values": [_rat(v) for v in res.row_values],
        "method": method,
    }
    lines = [
        _graph_header(g),
        f"min_norm = {res.norm}",
        "row_values = (" + ", ".join(_rat(v) for v in res.row_values) + ")",
        f"method = {method}",
    ]
    if args.matrix:
        results["matrix"] = [[_rat(v) for v in row] for row in res.G]
        lines.append("G =")
        lines.extend("  [" + ", ".join(_rat(v) for v in row) + "]" for row in res.G)
    report = {
        "command": "geninv",
        "input": _input_summary(g),
        "results": results,
        "status": "ok",
    }
    _emit(report, args, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load_graph(args.file)
    rep = verify_duality(g)
    report = {
        "command": "verify",
        "input": _input_summary(g),
        "results": {
            "mu": _rat(rep.mu),
            "norm": _rat(rep.norm),
            "product": _rat(rep.product),
            "pass": rep.passed,
        },
        "status": "ok",
    }
    _emit(report, args, [
        _graph_header(g),
        f"mu_infinity = {rep.mu}",
        f"min_geninv_norm = {rep.norm}",
        f"product = {rep.product}",
        f"verified: {'yes' if rep.passed else 'NO'}",
    ])
    if not rep.passed:
        print(f"error: mu * norm = {rep.product}, expected exactly 1", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


def _et_grid(args) -> int:
    amax, bmax = args.grid
    rows = []
    lines = []
    for a in range(3, amax + 1, 2):
        for b in range(3, bmax + 1):
            rep = et_report(ETParams(a, b))
            rows.append({
                "a": a,
                "b": b,
                "closed_form": _rat(rep.closed_form),
                "consistent": rep.all_consistent,
            })
            lines.append(
                f"a={a} b={b} closed_form={rep.closed_form} "
                f"consistent={'yes' if rep.all_consistent else 'NO'}"
            )
    if not rows:
        raise InputError(f"empty grid: no valid (a, b) with a <= {amax}, b <= {bmax}")
    report = {
        "command": "et",
        "input": None,
        "results": {"grid": rows},
        "status": "ok",
    }
    _emit(report, args, lines)
    if not all(r["consistent"] for r in rows):
        print("error: grid contains an inconsistent entry", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


def cmd_et(args) -> int:
    if args.grid is not None:
        return _et_grid(args)
    if args.a is None or args.b is None:
        raise InputError("et requires --a and --b (or --grid)")
    params = ETParams(args.a, args.b)
    g = build_et(params)
    if args.emit_graph:
        sys.stdout.write(emit_edge_list(g))
        return EXIT_OK
    rep = et_report(params)
    report = {
        "command": "et",
        "input": _input_summary(g),
        "results": {
            "a": params.a,
            "b": params.b,
            "closed_form": _rat(rep.closed_form),
            "lp_norm": _rat(rep.lp_norm),
            "median_norm": _rat(rep.median_norm),
            "mu": _rat(rep.mu_lp),
            "y_eval": _rat(rep.y_eval),
            "all_consistent": rep.all_consistent,
        },
        "status": "ok",
    }
    _emit(report, args, [
        f"ET(n={params.n}, a={params.a}, b={params.b}): "
        f"n={g.n} m={g.m}",
        f"closed_form = {rep.closed_form}",
        f"lp_norm = {rep.lp_norm}",
        f"median_norm = {rep.median_norm}",
        f"mu = {rep.mu_lp}",
        f"y_evaluation = {rep.y_eval}",
        f"consistent: {'yes' if rep.all_consistent else 'NO'}",
    ])
    if not rep.all_consistent:
        print("error: closed form, LP, median and eigenvalue routes disagree", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


def cmd_qinf(args) -> int:
    g = _load_graph(args.file)
    q_formula = q_infinity_formula(g)
    q_lp = q_infinity_lp(g)
    agree = q_formula == q_lp
    report = {
        "command": "qinf",
        "input": _input_summary(g),
        "results": {
            "q_formula": _rat(q_formula),
            "q_lp": _rat(q_lp),
            "agree": agree,
        },
        "status": "ok",
    }
    _emit(report, args, [
        _graph_header(g),
        f"q_formula = {q_formula}",
        f"q_lp = {q_lp}",
        f"agree: {'yes' if agree else 'NO'}",
    ])
    if not agree:
        print(f"error: formula gives {q_formula} but the LP gives {q_lp}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


def _error_report(command: str, code: int, message: str) -> dict:
    return {
        "command": command,
        "input": None,
        "results": {},
        "status": "error",
        "error": {"code": code, "message": message},
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="siglap",
        description="Exact signless infinity-Laplacian eigenvalues and "
        "minimal-norm generalized inverses.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="emit one JSON object on stdout")
        p.add_argument("--quiet", action="store_true", help="suppress human-readable output")

    p = sub.add_parser("mu-inf", help="smallest normalized signless inf-Laplacian eigenvalue")
    p.add_argument("file", help="edge-list file")
    common(p)
    p.set_defaults(func=cmd_mu_inf)

    p = sub.add_parser("geninv", help="minimal (inf,inf)-norm generalized inverse of W")
    p.add_argument("file", help="edge-list file")
    p.add_argument("--matrix", action="store_true", help="print the full inverse matrix")
    p.add_argument("--median", action="store_true",
                   help="use the bicyclic weighted-median fast path (needs m = n + 1)")
    common(p)
    p.set_defaults(func=cmd_geninv)

    p = sub.add_parser("verify", help="check mu * min-norm = 1 exactly")
    p.add_argument("file", help="edge-list file")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("et", help="two-cycles family: closed form vs all computed routes")
    p.add_argument("--a", type=int, help="odd cycle length a > 2")
    p.add_argument("--b", type=int, help="cycle length b > 2")
    p.add_argument("--emit-graph", action="store_true", help="write the edge list and exit")
    p.add_argument("--grid", nargs=2, type=int, metavar=("AMAX", "BMAX"),
                   help="sweep all valid (a, b) up to the given bounds")
    common(p)
    p.set_defaults(func=cmd_et)

    p = sub.add_parser("qinf", help="unnormalized invariant: closed formula vs LP")
    p.add_argument("file", help="edge-list file")
    common(p)
    p.set_defaults(func=cmd_qinf)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        code, message = EXIT_INPUT, str(exc)
    except HypothesisError as exc:
        code, message = EXIT_HYPOTHESIS, str(exc)
    except ConsistencyError as exc:
        code, message = EXIT_INTERNAL, str(exc)
    print(f"error: {message}", file=sys.stderr)
    if args.json:
        print(json.dumps(_error_report(args.command, code, message)))
    return code


if __name__ == "__main__":
    sys.exit(main())
