"""``burn`` command line: exact solving, checking, bounds, NG and ILT runs.

Exit codes: 0 success, 2 bad input, 3 resource limit, 4 internal invariant
breach (including a failed reproduction criterion).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

import numpy as np

from . import graph as gr
from .bounds import bounds_report, gamma_k, nordhaus_gaddum
from .burning import check_sequence, simulate
from .errors import GraphBurnError, LimitExceeded
from .ilt import ilt_predict, ilt_verify
from .solver import burning_number

EXIT_INPUT, EXIT_LIMIT, EXIT_BREACH = 2, 3, 4
DEFAULT_MAX_NODES = 2000


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _int(token, what):
    try:
        return int(token)
    except ValueError:
        raise CliError(f"bad {what}: {token!r}", EXIT_INPUT) from None


def parse_generator(spec: str) -> gr.Graph:
    """Graph from ``kind:args``, e.g. ``path:9``, ``spider:3x2``, ``gnp:10:0.4:7``."""
    kind, _, rest = spec.partition(":")
    args = rest.split(":") if rest else []
    try:
        if kind in ("path", "cycle", "complete", "star", "wheel", "empty") and len(args) == 1:
            return getattr(gr, kind)(_int(args[0], kind))
        if kind == "spider" and len(args) == 1 and "x" in args[0]:
            s, r = args[0].split("x", 1)
            return gr.spider(_int(s, "spider arms"), _int(r, "spider arm length"))
        if kind == "gnp" and len(args) == 3:
            try:
                p = float(args[1])
            except ValueError:
                raise CliError(f"bad gnp probability: {args[1]!r}", EXIT_INPUT) from None
            return gr.gnp_random(_int(args[0], "gnp n"), p, _int(args[2], "gnp seed"))
    except GraphBurnError as exc:
        raise CliError(f"generator {spec!r}: {exc}", EXIT_INPUT) from None
    raise CliError(f"unknown generator spec {spec!r}", EXIT_INPUT)


def parse_sequence(text: str) -> tuple:
    ids = tuple(_int(tok.strip(), "node id") for tok in text.split(",") if tok.strip())
    if not ids:
        raise CliError("empty sequence", EXIT_INPUT)
    if len(set(ids)) != len(ids):
        raise CliError(f"duplicate source in sequence {text!r}", EXIT_INPUT)
    return ids


def _max_nodes() -> int:
    raw = os.environ.get("BURN_MAX_NODES")
    if not raw:
        return DEFAULT_MAX_NODES
    value = _int(raw, "BURN_MAX_NODES")
    if value < 1:
        raise CliError("BURN_MAX_NODES must be positive", EXIT_INPUT)
    return value


def load_graph(args) -> tuple[gr.Graph, str]:
    if getattr(args, "gen", None):
        g, source = parse_generator(args.gen), f"gen:{args.gen}"
    elif getattr(args, "file", None):
        try:
            g = gr.read_edge_list(args.file)
        except OSError as exc:
            raise CliError(f"cannot read {args.file}: {exc.strerror}", EXIT_INPUT) from None
        except GraphBurnError as exc:
            raise CliError(f"{args.file}: {exc}", EXIT_INPUT) from None
        source = f"file:{args.file}"
    else:
        raise CliError("give an edge-list file or --gen SPEC", EXIT_INPUT)
    if g.n > _max_nodes():
        raise CliError(f"graph has {g.n} nodes, over BURN_MAX_NODES={_max_nodes()}", EXIT_LIMIT)
    return g, source


# -- commands -----------------------------------------------------------------


def cmd_exact(args):
    g, source = load_graph(args)
    res = burning_number(g)
    result = {"n": g.n, "m": g.m, "burning_number": res.burning_number,
              "witness": list(res.witness), "method": res.method,
              "nodes_explored": res.nodes_explored}
    text = [f"b(G) = {res.burning_number}",
            f"witness: {','.join(map(str, res.witness))}",
            f"method: {res.method}, nodes explored: {res.nodes_explored}"]
    return source, result, text, 0


def cmd_verify(args):
    g, source = load_graph(args)
    seq = parse_sequence(args.sequence)
    try:
        sched = simulate(g, seq)
        chk = check_sequence(g, seq)
    except GraphBurnError as exc:
        raise CliError(str(exc), EXIT_INPUT) from None
    agree = sched.valid == chk.valid
    result = {"sequence": list(seq), "valid": sched.valid, "agree": agree,
              "simulation": {"valid": sched.valid, "invalid_at": sched.invalid_at,
                             "reason": sched.reason, "burn_round": list(sched.burn_round)},
              "characterization": {"valid": chk.valid, "uncovered": chk.uncovered,
                                   "violation": list(chk.violation) if chk.violation else None}}
    text = [f"sequence {','.join(map(str, seq))}: {'valid' if sched.valid else 'invalid'}",
            f"simulation: {'valid' if sched.valid else f'fails at round {sched.invalid_at} ({sched.reason})'}",
            "characterization: " + ("valid" if chk.valid else
                                    f"uncovered node {chk.uncovered}" if chk.uncovered is not None
                                    else f"sources at positions {chk.violation} too close")]
    if not agree:
        text.append("CHECKERS DISAGREE")
    return source, result, text, 0 if agree else EXIT_BREACH


def cmd_bounds(args):
    g, source = load_graph(args)
    ham = parse_sequence(args.hamiltonian) if args.hamiltonian else None
    try:
        rep = bounds_report(g, with_exact=args.exact, hamiltonian_path=ham,
                            with_nordhaus_gaddum=args.exact and g.n >= 2)
    except GraphBurnError as exc:
        raise CliError(str(exc), EXIT_INPUT) from None
    result = rep.to_json()
    text = [f"n = {rep.n}, connected = {rep.connected}",
            "lower: " + ", ".join(f"{k}={v}" for k, v in rep.lower.items()),
            "upper: " + ", ".join(f"{k}={v}" for k, v in rep.upper.items())]
    if rep.gamma:
        text.append("gamma_k: " + ", ".join(f"{k}:{v}" for k, v in rep.gamma.items()))
        text.append(f"m* = {rep.m_star}")
    if rep.exact is not None:
        text.append(f"exact = {rep.exact}, sandwich {'ok' if rep.sandwich_ok() else 'VIOLATED'}")
    code = 0 if rep.sandwich_ok() else EXIT_BREACH
    return source, result, text, code


def cmd_gamma(args):
    g, source = load_graph(args)
    if args.k < 1:
        raise CliError("--k must be >= 1", EXIT_INPUT)
    value = gamma_k(g, args.k)
    return source, {"k": args.k, "gamma": value}, [f"gamma_{args.k}(G) = {value}"], 0


def _ng_row(g):
    rep = nordhaus_gaddum(g)
    return rep.to_json()


def cmd_ng(args):
    if args.gen or args.file:
        g, source = load_graph(args)
        row = _ng_row(g)
        text = [f"b(G) = {row['b']}, b(complement) = {row['b_complement']}",
                f"sum = {row['sum']}, product = {row['product']}"]
        for name, c in row["checks"].items():
            state = "n/a" if not c["applies"] else ("pass" if c["holds"] else "FAIL")
            text.append(f"  {name:<18} bound {c['bound']:<4} {state}{' (conjecture)' if c['conjecture'] else ''}")
        failed = [k for k, c in row["checks"].items() if c["applies"] and not c["holds"] and not c["conjecture"]]
        return source, row, text, EXIT_BREACH if failed else 0
    if args.n is None:
        raise CliError("ng needs --gen/file or --n", EXIT_INPUT)
    if args.n < 2:
        raise CliError("--n must be >= 2", EXIT_INPUT)
    if args.samples < 1:
        raise CliError("--samples must be >= 1", EXIT_INPUT)
    if args.n > _max_nodes():
        raise CliError(f"--n over BURN_MAX_NODES={_max_nodes()}", EXIT_LIMIT)
    rng = np.random.default_rng(args.seed)
    seeds = rng.integers(2 ** 31, size=args.samples).tolist()
    graphs = [gr.gnp_random(args.n, 0.5, s) for s in seeds]
    if args.workers > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            rows = list(pool.map(_ng_row, graphs))
    else:
        rows = [_ng_row(h) for h in graphs]
    sums = [r["sum"] for r in rows]
    prods = [r["product"] for r in rows]
    passes: dict = {}
    for r in rows:
        for name, c in r["checks"].items():
            entry = passes.setdefault(name, {"applies": 0, "holds": 0})
            if c["applies"]:
                entry["applies"] += 1
                entry["holds"] += bool(c["holds"])
    result = {"n": args.n, "p": 0.5, "samples": args.samples, "sum_min": min(sums), "sum_max": max(sums),
              "product_min": min(prods), "product_max": max(prods), "checks": passes}
    text = [f"G({args.n}, 1/2), {args.samples} samples",
            f"sum in [{min(sums)}, {max(sums)}], product in [{min(prods)}, {max(prods)}]"]
    text += [f"  {k:<18} {v['holds']}/{v['applies']}" for k, v in passes.items()]
    conj = {"product_n_plus_4"}
    failed = [k for k, v in passes.items() if v["holds"] != v["applies"] and k not in conj]
    return f"gnp:{args.n}:0.5", result, text, EXIT_BREACH if failed else 0


def cmd_ilt(args):
    g0 = parse_generator(args.g0)
    if args.t < 0:
        raise CliError("--t must be >= 0", EXIT_INPUT)
    if g0.n * 2 ** args.t > _max_nodes():
        raise CliError(f"G_{args.t} would exceed BURN_MAX_NODES={_max_nodes()}", EXIT_LIMIT)
    try:
        pred = ilt_predict(g0)
        rows = ilt_verify(g0, args.t, workers=args.workers)
    except GraphBurnError as exc:
        raise CliError(str(exc), EXIT_INPUT) from None
    result = {"b0": pred.b0, "predicted": pred.predicted,
              "witness": list(pred.witness) if pred.witness else None, "table": rows}
    text = [f"b(G_0) = {pred.b0}, predicted b(G_t) = {pred.predicted} for t >= 1",
            f"{'t':>3} {'nodes':>7} {'exact':>6} {'predicted':>10} {'match':>6}"]
    for r in rows:
        text.append(f"{r['t']:>3} {r['nodes']:>7} {r['exact']:>6} {r.get('predicted', '-'):>10} "
                    f"{str(r.get('match', '-')):>6}")
    ok = all(r["match"] and r["constant"] for r in rows[1:])
    return f"gen:{args.g0}", result, text, 0 if ok else EXIT_BREACH


def cmd_suite(args):
    from .suite import run_suite

    only = {_int(x, "criterion") for x in args.only.split(",")} if args.only else None
    echo = None if args.json else print
    outcomes = run_suite(only=only, workers=args.workers, echo=echo)
    result = [{"criterion": o.number, "title": o.title, "passed": o.passed, "detail": o.detail}
              for o in outcomes]
    failed = [o.number for o in outcomes if not o.passed]
    text = [f"{len(outcomes) - len(failed)}/{len(outcomes)} criteria passed"]
    return "suite", result, text, EXIT_BREACH if failed else 0


# -- entry point --------------------------------------------------------------


def _graph_args(p, positional=True):
    if positional:
        p.add_argument("file", nargs="?", help="edge-list file")
    p.add_argument("--gen", help="generator spec, e.g. path:9, spider:3x2, gnp:10:0.4:7")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON run report")
    ap = argparse.ArgumentParser(prog="burn", description="Burning number toolkit.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exact", parents=[common], help="exact burning number with a witness")
    _graph_args(p)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("verify", parents=[common], help="check a burning sequence two ways")
    _graph_args(p)
    p.add_argument("--sequence", required=True, help="comma-separated node ids, e.g. 1,3")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", parents=[common], help="all closed-form bounds")
    _graph_args(p)
    p.add_argument("--exact", action="store_true", help="also solve exactly")
    p.add_argument("--hamiltonian", help="Hamiltonian path witness, comma-separated ids")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("gamma", parents=[common], help="k-distance domination number")
    _graph_args(p)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("ng", parents=[common], help="Nordhaus-Gaddum checks for one graph or G(n, 1/2) samples")
    _graph_args(p)
    p.add_argument("--n", type=int)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_ng)

    p = sub.add_parser("ilt", parents=[common], help="ILT prediction against exact values")
    p.add_argument("--g0", required=True, help="generator spec for G_0")
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_ilt)

    p = sub.add_parser("suite", parents=[common], help="run the reproduction battery")
    p.add_argument("--only", help="comma-separated criterion numbers")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_suite)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    start = time.perf_counter()
    try:
        source, result, text, code = args.func(args)
    except CliError as exc:
        print(f"burn: {exc}", file=sys.stderr)
        return exc.code
    except LimitExceeded as exc:
        print(f"burn: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    if args.json:
        report = {"command": args.command, "input": source, "result": result,
                  "elapsed": round(time.perf_counter() - start, 6),
                  "seed": getattr(args, "seed", None)}
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print("\n".join(text))
    return code


if __name__ == "__main__":
    sys.exit(main())
