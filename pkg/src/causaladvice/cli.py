"""Command-line entry point.

Exit codes: 0 on success, 1 for usage errors, 2 for bad input data.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .advice import min_hop_coverage, psi_full, psi_proxy
from .errors import CapExceededError, GraphError
from .experiment import run_experiment
from .generators import KINDS, gen_chordal, random_moral_dag
from .graph import Dag, load_graph, save_graph, sort_nodes
from .mec import enumerate_mec, essential_graph
from .oracle import Oracle
from .search import advice_search, advice_search_mpdag, full_search
from .verification import verifying_set_atomic, verifying_set_bounded


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise UsageError(message)


def _read(path):
    try:
        return load_graph(Path(path).read_text())
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc.strerror}") from None


def _read_dag(path) -> Dag:
    g = _read(path)
    if g.edges:
        raise GraphError(f"{path}: expected a DAG but found undirected edges")
    return Dag.from_pdag(g)


def _emit(args, text: str, payload=None):
    out = json.dumps(payload, sort_keys=True) if args.json and payload is not None else text
    if args.output:
        Path(args.output).write_text(out + "\n")
    else:
        print(out)


def _names(nodes):
    return [str(v) for v in sort_nodes(nodes)]


def cmd_gen(args):
    g = gen_chordal(args.kind, args.n, args.seed)
    if args.orient:
        g = random_moral_dag(g, args.seed)
    text = save_graph(g)
    _emit(args, text, json.loads(text))


def cmd_essential(args):
    e = essential_graph(_read_dag(args.input))
    text = save_graph(e)
    _emit(args, text, json.loads(text))


def cmd_verify(args):
    g = _read_dag(args.input)
    cover = verifying_set_atomic(g)
    payload = {"nu1": len(cover), "verifying_set": _names(cover)}
    lines = [f"nu1 = {len(cover)}", "verifying set: {" + ", ".join(_names(cover)) + "}"]
    if args.k > 1:
        batches = verifying_set_bounded(g, args.k)
        payload["k"] = args.k
        payload["batches"] = [_names(s) for s in batches]
        lines.append(f"{len(batches)} interventions of size <= {args.k}:")
        lines += ["  {" + ", ".join(_names(s)) + "}" for s in batches]
    _emit(args, "\n".join(lines), payload)


def cmd_search(args):
    truth = _read_dag(args.truth)
    oracle = Oracle(truth)
    if args.advice:
        adv = _read(args.advice)
        if adv.edges:
            rep = advice_search_mpdag(oracle, adv, args.k)
        else:
            rep = advice_search(oracle, Dag.from_pdag(adv), args.k)
    else:
        rep = full_search(oracle, args.k)
    payload = rep.summary()
    payload["interventions"] = [_names(s) for s in rep.interventions]
    lines = [f"interventions: {rep.count}"]
    lines += ["  {" + ", ".join(_names(s)) + "}" for s in rep.interventions]
    for r in rep.rounds:
        kind = "fallback" if r.forced else "round"
        lines.append(f"{kind} {r.i}: r={r.r} n_i={r.n_i} |C|={r.c} |C'|={r.c_prime}")
    _emit(args, "\n".join(lines), payload)


def cmd_psi(args):
    truth = _read_dag(args.truth)
    adv = _read_dag(args.advice)
    if essential_graph(adv) != essential_graph(truth):
        raise GraphError("advice and truth are not Markov equivalent")
    vt = verifying_set_atomic(adv)
    q = psi_proxy(truth, vt)
    payload = {"h": min_hop_coverage(truth, vt), "psi": q.psi, "vtilde": _names(vt),
               "rho_by_radius": [list(x) for x in q.rho_by_radius]}
    lines = [f"vtilde = {{{', '.join(_names(vt))}}}", f"h = {q.h}", f"psi = {q.psi}"]
    if args.full:
        payload["psi_full"] = psi_full(truth, adv, args.cap)
        lines.append(f"psi (all minimum covers) = {payload['psi_full']}")
    _emit(args, "\n".join(lines), payload)


def cmd_experiment(args):
    skel = _read(args.skeleton)
    res = run_experiment(skel, args.m, args.delta, args.k, args.seed, args.mode, args.cap)
    text = res.to_csv()
    if args.output:
        Path(args.output).write_text(text)
        Path(args.output + ".meta.json").write_text(json.dumps(res.meta, sort_keys=True, indent=1) + "\n")
    else:
        sys.stdout.write(text)


def cmd_mec_enum(args):
    g = _read(args.input)
    members = enumerate_mec(g, args.cap)
    docs = [json.loads(save_graph(d)) for d in members]
    text = f"{len(members)} members\n" + "\n".join(save_graph(d) for d in members)
    _emit(args, text, {"count": len(members), "members": docs})


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("-o", "--output", help="write result here instead of stdout")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--k", type=int, default=1, help="maximum intervention size")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = _Parser(prog="causaladvice", description="Intervention design with expert advice.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    s = sub.add_parser("gen", parents=[common], help="random connected chordal skeleton")
    s.add_argument("--kind", choices=KINDS, default="tree")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--orient", action="store_true", help="emit a random moral DAG on the skeleton")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("essential", parents=[common], help="essential graph of a DAG")
    s.add_argument("-i", "--input", required=True)
    s.set_defaults(func=cmd_essential)

    s = sub.add_parser("verify", parents=[common], help="minimum verifying set of a DAG")
    s.add_argument("-i", "--input", required=True)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", parents=[common], help="simulate adaptive search against a DAG")
    s.add_argument("--truth", "-i", "--input", dest="truth", required=True)
    s.add_argument("--advice", help="advice DAG, or partially oriented advice")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("psi", parents=[common], help="advice quality of one DAG for another")
    s.add_argument("--truth", "-i", "--input", dest="truth", required=True)
    s.add_argument("--advice", required=True)
    s.add_argument("--full", action="store_true", help="maximise over all minimum verifying sets")
    s.add_argument("--cap", type=int, default=10_000)
    s.set_defaults(func=cmd_psi)

    s = sub.add_parser("experiment", parents=[common], help="psi-bucketed search counts as CSV")
    s.add_argument("--skeleton", "-i", "--input", dest="skeleton", required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--delta", type=float, default=0.01)
    s.add_argument("--cap", type=int, default=100_000)
    s.add_argument("--mode", choices=["exhaustive", "walk"], default="exhaustive")
    s.set_defaults(func=cmd_experiment)

    s = sub.add_parser("mec-enum", parents=[common], help="list every DAG in an equivalence class")
    s.add_argument("-i", "--input", required=True)
    s.add_argument("--cap", type=int, default=100_000)
    s.set_defaults(func=cmd_mec_enum)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.k < 1:
            parser.error("--k must be positive")
    except UsageError:
        return 1
    try:
        args.func(args)
    except (GraphError, CapExceededError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
