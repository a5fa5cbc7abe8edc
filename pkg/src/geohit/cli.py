"""Command line: ``geohit {solve,greedy,epsnet,gen,verify}``.

Exit codes: 0 success, 1 input error, 2 solver budget exhausted,
3 a finding that contradicts a theorem (counterexample is dumped).
"""

from __future__ import annotations

import argparse
import csv
import random
import sys
import time
from fractions import Fraction
from typing import Optional

from geohit import hardness, structure
from geohit.formats import (
    DocumentError,
    InstanceDocument,
    digest,
    dumps,
    embedding_from_sidecar,
    embedding_sidecar,
    instance_to_obj,
    parse_document,
)
from geohit.generators import FAMILIES, random_general_position_6, random_instance
from geohit.geom import format_rational
from geohit.hypergraph import Hypergraph, build_with_report, fano_plane
from geohit.solvers import BudgetExhausted, nu_exact, nu_star, tau_exact, tau_star
from geohit.verify import (
    check_duality_chain,
    check_k33_separations,
    check_planarity_property,
    fractional_helly_stat,
)

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_FINDING = 0, 1, 2, 3


class InputError(Exception):
    pass


class Finding(Exception):
    """A theorem-contradicting outcome; ``report`` is emitted before exiting."""

    def __init__(self, report: dict):
        super().__init__("theorem-contradicting finding")
        self.report = report


def _read(path: str) -> tuple[InstanceDocument, str]:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from exc
    try:
        return parse_document(text), digest(text)
    except DocumentError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _hypergraph(doc: InstanceDocument) -> tuple[Hypergraph, dict]:
    if doc.kind == "abstract":
        return doc.instance, {}
    H, rep = build_with_report(doc.instance)
    return H, {"ranges": rep.num_ranges, "edges": rep.num_edges,
               "emptyTraces": rep.empty_traces, "duplicateTraces": rep.duplicate_traces}


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _report(command: str, results: dict, digest_: Optional[str] = None, seed=None) -> dict:
    return {"command": command, "seed": seed, "inputDigest": digest_, "results": results}


# -- subcommands ------------------------------------------------------------

def cmd_solve(args) -> dict:
    doc, dg = _read(args.instance)
    H, build_info = _hypergraph(doc)
    what = {"all": ["nu", "tau", "nustar", "taustar"]}.get(args.what, [args.what])
    res: dict = {"numVertices": H.num_vertices, "numEdges": H.num_edges}
    if build_info:
        res["build"] = build_info
    if "nu" in what:
        r = nu_exact(H, args.budget)
        res["nu"] = {"value": r.value, "witness": r.witness, "nodes": r.nodes}
    if "tau" in what:
        r = tau_exact(H, args.budget)
        res["tau"] = {"value": r.value, "witness": r.witness, "nodes": r.nodes}
    if "nustar" in what:
        s = nu_star(H)
        res["nustar"] = {"value": s.objective, "weights": s.weights}
    if "taustar" in what:
        s = tau_star(H)
        res["taustar"] = {"value": s.objective, "weights": s.weights}
    if args.what == "all" and H.num_edges:
        res["fractionalHelly"] = fractional_helly_stat(H)
    return _report("solve", res, dg)


def _decomposition_obj(D: structure.Decomposition) -> list:
    return [
        {"chosen": s.chosen, "localMatching": s.local_matching_value,
         "heuristic": s.heuristic, "class": s.members}
        for s in D.steps
    ]


def cmd_greedy(args) -> dict:
    doc, dg = _read(args.instance)
    H, _ = _hypergraph(doc)
    D = structure.greedy_matching(H)
    hit, per_class = structure.hitting_from_decomposition(H, D)
    res = {
        "matchingSize": D.size,
        "matching": D.chosen,
        "steps": _decomposition_obj(D),
        "classHittingSets": [{"witness": r.witness, "exact": r.optimal} for r in per_class],
        "hittingSet": {"value": hit.value, "witness": hit.witness},
        "partitionAudit": structure.check_decomposition(H, D) or "ok",
    }
    try:
        nu = nu_exact(H, args.budget).value
        res["nu"] = nu
        res["ratioCheck"] = {"bound": structure.SMALL_EDGE_BOUND,
                             "holds": structure.SMALL_EDGE_BOUND * D.size >= nu}
    except BudgetExhausted:
        res["nu"] = None
    return _report("greedy", res, dg)


def cmd_epsnet(args) -> dict:
    doc, dg = _read(args.instance)
    H, _ = _hypergraph(doc)
    total = len(doc.instance.points) if doc.kind == "geometric" else H.num_vertices
    if not 0 < args.eps <= 1:
        raise InputError("--eps must lie in (0, 1]")
    net = structure.epsilon_net(H, total, args.eps)
    missed = [k for k in net.heavy if not set(net.net) & set(H.edges[k])]
    res = {
        "eps": args.eps,
        "totalPoints": total,
        "threshold": args.eps * total,
        "net": net.net,
        "size": len(net.net),
        "heavyEdges": len(net.heavy),
        "audit": {"missedHeavyEdges": missed, "ok": not missed},
        "steps": _decomposition_obj(net.decomposition),
    }
    return _report("epsnet", res, dg)


def cmd_gen(args) -> str:
    meta: dict = {"generator": args.kind}
    if args.kind == "hard-r4":
        if args.n < 2:
            raise InputError("--n must be at least 2")
        edges = hardness.star_edges(args.n)
        emb = hardness.embed_edges(len(hardness.star_pairs(args.n)), edges)
        inst = emb.instance()
        meta["n"] = args.n
        if args.sidecar:
            with open(args.sidecar, "w") as fh:
                fh.write(dumps(embedding_sidecar(emb, edges)))
    elif args.kind == "star":
        if args.n < 2:
            raise InputError("--n must be at least 2")
        inst = hardness.star_hypergraph(args.n).base
        meta["n"] = args.n
    elif args.kind == "fano":
        inst = fano_plane()
    else:
        try:
            inst = random_instance(args.dim, args.family, args.points, args.ranges, args.seed, args.max_size)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        H, rep = build_with_report(inst)
        meta.update({"family": args.family, "seed": args.seed,
                     "nonemptyFraction": Fraction(rep.num_ranges - rep.empty_traces, max(rep.num_ranges, 1))})
    return dumps(instance_to_obj(inst, meta))


def _verify_embedding(args) -> dict:
    doc, dg = _read(args.inputs[0]) if args.inputs else (None, None)
    if doc is None or doc.kind != "geometric":
        raise InputError("verify embedding needs a geometric instance file")
    inst = doc.instance
    if args.sidecar:
        import json
        with open(args.sidecar) as fh:
            emb, edges = embedding_from_sidecar(json.load(fh), inst)
    else:
        n = doc.meta.get("n")
        if doc.meta.get("generator") != "hard-r4" or not isinstance(n, int):
            raise InputError("no sidecar given and the instance is not a hard-r4 document")
        edges = hardness.star_edges(n)
        emb = None
    mismatches = []
    boundary = []
    checks = 0
    for i, hs in enumerate(inst.ranges):
        for v, p in enumerate(inst.points):
            checks += 1
            val = hs.value(p)
            if val == hs.offset:
                boundary.append([v, i])
            if (val >= hs.offset) != (v in edges[i]):
                mismatches.append([v, i])
    problems = hardness.check_embedding(edges, emb) if emb is not None else []
    ok = not mismatches and not boundary and not problems
    res = {"checks": checks, "mismatches": mismatches, "boundaryIncidences": boundary,
           "certificateProblems": problems, "ok": ok}
    if not ok:
        raise Finding(_report("verify embedding", res, dg))
    return _report("verify embedding", res, dg)


def _write_csv(path: str, rows: list[dict]) -> None:
    if not rows:
        return
    with open(path, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=list(rows[0]))
        w.writeheader()
        for r in rows:
            w.writerow({k: format_rational(v) if isinstance(v, Fraction) else v for k, v in r.items()})


def cmd_verify(args) -> dict:
    if args.kind == "embedding":
        return _verify_embedding(args)
    if args.kind == "duality":
        if not args.inputs:
            raise InputError("verify duality needs instance files")
        trials, failures, rows = [], [], []
        for path in args.inputs:
            doc, dg = _read(path)
            H, _ = _hypergraph(doc)
            rep = check_duality_chain(H, args.budget)
            row = {"input": path, "digest": dg, "nu": rep.nu, "nustar": rep.nu_star,
                   "taustar": rep.tau_star, "tau": rep.tau, "holds": rep.holds}
            trials.append(row)
            rows.append(row)
            if not rep.holds:
                failures.append(row)
        if args.csv:
            _write_csv(args.csv, rows)
        out = _report("verify duality", {"trials": trials, "failures": len(failures)})
        if failures:
            raise Finding(out)
        return out
    if args.kind == "planarity":
        rows, failures = [], []
        if args.inputs:
            cases = [(path, *_read(path)) for path in args.inputs]
        else:
            cases = []
            dim = FAMILIES[args.family]
            for t in range(args.trials):
                s = args.seed + t
                inst = random_instance(dim, args.family, args.points, args.ranges, s, args.max_size)
                cases.append((s, InstanceDocument("geometric", inst), None))
        for label, doc, dg in cases:
            if doc.kind != "geometric":
                raise InputError(f"{label}: planarity check needs a geometric instance")
            rep = check_planarity_property(doc.instance, args.budget)
            row = {"case": label, "matching": len(rep.matching), "graphEdges": len(rep.graph_edges),
                   "planar": rep.planar, "certificateOk": rep.certificate_ok}
            rows.append(row)
            if not (rep.planar and rep.certificate_ok):
                failures.append({**row, "instance": instance_to_obj(doc.instance),
                                 "obstruction": rep.certificate.obstruction, "kind": rep.certificate.kind})
        if args.csv:
            _write_csv(args.csv, rows)
        out = _report("verify planarity", {
            "family": None if args.inputs else args.family,
            "cases": len(rows), "allPlanar": not failures,
            "maxMatching": max((r["matching"] for r in rows), default=0),
            "maxGraphEdges": max((r["graphEdges"] for r in rows), default=0),
            "failures": failures,
        }, seed=None if args.inputs else args.seed)
        if failures:
            raise Finding(out)
        return out
    # k33
    rng = random.Random(args.seed)
    rows, failures = [], []
    hist: dict[int, int] = {}
    for t in range(args.trials):
        pts = random_general_position_6(rng)
        rep = check_k33_separations(pts)
        hist[len(rep.feasible_pairs)] = hist.get(len(rep.feasible_pairs), 0) + 1
        rows.append({"trial": t, "feasiblePairs": len(rep.feasible_pairs), "allNine": rep.all_nine})
        if rep.all_nine:
            failures.append({"trial": t, "points": [list(p.coords) for p in pts]})
    if args.csv:
        _write_csv(args.csv, rows)
    out = _report("verify k33", {"trials": args.trials, "allNineCount": len(failures),
                                 "feasiblePairHistogram": dict(sorted(hist.items())),
                                 "failures": failures}, seed=args.seed)
    if failures:
        raise Finding(out)
    return out


# -- entry point ---------------------------------------------------------------

def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="geohit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="exact nu, tau and the fractional optimum")
    s.add_argument("instance")
    s.add_argument("--what", choices=["nu", "tau", "nustar", "taustar", "all"], default="all")
    s.add_argument("--budget", type=int, default=None, help="branch-and-bound node limit")

    g = sub.add_parser("greedy", help="greedy small-edge matching and class hitting sets")
    g.add_argument("instance")
    g.add_argument("--budget", type=int, default=1_000_000)

    e = sub.add_parser("epsnet", help="epsilon-net via the greedy decomposition")
    e.add_argument("instance")
    e.add_argument("--eps", type=_rational, required=True)

    gen = sub.add_parser("gen", help="write an instance document to stdout")
    gen.add_argument("kind", choices=["hard-r4", "random", "fano", "star"])
    gen.add_argument("--n", type=int, default=5)
    gen.add_argument("--dim", type=int, default=2)
    gen.add_argument("--family", choices=sorted(FAMILIES), default="halfplane")
    gen.add_argument("--points", type=int, default=20)
    gen.add_argument("--ranges", type=int, default=10)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--max-size", type=int, default=None, help="largest trace a random range may have")
    gen.add_argument("--sidecar", help="hard-r4: also write coefficients and certificates here")
    gen.add_argument("-o", "--output", help="write to this file instead of stdout")

    v = sub.add_parser("verify", help="check duality, planarity, K33 or embedding certificates")
    v.add_argument("kind", choices=["duality", "planarity", "k33", "embedding"])
    v.add_argument("inputs", nargs="*")
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--family", choices=["disc", "halfplane", "halfspace"], default="disc")
    v.add_argument("--points", type=int, default=20)
    v.add_argument("--ranges", type=int, default=30)
    v.add_argument("--max-size", type=int, default=None)
    v.add_argument("--budget", type=int, default=None)
    v.add_argument("--sidecar")
    v.add_argument("--csv", help="also write per-trial statistics as CSV")
    v.add_argument("--dump", help="write the counterexample report here on a finding")
    return p


def main(argv=None, stdout=None) -> int:
    out = stdout or sys.stdout
    args = make_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        if args.command == "gen":
            text = cmd_gen(args)
            if args.output:
                with open(args.output, "w") as fh:
                    fh.write(text)
            else:
                out.write(text)
            return EXIT_OK
        handler = {"solve": cmd_solve, "greedy": cmd_greedy, "epsnet": cmd_epsnet, "verify": cmd_verify}
        report = handler[args.command](args)
        code = EXIT_OK
    except InputError as exc:
        print(f"geohit: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExhausted as exc:
        print(f"geohit: inexact: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except Finding as f:
        report = f.report
        code = EXIT_FINDING
        if getattr(args, "dump", None):
            with open(args.dump, "w") as fh:
                fh.write(dumps(report))
        print("geohit: theorem-contradicting finding; counterexample in report", file=sys.stderr)
    report["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    out.write(dumps(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
