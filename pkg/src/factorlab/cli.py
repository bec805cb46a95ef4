"""Command-line frontend: check / critical / invariants / bound / verify / remarks / gen.

Exit code contract: 0 when the queried property holds (or all certificate
assertions pass), 1 when it definitively fails (a witness is reported),
2 for usage, parse, or parameter-domain errors.  JSON output is one object
per invocation with a stable schema; vertex ids always refer to the input
graph's labeling.  FACTORLAB_MAX_N overrides the built-in size caps.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from multiprocessing import get_context
from typing import Optional

from .covered import (
    CriticalVerdict,
    CoveredVerdict,
    FactorParams,
    is_fractional_ab_covered,
    is_fractional_abk_critical_covered,
)
from .graphs import Graph, Graph6Error, enumerate_graphs, parse_graph6, write_graph6
from .invariants import compute_invariants
from .theorems import (
    CertificateError,
    ConclusionFailure,
    build_remark1,
    build_remark2,
    check_theorem3_hypothesis,
    theorem3_bound,
    validate_certificate,
    verify_theorem3_on_stream,
)

DEFAULT_CHECK_CAP = 18
DEFAULT_CRITICAL_CAP = 14
DEFAULT_ENUM_CAP = 7


def _cap(default: int) -> int:
    env = os.environ.get("FACTORLAB_MAX_N")
    if env is None:
        return default
    try:
        return int(env)
    except ValueError:
        raise SystemExit(f"factorlab: FACTORLAB_MAX_N must be an integer, got {env!r}")


def _fail(msg: str) -> int:
    print(f"factorlab: {msg}", file=sys.stderr)
    return 2


def _read_one_graph(args) -> Graph:
    if args.graph6 is not None:
        text = args.graph6
    elif args.input is not None and args.input != "-":
        with open(args.input) as fh:
            text = fh.readline()
    else:
        text = sys.stdin.readline()
    text = text.strip()
    if not text:
        raise Graph6Error("no graph6 input given")
    return parse_graph6(text)


def _witness_json(verdict: CoveredVerdict | CriticalVerdict) -> Optional[dict]:
    if isinstance(verdict, CriticalVerdict):
        if verdict.witness is None:
            return None
        inner = verdict.witness.inner.witness
        return {
            "U": list(verdict.witness.removed),
            "X": list(inner.X),
            "Y": list(inner.Y),
            "theta": inner.theta,
            "epsilon": inner.epsilon,
        }
    if verdict.witness is None:
        return None
    w = verdict.witness
    return {"X": list(w.X), "Y": list(w.Y), "theta": w.theta, "epsilon": w.epsilon}


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _witness_text(wj: Optional[dict], verbose: bool) -> list[str]:
    if wj is None:
        return []
    parts = []
    if "U" in wj:
        parts.append(f"U={wj['U']}")
    parts.append(f"X={wj['X']}")
    lines = [f"witness: {' '.join(parts)} theta={wj['theta']} epsilon={wj['epsilon']}"]
    if verbose:
        lines.append(f"witness Y: {wj['Y']}")
    return lines


def cmd_check(args) -> int:
    g = _read_one_graph(args)
    cap = _cap(DEFAULT_CHECK_CAP)
    if g.n > cap:
        return _fail(f"graph order {g.n} exceeds the subset-scan cap {cap} "
                     f"(set FACTORLAB_MAX_N to raise it)")
    if g.n < 1:
        return _fail("covered check needs at least one vertex")
    verdict = is_fractional_ab_covered(g, FactorParams(args.a, args.b))
    wj = _witness_json(verdict)
    _emit(args, {"verdict": verdict.covered, "witness": wj},
          [f"fractional [{args.a},{args.b}]-covered: {'yes' if verdict.covered else 'no'}"]
          + _witness_text(wj, args.witness))
    return 0 if verdict.covered else 1


def cmd_critical(args) -> int:
    g = _read_one_graph(args)
    cap = _cap(DEFAULT_CRITICAL_CAP)
    if g.n > cap:
        return _fail(f"graph order {g.n} exceeds the deletion-scan cap {cap} "
                     f"(set FACTORLAB_MAX_N to raise it)")
    if g.n <= args.k:
        return _fail(f"need n > k, got n={g.n}, k={args.k}")
    verdict = is_fractional_abk_critical_covered(g, FactorParams(args.a, args.b, args.k))
    wj = _witness_json(verdict)
    _emit(args, {"verdict": verdict.critical_covered, "witness": wj},
          [f"fractional ({args.a},{args.b},{args.k})-critical covered: "
           f"{'yes' if verdict.critical_covered else 'no'}"]
          + _witness_text(wj, args.witness))
    return 0 if verdict.critical_covered else 1


def cmd_invariants(args) -> int:
    g = _read_one_graph(args)
    if g.n < 1:
        return _fail("invariants need at least one vertex")
    rep = compute_invariants(g)
    inv = {"n": g.n, "m": g.edge_count(), "delta": rep.delta,
           "kappa": rep.kappa, "alpha": rep.alpha}
    _emit(args, {"invariants": inv},
          [f"n={g.n} m={g.edge_count()} delta={rep.delta} kappa={rep.kappa} alpha={rep.alpha}"])
    return 0


def cmd_bound(args) -> int:
    if args.graph6 is not None or args.input is not None:
        g = _read_one_graph(args)
        report = check_theorem3_hypothesis(g, FactorParams(args.a, args.b, args.k))
        payload = {
            "bound": str(report.bound),
            "kappa": report.kappa,
            "alpha": report.alpha,
            "hypothesis_met": report.hypothesis_met,
        }
        _emit(args, payload,
              [f"bound={report.bound} kappa={report.kappa} alpha={report.alpha} "
               f"hypothesis_met={str(report.hypothesis_met).lower()}"])
        return 0
    if args.alpha is None:
        return _fail("bound needs --alpha or a graph")
    value = theorem3_bound(args.a, args.b, args.k, args.alpha)
    _emit(args, {"bound": str(value)}, [f"bound={value}"])
    return 0


def _nonblank_lines(args) -> list[tuple[int, str]]:
    if args.input is not None and args.input != "-":
        with open(args.input) as fh:
            raw = fh.readlines()
    else:
        raw = sys.stdin.readlines()
    return [(i, line.strip()) for i, line in enumerate(raw, start=1) if line.strip()]


def _parse_numbered(numbered: list[tuple[int, str]]) -> list[Graph]:
    graphs = []
    for lineno, text in numbered:
        try:
            graphs.append(parse_graph6(text))
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from exc
    return graphs


def _verify_worker(payload) -> tuple[int, int, list[tuple[int, str, CriticalVerdict]]]:
    start, numbered, a, b, k = payload
    graphs = _parse_numbered(numbered)
    rep = verify_theorem3_on_stream(graphs, FactorParams(a, b, k))
    failures = [(start + f.index - 1, f.graph6, f.verdict) for f in rep.conclusion_failures]
    return rep.graphs_scanned, rep.hypothesis_holders, failures


def cmd_verify(args) -> int:
    params = FactorParams(args.a, args.b, args.k)
    if args.enumerate is not None:
        cap = _cap(DEFAULT_ENUM_CAP)
        if args.enumerate > cap:
            return _fail(f"--enumerate {args.enumerate} exceeds the cap {cap} "
                         f"(set FACTORLAB_MAX_N to raise it)")

        def stream():
            for n in range(params.k + 1, args.enumerate + 1):
                yield from enumerate_graphs(n, cap=cap)

        report = verify_theorem3_on_stream(stream(), params)
    elif args.workers <= 1:
        numbered = _nonblank_lines(args)
        try:
            graphs = _parse_numbered(numbered)
        except Graph6Error as exc:
            return _fail(str(exc))
        report = verify_theorem3_on_stream(graphs, params)
    else:
        numbered = _nonblank_lines(args)
        chunk = 20000
        payloads = [
            (i + 1, numbered[i : i + chunk], args.a, args.b, args.k)
            for i in range(0, len(numbered), chunk)
        ]
        import time as _time

        t0 = _time.perf_counter()
        try:
            with get_context("fork").Pool(args.workers) as pool:
                partials = pool.map(_verify_worker, payloads)
        except Graph6Error as exc:
            return _fail(str(exc))
        from .theorems import VerificationReport

        report = VerificationReport()
        for scanned, holders, failures in partials:
            report.graphs_scanned += scanned
            report.hypothesis_holders += holders
            for idx, g6, verdict in failures:
                report.conclusion_failures.append(
                    ConclusionFailure(index=idx, graph6=g6, verdict=verdict)
                )
        report.conclusion_failures.sort(key=lambda f: f.index)
        report.elapsed = _time.perf_counter() - t0

    failures_json = [
        {"index": f.index, "graph6": f.graph6, "witness": _witness_json(f.verdict)}
        for f in report.conclusion_failures
    ]
    payload = {
        "graphs_scanned": report.graphs_scanned,
        "hypothesis_holders": report.hypothesis_holders,
        "conclusion_failures": failures_json,
    }
    text = [
        f"graphs scanned:      {report.graphs_scanned}",
        f"hypothesis holders:  {report.hypothesis_holders}",
        f"conclusion failures: {len(report.conclusion_failures)}",
        f"elapsed:             {report.elapsed:.2f}s",
    ]
    for f in report.conclusion_failures:
        text.append(f"  FAILURE at graph {f.index}: {f.graph6}")
    _emit(args, payload, text)
    return 0 if not report.conclusion_failures else 1


def cmd_remarks(args) -> int:
    try:
        if args.which == 1:
            cert = build_remark1(args.k)
        else:
            if args.m is None:
                return _fail("remark 2 needs --m")
            cert = build_remark2(args.a, args.b, args.m, args.k)
    except ValueError as exc:
        return _fail(str(exc))
    try:
        validate_certificate(cert)
        valid = True
        error = None
    except CertificateError as exc:
        valid = False
        error = str(exc)
    w = cert.witness
    payload = {
        "valid": valid,
        "graph6": write_graph6(cert.graph),
        "params": {"a": cert.params.a, "b": cert.params.b, "k": cert.params.k},
        "kappa": cert.expected_kappa,
        "alpha": cert.expected_alpha,
        "witness": {"U": list(cert.removed), "X": list(w.X), "Y": list(w.Y),
                    "theta": w.theta, "epsilon": w.epsilon},
    }
    if error:
        payload["error"] = error
    text = [
        f"construction: {write_graph6(cert.graph)} "
        f"(n={cert.graph.n}, m={cert.graph.edge_count()})",
        f"params: a={cert.params.a} b={cert.params.b} k={cert.params.k}",
        f"kappa={cert.expected_kappa} alpha={cert.expected_alpha}",
        f"witness: U={list(cert.removed)} X={list(w.X)} theta={w.theta} epsilon={w.epsilon}",
        f"certificate: {'all assertions hold' if valid else 'FAILED: ' + (error or '')}",
    ]
    if args.witness:
        text.insert(4, f"witness Y: {list(w.Y)}")
    _emit(args, payload, text)
    return 0 if valid else 1


def cmd_gen(args) -> int:
    try:
        if args.construction == "remark1":
            g = build_remark1(args.k).graph
        elif args.construction == "remark2":
            if args.m is None:
                return _fail("remark2 needs --m")
            g = build_remark2(args.a, args.b, args.m, args.k).graph
        elif args.construction == "complete":
            if args.order is None:
                return _fail("complete needs --n")
            from .graphs import complete

            g = complete(args.order)
        else:
            return _fail(f"unknown construction {args.construction!r}")
    except ValueError as exc:
        return _fail(str(exc))
    line = write_graph6(g)
    _emit(args, {"graph6": line}, [line])
    return 0


def _add_common(p, graph_arg: bool = True, ab: bool = True, k: bool = False):
    if graph_arg:
        p.add_argument("graph6", nargs="?", default=None,
                       help="graph6 line (default: read from --input or stdin)")
        p.add_argument("--input", default=None, help="file with graph6 input ('-' = stdin)")
    if ab:
        p.add_argument("--a", type=int, required=True, help="degree lower bound a")
        p.add_argument("--b", type=int, required=True, help="degree upper bound b")
    if k:
        p.add_argument("--k", type=int, default=0, help="number of deleted vertices k")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--workers", type=int, default=1, help="worker processes (verify only)")
    p.add_argument("--witness", action="store_true", help="verbose witness output")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="factorlab",
        description="Decide fractional [a,b]-covered / (a,b,k)-critical covered "
                    "properties, compute the governing invariants and bounds, and "
                    "verify the connectivity condition over graph6 streams.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="is the graph fractional [a,b]-covered?")
    _add_common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("critical", help="is the graph fractional (a,b,k)-critical covered?")
    _add_common(p, k=True)
    p.set_defaults(func=cmd_critical)

    p = sub.add_parser("invariants", help="order, size, delta, kappa, alpha")
    _add_common(p, ab=False)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("bound", help="evaluate the critical-covered connectivity bound")
    _add_common(p, k=True)
    p.add_argument("--alpha", type=int, default=None, help="independence number (no-graph mode)")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("verify", help="scan a graph6 stream for bound counterexamples")
    _add_common(p, k=True)
    p.add_argument("--enumerate", type=int, default=None, metavar="N",
                   help="verify all graphs of order k+1..N instead of reading input")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("remarks", help="build and validate a sharpness construction")
    p.add_argument("which", type=int, choices=(1, 2), help="construction family")
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=1)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_remarks)

    p = sub.add_parser("gen", help="emit a construction as graph6")
    p.add_argument("construction", choices=("remark1", "remark2", "complete"))
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=1)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--n", dest="order", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_gen)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Graph6Error as exc:
        return _fail(str(exc))
    except ValueError as exc:
        return _fail(str(exc))
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
