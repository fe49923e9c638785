"""Command-line front end.

Every subcommand prints a JSON report on stdout (``--pretty`` switches to a
human-readable rendering). Errors are reported the same way and map to the
exit codes carried by the exception classes in :mod:`roughnelson.errors`.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import relations as rel
from .algebra import verify_all
from .errors import InputError, RelationClassError, RoughNelsonError
from .io import load_algebra, load_relation, lattice_dot, relation_dot, rs_dot, save_json
from .representation import equivalence_classes, represent
from .rough import enumerate_rs, format_pair, rough_pair
from .sweep import sweep

EXIT_OK = 0


def _digest(path) -> str:
    try:
        return "sha256:" + hashlib.sha256(Path(path).read_bytes()).hexdigest()
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from None


def parse_set(expr: str) -> list[str]:
    """``"{1,2}"``, ``"1,2"``, ``"{}"`` and ``"∅"`` are all accepted."""
    s = expr.strip()
    if s in ("", "∅", "{}"):
        return []
    if s.startswith("{") and s.endswith("}"):
        s = s[1:-1]
    items = [t.strip() for t in s.split(",")]
    if any(not t for t in items):
        raise InputError(f"malformed set expression {expr!r}")
    return items


def _require_quasiorder(R):
    if not rel.is_quasiorder(R):
        raise RelationClassError("relation is not a quasiorder (reflexive and transitive)")


# -- subcommands ------------------------------------------------------------------

def cmd_approx(args) -> dict:
    R = load_relation(args.relation)
    _require_quasiorder(R)
    p = rough_pair(R, parse_set(args.set))
    u = R.universe
    return {
        "result": {
            "set": parse_set(args.set),
            "lower": u.sorted_names(p.lower),
            "upper": u.sorted_names(p.upper),
            "pair": format_pair(u, p),
        },
    }


def cmd_rs(args) -> dict:
    R = load_relation(args.relation)
    rs = enumerate_rs(R, args.method)
    u = R.universe
    result = {
        "method": args.method,
        "size": len(rs),
        "chain": rs.is_chain(),
        "pairs": [format_pair(u, p) for p in rs.pairs],
    }
    verdicts = {}
    if args.method == "both":
        # enumerate_rs raises on disagreement, so reaching here means they agree
        verdicts["generated_equals_bruteforce"] = True
    artifacts = []
    if args.dot:
        Path(args.dot).write_text(rs_dot(rs), encoding="utf-8")
        artifacts.append(str(args.dot))
    return {"result": result, "verdicts": verdicts, "artifacts": artifacts}


def cmd_verify(args) -> dict:
    A = load_algebra(args.algebra)
    report = verify_all(A)
    result = {"size": A.size, "elements": list(A.names)}
    luk = report["lukasiewicz"]
    if luk.passed and luk.data:
        result["delta"] = {A.name(i): A.name(int(d)) for i, d in enumerate(luk.data["delta"])}
    return {
        "result": result,
        "verdicts": {k: v.to_json() for k, v in report.items()},
        "witnesses": {k: list(v.witness) for k, v in report.items() if v.passed is False and v.witness},
    }


def cmd_represent(args) -> dict:
    A = load_algebra(args.algebra)
    res = represent(A)
    doc = res.to_json()
    fibers: dict[str, list[str]] = {}
    for j, r in res.rho.items():
        fibers.setdefault(A.name(r), []).append(A.name(j))
    result = {
        "universe": doc["universe"],
        "relation": doc["relation"],
        "rho": doc["rho"],
        "rho_fibers": list(fibers.values()),
        "classes": [sorted(c, key=res.universe.index) for c in equivalence_classes(res.relation)],
        "phi": doc["phi"],
        "Phi": doc["Phi"],
        "rs_size": len(res.rs),
    }
    artifacts = []
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        files = {
            "representation.json": None,
            "relation.dot": relation_dot(res.relation, "R_J"),
            "rs.dot": rs_dot(res.rs),
            "algebra.dot": lattice_dot(A.lattice, "A"),
        }
        for name, text in files.items():
            path = out / name
            if text is None:
                save_json(doc, path)
            else:
                path.write_text(text, encoding="utf-8")
            artifacts.append(str(path))
    return {"result": result, "verdicts": dict(res.verdicts), "artifacts": artifacts}


def cmd_sweep(args) -> dict:
    if args.min_size < 1 or args.max_size < args.min_size:
        raise InputError("need 1 <= --min-size <= --max-size")
    rep = sweep(
        max_size=args.max_size,
        samples=args.samples,
        seed=args.seed,
        round_trip_max=args.round_trip_max,
        workers=args.workers,
        min_size=args.min_size,
    )
    doc = rep.to_json()
    artifacts = []
    if args.dump and rep.counterexamples:
        save_json(rep.counterexamples, args.dump)
        artifacts.append(str(args.dump))
    return {
        "result": {"tested": doc["tested"], "by_size": doc["by_size"], "suites": doc["suites"]},
        "verdicts": {"all_passed": doc["all_passed"]},
        "witnesses": {"counterexamples": doc["counterexamples"]},
        "artifacts": artifacts,
    }


COMMANDS = {
    "approx": cmd_approx,
    "rs": cmd_rs,
    "verify": cmd_verify,
    "represent": cmd_represent,
    "sweep": cmd_sweep,
}


# -- rendering ---------------------------------------------------------------------

def _mark(passed) -> str:
    return {True: "pass", False: "FAIL", None: "skipped"}[passed]


def render_pretty(report: dict) -> str:
    cmd = report["command"]["name"]
    if "error" in report:
        e = report["error"]
        extra = f" [axiom: {e['axiom']}]" if e.get("axiom") else ""
        return f"error ({e['type']}): {e['message']}{extra}"
    res = report.get("result", {})
    lines = []
    if cmd == "approx":
        return res["pair"]
    if cmd == "rs":
        lines += res["pairs"]
        lines.append(f"{res['size']} pairs, chain: {'yes' if res['chain'] else 'no'}")
        if report["verdicts"]:
            lines.append("generated == brute force: yes")
    elif cmd == "verify":
        for name, v in report["verdicts"].items():
            w = f"  witness: {v['witness']}" if v.get("witness") else ""
            lines.append(f"{name:14s} {_mark(v['passed'])}{w}")
        if "delta" in res:
            lines.append("delta: " + ", ".join(f"{k}->{v}" for k, v in res["delta"].items()))
    elif cmd == "represent":
        lines.append("J = {" + ",".join(res["universe"]) + "}")
        lines.append("R_J = " + " ".join(f"{a}{b}" for a, b in res["relation"] if a != b))
        lines.append("rho fibers: " + " ".join("{" + ",".join(f) + "}" for f in res["rho_fibers"]))
        lines.append(f"|RS| = {res['rs_size']}")
        for x, p in res["Phi"].items():
            lines.append(f"  {x} -> {p}")
        lines += [f"{k}: {_mark(v)}" for k, v in report["verdicts"].items()]
    elif cmd == "sweep":
        lines.append(f"tested {res['tested']} relations " + str(res["by_size"]))
        for name, s in res["suites"].items():
            lines.append(f"  {name:28s} {s['passes']}/{s['runs']}")
        lines.append("all passed" if report["verdicts"]["all_passed"] else "COUNTEREXAMPLES FOUND")
    for path in report.get("artifacts", []):
        lines.append(f"wrote {path}")
    return "\n".join(lines)


# -- entry point -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="roughnelson", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable output instead of JSON")
    common.add_argument("--no-timing", action="store_true", help="omit the timing field (byte-stable reports)")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("approx", parents=[common], help="lower and upper approximation of a set")
    a.add_argument("relation", help="relation JSON file")
    a.add_argument("set", help='subset, e.g. "{1,2}" or "∅"')

    r = sub.add_parser("rs", parents=[common], help="enumerate the rough-set lattice RS(R)")
    r.add_argument("relation")
    r.add_argument("--method", choices=("brute", "generated", "both"), default="generated")
    r.add_argument("--dot", help="write the Hasse diagram of RS to this path")

    v = sub.add_parser("verify", parents=[common], help="check the axiom families on a finite algebra")
    v.add_argument("algebra", help="algebra JSON file")

    rp = sub.add_parser("represent", parents=[common], help="build the quasiorder representing a Nelson algebra")
    rp.add_argument("algebra")
    rp.add_argument("--out", help="directory for the JSON and DOT artifacts")

    s = sub.add_parser("sweep", parents=[common], help="run the invariant suites over many quasiorders")
    s.add_argument("--max-size", type=int, default=4)
    s.add_argument("--min-size", type=int, default=1, help="smallest universe in the exhaustive part")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--samples", type=int, default=0)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--round-trip-max", type=int, default=4, help="largest universe given the round-trip suite")
    s.add_argument("--dump", help="write counterexamples (if any) to this JSON file")
    return p


def _command_echo(args) -> dict:
    skip = {"command", "pretty", "no_timing"}
    return {"name": args.command, "args": {k: v for k, v in vars(args).items() if k not in skip}}


def run(argv=None) -> tuple[int, dict]:
    """Parse ``argv``, run the subcommand and return ``(exit_code, report)``."""
    return execute(build_parser().parse_args(argv))


def execute(args: argparse.Namespace) -> tuple[int, dict]:
    report: dict = {"command": _command_echo(args)}
    path = getattr(args, "relation", None) or getattr(args, "algebra", None)
    t0 = time.perf_counter()
    try:
        if path is not None:
            report["input"] = {"path": path, "digest": _digest(path)}
        body = COMMANDS[args.command](args)
        code = EXIT_OK
    except RoughNelsonError as e:
        body = {
            "error": {
                "type": type(e).__name__,
                "message": str(e),
                "axiom": getattr(e, "axiom", None),
                "witness": _jsonable(getattr(e, "witness", None)),
            }
        }
        code = e.exit_code
    for key in ("result", "verdicts", "witnesses", "error"):
        if key in body:
            report[key] = body[key]
    report.setdefault("verdicts", {})
    report.setdefault("witnesses", {})
    if not args.no_timing:
        report["timing"] = {"seconds": round(time.perf_counter() - t0, 6)}
    report["artifacts"] = body.get("artifacts", [])
    report["exit_code"] = code
    return code, report


def _jsonable(w):
    if w is None:
        return None
    if isinstance(w, (list, tuple)):
        return [_jsonable(x) for x in w]
    return w if isinstance(w, (str, int, float, bool)) else str(w)


def main(argv=None) -> int:
    # argparse itself exits with status 2 on malformed command lines
    args = build_parser().parse_args(argv)
    code, report = execute(args)
    if args.pretty:
        print(render_pretty(report))
    else:
        print(json.dumps(report, ensure_ascii=False, indent=2))
        if code:
            print(f"error: {report['error']['message']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
