"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys as _sys
from pathlib import Path

from .chordal import chordless_cycle, is_chordal
from .core import CoxeterError, from_json, parse_cox, serialize_cox, to_json
from .formats import emit_dot, random_system
from .jsj import DEFAULT_ORBIT_BUDGET, decompose, decompose_fast, jsj_orbit
from .oracle import DEFAULT_RANK_BOUND
from .separators import complete_relative_minimal_separators, relative_minimal_separators
from .twist import (DEFAULT_TWIST_BUDGET, apply_twist, make_twist, orbit_invariants,
                    rename_map, twist_orbit)
from .verify import verify_system

DEFAULT_SEED = 20240101


def load_system(path: str):
    text = Path(path).read_text()
    if path.endswith(".json") or text.lstrip().startswith("{"):
        return from_json(json.loads(text))
    return parse_cox(text)


def _budget(args, default):
    if args.budget is not None:
        return args.budget
    env = os.environ.get("COXJSJ_BUDGET")
    return int(env) if env else default


def _dump(obj, out) -> None:
    out.write(json.dumps(obj, sort_keys=False) + "\n")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coxjsj", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decompose", help="visual JSJ tree over FA")
    d.add_argument("file")
    d.add_argument("--fast", action="store_true", help="use the MCS-M atom decomposition")
    d.add_argument("--orbit", action="store_true", help="all trees reachable by slide moves")
    d.add_argument("--format", choices=["json", "dot"], default="json")
    d.add_argument("--budget", type=int, default=None)

    s = sub.add_parser("separators", help="relative minimal separators")
    s.add_argument("file")

    c = sub.add_parser("chordal", help="chordality with a chordless-cycle witness")
    c.add_argument("file")

    t = sub.add_parser("twist", help="elementary twists")
    tsub = t.add_subparsers(dest="twist_command", required=True)
    ta = tsub.add_parser("apply")
    ta.add_argument("file")
    ta.add_argument("--s1", required=True, help="comma-separated left side")
    ta.add_argument("--s0", required=True, help="comma-separated cut (may be empty)")
    ta.add_argument("--format", choices=["json", "cox", "dot"], default="json")
    to = tsub.add_parser("orbit")
    to.add_argument("file")
    to.add_argument("--budget", type=int, default=None)

    v = sub.add_parser("verify", help="run every oracle comparison")
    v.add_argument("file")
    v.add_argument("--bound", type=int, default=DEFAULT_RANK_BOUND)
    v.add_argument("--order-bound", type=int, default=10**4)

    r = sub.add_parser("random", help="emit a reproducible random system")
    r.add_argument("--rank", type=int, required=True)
    r.add_argument("--p", type=float, default=0.5)
    r.add_argument("--labels", default="2,3,4,5", help="comma-separated labels, 'inf' allowed")
    r.add_argument("--seed", type=int, default=DEFAULT_SEED)
    r.add_argument("--format", choices=["cox", "json", "dot"], default="cox")
    return p


def _names(text: str) -> list:
    return [x for x in text.split(",") if x]


def run(args, out=None) -> int:
    out = out or _sys.stdout
    cmd = args.command
    if cmd == "random":
        labels = [float("inf") if x == "inf" else int(x) for x in _names(args.labels)]
        W = random_system(args.rank, args.p, labels, args.seed)
        if args.format == "cox":
            out.write(serialize_cox(W))
        elif args.format == "json":
            _dump(to_json(W), out)
        else:
            out.write(emit_dot(W))
        return 0

    W = load_system(args.file)
    if cmd == "decompose":
        if args.orbit:
            trees = jsj_orbit(W, _budget(args, DEFAULT_ORBIT_BUDGET))
        else:
            trees = [decompose_fast(W) if args.fast else decompose(W)]
        if args.format == "dot":
            out.write("".join(emit_dot(t) for t in trees))
        elif args.orbit:
            _dump({"trees": [t.to_json() for t in trees]}, out)
        else:
            _dump(trees[0].to_json(), out)
        return 0

    if cmd == "separators":
        _dump({"complete_relative_minimal_separators":
               sorted(map(list, complete_relative_minimal_separators(W))),
               "relative_minimal_separators": sorted(map(list, relative_minimal_separators(W)))},
              out)
        return 0

    if cmd == "chordal":
        chordal = is_chordal(W)
        result = {"chordal": chordal}
        if not chordal:
            result["witness"] = chordless_cycle(W)
        _dump(result, out)
        return 0

    if cmd == "twist" and args.twist_command == "apply":
        tw = make_twist(W, _names(args.s1), _names(args.s0))
        twisted = apply_twist(W, tw)
        if args.format == "cox":
            out.write(serialize_cox(twisted))
        elif args.format == "dot":
            out.write(emit_dot(twisted))
        else:
            _dump({"system": to_json(twisted), "renames": rename_map(W, tw),
                   "sigma": tw.mapping}, out)
        return 0

    if cmd == "twist" and args.twist_command == "orbit":
        orbit = twist_orbit(W, _budget(args, DEFAULT_TWIST_BUDGET))
        report = orbit_invariants(orbit.members)
        _dump({"members": [to_json(M) for M in orbit.members],
               "canonical": [list(k) for k in orbit.keys], "overflow": orbit.overflow,
               "invariants": report.to_json()}, out)
        return 0 if report.overall else 1

    if cmd == "verify":
        report = verify_system(W, args.bound, args.order_bound)
        _dump(report.to_json(), out)
        return 0 if report.overall else 1
    raise AssertionError(cmd)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args)
    except (CoxeterError, OSError, json.JSONDecodeError) as exc:
        print(f"coxjsj: error: {exc}", file=_sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
