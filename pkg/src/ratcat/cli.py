"""Command-line front end: ``ratcat <command> [options]``.

Exit codes: 0 on success, 1 on a precondition or verification failure,
2 on a usage error (argparse's own convention).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager

from . import assoc, dyck, ncpart, numbers, render, scomplex, suite
from .errors import PreconditionError
from .numbers import CoprimePair

COUNT_KINDS = ("catalan", "derived", "narayana", "kreweras", "kirkman", "chain", "q")
EMIT_KINDS = ("paths", "facets", "homogeneous", "inhomogeneous")


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


@contextmanager
def _output(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def _pair(args) -> CoprimePair:
    if args.a is None or args.b is None:
        raise PreconditionError("--a and --b are required")
    return CoprimePair(args.a, args.b)


def _pair_lt(args) -> CoprimePair:
    p = _pair(args)
    if p.a > p.b:
        raise PreconditionError(f"this command needs a < b, got {p}")
    return p


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def cmd_count(args) -> int:
    p = _pair(args)
    kind = args.kind
    if kind in ("narayana", "kirkman"):
        if args.i is None:
            raise PreconditionError(f"{kind} needs --i")
        value = (numbers.narayana if kind == "narayana" else numbers.kirkman)(p, args.i)
    elif kind == "kreweras":
        if args.r is None:
            raise PreconditionError("kreweras needs --r r0,r1,...,ra")
        value = numbers.kreweras(p, args.r)
    elif kind == "catalan":
        value = numbers.rational_catalan(p)
    elif kind == "derived":
        value = numbers.derived_catalan(p)
    elif kind == "chain":
        value = " ".join(str(v) for _, v in numbers.derivation_chain(p))
    else:
        value = numbers.q_rational_catalan(p)
    with _output(args.out) as out:
        print(value, file=out)
    return 0


def _emit_record(D: dyck.DyckPath, emit: str) -> dict:
    rec = {"path": D.steps, "lambda": list(dyck.to_partition(D))}
    if emit == "facets":
        rec["facet"] = [list(d) for d in sorted(assoc.facet(D))]
        rec["valley_face"] = [list(d) for d in sorted(assoc.valley_face(D))]
    elif emit == "homogeneous":
        rec["partition"] = ncpart.homogeneous(D).to_list()
    elif emit == "inhomogeneous":
        rec["partition"] = ncpart.inhomogeneous(D).to_list()
    return rec


def cmd_enumerate(args) -> int:
    p = _pair(args) if args.emit == "paths" else _pair_lt(args)
    with _output(args.out) as out:
        for D in dyck.enumerate_paths(p):
            out.write(dumps(_emit_record(D, args.emit)) + "\n")
    return 0


def _check_names(only) -> list[str] | None:
    if not only:
        return None
    names = [n for item in only for n in item.split(",") if n]
    unknown = sorted(set(names) - set(suite.REGISTRY))
    if unknown:
        raise PreconditionError(f"unknown checks {unknown}; known: {sorted(suite.REGISTRY)}")
    return names


def cmd_verify(args) -> int:
    if args.max_sum < 3:
        raise PreconditionError("--max-sum must be at least 3")
    names = _check_names(args.only)
    opts = {"budget": args.budget, "cycle_max_sum": args.cycle_max_sum}
    jobs = [(p.a, p.b, names, opts) for p in suite.pairs_up_to(args.max_sum)]
    failed = 0
    with _output(args.out) as out:
        if args.jobs > 1:
            with ProcessPoolExecutor(args.jobs) as pool:
                results = pool.map(suite._run_pair_args, jobs)
                failed = _stream(results, out, args.timing)
        else:
            failed = _stream(map(suite._run_pair_args, jobs), out, args.timing)
    if failed:
        print(f"{failed} proven check(s) failed", file=sys.stderr)
    return 1 if failed else 0


def _stream(results, out, timing: bool) -> int:
    failed = 0
    for rec in results:
        failed += sum(c["status"] == "fail" for c in rec["checks"])
        if not timing:
            rec.pop("timing", None)
        out.write(dumps(rec) + "\n")
        out.flush()
    return failed


def _write_report(rep, out_path) -> int:
    with _output(out_path) as out:
        out.write(dumps(rep.to_dict()) + "\n")
    return 0 if rep.ok else 1


def cmd_csp(args) -> int:
    return _write_report(ncpart.csp_check(_pair_lt(args)), args.out)


def cmd_alexander(args) -> int:
    return _write_report(assoc.check_alexander_duality(_pair_lt(args)), args.out)


def cmd_collapse(args) -> int:
    p = _pair_lt(args)
    v = assoc.check_collapse_conjecture(p, args.budget)
    with _output(args.out) as out:
        out.write(dumps({"pair": [p.a, p.b], **v.to_dict()}) + "\n")
    return 0


def cmd_render(args) -> int:
    p = _pair(args)
    if args.path is None:
        raise PreconditionError("render needs --path")
    D = dyck.validate(p, args.path)
    if args.kind != "dyck" and p.a > p.b:
        raise PreconditionError(f"{args.kind} rendering needs a < b")
    if args.format == "json":
        obj = {"path": D.steps, "pair": [p.a, p.b], "kind": args.kind}
        if args.kind == "dyck":
            shots = []
            if args.lasers == "all":
                shots = dyck.fire_lasers(D)
            elif args.lasers == "valleys":
                shots = dyck.fire_lasers(D, dyck.statistics(D).valleys)
            obj["lasers"] = [
                {"source": list(L.source), "end": [str(L.end_x), L.end_height], "hit": list(L.hit)}
                for L in shots
            ]
        elif args.kind == "dissection":
            obj["diagonals"] = [list(d) for d in sorted(assoc.facet(D))]
        else:
            part = ncpart.homogeneous(D) if args.partition == "homogeneous" else ncpart.inhomogeneous(D)
            obj["partition"] = part.to_list()
        text = dumps(obj) + "\n"
    elif args.kind == "dyck":
        text = render.dyck_svg(D, args.lasers, args.labels)
    elif args.kind == "dissection":
        text = render.facet_svg(D)
    else:
        text = render.partition_svg(D, args.partition)
    with _output(args.out) as out:
        out.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ratcat", description="Rational Catalan combinatorics toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, pair=True):
        sp = sub.add_parser(name, help=help_text)
        if pair:
            sp.add_argument("--a", type=int, required=True)
            sp.add_argument("--b", type=int, required=True)
        sp.add_argument("--out", help="write to this file instead of standard output")
        sp.set_defaults(func=fn)
        return sp

    sp = add("count", cmd_count, "print an exact count")
    sp.add_argument("kind", choices=COUNT_KINDS)
    sp.add_argument("--i", type=int, help="index for narayana/kirkman")
    sp.add_argument("--r", type=_int_list, help="run type r0,...,ra for kreweras")

    sp = add("enumerate", cmd_enumerate, "stream one JSON object per Dyck path")
    sp.add_argument("--emit", choices=EMIT_KINDS, default="paths")

    sp = add("verify", cmd_verify, "run the verification suite over many pairs", pair=False)
    sp.add_argument("--max-sum", type=int, required=True)
    sp.add_argument("--only", action="append", help="restrict to these checks (repeat or comma-separate)")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--budget", type=int, default=scomplex.DEFAULT_BUDGET)
    sp.add_argument("--cycle-max-sum", type=int, default=10, help="largest a+b for the cycle-lemma check")
    sp.add_argument("--timing", action="store_true", help="include per-pair wall time")

    add("csp", cmd_csp, "cyclic sieving check for one pair")
    add("alexander", cmd_alexander, "Alexander duality check for one pair")
    sp = add("collapse", cmd_collapse, "search collapses of the flag complex onto Ass(a,b)")
    sp.add_argument("--budget", type=int, default=scomplex.DEFAULT_BUDGET)

    sp = add("render", cmd_render, "draw a path, its dissection or its partition")
    sp.add_argument("kind", choices=("dyck", "dissection", "chords"))
    sp.add_argument("--path", help="step word over N and E")
    sp.add_argument("--lasers", choices=("none", "all", "valleys"), default="none")
    sp.add_argument("--labels", choices=("none", "homogeneous", "inhomogeneous"), default="none")
    sp.add_argument("--partition", choices=("homogeneous", "inhomogeneous"), default="homogeneous")
    sp.add_argument("--format", choices=("svg", "json"), default="svg")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        # downstream reader (e.g. head) closed early; silence the flush at exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
