"""Command-line front end: ``chordlab {table,verify,enumerate,map,analyze}``.

Exit codes: 0 success, 1 verification or precondition failure, 2 resource
cap exceeded, 64 usage error.
"""
from __future__ import annotations

import argparse
import os
import sys

from . import analysis, triangles
from .bijections import DyckPath, MarkedDiagram, dyck_to_matching, matching_to_dyck, phi, rewrap, unwrap
from .diagram import parse_chord, parse_diagram
from .enumeration import DiagramStream, Filter
from .errors import ResourceCapError, ValidationError
from .statistics import Statistic, histogram
from .verify import SUITES, render_report, run_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_CAP = 2
EXIT_USAGE = 64

MAPS = ("unwrap", "rewrap", "dyck2match", "match2dyck", "phi")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _env_int(name, default):
    value = os.environ.get(name)
    if not value:
        return default
    try:
        return int(value)
    except ValueError:
        raise UsageError(f"{name}={value!r} is not an integer") from None


def _common(p, threads=False):
    p.add_argument("--cap", type=int, default=None,
                   help="max n for enumeration-backed work (env CHORDLAB_CAP, default %d)" % triangles.DEFAULT_CAP)
    p.add_argument("--out", default=None, help="write output to this path instead of stdout")
    if threads:
        p.add_argument("--threads", type=int, default=None, help="worker threads (env CHORDLAB_THREADS, default 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chordlab", description="Exact enumeration and identities for linear chord diagrams.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("table", help="print a number triangle")
    p.add_argument("kind", choices=triangles.KINDS)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--format", choices=triangles.EXPORT_FORMATS, default="csv")
    _common(p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--nmax", type=int, required=True)
    _common(p, threads=True)

    p = sub.add_parser("enumerate", help="list diagrams or a statistic histogram")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--filter", default="all", help="all, minlen=K, noncrossing or nonnesting")
    p.add_argument("--stat", default=None, help="sc (length of the filter's shortest allowed chord), scK or lr")
    p.add_argument("--histogram", action="store_true", help="print the histogram JSON instead of diagrams")
    p.add_argument("--format", choices=("text", "json"), default="text")
    _common(p, threads=True)

    p = sub.add_parser("map", help="apply a bijection")
    p.add_argument("map", choices=MAPS)
    p.add_argument("input", help="diagram as (a,b)(c,d)... or Dyck path over U/D")
    p.add_argument("--mark", default=None, help="short chord (i,i+1) for unwrap")
    p.add_argument("--out", default=None)

    p = sub.add_parser("analyze", help="unimodality / log-concavity report for triangle rows")
    p.add_argument("kind", choices=triangles.KINDS)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    _common(p)
    return parser


def _cap(args) -> int:
    cap = args.cap if args.cap is not None else _env_int("CHORDLAB_CAP", triangles.DEFAULT_CAP)
    if cap < 0:
        raise UsageError("--cap must be >= 0")
    return cap


def _threads(args) -> int:
    threads = args.threads if args.threads is not None else _env_int("CHORDLAB_THREADS", 1)
    if threads < 1:
        raise UsageError("--threads must be >= 1")
    return threads


def _resolve_stat(text: str, filt: Filter) -> Statistic:
    if text.strip().lower() == "sc":
        return Statistic.sc(filt.k if filt.kind == "minlen" else 1)
    return Statistic.parse(text)


def cmd_table(args) -> tuple[int, str]:
    if args.nmax < 0:
        raise UsageError("--nmax must be >= 0")
    return EXIT_OK, triangles.export(args.kind, args.nmax, args.format, cap=_cap(args))


def cmd_verify(args) -> tuple[int, str]:
    if args.nmax < 0:
        raise UsageError("--nmax must be >= 0")
    if args.nmax > triangles.RECURRENCE_LIMIT:
        raise ResourceCapError(args.nmax, triangles.RECURRENCE_LIMIT)
    suites = SUITES if args.suite == "all" else (args.suite,)
    threads, cap = _threads(args), _cap(args)
    reports, ok = [], True
    for suite in suites:
        checks = run_suite(suite, args.nmax, threads=threads, cap=cap)
        ok &= all(c.passed for c in checks)
        reports.append(render_report(suite, checks))
    return (EXIT_OK if ok else EXIT_FAIL), "\n".join(reports)


def cmd_enumerate(args) -> tuple[int, str]:
    try:
        filt = Filter.parse(args.filter)
        stat = _resolve_stat(args.stat, filt) if args.stat else None
    except ValidationError as exc:
        raise UsageError(str(exc)) from None
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    cap = _cap(args)
    if args.n > cap:
        raise ResourceCapError(args.n, cap)
    if args.histogram:
        stat = stat or _resolve_stat("sc", filt)
        return EXIT_OK, histogram(args.n, filt, stat, threads=_threads(args)).to_json() + "\n"
    lines = []
    for d in DiagramStream(args.n, filt):
        text = d.to_json() if args.format == "json" else d.to_text()
        lines.append(f"{text}\t{stat(d)}" if stat else text)
    return EXIT_OK, "".join(line + "\n" for line in lines)


def cmd_map(args) -> tuple[int, str]:
    # parse failures are usage errors; everything after parsing is a precondition
    try:
        if args.map == "dyck2match":
            value = DyckPath(args.input.strip())
        else:
            value = parse_diagram(args.input)
        mark = parse_chord(args.mark) if args.mark else None
    except ValidationError as exc:
        raise UsageError(str(exc)) from None
    if args.map == "unwrap":
        if mark is None:
            raise UsageError("unwrap needs --mark (i,i+1)")
        result = str(unwrap(MarkedDiagram(value, mark)))
    elif args.map == "rewrap":
        result = str(rewrap(value))
    elif args.map == "dyck2match":
        result = str(dyck_to_matching(value))
    elif args.map == "match2dyck":
        result = str(matching_to_dyck(value))
    else:
        result = str(phi(value))
    return EXIT_OK, result + "\n"


def cmd_analyze(args) -> tuple[int, str]:
    if args.nmax < 0:
        raise UsageError("--nmax must be >= 0")
    reports = analysis.sweep(args.kind, args.nmax, cap=_cap(args))
    text = analysis.reports_to_json(reports) if args.format == "json" else analysis.reports_to_table(reports)
    # log-concavity of T rows and unimodality of L rows are theorems; a failure is a bug
    kind = triangles.canonical_kind(args.kind)
    broken = (kind == "T" and not all(r.log_concave for r in reports)) or \
             (kind == "L" and not all(r.unimodal for r in reports))
    return (EXIT_FAIL if broken else EXIT_OK), text


COMMANDS = {
    "table": cmd_table,
    "verify": cmd_verify,
    "enumerate": cmd_enumerate,
    "map": cmd_map,
    "analyze": cmd_analyze,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        code, text = COMMANDS[args.verb](args)
    except UsageError as exc:
        print(f"chordlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceCapError as exc:
        print(f"chordlab: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValidationError as exc:
        print(f"chordlab: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
