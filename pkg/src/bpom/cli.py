"""Command-line front end: parsing, checking, encoding, simulation, analysis."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, TextIO

from .chor import IllFormed, participants, pretty
from .encode import EncodeConfig, LoopsUnsupported, encode, unfold_loops
from .lts import Exploded, bisimilar, build_chor_lts, build_pom_lts, \
    completed_chor_traces
from .parser import ParseError, parse
from .pomset import BudgetExceeded, InvariantViolation
from .render import to_dot
from .semantics import loop_verdicts
from .session import NotEnabled, StepMismatch, StepSession
from . import server

EXIT_OK = 0
EXIT_USER = 1
EXIT_INTERNAL = 2


class UserError(Exception):
    """Bad input or bad request; reported on stderr with exit code 1."""


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise UserError(f"cannot read {path}: {exc}")


def _parse_source(path: str):
    try:
        return parse(_read_source(path))
    except (ParseError, IllFormed) as exc:
        raise UserError(str(exc))


def cmd_parse(args: argparse.Namespace, out: TextIO) -> int:
    term = _parse_source(args.path)
    print(repr(term), file=out)
    print(pretty(term), file=out)
    names = ", ".join(sorted(participants(term)))
    print(f"participants: {{{names}}}", file=out)
    return EXIT_OK


def cmd_check(args: argparse.Namespace, out: TextIO) -> int:
    term = _parse_source(args.path)
    verdicts = loop_verdicts(term)
    if not verdicts:
        print("OK: no loops (vacuously dependently guarded)", file=out)
        return EXIT_OK
    bad = 0
    for v in verdicts:
        body = pretty(v.loop.body)
        if v.guarded:
            print(f"OK: ({body})* is dependently guarded", file=out)
        else:
            bad += 1
            print(f"NOT dependently guarded: ({body})* "
                  f"partially terminates to a different body "
                  f"for subject {v.offending_subject}", file=out)
    return EXIT_USER if bad else EXIT_OK


def _encode_args(args: argparse.Namespace) -> EncodeConfig:
    if getattr(args, "unfold", None) is not None and args.unfold < 0:
        raise UserError("--unfold must be >= 0")
    return EncodeConfig(unfold_depth=getattr(args, "unfold", None))


def cmd_encode(args: argparse.Namespace, out: TextIO) -> int:
    term = _parse_source(args.path)
    try:
        pom = encode(term, _encode_args(args))
    except LoopsUnsupported as exc:
        raise UserError(str(exc))
    if args.format == "dot":
        print(to_dot(pom), file=out)
    else:
        json.dump(pom.to_json(), out, indent=2)
        out.write("\n")
    return EXIT_OK


def _show_state(session: StepSession, out: TextIO) -> None:
    print(f"chor:   {pretty(session.chor_state)}", file=out)
    enabled = session.enabled()
    if session.terminated():
        print("state:  terminated (both sides)", file=out)
    for i, (event, label) in enumerate(enabled):
        print(f"  [{i}] {label}  (event {event})", file=out)


def _pick(session: StepSession, line: str) -> int:
    """A script line is an enabled-list index, e<id>, or a label string."""
    enabled = session.enabled()
    if line.isdigit():
        idx = int(line)
        if idx >= len(enabled):
            raise UserError(f"index {idx} out of range "
                            f"({len(enabled)} events enabled)")
        return enabled[idx][0]
    if line.startswith("e") and line[1:].isdigit():
        return int(line[1:])
    hits = [e for e, lbl in enabled if str(lbl) == line]
    if len(hits) != 1:
        raise UserError(f"label {line!r} matches {len(hits)} enabled events")
    return hits[0]


def cmd_sim(args: argparse.Namespace, out: TextIO) -> int:
    term = _parse_source(args.path)
    try:
        session = StepSession.create(term, unfold_depth=args.unfold)
    except LoopsUnsupported as exc:
        raise UserError(str(exc))

    if args.script:
        lines = [ln.strip() for ln in _read_source(args.script).splitlines()]
        for line in lines:
            if not line or line.startswith("#"):
                continue
            event = _pick(session, line)
            try:
                session.fire(event)
            except NotEnabled as exc:
                raise UserError(str(exc))
            print(f"fired {session.history[-1][1]} (event {event})", file=out)
        _show_state(session, out)
        return EXIT_OK

    _show_state(session, out)
    while True:
        try:
            line = input("fire> ").strip()
        except EOFError:
            print(file=out)
            return EXIT_OK
        if line in ("q", "quit", "exit"):
            return EXIT_OK
        if not line:
            continue
        try:
            session.fire(_pick(session, line))
        except (UserError, NotEnabled) as exc:
            print(f"error: {exc}", file=out)
            continue
        _show_state(session, out)


def cmd_bisim(args: argparse.Namespace, out: TextIO) -> int:
    left = _parse_source(args.path)
    if args.other is None:
        try:
            pom = encode(left, _encode_args(args))
        except LoopsUnsupported as exc:
            raise UserError(str(exc))
        source = unfold_loops(left, args.unfold) if args.unfold is not None else left
        l1 = build_chor_lts(source, bound=args.bound)
        l2 = build_pom_lts(pom, bound=args.bound)
        report = bisimilar(l1, l2)
        print(f"choreography LTS: {len(l1.states)} states, "
              f"pomset LTS: {len(l2.states)} states", file=out)
        if report.bisimilar:
            print("bisimilar: yes", file=out)
            return EXIT_OK
        print("bisimilar: NO (encoding soundness violated)", file=out)
        _print_counterexample(report, out)
        return EXIT_INTERNAL

    right = _parse_source(args.other)
    l1 = build_chor_lts(left, bound=args.bound)
    l2 = build_chor_lts(right, bound=args.bound)
    report = bisimilar(l1, l2)
    print(f"left LTS: {len(l1.states)} states, "
          f"right LTS: {len(l2.states)} states", file=out)
    if report.bisimilar:
        print("bisimilar: yes", file=out)
        return EXIT_OK
    print("bisimilar: no", file=out)
    _print_counterexample(report, out)
    return EXIT_USER


def _print_counterexample(report, out: TextIO) -> None:
    trace = ", ".join(str(a) for a in report.trace or ())
    print(f"distinguishing trace: <{trace}>", file=out)
    print(f"verdict: {report.verdict}", file=out)


def cmd_traces(args: argparse.Namespace, out: TextIO) -> int:
    term = _parse_source(args.path)
    try:
        traces = completed_chor_traces(term, args.max_len)
    except ValueError as exc:
        raise UserError(str(exc))
    for trace in sorted(traces, key=lambda tr: tuple(a.sort_key() for a in tr)):
        print(", ".join(str(a) for a in trace) if trace else "(empty)", file=out)
    suffix = f" up to length {args.max_len}" if args.max_len is not None else ""
    print(f"{len(traces)} completed trace(s){suffix}", file=out)
    return EXIT_OK


def cmd_serve(args: argparse.Namespace, out: TextIO) -> int:
    server.run(host=args.host, port=args.port)
    return EXIT_OK


def _build_argparser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="bpom",
        description="Choreographies as branching pomsets: parse, encode, "
                    "simulate, compare.")
    sub = top.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        cmd = sub.add_parser(name, help=help_text)
        cmd.set_defaults(handler=handler)
        return cmd

    p = add("parse", cmd_parse, "parse a choreography and dump its structure")
    p.add_argument("path", help="source file, or - for stdin")

    p = add("check", cmd_check, "report dependent guardedness of every loop")
    p.add_argument("path")

    p = add("encode", cmd_encode, "translate a choreography to a branching pomset")
    p.add_argument("path")
    p.add_argument("--unfold", type=int, default=None, metavar="K",
                   help="rewrite loops to K explicit iterations first")
    p.add_argument("--format", choices=("json", "dot"), default="json")

    p = add("sim", cmd_sim, "step through a choreography and its pomset together")
    p.add_argument("path")
    p.add_argument("--script", default=None,
                   help="file of moves (index, e<id>, or label), one per line")
    p.add_argument("--unfold", type=int, default=None, metavar="K")

    p = add("bisim", cmd_bisim, "check bisimilarity (one input: against its "
                                "encoding; two inputs: against each other)")
    p.add_argument("path")
    p.add_argument("other", nargs="?", default=None)
    p.add_argument("--unfold", type=int, default=None, metavar="K")
    p.add_argument("--bound", type=int, default=100_000)

    p = add("traces", cmd_traces, "list completed traces")
    p.add_argument("path")
    p.add_argument("--max-len", type=int, default=None)

    p = add("serve", cmd_serve, "run the HTTP stepping service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=None,
                   help="default: $BPOM_PORT or 8000")

    return top


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_argparser().parse_args(argv)
    try:
        return args.handler(args, sys.stdout)
    except UserError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USER
    except BudgetExceeded as exc:
        print(f"error: {exc} (try a tighter bound or fewer choices)",
              file=sys.stderr)
        return EXIT_USER
    except Exploded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USER
    except (InvariantViolation, StepMismatch, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
