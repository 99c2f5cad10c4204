"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 parse or validation error,
3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from decimal import Decimal, InvalidOperation
from pathlib import Path

from ..diagram.dt import dt_code, format_dt
from ..diagram.pd import DiagramError, PlanarDiagram, format_pd, writhe
from ..khovanov.groups import format_kh, kh_diff
from ..mutation.tangle import (CableSpec, MultiComponentClosure, Tangle, cable, close, format_tangle,
                               mutate, parse_tangle)
from ..skein.bracket import BudgetExceeded
from .classify import DEFAULT_VOLUME_TOL, classify, report
from .records import IngestError, KnotRecord, MissingInvariantError, fixture_records, ingest, load_knot

__all__ = ["main", "build_parser"]

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, default=str))
    else:
        print(text.rstrip("\n"))


def _poly(v) -> dict:
    return v.to_json() | {"text": str(v)}


# -- knots -----------------------------------------------------------------
def _diagram_info(name: str, d: PlanarDiagram) -> dict:
    info = {"name": name, "pd": format_pd(d), "crossings": d.n_crossings,
            "components": d.n_components, "writhe": writhe(d) if d.crossings else 0}
    if d.n_components == 1 and d.crossings:
        info["dt"] = format_dt(dt_code(d))
    return info


def cmd_parse(args) -> None:
    if args.tangle:
        t = _load_tangle(args.knot)
        payload = _tangle_info(t)
        _emit(args, payload, format_tangle(t))
        return
    name, d = load_knot(args.knot)
    info = _diagram_info(name, d)
    lines = [f"{k}: {v}" for k, v in info.items()]
    _emit(args, info, "\n".join(lines))


def cmd_invariants(args) -> None:
    name, d = load_knot(args.knot)
    rec = KnotRecord(name, d)
    chosen = [k for k in ("jones", "alexander", "homfly", "kauffman", "signature") if getattr(args, k)]
    if args.kh:
        chosen.append("khovanov")
    if args.reduced_kh:
        chosen.append("reduced_khovanov")
    if not chosen and args.colored_jones is None:
        chosen = ["jones", "alexander", "signature"]
    payload: dict = {"name": name}
    lines = [f"name: {name}"]
    for kind in chosen:
        v = rec.invariant(kind)
        if kind == "signature":
            payload[kind] = v
            lines.append(f"signature: {v}")
        elif kind.endswith("khovanov"):
            ranks, tors = format_kh(v)
            payload[kind] = v.to_json() | {"ranks": ranks, "torsion": tors}
            lines += [f"{kind} ranks: {ranks}", f"{kind} torsion: {tors or '-'}"]
        else:
            payload[kind] = _poly(v)
            if kind in ("homfly", "kauffman"):
                scale = 2 if kind == "kauffman" else 1
                lines += [f"{kind}: {v}", v.render_table(scale)]
            else:
                lines.append(f"{kind}: {v}")
    if args.colored_jones is not None:
        from ..coloredjones.colored import colored_jones

        v = colored_jones(d, args.colored_jones, max_color=args.max_color)
        payload[f"colored_jones_{args.colored_jones}"] = _poly(v)
        lines.append(f"J_{args.colored_jones}: {v}")
    _emit(args, payload, "\n".join(lines))


def cmd_kh_diff(args) -> None:
    n1, d1 = load_knot(args.k1)
    n2, d2 = load_knot(args.k2)
    kind = "reduced_khovanov" if args.reduced else "khovanov"
    g1 = KnotRecord(n1, d1).invariant(kind)
    g2 = KnotRecord(n2, d2).invariant(kind)
    diffs = kh_diff(g1, g2)
    payload = {"knots": [n1, n2], "reduced": args.reduced, "equal": not diffs,
               "differences": [{"i": x.i, "j": x.j, "rank": [x.rank1, x.rank2],
                                "torsion": [list(x.torsion1), list(x.torsion2)]} for x in diffs]}
    text = f"{n1} vs {n2}: " + ("equal" if not diffs else f"{len(diffs)} bidegrees differ")
    text += "".join(f"\n  {x}" for x in diffs)
    _emit(args, payload, text)


# -- tangles ---------------------------------------------------------------
def _load_tangle(spec: str) -> Tangle:
    path = Path(spec)
    text = path.read_text() if path.exists() else spec.replace(";", "\n")
    return parse_tangle(text)


def _tangle_info(t: Tangle) -> dict:
    return {"tangle": format_tangle(t), "crossings": t.n_crossings,
            "boundary": {p: list(v) for p, v in t.boundary.items()},
            "strings": [list(s) for s in t.strings]}


def _closure_arg(text: str | None):
    if text is None:
        return None
    if "-" not in text:
        return text
    pairs = []
    for item in text.split(","):
        try:
            a, b = item.strip().split("-")
            pairs.append(((a[:2].upper(), int(a[2:] or 0)), (b[:2].upper(), int(b[2:] or 0))))
        except ValueError:
            raise _UsageError(f"bad closure pair {item!r}; expected e.g. NW0-NE0") from None
    return pairs


def _close_payload(t: Tangle, closure, payload: dict, lines: list[str]) -> None:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", MultiComponentClosure)
        d = close(t, closure)
    info = _diagram_info("closure", d)
    payload["closure"] = info
    lines.append(f"closure: {info['pd']}")
    lines.append(f"closure components: {info['components']}")
    for w in caught:
        lines.append(f"warning: {w.message}")


def cmd_mutate(args) -> None:
    t = _load_tangle(args.tangle)
    m = mutate(t, args.involution)
    payload = {"involution": args.involution, **_tangle_info(m)}
    lines = [format_tangle(m)]
    if args.closure:
        _close_payload(m, _closure_arg(args.closure), payload, lines)
    _emit(args, payload, "\n".join(lines))


def cmd_cable(args) -> None:
    t = _load_tangle(args.tangle)
    c = cable(t, CableSpec(args.n, args.m, args.framing))
    if args.involution:
        c = mutate(c, args.involution)
    payload = {"cable": [args.n, args.m], "framing": args.framing, **_tangle_info(c)}
    lines = [format_tangle(c)]
    if args.closure:
        _close_payload(c, _closure_arg(args.closure), payload, lines)
    _emit(args, payload, "\n".join(lines))


def cmd_close(args) -> None:
    t = _load_tangle(args.tangle)
    payload: dict = {}
    lines: list[str] = []
    _close_payload(t, _closure_arg(args.closure), payload, lines)
    _emit(args, payload, "\n".join(lines))


# -- classification ------------------------------------------------------------
def cmd_classify(args) -> None:
    try:
        tol = Decimal(args.volume_tol)
    except InvalidOperation:
        raise _UsageError(f"bad --volume-tol {args.volume_tol!r}") from None
    records = ingest(args.files) if args.files else fixture_records()
    classes = classify(records, tol, mirrors=args.mirrors)
    with_kh = records if args.kh else None
    if args.json:
        print(report(classes, "json", with_kh))
    else:
        print(report(classes, "text", with_kh).rstrip("\n"))


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="knotmut", description="Knot invariants and mutation experiments.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    sp = add("parse", cmd_parse, "parse and normalize a knot (PD/DT) or a tangle")
    sp.add_argument("knot", help="fixture name, .pd/.dt file, PD text or 'DT ...' text")
    sp.add_argument("--tangle", action="store_true", help="parse the argument as a tangle")

    sp = add("invariants", cmd_invariants, "compute knot invariants")
    sp.add_argument("knot")
    for flag in ("jones", "homfly", "kauffman", "alexander", "signature", "kh"):
        sp.add_argument(f"--{flag}", action="store_true")
    sp.add_argument("--reduced-kh", action="store_true")
    sp.add_argument("--colored-jones", type=int, metavar="N")
    sp.add_argument("--max-color", type=int, default=5)

    sp = add("mutate", cmd_mutate, "apply a mutation involution to a tangle")
    sp.add_argument("tangle", help="tangle file or inline text (';' separates lines)")
    sp.add_argument("--involution", "-s", default="x", choices=["x", "y", "z"])
    sp.add_argument("--closure")

    sp = add("cable", cmd_cable, "cable a tangle's two strings")
    sp.add_argument("tangle")
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--m", type=int, default=2)
    sp.add_argument("--framing", choices=["compensated", "blackboard"], default="compensated")
    sp.add_argument("--involution", "-s", choices=["x", "y", "z"])
    sp.add_argument("--closure")

    sp = add("close", cmd_close, "close a tangle into a knot or link")
    sp.add_argument("tangle")
    sp.add_argument("--closure", default="numerator",
                    help="numerator, denominator, or explicit pairs such as NW0-NE0,SW0-SE0")

    sp = add("classify", cmd_classify, "partition knots into almost-mutant classes")
    sp.add_argument("files", nargs="*", help="PD/DT/volume files (default: bundled fixtures)")
    sp.add_argument("--volume-tol", default=str(DEFAULT_VOLUME_TOL))
    sp.add_argument("--mirrors", action="store_true", help="also classify mirror images")
    sp.add_argument("--kh", action="store_true", help="compare Khovanov homology within classes")

    sp = add("kh-diff", cmd_kh_diff, "compare the Khovanov homology of two knots")
    sp.add_argument("k1")
    sp.add_argument("k2")
    sp.add_argument("--reduced", action="store_true")
    return p


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        args.func(args)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except MissingInvariantError as exc:
        # budget failures inside classification keep their exit code
        if isinstance(exc.__cause__, BudgetExceeded):
            print(f"budget exceeded: {exc}", file=sys.stderr)
            return EXIT_BUDGET
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (DiagramError, IngestError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
