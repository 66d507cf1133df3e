"""Command-line entry point: ``platforge braid|link|scan ...``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .braids import (
    braid_equal,
    family_b,
    is_skew_palindromic,
    parse_braid,
    skew,
    tilde,
    underlying_permutation,
)
from .diagrams import (
    LinkDiagram,
    circular_plat_diagram,
    closure_diagram,
    from_pd_text,
    to_pd_text,
)
from .errors import DomainError, PlatforgeError
from .invariants import invariant_report, normalized_bracket
from .reidemeister import default_budget, simplify
from .scan import scaling_scan

REPORT_SCHEMA = "platforge.report/1"


@dataclass
class RunConfig:
    """Validated command configuration, echoed into JSON outputs."""

    command: str
    action: str
    n: Optional[int] = None
    word: Optional[str] = None
    budget: Optional[int] = None
    g_range: Optional[tuple[int, int]] = None
    out: Optional[str] = None
    format: str = "text"
    seed: int = 0
    extra: dict = field(default_factory=dict)

    def echo(self) -> dict:
        d = asdict(self)
        if d["g_range"] is not None:
            d["g_range"] = list(d["g_range"])
        return {k: v for k, v in d.items() if v not in (None, {})}


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _strands(args, plat: bool) -> int:
    if args.n is not None and args.g is not None:
        raise DomainError("give either --n or --g, not both")
    if args.n is not None:
        return args.n
    if args.g is not None:
        if args.g < 1:
            raise DomainError(f"--g must be >= 1, got {args.g}")
        return 2 * args.g + 2 if plat else args.g + 1
    raise DomainError("a strand count is required (--n or --g)")


# --- braid -------------------------------------------------------------------


def cmd_braid(args) -> int:
    action = args.action
    if action == "family":
        if args.g is None:
            raise DomainError("braid family needs --g")
        b = family_b(args.g)
        print(str(b) if args.format == "text" else json.dumps(b.to_json()))
        return 0
    if args.n is None:
        raise DomainError(f"braid {action} needs --n")
    words = [parse_braid(w, args.n) for w in args.words]
    expected = 2 if action == "equal" else 1
    if len(words) != expected:
        raise DomainError(f"braid {action} takes {expected} word(s), got {len(words)}")
    b = words[0]
    if action == "skew":
        result = skew(b)
    elif action == "tilde":
        result = tilde(b)
    elif action == "palindromic":
        result = is_skew_palindromic(b)
    elif action == "equal":
        result = braid_equal(words[0], words[1])
    else:
        result = underlying_permutation(b)
    if isinstance(result, bool):
        text = "true" if result else "false"
        print(text if args.format == "text" else json.dumps({"result": result}))
    elif args.format == "text":
        print(str(result))
    elif action == "perm":
        print(json.dumps({"n": result.n, "images": list(result.images), "cycles": str(result)}))
    else:
        print(json.dumps(result.to_json()))
    return 0


# --- link --------------------------------------------------------------------


def _report(d: LinkDiagram, args, config: RunConfig) -> dict:
    report = invariant_report(d, certify=args.certify_unknot, budget=args.budget)
    if args.bracket:
        report["normalized_bracket"] = normalized_bracket(d).format("A")
    if report["unknot_certificate"] is None:
        del report["unknot_certificate"]
    report["schema"] = REPORT_SCHEMA
    report["config"] = config.echo()
    return report


def _finish_link(d: LinkDiagram, action: str, args, config: RunConfig) -> int:
    if action == "export-pd":
        _emit(to_pd_text(d), args.out)
    elif action == "simplify":
        budget = default_budget() if args.budget is None else args.budget
        _emit(to_pd_text(simplify(d, budget)), args.out)
    else:
        _emit(json.dumps(_report(d, args, config), indent=2, sort_keys=True) + "\n", args.out)
    return 0


def cmd_link(args) -> int:
    if args.budget is not None and args.budget < 0:
        raise DomainError("--budget must be nonnegative")
    action = args.action
    if action in ("plat", "closure"):
        plat = action == "plat"
        n = _strands(args, plat)
        if len(args.items) > 2:
            raise DomainError("expected a braid word and an optional action")
        word = args.items[0] if args.items else ""
        then = args.items[1] if len(args.items) > 1 else "invariants"
        if then not in ("invariants", "simplify", "export-pd"):
            raise DomainError(f"unknown follow-up action {then!r}")
        b = parse_braid(word, n)
        d = circular_plat_diagram(b) if plat else closure_diagram(b)
        config = RunConfig("link", f"{action} {then}", n=n, word=word, budget=args.budget,
                           out=args.out, format="pd" if then != "invariants" else "json")
        return _finish_link(d, then, args, config)
    # remaining actions read PD text from a file or stdin
    if len(args.items) > 1:
        raise DomainError(f"link {action} takes at most one PD file")
    source = args.items[0] if args.items else "-"
    text = sys.stdin.read() if source == "-" else Path(source).read_text(encoding="utf-8")
    d = from_pd_text(text)
    then = {"import-pd": "invariants", "invariants": "invariants"}.get(action, action)
    config = RunConfig("link", action, budget=args.budget, out=args.out,
                       format="pd" if then != "invariants" else "json", extra={"source": source})
    return _finish_link(d, then, args, config)


# --- scan --------------------------------------------------------------------


def cmd_scan(args) -> int:
    if args.jobs < 1:
        raise DomainError("--jobs must be >= 1")
    report = scaling_scan(args.gmin, args.gmax, jobs=args.jobs, timing=args.timing)
    config = RunConfig("scan", "scan", g_range=(args.gmin, args.gmax), out=args.out,
                       format=args.format, extra={"jobs": args.jobs, "timing": args.timing})
    report.config = config.echo()
    _emit(report.to_csv() if args.format == "csv" else report.to_json(), args.out)
    if args.assert_window is not None:
        c1, c2 = args.assert_window
        lo, hi = report.window()
        if lo < c1 or hi > c2:
            print(f"window check failed: observed [{lo:.6f}, {hi:.6f}] not inside [{c1}, {c2}]",
                  file=sys.stderr)
            return 1
    return 0


# --- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="platforge", description=__doc__)
    p.add_argument("--version", action="version", version=f"platforge {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    pb = sub.add_parser("braid", help="braid word algebra")
    bsub = pb.add_subparsers(dest="action", required=True)
    for name in ("skew", "tilde", "palindromic", "family", "equal", "perm"):
        q = bsub.add_parser(name)
        q.add_argument("words", nargs="*", help="braid words such as 's3 s4 S2'")
        q.add_argument("--n", type=int, help="strand count")
        q.add_argument("--g", type=int, help="genus (family only)")
        q.add_argument("--format", choices=["text", "json"], default="text")
        q.set_defaults(func=cmd_braid)

    pl = sub.add_parser("link", help="closures, PD diagrams and invariants")
    lsub = pl.add_subparsers(dest="action", required=True)
    for name in ("plat", "closure", "invariants", "simplify", "export-pd", "import-pd"):
        q = lsub.add_parser(name)
        if name in ("plat", "closure"):
            q.add_argument("items", nargs="*", help="WORD [invariants|simplify|export-pd]")
            q.add_argument("--n", type=int, help="strand count")
            q.add_argument("--g", type=int, help="genus: 2g+2 strands for plat, g+1 for closure")
        else:
            q.add_argument("items", nargs="*", help="PD file, or - for stdin")
        q.add_argument("--certify-unknot", action="store_true")
        q.add_argument("--bracket", action="store_true", help="add the normalized Kauffman bracket")
        q.add_argument("--budget", type=int, help="simplifier state budget")
        q.add_argument("--out", help="write output here instead of stdout")
        q.set_defaults(func=cmd_link)

    ps = sub.add_parser("scan", help="homological dilatation scan over tilde(b_g)")
    ps.add_argument("--gmin", type=int, required=True)
    ps.add_argument("--gmax", type=int, required=True)
    ps.add_argument("--out")
    ps.add_argument("--format", choices=["csv", "json"], default="csv")
    ps.add_argument("--assert-window", nargs=2, type=float, metavar=("C1", "C2"))
    ps.add_argument("--jobs", type=int, default=1)
    ps.add_argument("--timing", action="store_true", help="fill the millis column")
    ps.set_defaults(func=cmd_scan)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PlatforgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
