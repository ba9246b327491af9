"""Command-line entry point (``supermf``).

Exit codes: 0 success (or MF up to the bound, or all suites passing),
1 internal error, 2 malformed input, 3 not MF or a failing suite.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import charengine as ce
from . import jsonio
from .dsl import ParseError, parse_diagram, render_diagram
from .lr import lr_coeff
from .partitions import parse_partition
from .rootdata import ProductGroup, parse_group, parse_weight
from .superalg import graded_component, is_super_mf, subdiagrams
from .verify.cache import DiskCache, default_cache_dir
from .verify.suites import fmt_char, fmt_label, run_suite, suite_names

EXIT_OK, EXIT_ERROR, EXIT_INPUT, EXIT_NOT_MF = 0, 1, 2, 3


class InputError(Exception):
    pass


def _group(text: str):
    try:
        return parse_group(text)
    except ValueError as e:
        raise InputError(str(e)) from None


def _label(g, text: str):
    """One weight per factor, joined by ``*`` for product groups."""
    parts = [p.strip() for p in text.split("*")]
    factors = g.factors if isinstance(g, ProductGroup) else (g,)
    if len(parts) != len(factors):
        raise InputError(f"weight {text!r} has {len(parts)} parts, group has {len(factors)} factors")
    try:
        ws = tuple(parse_weight(f, p) for f, p in zip(factors, parts))
    except ValueError as e:
        raise InputError(str(e)) from None
    return ws if isinstance(g, ProductGroup) else ws[0]


def _partition(text: str):
    try:
        return parse_partition(text)
    except ValueError as e:
        raise InputError(str(e)) from None


def _nonneg(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return n


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def _read_diagram(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    try:
        return parse_diagram(text)
    except ParseError as e:
        raise InputError(f"{path}:{e.span.line}:{e.span.column}: {e.message} (bytes {e.span.start}-{e.span.end})") from None


# ---------------------------------------------------------------------------
# output


def _char_text(fc) -> str:
    lines = [f"group {fc.group}", f"dimension {fc.dimension()}"]
    lines += [f"{m} {fmt_label(lab)}" for lab, m in fc.items()]
    return "\n".join(lines) + "\n"


def _emit(args, data: dict, text: str) -> None:
    sys.stdout.write(jsonio.dumps(data) if args.format == "json" else text)


def _emit_char(args, fc) -> None:
    _emit(args, jsonio.char_to_json(fc), _char_text(fc))


# ---------------------------------------------------------------------------
# subcommands


def cmd_decompose(args) -> int:
    g = _group(args.group)
    w = _label(g, args.weight)
    rep = ce.FormalChar.irreducible(g, w)
    fc = ce.sym_power(g, rep, args.n) if args.kind == "sym" else ce.ext_power(g, rep, args.n)
    _emit_char(args, fc)
    return EXIT_OK


def cmd_tensor(args) -> int:
    g = _group(args.group)
    fc = ce.tensor(g, _label(g, args.w1), _label(g, args.w2))
    _emit_char(args, fc)
    return EXIT_OK


def cmd_branch(args) -> int:
    lam = _partition(args.partition)
    try:
        fc = ce.restrict_classical(args.m, args.target, lam)
    except ValueError as e:
        raise InputError(str(e)) from None
    _emit_char(args, fc)
    return EXIT_OK


def cmd_lr(args) -> int:
    c = lr_coeff(_partition(args.lam), _partition(args.mu), _partition(args.nu))
    sys.stdout.write(f"{c}\n")
    return EXIT_OK


def cmd_check_mf(args) -> int:
    d = _read_diagram(args.file)
    v = is_super_mf(d, args.max_degree, jobs=args.jobs)
    data = jsonio.verdict_to_json(v, d)
    lines = [f"diagram {d.name}", f"status {v.status}", f"bound {v.bound}", f"components_checked {v.components_checked}"]
    if v.witness is not None:
        w = v.witness
        lines.append(f"witness {w.multiindex.format(d)} {w.multiplicity}*{fmt_label(w.label)}")
        if args.witness:
            comp = graded_component(d, w.multiindex)
            data["component"] = jsonio.char_to_json(comp)
            lines.append(f"component {fmt_char(comp)}")
    _emit(args, data, "\n".join(lines) + "\n")
    return EXIT_OK if v.is_mf else EXIT_NOT_MF


def cmd_subdiagrams(args) -> int:
    d = _read_diagram(args.file)
    texts = [render_diagram(s) for s in subdiagrams(d)]
    _emit(args, {"diagram": d.name, "subdiagrams": texts}, "\n".join(texts))
    return EXIT_OK


def cmd_verify(args) -> int:
    names = suite_names() if args.all else [args.suite]
    for n in names:
        if n not in suite_names():
            raise InputError(f"unknown suite {n!r}; known: {', '.join(suite_names())}")
    reports = [run_suite(n, jobs=args.jobs) for n in names]
    data = {"reports": [r.to_json(args.timings) for r in reports],
            "status": "pass" if all(r.passed for r in reports) else "fail"}
    text = "".join(r.to_text(args.timings) for r in reports) + f"overall: {data['status']}\n"
    if args.report:
        Path(args.report).write_text(jsonio.dumps(data), encoding="utf-8")
    _emit(args, data, text)
    return EXIT_OK if data["status"] == "pass" else EXIT_NOT_MF


# ---------------------------------------------------------------------------


def _global_options(p: argparse.ArgumentParser, defaults: bool) -> None:
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    p.add_argument("--cache-dir", default=d(None),
                   help="persistent cache directory (default: $SUPERMF_CACHE_DIR or ~/.cache/supermf)")
    p.add_argument("--no-cache", action="store_true", default=d(False), help="do not read or write the persistent cache")
    p.add_argument("--jobs", type=_positive, default=d(1), help="worker threads for independent computations")
    p.add_argument("--format", choices=("json", "text"), default=d("json"))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="supermf", description="Multiplicity-free checks for super representations.")
    _global_options(p, defaults=True)
    # the same options are accepted after the subcommand; SUPPRESS keeps the
    # top-level value unless one is given there
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, defaults=False)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, **kw) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], **kw)

    s = add("decompose", help="decompose a symmetric or exterior power")
    s.add_argument("kind", choices=("sym", "ext"))
    s.add_argument("group", help='e.g. "SL(3)", "SO7", "SL2xSL2"')
    s.add_argument("weight", help='e.g. "[1,0]", "part(2,1)", "std", or "std*std" for products')
    s.add_argument("n", type=_nonneg)
    s.set_defaults(func=cmd_decompose)

    s = add("tensor", help="decompose a tensor product of two irreducibles")
    s.add_argument("group")
    s.add_argument("w1")
    s.add_argument("w2")
    s.set_defaults(func=cmd_tensor)

    s = add("branch", help="restrict an SL_m irreducible to SO_m or Sp_m")
    s.add_argument("m", type=_positive)
    s.add_argument("target", choices=("so", "sp"))
    s.add_argument("partition", help='e.g. "(2,1)"')
    s.set_defaults(func=cmd_branch)

    s = add("lr", help="Littlewood-Richardson coefficient c^lambda_{mu,nu}")
    s.add_argument("lam")
    s.add_argument("mu")
    s.add_argument("nu")
    s.set_defaults(func=cmd_lr)

    s = add("check-mf", help="test a diagram file for the super MF property")
    s.add_argument("file")
    s.add_argument("--max-degree", type=_positive, required=True)
    s.add_argument("--witness", action="store_true", help="also print the full witness component")
    s.set_defaults(func=cmd_check_mf)

    s = add("subdiagrams", help="list connected subdiagrams in canonical form")
    s.add_argument("file")
    s.set_defaults(func=cmd_subdiagrams)

    s = add("verify", help="run regression suites")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--suite", choices=suite_names())
    g.add_argument("--all", action="store_true")
    s.add_argument("--report", help="write the JSON report to this path")
    s.add_argument("--timings", action="store_true", help="include wall times (breaks byte-identical reports)")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    previous = ce.get_disk_cache()
    if not args.no_cache:
        ce.set_disk_cache(DiskCache(args.cache_dir or default_cache_dir()))
    try:
        return args.func(args)
    except InputError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INPUT
    except Exception as e:  # pragma: no cover - last resort
        sys.stderr.write(f"internal error: {type(e).__name__}: {e}\n")
        return EXIT_ERROR
    finally:
        ce.set_disk_cache(previous)


if __name__ == "__main__":
    sys.exit(main())
