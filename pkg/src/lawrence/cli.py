"""Command-line front end.

Exit codes: 0 success, 1 a check failed, 2 invalid input or a size guard
was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import report
from .arrangement import choose_offsets, is_simple, Arrangement
from .errors import ConfigError, LawrenceError, SizeGuard
from .matroid import Config, make_indep_set, validate_config
from .verify import Guards, run_suite, sweep_configs

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    """Malformed or schema-violating input document."""


@dataclass
class InputSpec:
    rank: int
    vectors: list
    offsets: Optional[list] = None
    seed: int = 0
    guards: Guards = field(default_factory=Guards)


def _parse_rational(text, where: str) -> Fraction:
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise InputError(f"{where}: expected an integer or a rational string like \"3/2\"")
    if isinstance(text, str) and any(ch in text.lower() for ch in ".e"):
        raise InputError(f"{where}: decimal notation is not accepted, use \"p/q\"")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"{where}: cannot parse {text!r} as a rational") from None


def _int(v, where: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise InputError(f"{where}: expected an integer")
    return v


def parse_document(doc) -> InputSpec:
    if not isinstance(doc, dict):
        raise InputError("top level: expected a JSON object")
    for key in ("rank", "vectors"):
        if key not in doc:
            raise InputError(f"{key}: required field missing")
    unknown = set(doc) - {"rank", "vectors", "offsets", "seed", "guards"}
    if unknown:
        raise InputError(f"{sorted(unknown)[0]}: unknown field")
    rank = _int(doc["rank"], "rank")
    if rank < 1:
        raise InputError("rank: must be >= 1")
    vecs = doc["vectors"]
    if not isinstance(vecs, list) or not vecs:
        raise InputError("vectors: expected a nonempty list")
    vectors = []
    for i, v in enumerate(vecs):
        if not isinstance(v, list) or len(v) != rank:
            raise InputError(f"vectors[{i}]: expected a list of {rank} integers")
        vectors.append([_int(x, f"vectors[{i}]") for x in v])
    offsets = None
    if doc.get("offsets") is not None:
        offs = doc["offsets"]
        if not isinstance(offs, list) or len(offs) != len(vectors):
            raise InputError(f"offsets: expected a list of {len(vectors)} values")
        offsets = [_parse_rational(x, f"offsets[{i}]") for i, x in enumerate(offs)]
    seed = _int(doc.get("seed", 0), "seed")
    if seed < 0:
        raise InputError("seed: must be unsigned")
    g = doc.get("guards", {}) or {}
    if not isinstance(g, dict):
        raise InputError("guards: expected an object")
    known = {"max_subsets", "max_signvectors", "max_dilate_fibers"}
    for k in g:
        if k not in known:
            raise InputError(f"guards.{k}: unknown guard")
    guards = Guards(**{k: _int(v, f"guards.{k}") for k, v in g.items()})
    return InputSpec(rank, vectors, offsets, seed, guards)


def parse_input(source: str) -> InputSpec:
    """Read an input document from a path, or from stdin when ``source`` is ``-``."""
    try:
        if source == "-":
            text = sys.stdin.read()
        else:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from None
    return parse_document(doc)


# ------------------------------------------------------------------ plumbing


@dataclass
class Context:
    inp: InputSpec
    config: Config
    guards: Guards
    seed: int

    _arr: Optional[Arrangement] = None
    source: str = ""

    def arrangement(self) -> Arrangement:
        if self._arr is None:
            offs = self.inp.offsets
            supplied_ok = offs is not None and is_simple(Arrangement(self.config, tuple(offs)))
            self._arr = choose_offsets(self.config, self.seed, offs)
            if offs is None:
                self.source = f"generated (seed {self.seed})"
            elif supplied_ok:
                self.source = "supplied"
            else:
                self.source = f"generated (seed {self.seed}; supplied offsets not simple)"
        return self._arr


def _guards_from(args, base: Guards) -> Guards:
    return Guards(
        max_subsets=args.max_subsets if args.max_subsets is not None else base.max_subsets,
        max_signvectors=args.max_signvectors if args.max_signvectors is not None else base.max_signvectors,
        max_dilate_fibers=args.max_dilate_fibers if args.max_dilate_fibers is not None else base.max_dilate_fibers,
    )


def _context(args) -> Context:
    inp = parse_input(args.input)
    try:
        config = validate_config(inp.rank, inp.vectors)
    except ConfigError as exc:
        raise InputError(f"vectors: {type(exc).__name__}: {exc}") from None
    seed = args.seed if getattr(args, "seed", None) is not None else inp.seed
    return Context(inp, config, _guards_from(args, inp.guards), seed)


def _emit(doc: dict, fmt: str, out) -> None:
    doc = {"schema_version": report.SCHEMA_VERSION, **doc}
    if fmt == "json":
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(report.render_text(doc, out))


def _checks_doc(checks) -> dict:
    return {
        "overall": checks.overall,
        "checks": [_jsonable(c.as_dict()) for c in checks.checks],
    }


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return report.rat(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    return obj


# ------------------------------------------------------------------ subcommands


def cmd_validate(args, out) -> int:
    ctx = _context(args)
    _emit({"input": report.input_section(ctx.config, ctx.seed), "valid": True}, args.format, out)
    return EXIT_OK


def cmd_matroid(args, out) -> int:
    ctx = _context(args)
    _emit({"matroid": report.matroid_section(ctx.config, ctx.guards.max_subsets)}, args.format, out)
    return EXIT_OK


def cmd_boxes(args, out) -> int:
    ctx = _context(args)
    _emit({"boxes": report.boxes_section(ctx.config, ctx.guards.max_subsets)}, args.format, out)
    return EXIT_OK


def _parse_flat(ctx: Context, text: str):
    try:
        idx = [int(x) - 1 for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"--flat: cannot parse {text!r}") from None
    if any(i < 0 or i >= ctx.config.n for i in idx):
        raise InputError("--flat: index out of range")
    try:
        return make_indep_set(ctx.config, idx)
    except ValueError:
        raise InputError(f"--flat: vectors {[i + 1 for i in idx]} are dependent") from None


def cmd_arrangement(args, out) -> int:
    ctx = _context(args)
    arr = ctx.arrangement()
    flat = _parse_flat(ctx, args.flat) if args.flat else None
    doc = report.arrangement_section(ctx.config, arr, ctx.source, ctx.guards.max_signvectors, flat)
    _emit({"arrangement": doc}, args.format, out)
    return EXIT_OK


def cmd_delta(args, out) -> int:
    ctx = _context(args)
    methods = ("formula", "bounded", "bruteforce") if args.method == "all" else (args.method,)
    arr = ctx.arrangement() if "bounded" in methods else None
    doc = report.delta_section(ctx.config, arr, methods, ctx.guards)
    _emit({"delta": doc}, args.format, out)
    return EXIT_FAIL if doc.get("agree") is False else EXIT_OK


def cmd_points(args, out) -> int:
    ctx = _context(args)
    if args.dilate < 0:
        raise InputError("--dilate: must be nonnegative")
    arr = ctx.arrangement() if args.interior else None
    doc = report.points_section(ctx.config, arr, args.dilate, args.interior, args.cap, ctx.guards)
    _emit({"points": doc}, args.format, out)
    if args.interior and doc["count"] != doc["direct_count"]:
        return EXIT_FAIL
    return EXIT_OK


def cmd_volume(args, out) -> int:
    ctx = _context(args)
    doc = report.volume_section(ctx.config, ctx.guards)
    _emit({"volume": doc}, args.format, out)
    return EXIT_OK if doc["agree"] else EXIT_FAIL


def _case_doc(res, seed, timing=None) -> dict:
    c = res.config
    doc = {
        "input": report.input_section(c, seed),
        "offsets": [report.rat(r) for r in res.arrangement.offsets],
        "delta": report.poly_doc(res.data["formula"]),
        "volume": res.data["volume"],
        **_checks_doc(res.checks),
    }
    if timing is not None:
        doc["seconds"] = round(timing, 3)
    return doc


def cmd_verify(args, out) -> int:
    cases = []
    if args.input:
        ctx = _context(args)
        t = time.perf_counter()
        res = run_suite(ctx.config, ctx.seed, ctx.inp.offsets, ctx.guards)
        cases.append(_case_doc(res, ctx.seed, time.perf_counter() - t if args.timing else None))
    else:
        seed = args.seed if args.seed is not None else 0
        guards = _guards_from(args, Guards())
        configs = sweep_configs(args.cases, seed, args.dmax, args.nmax, args.entry_bound)
        for i, c in enumerate(configs):
            t = time.perf_counter()
            res = run_suite(c, seed + i, None, guards)
            cases.append(_case_doc(res, seed + i, time.perf_counter() - t if args.timing else None))
    overall = "pass" if all(c["overall"] == "pass" for c in cases) else "fail"
    if args.format == "text":
        summary = []
        for c in cases:
            failed = [k["name"] for k in c["checks"] if k["status"] == "fail"]
            row = {
                "rank": c["input"]["rank"],
                "vectors": c["input"]["vectors"],
                "delta": c["delta"]["display"],
                "checks": len(c["checks"]),
                "failed": len(failed),
                "status": c["overall"],
            }
            summary.append(row)
        doc = {"cases": summary, "overall": overall}
        if args.input:
            doc["checks"] = [
                {"status": k["status"], "name": k["name"], "detail": k.get("detail") or ""}
                for k in cases[0]["checks"]
            ]
        _emit(doc, "text", out)
    else:
        _emit({"cases": cases, "overall": overall}, "json", out)
    return EXIT_OK if overall == "pass" else EXIT_FAIL


def cmd_report(args, out) -> int:
    ctx = _context(args)
    c, g = ctx.config, ctx.guards
    arr = ctx.arrangement()
    res = run_suite(c, ctx.seed, ctx.inp.offsets, g)
    doc = {
        "input": report.input_section(c, ctx.seed),
        "matroid": report.matroid_section(c, g.max_subsets),
        "boxes": report.boxes_section(c, g.max_subsets),
        "arrangement": report.arrangement_section(c, arr, ctx.source, g.max_signvectors),
        "delta": report.delta_section(c, arr, ("formula", "bounded", "bruteforce"), g),
        "dilate_counts": res.data["counts"],
        "volume": report.volume_section(c, g),
        **_checks_doc(res.checks),
    }
    _emit(doc, args.format, out)
    return EXIT_OK if res.overall == "pass" else EXIT_FAIL


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lawrence",
        description="Ehrhart delta-polynomials of Lawrence polytopes, exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, input_required=True):
        if input_required:
            p.add_argument("input", help="input JSON file, or - for stdin")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--seed", type=int, default=None, help="offset seed (overrides the input)")
        p.add_argument("--max-subsets", type=int, default=None)
        p.add_argument("--max-signvectors", type=int, default=None)
        p.add_argument("--max-dilate-fibers", type=int, default=None)
        return p

    common(sub.add_parser("validate", help="parse and validate the configuration")).set_defaults(func=cmd_validate)
    common(sub.add_parser("matroid", help="independent sets, f- and h-vectors")).set_defaults(func=cmd_matroid)
    common(sub.add_parser("boxes", help="lattice points of BOX(F)")).set_defaults(func=cmd_boxes)

    p = common(sub.add_parser("arrangement", help="cell census of the offset arrangement"))
    p.add_argument("--flat", default=None, help="comma-separated 1-based indices of F")
    p.set_defaults(func=cmd_arrangement)

    p = common(sub.add_parser("delta", help="the delta-polynomial"))
    p.add_argument("--method", choices=("formula", "bounded", "bruteforce", "all"), default="formula")
    p.set_defaults(func=cmd_delta)

    p = common(sub.add_parser("points", help="lattice points of a dilate"))
    p.add_argument("--dilate", type=int, required=True)
    p.add_argument("--interior", action="store_true")
    p.add_argument("--cap", type=int, default=50, help="list points only up to this many")
    p.set_defaults(func=cmd_points)

    common(sub.add_parser("volume", help="normalized volume and its cross-sum")).set_defaults(func=cmd_volume)

    p = common(sub.add_parser("verify", help="run the invariant suite"), input_required=False)
    p.add_argument("input", nargs="?", default=None)
    p.add_argument("--cases", type=int, default=10)
    p.add_argument("--dmax", type=int, default=3)
    p.add_argument("--nmax", type=int, default=5)
    p.add_argument("--entry-bound", type=int, default=3)
    p.add_argument("--timing", action="store_true", help="include per-case wall time")
    p.set_defaults(func=cmd_verify)

    common(sub.add_parser("report", help="everything in one document")).set_defaults(func=cmd_report)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"lawrence: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SizeGuard as exc:
        print(f"lawrence: guard exceeded: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConfigError as exc:
        print(f"lawrence: invalid configuration: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except LawrenceError as exc:
        print(f"lawrence: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
