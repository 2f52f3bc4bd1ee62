"""Command-line entry point.

Every subcommand reads its inputs from files (formats owned by the library
modules), computes one verdict and prints a single JSON object (or key:value
text with --format text).  Generators print the relevant file format instead.
Exit status is 0 for any computed verdict, 2 for input or validation errors.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import complexes, diagnostics, graphs, homology, posets
from .exceptions import InputFormatError, SopcmError
from .field import DEFAULT_CHARACTERISTIC, PrimeField
from .groebner import FieldPolynomial, parse_polynomial
from .hilbert import hilbert_series
from .ideal import (
    MonomialIdeal,
    height,
    koenig_type,
    mgrade,
    minimalize,
)
from .monomial import format_monomial, parse_monomial_lines

ENV_CHAR = "SOPCM_CHAR"


@dataclass(frozen=True)
class RunConfig:
    field_char: int = DEFAULT_CHARACTERISTIC
    subset_scan_bound: int = homology.DEFAULT_SUBSET_SCAN_BOUND
    degree_truncation: int = 8
    output_format: str = "json"
    timings: bool = False

    def __post_init__(self):
        if self.subset_scan_bound <= 0 or self.degree_truncation <= 0:
            raise InputFormatError("bounds must be positive")
        if self.output_format not in ("json", "text"):
            raise InputFormatError(f"unknown format {self.output_format!r}")

    @property
    def field(self) -> PrimeField:
        return PrimeField(self.field_char)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputFormatError(message)


def _read_lines(path: str) -> list:
    try:
        return Path(path).read_text().splitlines()
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from exc


def _load_ideal(path: str) -> MonomialIdeal:
    gens = parse_monomial_lines(_read_lines(path))
    return minimalize(gens, gens[0].n)


def _load_polynomials(path: str, field: PrimeField) -> list:
    lines = [ln.split("#", 1)[0].strip() for ln in _read_lines(path)]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise InputFormatError(f"no polynomials in {path}")
    # two passes: the ambient is the largest variable index in the file
    import re

    n = 0
    for ln in lines:
        for tok in re.findall(r"x(\d+)", ln):
            n = max(n, int(tok))
    if n == 0:
        raise InputFormatError(f"no variables found in {path}")
    return [parse_polynomial(ln, n, field) for ln in lines]


def _sanitize(value):
    if isinstance(value, dict):
        return {k: _sanitize(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_sanitize(v) for v in value]
    if value is math.inf:
        return "infinite"
    return value


def _flatten(value, prefix=""):
    lines = []
    if isinstance(value, dict):
        for key in sorted(value):
            lines.extend(_flatten(value[key], f"{prefix}{key}." if prefix else f"{key}."))
    else:
        label = prefix[:-1] if prefix.endswith(".") else prefix
        lines.append(f"{label}: {json.dumps(value)}")
    return lines


def _emit(payload: dict, config: RunConfig, started: float) -> int:
    payload = _sanitize(payload)
    if config.timings:
        payload["timings"] = {"seconds": round(time.monotonic() - started, 3)}
    if config.output_format == "text":
        print("\n".join(_flatten(payload)))
    else:
        print(json.dumps(payload, sort_keys=True, indent=2))
    return 0


# ---------------------------------------------------------------- handlers


def _cmd_complex_cm(args, config: RunConfig):
    complex_ = complexes.parse_facet_lines(_read_lines(args.file), args.n)
    return complexes.cm_test_universal(complex_, config.field).to_json()


def _cmd_complex_depth(args, config: RunConfig):
    complex_ = complexes.parse_facet_lines(_read_lines(args.file), args.n)
    if args.profile:
        profile = complexes.skeleton_cm_profile(complex_, config.field)
        depth = max((i for i, report in profile if report.verdict), default=None)
        if depth is None:
            raise SopcmError("no Cohen-Macaulay skeleton found")
        return {
            "depth": depth,
            "p": config.field_char,
            "skeletons": [{"i": i, **report.to_json()} for i, report in profile],
        }
    return {
        "depth": complexes.depth_via_skeletons(complex_, config.field),
        "p": config.field_char,
    }


def _cmd_complex_betti(args, config: RunConfig):
    complex_ = complexes.parse_facet_lines(_read_lines(args.file), args.n)
    table = homology.hochster_betti_table(complex_, config.field, config.subset_scan_bound)
    return table.to_json()


def _cmd_complex_skeleton(args, config: RunConfig):
    complex_ = complexes.parse_facet_lines(_read_lines(args.file), args.n)
    return ("raw", complexes.format_facet_lines(complexes.skeleton(complex_, args.i)))


def _cmd_graph_invariants(args, config: RunConfig):
    g = graphs.parse_edge_lines(_read_lines(args.file), args.n)
    return graphs.graph_invariants(g).to_json()


def _cmd_graph_koenig(args, config: RunConfig):
    g = graphs.parse_edge_lines(_read_lines(args.file), args.n)
    sop = graphs.koenig_sop(g)
    if sop is None:
        return {"koenig": False}
    comparison = graphs.mu_compare(g, sop)
    reduced = graphs.reduced_edge_ring(g, sop)
    return {
        "koenig": True,
        "sop": [list(pair) for pair in sop.pairs],
        "matching": [list(pair) for pair in sop.matching_pairs()],
        "identified_generators": [format_monomial(m) for m in reduced.gens],
        **comparison.to_json(),
    }


def _cmd_graph_im_bound(args, config: RunConfig):
    g = graphs.parse_edge_lines(_read_lines(args.file), args.n)
    return graphs.im_bound_test(g, config.field).to_json()


def _cmd_graph_reg_check(args, config: RunConfig):
    g = graphs.parse_edge_lines(_read_lines(args.file), args.n)
    sop = graphs.koenig_sop(g)
    if sop is None:
        raise SopcmError("graph is not Koenig: no difference sop exists")
    result = graphs.reg_reduction_check(g, sop, config.field)
    return {"sop": [list(pair) for pair in sop.pairs], **result.to_json()}


def _cmd_poset_check(args, config: RunConfig):
    poset = posets.parse_poset_lines(_read_lines(args.file))
    return {
        "cm": posets.poset_cm_verdict(poset, config.field).to_json(),
        "linear_resolution": posets.linear_resolution_test(poset, config.field).to_json(),
    }


def _cmd_poset_shelling(args, config: RunConfig):
    poset = posets.parse_poset_lines(_read_lines(args.file))
    order = posets.shelling_order(poset)
    if order is None:
        return {"applicable": False}
    return {"applicable": True, "verified": True, "facets": [list(f) for f in order]}


def _cmd_ideal_hilbert(args, config: RunConfig):
    ideal = _load_ideal(args.file)
    series = hilbert_series(ideal)
    return {
        "dim": series.pole_order,
        "e": series.multiplicity,
        "numerator": list(series.numerator),
    }


def _cmd_ideal_koenig_type(args, config: RunConfig):
    ideal = _load_ideal(args.file)
    h = height(ideal)
    m = mgrade(ideal)
    return {"height": h, "mgrade": m, "koenig_type": koenig_type(ideal)}


def _cmd_diagnostics_defect(args, config: RunConfig):
    field = config.field
    gens = _load_polynomials(args.ideal, field)
    sop = _load_polynomials(args.sop, field)
    n = max(f.n for f in gens + sop)
    gens = [_reambient(f, n, field) for f in gens]
    sop = [_reambient(f, n, field) for f in sop]
    profile = diagnostics.defect_profile(gens, sop, field)
    payload = profile.to_json()
    if args.probe is not None:
        payload["probe"] = diagnostics.surprising_probe(profile, args.probe).to_json()
    return payload


def _reambient(f: FieldPolynomial, n: int, field: PrimeField) -> FieldPolynomial:
    from .monomial import extend_to

    if f.n == n:
        return f
    return FieldPolynomial(n, field, {extend_to(m, n): c for m, c in f.terms.items()})


def _cmd_gen_chessboard(args, config: RunConfig):
    complex_ = complexes.chessboard_complex(args.n)
    return ("raw", complexes.format_facet_lines(complex_))


def _cmd_gen_cycle(args, config: RunConfig):
    return ("raw", graphs.format_edge_lines(graphs.cycle_graph(args.n)))


def _cmd_gen_whisker(args, config: RunConfig):
    g = graphs.parse_edge_lines(_read_lines(args.file), args.n)
    return ("raw", graphs.format_edge_lines(graphs.whisker(g)))


def _cmd_report_betti(args, config: RunConfig):
    from . import report

    complex_ = complexes.parse_facet_lines(_read_lines(args.file), args.n)
    table = homology.hochster_betti_table(complex_, config.field, config.subset_scan_bound)
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    csv_path = outdir / f"{args.stem}.csv"
    png_path = outdir / f"{args.stem}.png"
    report.write_betti_csv(table, csv_path)
    report.render_betti_png(table, png_path)
    return {"csv": str(csv_path), "png": str(png_path), **table.to_json()}


def _cmd_report_defect(args, config: RunConfig):
    from . import report

    field = config.field
    gens = _load_polynomials(args.ideal, field)
    sop = _load_polynomials(args.sop, field)
    n = max(f.n for f in gens + sop)
    gens = [_reambient(f, n, field) for f in gens]
    sop = [_reambient(f, n, field) for f in sop]
    profile = diagnostics.defect_profile(gens, sop, field)
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    csv_path = outdir / f"{args.stem}.csv"
    png_path = outdir / f"{args.stem}.png"
    report.write_defect_csv(profile, csv_path)
    report.render_defect_png(profile, png_path)
    return {"csv": str(csv_path), "png": str(png_path), **profile.to_json()}


# ---------------------------------------------------------------- wiring


def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument("--char", type=int, default=None, help="field characteristic (prime)")
    parser.add_argument("--bound", type=int, default=None, help="subset scan bound")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--timings", action="store_true", help="include wall time in the output")


def build_parser() -> _Parser:
    parser = _Parser(prog="sopcm", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def leaf(group, name, handler, **file_args):
        p = group.add_parser(name)
        for arg_name, kwargs in file_args.items():
            p.add_argument(arg_name, **kwargs)
        _add_common(p)
        p.set_defaults(handler=handler)
        return p

    g_complex = parser_group(sub, "complex")
    p = leaf(g_complex, "cm", _cmd_complex_cm, file={})
    p.add_argument("--n", type=int, default=None)
    p = leaf(g_complex, "depth", _cmd_complex_depth, file={})
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--profile", action="store_true", help="report every skeleton verdict")
    p = leaf(g_complex, "betti", _cmd_complex_betti, file={})
    p.add_argument("--n", type=int, default=None)
    p = leaf(g_complex, "skeleton", _cmd_complex_skeleton, file={})
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--i", type=int, required=True)

    g_graph = parser_group(sub, "graph")
    for name, handler in (
        ("invariants", _cmd_graph_invariants),
        ("koenig", _cmd_graph_koenig),
        ("im-bound", _cmd_graph_im_bound),
        ("reg-check", _cmd_graph_reg_check),
    ):
        p = leaf(g_graph, name, handler, file={})
        p.add_argument("--n", type=int, default=None)

    g_poset = parser_group(sub, "poset")
    leaf(g_poset, "check", _cmd_poset_check, file={})
    leaf(g_poset, "shelling", _cmd_poset_shelling, file={})

    g_ideal = parser_group(sub, "ideal")
    leaf(g_ideal, "hilbert", _cmd_ideal_hilbert, file={})
    leaf(g_ideal, "koenig-type", _cmd_ideal_koenig_type, file={})

    g_diag = parser_group(sub, "diagnostics")
    p = leaf(g_diag, "defect", _cmd_diagnostics_defect, ideal={}, sop={})
    p.add_argument("--probe", type=int, default=None, help="early-CM probe index r")

    g_gen = parser_group(sub, "gen")
    p = g_gen.add_parser("chessboard")
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_gen_chessboard)
    p = g_gen.add_parser("cycle")
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_gen_cycle)
    p = leaf(g_gen, "whisker", _cmd_gen_whisker, file={})
    p.add_argument("--n", type=int, default=None)

    g_report = parser_group(sub, "report")
    p = leaf(g_report, "betti", _cmd_report_betti, file={})
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--outdir", default=".")
    p.add_argument("--stem", default="betti")
    p = leaf(g_report, "defect", _cmd_report_defect, ideal={}, sop={})
    p.add_argument("--outdir", default=".")
    p.add_argument("--stem", default="defect")
    return parser


def parser_group(sub, name):
    group = sub.add_parser(name)
    inner = group.add_subparsers(dest="subcommand", required=True)
    return inner


def _config_from(args) -> RunConfig:
    char = args.char
    if char is None:
        env = os.environ.get(ENV_CHAR)
        char = int(env) if env else DEFAULT_CHARACTERISTIC
    bound = args.bound if args.bound is not None else homology.DEFAULT_SUBSET_SCAN_BOUND
    return RunConfig(
        field_char=char,
        subset_scan_bound=bound,
        output_format=args.format,
        timings=args.timings,
    )


def run(argv) -> int:
    started = time.monotonic()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = _config_from(args)
        result = args.handler(args, config)
    except SopcmError as exc:
        error = {"error": type(exc).__name__, "message": str(exc)}
        print(json.dumps(error, sort_keys=True), file=sys.stderr)
        return 2
    except ValueError as exc:
        print(json.dumps({"error": "ValueError", "message": str(exc)}), file=sys.stderr)
        return 2
    if isinstance(result, tuple) and result and result[0] == "raw":
        sys.stdout.write(result[1])
        return 0
    return _emit(result, config, started)


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
