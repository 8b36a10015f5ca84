"""Command-line entry point: algebra subcommands and verification suites."""

import argparse
import asyncio
import json
import logging
from typing import Any, Dict, List, Optional, Sequence

import yaml
from pydantic import ValidationError

# import to trigger config code
import srreg.config
from srreg.algebra.complexes import SimplicialComplex, degree_complex, sr_complex, sr_ideal
from srreg.algebra.graphs import Graph, edge_ideal, independence_complex
from srreg.algebra.homology import FieldSpec
from srreg.algebra.monomials import MonomialIdeal, colon, parse_monomial, power, radical, radical_colon
from srreg.algebra.regularity import reg_polarization_oracle, reg_takayama
from srreg.algebra.symbolic import Selection, intermediate_family, symbolic_power
from srreg.config import Settings, load_settings_sync, set_log_level
from srreg.errors import InputFormatError, SrregError
from srreg.harness.corpus import theorem_corpus
from srreg.harness.reports import (
    SuiteSummary,
    VerificationReport,
    exit_code,
    log_failures,
    render_json_lines,
    render_text,
)
from srreg.harness.suites import (
    lemma_suite,
    require_s,
    rigidity_search,
    scan_small_graphs,
    selftest,
    verify_theorem1,
)
from srreg.utils import power_cache
from srreg.utils.codecs import (
    format_complex_text,
    format_ideal_text,
    load_input,
    to_json_dict,
)

logger = logging.getLogger(__name__)

SETTING_FLAGS = ("field", "jobs", "seed", "max_intermediates", "allow_s4")


def _global_flags() -> argparse.ArgumentParser:
    """Flags accepted both before and after the subcommand."""
    flags = argparse.ArgumentParser(add_help=False)
    flags.add_argument("--field", default=argparse.SUPPRESS, help="gf2, gf<p> or q (default gf2)")
    flags.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="worker processes")
    flags.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for sampling and random instances")
    flags.add_argument("--max-intermediates", type=int, default=argparse.SUPPRESS,
                       help="largest number of extra generators walked exhaustively")
    flags.add_argument("--allow-s4", action="store_true", default=argparse.SUPPRESS, help="permit s >= 4")
    flags.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    flags.add_argument("--config", default=argparse.SUPPRESS, help="YAML settings file")
    flags.add_argument("--verbose", action="store_true", default=argparse.SUPPRESS, help="debug logging")
    return flags


def _load(path: str):
    return asyncio.run(load_input(path))


def _as_ideal(obj) -> MonomialIdeal:
    if isinstance(obj, MonomialIdeal):
        return obj
    if isinstance(obj, SimplicialComplex):
        return sr_ideal(obj)
    return edge_ideal(obj)


def _as_complex(obj) -> SimplicialComplex:
    if isinstance(obj, SimplicialComplex):
        return obj
    if isinstance(obj, Graph):
        return independence_complex(obj)
    return sr_complex(obj)


def _field(settings: Settings) -> FieldSpec:
    return FieldSpec.parse(settings.field)


def _selection(args, settings: Settings) -> Selection:
    if getattr(args, "mode", "all") == "sample":
        count = args.count if args.count is not None else settings.sample_count
        return Selection.sample(count, settings.seed)
    return Selection.all()


def _fallback(settings: Settings) -> Selection:
    return Selection.sample(settings.sample_count, settings.seed)


def _wants_json(args) -> bool:
    return getattr(args, "json", False)


def _emit(args, payload: Dict[str, Any], text: str) -> None:
    print(json.dumps(payload, sort_keys=True) if _wants_json(args) else text)


def _emit_ideal(args, J: MonomialIdeal) -> int:
    _emit(args, to_json_dict(J), format_ideal_text(J))
    return 0


def _emit_reports(args, reports: List[VerificationReport], summary: Optional[SuiteSummary] = None) -> int:
    log_failures(reports)
    if _wants_json(args):
        print(render_json_lines(reports + ([summary] if summary else [])))
    else:
        print(render_text(reports))
        if summary:
            print(summary.to_text())
    return exit_code(reports)


def cmd_reg(args, settings: Settings) -> int:
    I = _as_ideal(_load(args.input))
    field = _field(settings)
    cert = reg_takayama(I, field, jobs=settings.jobs, box_limit=settings.box_limit)
    payload = cert.to_payload()
    lines = [f"reg I = {cert.reg_ideal}", f"reg S/I = {cert.reg_module}", f"field = {field.label}"]
    if args.oracle:
        payload["oracle_reg_module"] = reg_polarization_oracle(I, field, settings.polar_vertex_limit)
        lines.append(f"polarization oracle reg S/I = {payload['oracle_reg_module']}")
    for w in cert.witnesses:
        lines.append(f"witness a={list(w.a)} i={w.i} F={[v + 1 for v in w.face]}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_power(args, settings: Settings) -> int:
    return _emit_ideal(args, power(_as_ideal(_load(args.input)), args.s))


def cmd_symbolic(args, settings: Settings) -> int:
    require_s(args.s, settings.allow_s4)
    I = _as_ideal(_load(args.input))
    return _emit_ideal(args, symbolic_power(I, args.s, box_limit=settings.symbolic_box_limit))


def cmd_colon(args, settings: Settings) -> int:
    I = _as_ideal(_load(args.input))
    a = parse_monomial(args.by, I.n)
    return _emit_ideal(args, radical_colon(I, a) if args.radical else colon(I, a))


def cmd_radical(args, settings: Settings) -> int:
    return _emit_ideal(args, radical(_as_ideal(_load(args.input))))


def cmd_degree_complex(args, settings: Settings) -> int:
    I = _as_ideal(_load(args.input))
    delta = degree_complex(I, parse_monomial(args.a, I.n))
    _emit(args, to_json_dict(delta), format_complex_text(delta) if not delta.is_void else "void")
    return 0


def cmd_intermediates(args, settings: Settings) -> int:
    require_s(args.s, settings.allow_s4)
    I = _as_ideal(_load(args.input))
    family = intermediate_family(
        I, args.s, _selection(args, settings), settings.max_intermediates, settings.symbolic_box_limit
    )
    for subset, J in family.members():
        labels = [k + 1 for k in subset]
        _emit(args, {"subset": labels, "ideal": to_json_dict(J)}, f"{labels}: {format_ideal_text(J)}")
    return 0


def cmd_verify_theorem1(args, settings: Settings) -> int:
    field = _field(settings)
    if args.input:
        entries = [("input", _as_complex(_load(args.input)))]
    else:
        entries = [(e.name, e.complex) for e in theorem_corpus(settings.seed, include_isolated=not args.no_isolated)]
    reports: List[VerificationReport] = []
    for name, delta in entries:
        for s in args.s:
            reports.extend(verify_theorem1(
                delta, s, _selection(args, settings), field, settings.jobs, settings.max_intermediates,
                settings.allow_s4, name, fallback=_fallback(settings),
            ))
    return _emit_reports(args, reports, SuiteSummary.from_reports("verify-theorem1", reports))


def cmd_scan_small_graphs(args, settings: Settings) -> int:
    summary, reports = scan_small_graphs(
        args.n, args.s, _selection(args, settings), _field(settings), settings.jobs, args.dedupe,
        not args.allow_isolated, settings.max_intermediates, settings.allow_s4, _fallback(settings),
        FieldSpec.parse(args.compare_field) if args.compare_field else None,
    )
    return _emit_reports(args, reports, summary)


def cmd_lemma_suite(args, settings: Settings) -> int:
    reports = lemma_suite(None, args.s, args.trials, settings.seed, _field(settings), settings.jobs, settings.allow_s4)
    return _emit_reports(args, reports, SuiteSummary.from_reports("lemma-suite", reports))


def cmd_selftest(args, settings: Settings) -> int:
    reports = selftest(_field(settings), settings.seed, args.inject_fault)
    return _emit_reports(args, reports, SuiteSummary.from_reports("selftest", reports))


def cmd_rigidity_search(args, settings: Settings) -> int:
    summary, reports = rigidity_search(
        args.n_max, args.s, args.trials, settings.seed, None, _field(settings), settings.jobs,
        settings.max_intermediates, settings.allow_s4,
    )
    return _emit_reports(args, reports, summary)


def _exponent_flag(p: argparse.ArgumentParser, **kwargs) -> None:
    p.add_argument("-s", "--s", dest="s", type=int, help="power exponent", **kwargs)


def _selection_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mode", choices=["all", "sample"], default="all", help="walk every subset or a seeded sample")
    p.add_argument("--sample", dest="mode", action="store_const", const="sample", help="same as --mode sample")
    p.add_argument("--count", type=int, default=None, help="sample size, endpoints included (default sample_count)")


def build_parser() -> argparse.ArgumentParser:
    flags = _global_flags()
    parser = argparse.ArgumentParser(
        prog="srreg", parents=[flags], allow_abbrev=False,
        description="Regularity of powers, symbolic powers and intermediate ideals of Stanley-Reisner ideals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler, help_text: str, needs_input: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[flags], help=help_text, allow_abbrev=False)
        if needs_input:
            p.add_argument("input", help="JSON ideal/complex/graph or a text facet list")
        p.set_defaults(handler=handler)
        return p

    command("reg", cmd_reg, "regularity with witnesses").add_argument(
        "--oracle", action="store_true", help="also run the polarization oracle")
    _exponent_flag(command("power", cmd_power, "ordinary power I^s"), required=True)
    _exponent_flag(command("symbolic", cmd_symbolic, "symbolic power I^(s)"), required=True)
    p = command("colon", cmd_colon, "colon ideal I : x^a")
    p.add_argument("--by", required=True, help='monomial such as "x1^2*x3"')
    p.add_argument("--radical", action="store_true", help="return sqrt(I : x^a)")
    command("radical", cmd_radical, "radical of I")
    command("degree-complex", cmd_degree_complex, "degree complex Δ_a(I)").add_argument(
        "--a", required=True, help='exponent as a monomial, e.g. "x1*x2^2"')
    p = command("intermediates", cmd_intermediates, "ideals between I^s and I^(s)")
    _exponent_flag(p, required=True)
    _selection_flags(p)

    p = command("verify-theorem1", cmd_verify_theorem1, "girth formula on a complex or the corpus", False)
    p.add_argument("input", nargs="?", help="one-dimensional complex; the built-in corpus if omitted")
    _exponent_flag(p, nargs="+", default=[2, 3])
    _selection_flags(p)
    p.add_argument("--no-isolated", action="store_true", help="leave out corpus complexes with isolated vertices")
    p = command("scan-small-graphs", cmd_scan_small_graphs, "all graphs on at most n vertices", False)
    p.add_argument("--n", type=int, default=5)
    _exponent_flag(p, default=2)
    _selection_flags(p)
    p.add_argument("--dedupe", action="store_true", help="one graph per isomorphism class")
    p.add_argument("--allow-isolated", action="store_true", help="include graphs with isolated vertices")
    p.add_argument("--compare-field", help="also compute over this field and note any difference")
    p = command("lemma-suite", cmd_lemma_suite, "executable lemma checks", False)
    _exponent_flag(p, nargs="+", default=[2, 3])
    p.add_argument("--trials", type=int, default=100)
    command("selftest", cmd_selftest, "oracle cross-checks and worked examples", False).add_argument(
        "--inject-fault", action="store_true", help="flip a boundary sign; the run must FAIL")
    p = command("rigidity-search", cmd_rigidity_search, "random search for α > 2 counterexamples", False)
    p.add_argument("--n-max", type=int, default=7)
    _exponent_flag(p, default=2)
    p.add_argument("--trials", type=int, default=20)
    return parser


def _settings(args) -> Settings:
    settings = load_settings_sync(getattr(args, "config", None))
    overrides = {k: getattr(args, k) for k in SETTING_FLAGS if hasattr(args, k)}
    return Settings.model_validate({**settings.model_dump(), **overrides})


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one subcommand; 0 on success, 1 if any check FAILs, 2 on bad input or a guard."""
    args = build_parser().parse_args(argv)
    try:
        settings = _settings(args)
        set_log_level("DEBUG" if getattr(args, "verbose", False) else settings.log_level)
        power_cache.resize(settings.power_cache_size)
        return args.handler(args, settings)
    except SrregError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return 2
    except (ValidationError, yaml.YAMLError, OSError) as e:
        logger.error(f"{InputFormatError.__name__}: {e}")
        return 2
