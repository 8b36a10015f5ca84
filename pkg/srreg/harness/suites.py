"""Verification suites: the girth theorem, the small-graph scan, lemma checks and the self-test.

Suites never raise on a mathematical mismatch. Every check becomes a
``VerificationReport``; a FAIL carries enough of its input to rerun alone.
"""

import logging
import time
from itertools import combinations
from typing import Any, Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from srreg.algebra.complexes import (
    INFINITY,
    SimplicialComplex,
    cycle_complex,
    degree_complex,
    degree_complex_direct,
    dim,
    faces_by_dimension,
    girth,
    is_cone,
    simplex,
    sr_complex,
    sr_ideal,
    vertices_of,
)
from srreg.algebra.graphs import (
    Graph,
    GraphFilter,
    complete_graph,
    edge_ideal,
    enumerate_graphs,
    graph_from_ideal,
    independence_complex,
    independence_number,
    induced_matching_number,
    is_independent,
)
from srreg.algebra.homology import (
    GF2,
    FieldSpec,
    boundary_rows,
    euler_characteristic,
    is_acyclic,
    reduced_homology,
    set_fault_injection,
)
from srreg.algebra.monomials import (
    MonomialIdeal,
    box,
    clique_order,
    contains,
    format_monomial,
    minimalize,
    order,
    power,
    radical_colon,
    rho,
)
from srreg.algebra.regularity import (
    RegularityCertificate,
    box_stability,
    reg_polarization_oracle,
    reg_restriction_in,
    reg_takayama,
    regularity,
    restrict_ideal,
    verify_witness,
    witness_support_property,
)
from srreg.algebra.symbolic import (
    Selection,
    criterion_in_power_predict,
    criterion_in_sym_check,
    differential_membership,
    intermediate_family,
    intersection_membership,
    symbolic_membership,
    symbolic_power,
    symbolic_power_by_intersection,
)
from srreg.config import ENUMERATION_MAX_N, MAX_INTERMEDIATES, SAMPLE_COUNT
from srreg.errors import ComplexError, GraphError, GuardLimitError, IdealError, SrregError
from srreg.harness.corpus import (
    CorpusEntry,
    bull_graph,
    intro_complex,
    intro_extras,
    lemma_corpus,
    random_graph,
    random_ideal,
    random_squarefree_ideal,
    remark_ideal,
    small_graph_classes,
)
from srreg.harness.reports import Status, SuiteSummary, TheoremCase, VerificationReport
from srreg.utils import ParallelRunner
from srreg.utils.codecs import to_json_dict

logger = logging.getLogger(__name__)

SMALL_GRAPH_MAX_N = 5
LEMMA_SAMPLE = 8


def require_s(s: int, allow_s4: bool = False) -> None:
    """s >= 1; s >= 4 only when explicitly allowed, since the Γ box grows like s^n."""
    if s < 1:
        raise IdealError(f"s must be >= 1, got {s}")
    if s >= 4 and not allow_s4:
        raise GuardLimitError(f"s={s} is beyond the default budget; pass allow_s4 to run it", estimate=s, limit=3)


class MemberResult(NamedTuple):
    value: Optional[int]
    seconds: float
    error: Optional[str] = None
    guarded: bool = False


def _member_regularity(args) -> MemberResult:
    J, field = args
    start = time.perf_counter()
    try:
        value = regularity(J, field)
    except GuardLimitError as e:
        return MemberResult(None, time.perf_counter() - start, str(e), True)
    except SrregError as e:
        return MemberResult(None, time.perf_counter() - start, str(e), False)
    return MemberResult(value, time.perf_counter() - start)


def _family(I: MonomialIdeal, s: int, selection: Selection, max_intermediates: int,
            fallback: Optional[Selection]):
    try:
        return intermediate_family(I, s, selection, max_intermediates)
    except GuardLimitError as e:
        if fallback is None:
            raise
        logger.info(f"{e}; falling back to a sample of {fallback.count}")
        return intermediate_family(I, s, fallback, max_intermediates)


def _reproduction(obj, field: FieldSpec, **flags) -> Dict[str, Any]:
    payload = {"input": to_json_dict(obj), "field": field.label}
    payload.update({k: v for k, v in flags.items() if v is not None})
    return payload


def _judge(suite: str, instance: Dict[str, Any], expected: Any, provenance: str,
           result: MemberResult, reproduction: Dict[str, Any]) -> VerificationReport:
    if result.error is not None:
        status = Status.SKIPPED if result.guarded else Status.FAIL
        reason = result.error
    elif result.value == expected:
        status, reason = Status.PASS, None
    else:
        status, reason = Status.FAIL, f"regularity {result.value} differs from {expected}"
    return VerificationReport(
        suite=suite,
        instance=instance,
        expected=expected,
        provenance=provenance,
        computed=result.value,
        status=status,
        reason=reason,
        seconds=result.seconds,
        reproduction=reproduction if status == Status.FAIL else None,
    )


def verify_theorem1(
    delta: SimplicialComplex,
    s: int,
    selection: Optional[Selection] = None,
    field: FieldSpec = GF2,
    jobs: int = 1,
    max_intermediates: int = MAX_INTERMEDIATES,
    allow_s4: bool = False,
    name: str = "",
    fallback: Optional[Selection] = None,
) -> List[VerificationReport]:
    """Compare reg J with the girth prediction for every selected J in Inter(I^s, I^(s)).

    At s = 1 only girth 3 has a formula (3); the other classes are compared
    with the polarization oracle instead.

    Raises:
        ComplexError: ``delta`` is not one-dimensional.
        GuardLimitError: s >= 4 without ``allow_s4``, or too many extras in ALL mode.
    """
    if delta.is_void or dim(delta) != 1:
        raise ComplexError(f"the girth theorem needs a one-dimensional complex, got {delta!r}")
    require_s(s, allow_s4)
    selection = selection or Selection.all()
    case = TheoremCase.for_complex(delta, s)
    I = sr_ideal(delta)
    family = _family(I, s, selection, max_intermediates, fallback)
    members = list(family.members())
    if s == 1 and case.girth_class != "3":
        expected = reg_polarization_oracle(I, field) + 1
        provenance = "polarization oracle at s=1, no formula"
    else:
        expected, provenance = case.predicted, case.provenance
    logger.debug(f"{name or delta!r}: s={s}, class {case.girth_class}, {len(members)} intermediates")

    results = ParallelRunner(jobs).map(_member_regularity, [(J, field) for _, J in members])
    reports = []
    for (subset, _), result in zip(members, results):
        instance = {
            "name": name or repr(delta),
            "class": case.girth_class,
            "s": s,
            "n": delta.n,
            "J": [format_monomial(family.extras[k]) for k in subset],
        }
        reproduction = _reproduction(
            delta, field, s=s, selection=family.selection.model_dump(),
            subset=[k + 1 for k in subset], max_intermediates=max_intermediates,
        )
        reports.append(_judge("verify-theorem1", instance, expected, provenance, result, reproduction))
    return reports


def verify_graph(
    G: Graph,
    s: int,
    selection: Optional[Selection] = None,
    field: FieldSpec = GF2,
    jobs: int = 1,
    max_intermediates: int = MAX_INTERMEDIATES,
    allow_s4: bool = False,
    name: str = "",
    suite: str = "scan-small-graphs",
    seed: Optional[int] = None,
    fallback: Optional[Selection] = None,
    compare_field: Optional[FieldSpec] = None,
) -> VerificationReport:
    """Check reg J = reg I^s = reg I^(s) over the selected intermediates of I(G).

    When α(G) = 2 the independence complex is one-dimensional and the common
    value must also match the girth prediction.
    """
    require_s(s, allow_s4)
    selection = selection or Selection.all()
    start = time.perf_counter()
    alpha = independence_number(G)
    instance = {"name": name or repr(G), "class": f"n={G.n}", "s": s, "alpha": alpha}
    reproduction = _reproduction(
        G, field, s=s, selection=selection.model_dump(), max_intermediates=max_intermediates, seed=seed
    )

    def report(status: Status, expected=None, computed=None, provenance="", reason=None) -> VerificationReport:
        return VerificationReport(
            suite=suite,
            instance=instance,
            expected=expected,
            provenance=provenance,
            computed=computed,
            status=status,
            reason=reason,
            seconds=time.perf_counter() - start,
            reproduction=reproduction if status == Status.FAIL else None,
        )

    try:
        family = _family(edge_ideal(G), s, selection, max_intermediates, fallback)
        members = list(family.members())
        results = ParallelRunner(jobs).map(_member_regularity, [(J, field) for _, J in members])
    except GuardLimitError as e:
        return report(Status.SKIPPED, reason=str(e))
    except SrregError as e:
        return report(Status.FAIL, reason=str(e))
    errors = [r for r in results if r.error is not None]
    if errors:
        status = Status.SKIPPED if all(r.guarded for r in errors) else Status.FAIL
        return report(status, reason=errors[0].error)

    instance["members"] = len(members)
    values = {subset: r.value for (subset, _), r in zip(members, results)}
    power_reg = values[()]
    instance["symbolic"] = values[tuple(range(len(family.extras)))]
    expected = [power_reg]
    computed = sorted(set(values.values()))
    note = None
    if compare_field is not None and compare_field != field:
        # recorded, not asserted: the characteristic may legitimately matter
        again = ParallelRunner(jobs).map(_member_regularity, [(J, compare_field) for _, J in members])
        other = {subset: r.value for (subset, _), r in zip(members, again)}
        instance["compare"] = {"field": compare_field.label, "computed": sorted({v for v in other.values() if v is not None})}
        changed = [[k + 1 for k in subset] for subset in values if other[subset] != values[subset]]
        if changed:
            note = f"regularity differs over {compare_field.label} for subsets {changed}"
            logger.warning(f"{instance['name']}: {note}")
    mu = induced_matching_number(G)
    instance["mu"] = mu
    if computed != expected:
        return report(Status.FAIL, expected, computed, "reg I^s", "intermediate regularities differ")
    if instance["symbolic"] < 2 * s + mu - 1:
        return report(
            Status.FAIL, expected, computed, "reg I^s",
            f"reg I^(s) = {instance['symbolic']} is below 2s + μ - 1 = {2 * s + mu - 1}",
        )
    if alpha == 2 and s >= 2:
        case = TheoremCase.for_complex(independence_complex(G), s)
        if power_reg != case.predicted:
            return report(
                Status.FAIL, expected, computed, "reg I^s",
                f"reg I^s = {power_reg} but {case.provenance} predicts {case.predicted}",
            )
    return report(Status.PASS, expected, computed, "reg I^s", note)


def _graph_task(args) -> VerificationReport:
    G, s, selection, field, max_intermediates, allow_s4, name, suite, seed, fallback, compare_field = args
    return verify_graph(
        G, s, selection, field, 1, max_intermediates, allow_s4, name, suite, seed, fallback, compare_field
    )


def scan_small_graphs(
    n: int = SMALL_GRAPH_MAX_N,
    s: int = 2,
    selection: Optional[Selection] = None,
    field: FieldSpec = GF2,
    jobs: int = 1,
    dedupe: bool = False,
    no_isolated: bool = True,
    max_intermediates: int = MAX_INTERMEDIATES,
    allow_s4: bool = False,
    fallback: Optional[Selection] = None,
    compare_field: Optional[FieldSpec] = None,
) -> Tuple[SuiteSummary, List[VerificationReport]]:
    """Run ``verify_graph`` on every labeled graph with an edge on 2..n vertices.

    With ``compare_field`` every regularity is recomputed over that field and
    any difference is noted on the report without changing its status.

    Raises:
        GuardLimitError: n above five.
    """
    if n > SMALL_GRAPH_MAX_N:
        raise GuardLimitError(
            f"the small-graph scan covers n <= {SMALL_GRAPH_MAX_N}, got {n}", estimate=n, limit=SMALL_GRAPH_MAX_N
        )
    require_s(s, allow_s4)
    filters = GraphFilter(min_edges=1, min_degree=1 if no_isolated else 0)
    graphs = [G for m in range(2, n + 1) for G in enumerate_graphs(m, filters, dedupe)]
    logger.info(f"Scanning {len(graphs)} graphs on at most {n} vertices at s={s}")
    tasks = [
        (G, s, selection, field, max_intermediates, allow_s4, "", "scan-small-graphs", None, fallback, compare_field)
        for G in graphs
    ]
    reports = ParallelRunner(jobs).map(_graph_task, tasks)
    summary = SuiteSummary.from_reports("scan-small-graphs", reports)
    logger.info(summary.to_text().splitlines()[0])
    return summary, reports


def rigidity_search(
    n_max: int = ENUMERATION_MAX_N,
    s: int = 2,
    trials: int = 20,
    seed: int = 0,
    selection: Optional[Selection] = None,
    field: FieldSpec = GF2,
    jobs: int = 1,
    max_intermediates: int = MAX_INTERMEDIATES,
    allow_s4: bool = False,
) -> Tuple[SuiteSummary, List[VerificationReport]]:
    """Look for a graph with α > 2 whose intermediate ideals disagree in regularity.

    A PASS only means no counterexample turned up among the sampled graphs.
    """
    if n_max > ENUMERATION_MAX_N:
        raise GuardLimitError(
            f"rigidity search is limited to n <= {ENUMERATION_MAX_N}, got {n_max}",
            estimate=n_max, limit=ENUMERATION_MAX_N,
        )
    if n_max < 4:
        raise GraphError(f"graphs with an edge and α > 2 need at least 4 vertices, got n_max={n_max}")
    require_s(s, allow_s4)
    selection = selection or Selection.sample(SAMPLE_COUNT, seed)
    rng = np.random.default_rng(seed)
    tasks = []
    for draw in range(100 * trials):
        if len(tasks) >= trials:
            break
        n = int(rng.integers(4, n_max + 1))
        G = random_graph(n, rng, float(rng.uniform(0.3, 0.7)))
        if G.edges and independence_number(G) > 2:
            label = f"random-{seed}-{draw}"
            tasks.append((G, s, selection, field, max_intermediates, allow_s4, label, "rigidity-search", seed, None, None))
    reports = ParallelRunner(jobs).map(_graph_task, tasks)
    summary = SuiteSummary.from_reports("rigidity-search", reports)
    logger.info(summary.to_text().splitlines()[0])
    return summary, reports


class LemmaOutcome(BaseModel):
    """Counts for one lemma; keeps the first counterexample found."""

    checked: int = 0
    violations: int = 0
    counterexample: Optional[Dict[str, Any]] = None

    def check(self, ok: bool) -> bool:
        self.checked += 1
        if not ok:
            self.violations += 1
        return ok

    def keep(self, payload: Dict[str, Any]) -> None:
        if self.counterexample is None:
            self.counterexample = payload


class LemmaContext(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    entries: List[CorpusEntry]
    s_values: Tuple[int, ...]
    trials: int
    seed: int
    field: FieldSpec
    jobs: int = 1

    def rng(self, salt: int) -> np.random.Generator:
        return np.random.default_rng([self.seed, salt])

    def ideals(self) -> List[Tuple[CorpusEntry, MonomialIdeal]]:
        return [(e, sr_ideal(e.complex)) for e in self.entries]

    def edge_ideals(self, classes: Sequence[str] = ("4", "5+", "inf")) -> List[Tuple[CorpusEntry, MonomialIdeal, Graph]]:
        out = []
        for e, I in self.ideals():
            if e.girth_class in classes and I.degree == 2:
                out.append((e, I, graph_from_ideal(I)))
        return out

    def family(self, I: MonomialIdeal, s: int):
        return intermediate_family(I, s, Selection.sample(LEMMA_SAMPLE, self.seed))


def _gamma_box(J: MonomialIdeal):
    return box(tuple(max(r, 1) for r in rho(J)))


def _lemma_degree_bound(ctx: LemmaContext) -> LemmaOutcome:
    out = LemmaOutcome()
    for e, I in ctx.ideals():
        if e.girth_class != "3":
            continue
        for s in ctx.s_values:
            Is = power(I, s)
            for a in box((s + 1,) * I.n):
                if sum(a) >= 3 * s and not out.check(contains(Is, a)):
                    out.keep({"complex": e.name, "s": s, "a": list(a)})
    return out


def _lemma_partial_degree_1(ctx: LemmaContext) -> LemmaOutcome:
    out = LemmaOutcome()
    for e, I in ctx.ideals():
        for s in ctx.s_values:
            scanned = symbolic_power(I, s)
            reference = symbolic_power_by_intersection(I, s)
            if not out.check(scanned == reference):
                out.keep({"complex": e.name, "s": s, "reason": "box scan and intersection disagree"})
            for g in reference.gens:
                if not out.check(max(g) <= s):
                    out.keep({"complex": e.name, "s": s, "generator": list(g)})
    return out


def _lemma_partial_degree_2(ctx: LemmaContext) -> LemmaOutcome:
    out = LemmaOutcome()
    for e, I, G in ctx.edge_ideals():
        if independence_number(G) != 2:
            continue
        adjacency = G.adjacency()
        for s in ctx.s_values:
            for g in symbolic_power(I, s).gens:
                for i in range(I.n):
                    if not out.check(g[i] <= sum(g[j] for j in adjacency[i])):
                        out.keep({"complex": e.name, "s": s, "generator": list(g), "i": i + 1})
    return out


def _lemma_criterion_in_sym(ctx: LemmaContext) -> LemmaOutcome:
    out = LemmaOutcome()
    for e, I in ctx.ideals():
        facets = sr_complex(I).facets
        for s in ctx.s_values:
            for subset, J in ctx.family(I, s).members():
                for a in _gamma_box(J):
                    if contains(J, a):
                        continue
                    for f in radical_colon(J, a).gens:
                        if contains(I, f):
                            continue
                        fmask = sum(1 << i for i, fi in enumerate(f) if fi)
                        for F in facets:
                            if fmask & ~F:
                                continue
                            ok = criterion_in_sym_check(I, J, s, a, f, vertices_of(F), check_preconditions=False)
                            if not out.check(ok):
                                out.keep({"complex": e.name, "s": s, "J": [k + 1 for k in subset],
                                          "a": list(a), "f": list(f), "F": [v + 1 for v in vertices_of(F)]})
    return out


def _indicator(n: int, F: Sequence[int]) -> Tuple[int, ...]:
    return tuple(1 if i in F else 0 for i in range(n))


def _lemma_maximal_independent(ctx: LemmaContext) -> LemmaOutcome:
    out = LemmaOutcome()
    for e, I, _ in ctx.edge_ideals():
        maximal = [vertices_of(F) for F in sr_complex(I).facets]
        for s in ctx.s_values:
            family = ctx.family(I, s)
            for subset, J in family.members():
                for a in _gamma_box(J):
                    if contains(J, a):
                        continue
                    in_J, in_power = radical_colon(J, a), radical_colon(family.base, a)
                    for F in maximal:
                        xF = _indicator(I.n, F)
                        if not out.check(contains(in_J, xF) == contains(in_power, xF)):
                            out.keep({"complex": e.name, "s": s, "J": [k + 1 for k in subset],
                                      "a": list(a), "F": [v + 1 for v in F]})
    return out


def _lemma_intermediate_reduction(ctx: LemmaContext) -> LemmaOutcome:
    out = LemmaOutcome()
    for e, I, _ in ctx.edge_ideals():
        for s in ctx.s_values:
            family = ctx.family(I, s)
            for subset, J in family.members():
                for a in _gamma_box(J):
                    if sum(a) < 2 * s - 1 or contains(J, a):
                        continue
                    if not out.check(degree_complex(J, a) == degree_complex(family.base, a)):
                        out.keep({"complex": e.name, "s": s, "J": [k + 1 for k in subset], "a": list(a)})
    return out


def check_criterion_in_power(G: Graph, s: int, max_exponent: int = 2) -> LemmaOutcome:
    """Sufficiency and minimal-generator necessity of the order inequality for x_F in sqrt(I^s : x^a)."""
    out = LemmaOutcome()
    I = edge_ideal(G)
    Is = power(I, s)
    independent = [F for k in range(1, G.n + 1) for F in combinations(range(G.n), k) if is_independent(G, F)]
    for a in box((max_exponent + 1,) * G.n):
        root = radical_colon(Is, a)
        for F in independent:
            xF = _indicator(G.n, F)
            predicted = criterion_in_power_predict(G, s, a, F)
            if predicted and not out.check(contains(root, xF)):
                out.keep({"graph": to_json_dict(G), "s": s, "a": list(a), "F": [v + 1 for v in F], "part": "sufficiency"})
            if xF in root.gens and not out.check(predicted):
                out.keep({"graph": to_json_dict(G), "s": s, "a": list(a), "F": [v + 1 for v in F], "part": "necessity"})
    return out


def _merge(outcomes: Sequence[LemmaOutcome]) -> LemmaOutcome:
    merged = LemmaOutcome()
    for o in outcomes:
        merged.checked += o.checked
        merged.violations += o.violations
        if o.counterexample is not None:
            merged.keep(o.counterexample)
    return merged


def _lemma_criterion_in_power(ctx: LemmaContext) -> LemmaOutcome:
    graphs = [G for _, _, G in ctx.edge_ideals()] + [g.graph for g in small_graph_classes()]
    return _merge([check_criterion_in_power(G, s) for G in graphs for s in ctx.s_values if s <= 3])


def check_clique_term(max_clique: int = 4, max_exponent: int = 4) -> LemmaOutcome:
    """Brute-force ord against the clique formula on complete graphs."""
    out = LemmaOutcome()
    for k in range(2, max_clique + 1):
        I = edge_ideal(complete_graph(k))
        for a in box((max_exponent + 1,) * k):
            if not out.check(order(I, a) == clique_order(a)):
                out.keep({"clique": k, "a": list(a)})
    return out


def check_bull_orders(max_exponent: int = 4) -> LemmaOutcome:
    """ord(x1^a1 x3^a3 x5^a5) = min(a3, a1+a5) and ord(x1^a1 x2^a2 x4^a4) = min(a2, a1+a4) on the bull."""
    out = LemmaOutcome()
    I = edge_ideal(bull_graph())
    for (p, q, r) in ((0, 2, 4), (0, 1, 3)):
        local = restrict_ideal(I, (p, q, r))
        for x, y, z in box((max_exponent + 1,) * 3):
            a = [0] * 5
            a[p], a[q], a[r] = x, y, z
            if not out.check(order(local, a) == min(y, x + z)):
                out.keep({"a": a})
    return out


def _certificates(ctx: LemmaContext):
    tasks, meta = [], []
    for e, I in ctx.ideals():
        for s in ctx.s_values:
            for subset, J in ctx.family(I, s).members():
                tasks.append((J, ctx.field))
                meta.append((e, I, s, subset, J))
    certs = ParallelRunner(ctx.jobs).map(_certificate_task, tasks)
    return list(zip(meta, certs))


def _certificate_task(args) -> Optional[RegularityCertificate]:
    J, field = args
    try:
        return reg_takayama(J, field)
    except GuardLimitError:
        return None


def _lemma_certificate_checks(ctx: LemmaContext) -> Dict[str, LemmaOutcome]:
    h1, lower, witnesses = LemmaOutcome(), LemmaOutcome(), LemmaOutcome()
    for (e, I, s, subset, J), cert in _certificates(ctx):
        if cert is None:
            continue
        where = {"complex": e.name, "s": s, "J": [k + 1 for k in subset]}
        edge = I.degree == 2
        if edge:
            mu = induced_matching_number(graph_from_ideal(I))
            if not lower.check(cert.reg_ideal >= 2 * s + mu - 1):
                lower.keep({**where, "reg": cert.reg_ideal, "mu": mu})
        for w in cert.witnesses:
            ok = verify_witness(J, w, cert.reg_module, ctx.field) and witness_support_property(J, w) is None
            ok = ok and all(aj < r or aj == r == 0 for aj, r in zip(w.a, cert.gamma_box))
            if not witnesses.check(ok):
                witnesses.keep({**where, "witness": w.to_payload()})
            if edge and e.girth_class in ("4", "5+") and w.i == 2:
                ell = girth(degree_complex(J, w.a))
                if ell != INFINITY and not h1.check((ell - 2) * sum(w.a) <= ell * (s - 1)):
                    h1.keep({**where, "a": list(w.a), "girth": ell})
    return {"h1_bounds": h1, "reg_lower_bound": lower, "witness_properties": witnesses}


def _random_small_ideal(rng: np.random.Generator, n_max: int = 4, gens_max: int = 4, exp_max: int = 2) -> MonomialIdeal:
    n = int(rng.integers(2, n_max + 1))
    return random_ideal(n, int(rng.integers(1, gens_max + 1)), exp_max, rng)


def _lemma_restriction(ctx: LemmaContext) -> Dict[str, LemmaOutcome]:
    inward, monotone = LemmaOutcome(), LemmaOutcome()
    rng = ctx.rng(11)
    for _ in range(ctx.trials):
        I = _random_small_ideal(rng)
        j = int(rng.integers(0, I.n))
        with_var, plain = reg_restriction_in(I, j, ctx.field)
        if not inward.check(with_var <= plain):
            inward.keep({"ideal": to_json_dict(I), "j": j + 1})
        V = [v for v in range(I.n) if rng.random() < 0.6]
        IV = restrict_ideal(I, V)
        if IV.is_zero:
            continue
        if not monotone.check(regularity(IV, ctx.field) <= plain):
            monotone.keep({"ideal": to_json_dict(I), "V": [v + 1 for v in V]})
    return {"restriction_in": inward, "restriction_monotonicity": monotone}


def random_complex_any(rng: np.random.Generator, n: int, facets: int = 4) -> SimplicialComplex:
    chosen = [[v for v in range(n) if rng.random() < 0.5] for _ in range(facets)]
    return SimplicialComplex.from_facets(n, chosen)


def _lemma_complex_checks(ctx: LemmaContext) -> Dict[str, LemmaOutcome]:
    cone, euler = LemmaOutcome(), LemmaOutcome()
    rng = ctx.rng(13)
    for _ in range(ctx.trials):
        n = int(rng.integers(2, 7))
        delta = random_complex_any(rng, n, int(rng.integers(1, 5)))
        profile = reduced_homology(delta, ctx.field)
        alternating = sum((-1) ** i * d for i, d in profile.dims.items())
        if not euler.check(alternating == euler_characteristic(delta)):
            euler.keep({"complex": to_json_dict(delta)})
        apex = SimplicialComplex.from_facets(n + 1, (list(f) + [n] for f in delta.facet_sets()))
        if not cone.check(is_cone(apex, n) and is_acyclic(apex, ctx.field)):
            cone.keep({"complex": to_json_dict(apex)})
    return {"cone_acyclicity": cone, "euler_characteristic": euler}


def _lemma_box_stability(ctx: LemmaContext) -> LemmaOutcome:
    out = LemmaOutcome()
    rng = ctx.rng(17)
    for _ in range(ctx.trials):
        I = _random_small_ideal(rng)
        inner, outer = box_stability(I, ctx.field)
        if not out.check(inner == outer):
            out.keep({"ideal": to_json_dict(I), "box": inner, "enlarged": outer})
    return out


LEMMAS: List[Tuple[str, str, Callable[[LemmaContext], Any]]] = [
    ("degree_bound", "girth 3, a_i <= s, |a| >= 3s gives x^a in I^s", _lemma_degree_bound),
    ("partial_deg_bound_1", "generators of I^(s) have every a_i <= s", _lemma_partial_degree_1),
    ("partial_deg_bound_2", "α = 2: generators of I^(s) have a_i <= Σ_{N(i)} a_j", _lemma_partial_degree_2),
    ("criterion_in_sym", "f in sqrt(J : x^a) outside I forces Σ_{i ∉ F} a_i >= s", _lemma_criterion_in_sym),
    ("maximal_independent_term", "x_F in sqrt(J : x^a) iff in sqrt(I^s : x^a) for maximal independent F",
     _lemma_maximal_independent),
    ("intermediate_reduction", "|a| >= 2s-1 and x^a ∉ J gives Δ_a(J) = Δ_a(I^s)", _lemma_intermediate_reduction),
    ("criterion_in_power", "order inequality decides x_F in sqrt(I^s : x^a)", _lemma_criterion_in_power),
    ("clique_term", "ord on a clique is min(|a| - max a, floor(|a|/2))", lambda ctx: check_clique_term()),
    ("bull_orders", "bull graph orders min(a3, a1+a5) and min(a2, a1+a4)", lambda ctx: check_bull_orders()),
    ("certificates", "", _lemma_certificate_checks),
    ("restriction", "", _lemma_restriction),
    ("complexes", "", _lemma_complex_checks),
    ("box_stability", "Γ box and Γ box + 1 give the same regularity", _lemma_box_stability),
]

PROVENANCE = {
    "h1_bounds": "(ℓ-2)|a| <= ℓ(s-1) for witnesses with i = 2",
    "reg_lower_bound": "reg J >= 2s + μ(G) - 1",
    "witness_properties": "witnesses recheck, lie in Γ, and each t in supp a appears in sqrt(J : x^a)",
    "restriction_in": "reg(I + x_j) <= reg I",
    "restriction_monotonicity": "reg I_V <= reg I",
    "cone_acyclicity": "cones are acyclic",
    "euler_characteristic": "alternating homology sum equals the reduced Euler characteristic",
}


def lemma_suite(
    corpus: Optional[List[CorpusEntry]] = None,
    s_values: Sequence[int] = (2, 3),
    trials: int = 100,
    seed: int = 0,
    field: FieldSpec = GF2,
    jobs: int = 1,
    allow_s4: bool = False,
) -> List[VerificationReport]:
    """One report per lemma: computed = violation count, expected 0."""
    for s in s_values:
        require_s(s, allow_s4)
    ctx = LemmaContext(
        entries=corpus if corpus is not None else lemma_corpus(),
        s_values=tuple(s_values), trials=trials, seed=seed, field=field, jobs=jobs,
    )
    base = {"seed": seed, "field": field.label, "s_values": list(s_values), "trials": trials,
            "corpus": [e.name for e in ctx.entries]}
    reports = []
    for name, provenance, fn in LEMMAS:
        start = time.perf_counter()
        try:
            result = fn(ctx)
        except SrregError as e:
            reports.append(VerificationReport(
                suite="lemma-suite", instance={"name": name, "class": name}, expected=0, provenance=provenance,
                status=Status.FAIL, reason=str(e), seconds=time.perf_counter() - start,
                reproduction={**base, "lemma": name},
            ))
            continue
        outcomes = result if isinstance(result, dict) else {name: result}
        seconds = (time.perf_counter() - start) / len(outcomes)
        for lemma, outcome in outcomes.items():
            if outcome.checked == 0:
                status, reason = Status.SKIPPED, "no applicable instances"
            elif outcome.violations:
                status, reason = Status.FAIL, f"{outcome.violations} violations in {outcome.checked} checks"
            else:
                status, reason = Status.PASS, None
            reports.append(VerificationReport(
                suite="lemma-suite",
                instance={"name": lemma, "class": lemma, "checked": outcome.checked},
                expected=0,
                provenance=PROVENANCE.get(lemma, provenance),
                computed=outcome.violations,
                status=status,
                reason=reason,
                seconds=seconds,
                reproduction={**base, "lemma": lemma, "counterexample": outcome.counterexample}
                if status == Status.FAIL else None,
            ))
        logger.debug(f"Lemma check {name} done in {time.perf_counter() - start:.2f}s")
    return reports


def boundary_squares_vanish(delta: SimplicialComplex) -> bool:
    """∂_{i} ∘ ∂_{i+1} = 0 for every i, in integer arithmetic."""
    by_dim = faces_by_dimension(delta)
    top = max(by_dim)
    for i in range(0, top):
        outer = boundary_rows(by_dim.get(i - 1, []), by_dim[i])
        inner = boundary_rows(by_dim[i], by_dim[i + 1])
        for row in outer:
            for c in range(len(by_dim[i + 1])):
                if sum(row[k] * inner[k][c] for k in range(len(row))) != 0:
                    return False
    return True


def _check_oracle(field: FieldSpec, seed: int):
    rng = np.random.default_rng([seed, 1])
    mismatches = 0
    for _ in range(20):
        I = _random_small_ideal(rng, n_max=3, gens_max=4, exp_max=2)
        if reg_takayama(I, field).reg_module != reg_polarization_oracle(I, field):
            mismatches += 1
    return 0, mismatches, "Takayama scan vs polarization oracle"


def _check_symbolic_routes(field: FieldSpec, seed: int):
    rng = np.random.default_rng([seed, 2])
    mismatches = 0
    for _ in range(4):
        I = random_squarefree_ideal(4, int(rng.integers(2, 5)), rng)
        for s in (1, 2, 3):
            for a in box((4,) * 4):
                votes = {symbolic_membership(I, s, a), differential_membership(I, s, a), intersection_membership(I, s, a)}
                mismatches += len(votes) > 1
    return 0, mismatches, "covering, differential and intersection membership agree"


def _check_degree_complexes(field: FieldSpec, seed: int):
    rng = np.random.default_rng([seed, 3])
    mismatches = 0
    for _ in range(20):
        I = _random_small_ideal(rng, n_max=4, gens_max=4, exp_max=3)
        a = tuple(int(x) for x in rng.integers(0, 4, size=I.n))
        mismatches += degree_complex(I, a) != degree_complex_direct(I, a)
    return 0, mismatches, "sqrt(I : x^a) route vs direct definition"


def _check_clique(field: FieldSpec, seed: int):
    return 0, check_clique_term(max_clique=3, max_exponent=3).violations, "clique order formula vs brute force"


def _check_boundaries(field: FieldSpec, seed: int):
    complexes = [simplex(4), cycle_complex(5), intro_complex()]
    return True, all(boundary_squares_vanish(d) for d in complexes), "boundary of a boundary is zero"


def _check_rational_homology(field: FieldSpec, seed: int):
    rational = FieldSpec.rational()
    computed = [
        reduced_homology(cycle_complex(3), rational).get(1),
        reduced_homology(cycle_complex(5), rational).get(1),
        int(is_acyclic(simplex(4), rational)),
        reduced_homology(SimplicialComplex.from_facets(3, [[0], [1], [2]]), rational).get(0),
    ]
    return [1, 1, 1, 2], computed, "known homology over Q"


def _check_intro(field: FieldSpec, seed: int):
    I = sr_ideal(intro_complex())
    base, top = power(I, 3), symbolic_power(I, 3)
    chain = intro_extras()
    missing = [f for f in chain if f not in top.gens or contains(base, f)]
    if missing:
        raise IdealError(f"{missing} are not extra generators of the third symbolic power")
    values = [regularity(minimalize(base.n, base.gens + tuple(chain[:k])), field) for k in range(4)]
    return [7, 7, 7, 7], values, "I^3, I^3+(f1), I^3+(f1,f2), I^3+(f1,f2,f3) all have regularity 7"


def _check_theorem_examples(field: FieldSpec, seed: int):
    triangle = verify_theorem1(cycle_complex(3), 2, field=field)
    pentagon = verify_theorem1(cycle_complex(5), 2, field=field)
    computed = sorted({r.computed for r in triangle}) + sorted({r.computed for r in pentagon})
    return [6, 4], computed, "triangle 3s, pentagon 2s at s=2"


def _check_bull(field: FieldSpec, seed: int):
    report = verify_graph(bull_graph(), 2, field=field)
    return [4], report.computed, "bull graph intermediates all 2s"


def _check_remark(field: FieldSpec, seed: int):
    I = remark_ideal()
    a = (1, 1, 1, 1, 0)
    x5 = (0, 0, 0, 0, 1)
    computed = [contains(radical_colon(symbolic_power(I, 3), a), x5), contains(radical_colon(power(I, 3), a), x5)]
    return [True, False], computed, "x5 in sqrt(I^(3) : x^a) but not in sqrt(I^3 : x^a)"


def _check_determinism(field: FieldSpec, seed: int):
    J = power(sr_ideal(intro_complex()), 2)
    payloads = [reg_takayama(J, field, jobs=j).to_payload() for j in (1, 4, 8)]
    return True, all(p == payloads[0] for p in payloads), "certificate identical for 1, 4 and 8 workers"


SELFTEST_CHECKS: List[Tuple[str, Callable]] = [
    ("boundary-squared", _check_boundaries),
    ("rational-homology", _check_rational_homology),
    ("polarization-oracle", _check_oracle),
    ("symbolic-routes", _check_symbolic_routes),
    ("degree-complex", _check_degree_complexes),
    ("clique-order", _check_clique),
    ("intro-example", _check_intro),
    ("theorem-examples", _check_theorem_examples),
    ("bull-graph", _check_bull),
    ("remark-counterexample", _check_remark),
    ("determinism", _check_determinism),
]


def selftest(field: FieldSpec = GF2, seed: int = 0, inject_fault: bool = False) -> List[VerificationReport]:
    """Oracle cross-checks plus the fixed worked examples.

    ``inject_fault`` flips a sign in every boundary matrix for the duration
    of the run; the rational homology checks must then FAIL.
    """
    reports = []
    set_fault_injection(inject_fault)
    try:
        for name, check in SELFTEST_CHECKS:
            start = time.perf_counter()
            expected = computed = None
            provenance, reason = "", None
            try:
                expected, computed, provenance = check(field, seed)
                status = Status.PASS if computed == expected else Status.FAIL
            except SrregError as e:
                status, reason = Status.FAIL, str(e)
            reports.append(VerificationReport(
                suite="selftest",
                instance={"name": name, "class": "selftest"},
                expected=expected,
                provenance=provenance,
                computed=computed,
                status=status,
                reason=reason,
                seconds=time.perf_counter() - start,
                reproduction={"check": name, "field": field.label, "seed": seed, "inject_fault": inject_fault}
                if status == Status.FAIL else None,
            ))
            logger.debug(f"selftest {name}: {status.value}")
    finally:
        set_fault_injection(False)
    return reports
