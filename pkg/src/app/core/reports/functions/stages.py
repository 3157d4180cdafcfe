"""
Bodies of the pipeline stages. Each takes the PipelineState and records
assertions, observations and notices on its report.
"""

from collections import Counter
from typing import Callable, Dict, List

import numpy as np

from src.app.core.codes.exceptions.CodeException import CodeException
from src.app.core.codes.functions.low_weight import ROW_SPACE_LIMIT, dual_min_weight, min_weight
from src.app.core.codes.functions.weighted_vectors import (
    check_all_eq,
    check_covered_lines,
    check_cx_support,
    check_min_word_lemmas,
    verify_cx_dual,
    verify_cx_line,
)
from src.app.core.constructions.functions.classical import hexagon_collinear_on_quadric
from src.app.core.geometry.exceptions.GeometryException import DisconnectedGeometryException
from src.app.core.geometry.functions.certification import check_intersections, verify_polygon
from src.app.core.geometry.functions.distances import distances
from src.app.core.geometry.functions.parameters import expected_counts, validate_order
from src.app.core.origin.exceptions.AppException import CostGuardExceededException
from src.app.core.reports.entities.PipelineState import PipelineState
from src.app.core.reports.entities.Report import BlockingBlock, GeometryBlock, PerpBlock
from src.app.core.traces.exceptions.TraceException import WitnessNotFoundException
from src.app.core.traces.functions.blocking import (
    check_blocking_converse,
    check_g4s,
    line_blocking_bound,
    lines_blocking_survey,
    min_x_blocking_size,
    star_witness,
)
from src.app.core.traces.functions.distance_traces import classify_support, trace_blocking_census
from src.app.core.traces.functions.perp import is_projective_point, unblocking_opposites

# families whose every point is known to be projective
PROJECTIVE_FAMILIES = ("wq", "hexagon")


def _summary(violations, limit: int = 3) -> str:
    shown = "; ".join(v.message for v in violations[:limit])
    more = f" (+{len(violations) - limit} more)" if len(violations) > limit else ""
    return shown + more


def stage_axioms(state: PipelineState) -> None:
    geometry, n = state.geometry, state.n
    try:
        oracle = distances(geometry, state.workers)
    except DisconnectedGeometryException:
        oracle = None
    axioms = verify_polygon(geometry, n, oracle=oracle, workers=state.workers)
    order = axioms.order
    state.report.axioms = axioms
    state.report.geometry = GeometryBlock(
        source=state.config.geometry.describe(),
        label=geometry.label,
        num_points=geometry.num_points,
        num_lines=geometry.num_lines,
        n=n,
        s=order.s if order else None,
        t=order.t if order else None,
        is_thick=axioms.is_thick,
    )
    state.assert_check("axioms.verify_polygon", axioms.passed, _summary(axioms.violations))
    if not axioms.passed:
        state.report.aborted = True
        state.report.abort_reason = f"certification failed: {_summary(axioms.violations)}"
        return
    state.oracle, state.order = oracle, order
    for p in state.config.fields:
        state.condition(p)
    if not state.config.wants("axioms"):
        return

    s, t = order.s, order.t
    admissibility = validate_order(n, s, t)
    state.assert_check("axioms.order_admissible", admissibility.admissible, "; ".join(admissibility.reasons))
    if s * t > 1:
        points, lines = expected_counts(n, s, t)
        state.assert_check(
            "axioms.expected_counts",
            (geometry.num_points, geometry.num_lines) == (points, lines),
            f"expected ({points}, {lines}), got ({geometry.num_points}, {geometry.num_lines})",
        )
    if state.has_even_gonality:
        try:
            violations = check_intersections(geometry, oracle)
            state.assert_check("axioms.intersections", not violations, _summary(violations))
        except CostGuardExceededException as e:
            state.notice(f"axioms.intersections: {e}")
    if state.family == "hexagon" and state.is_embedded:
        bad = hexagon_collinear_on_quadric(geometry, oracle, state.config.geometry.q)
        state.assert_check("axioms.hexagon_quadric", not bad, f"{len(bad)} mismatched pairs")


def stage_cx(state: PipelineState) -> None:
    if not state.has_even_gonality:
        state.observe("cx.skipped", f"weighted vectors need an even gonality, n = {state.n}")
        return
    oracle = state.oracle
    for p in state.config.fields:
        code = state.code(p)
        block = state.block(p)
        block.rank, block.dual_dimension = code.rank, code.dual_dimension

        failing = None
        for v in range(code.length):
            check = verify_cx_line(code, oracle, v)
            if not check.holds:
                failing = (v, check.witness_line)
                break
        state.assert_check(
            "cx.line_products",
            failing is None,
            "" if failing is None else f"<c_p{failing[0]}, i_L{failing[1]}> != 1",
            p,
        )
        bad_pairs = [w for w in range(1, code.length) if not verify_cx_dual(code, oracle, 0, w)]
        state.assert_check("cx.dual_difference", not bad_pairs, f"points {bad_pairs[:5]}", p)
        rows = check_all_eq(code, oracle)
        state.assert_check("cx.all_eq", not rows, f"rows {rows[:5]}", p)
        support = check_cx_support(code, oracle)
        state.assert_check("cx.support", not support, _summary(support), p)
        covered = check_covered_lines(code, oracle)
        state.assert_check("cx.covered_lines", not covered, _summary(covered), p)


def stage_minwt(state: PipelineState) -> None:
    overrides = state.config.overrides
    s, t = state.order.s, state.order.t
    q = state.config.geometry.q
    for p in state.config.fields:
        code = state.code(p)
        block = state.block(p)
        block.rank, block.dual_dimension = code.rank, code.dual_dimension
        try:
            result = min_weight(
                code,
                allow_expensive=overrides.allow_expensive,
                max_terms=overrides.max_search_terms,
                workers=state.workers,
            )
        except CostGuardExceededException as e:
            state.notice(f"minwt GF({p}): {e}")
            continue
        words = result.words
        state.words[p] = words
        block.min_weight = result.weight
        block.min_weight_words = len(words)
        block.line_multiples = sum(1 for word in words if word.is_line_multiple)

        applicable = state.theorem_applicable(p)
        embedded = state.is_embedded and q is not None and q % p == 0
        if applicable:
            state.assert_check("minwt.theorem", result.weight == s + 1, f"weight {result.weight}, s+1 = {s + 1}", p)
            lemmas = check_min_word_lemmas(code, state.oracle, words, field_dependent=True)
            state.assert_check("minwt.lemmas", not lemmas, _summary(lemmas), p)
            if s < t and state.m == 2:
                state.assert_check(
                    "minwt.line_multiples",
                    block.line_multiples == len(words) == state.geometry.num_lines,
                    f"{block.line_multiples} of {len(words)} words are lines; {state.geometry.num_lines} lines",
                    p,
                )
        if embedded:
            state.assert_check("minwt.embedded", result.weight == s + 1, f"weight {result.weight}, q+1 = {s + 1}", p)
        if not applicable and not embedded:
            check = "minwt.trivial_code" if state.family == "pg2" and not state.config.geometry.dual else "minwt.observed"
            state.observe(check, f"weight {result.weight}, {len(words)} words up to scalars", p)


def _star_samples(state: PipelineState) -> List[str]:
    geometry, oracle, s, m = state.geometry, state.oracle, state.order.s, state.m
    if m < 2:
        return []
    rng = np.random.default_rng(state.config.seed)
    failures = []
    for _ in range(state.config.overrides.star_samples):
        size = int(rng.integers(0, s + 1))
        points = sorted(int(v) for v in rng.choice(geometry.num_points, size=size, replace=False))
        line = int(rng.integers(geometry.num_lines))
        d = int(rng.integers(1, m))
        try:
            star_witness(geometry, oracle, points, line, d, s)
        except WitnessNotFoundException as e:
            failures.append(str(e))
    return failures


def stage_classification(state: PipelineState) -> None:
    if not state.has_even_gonality:
        state.observe("traces.skipped", f"distance traces need an even gonality, n = {state.n}")
        return
    geometry, oracle, m = state.geometry, state.oracle, state.m
    s, t = state.order.s, state.order.t
    catalog = state.trace_catalog()
    state.report.trace_census = trace_blocking_census(geometry, oracle, catalog)

    g4s = check_g4s(geometry, oracle, s)
    state.assert_check("traces.g4s", not g4s, _summary(g4s))
    missing = [j for j, line in enumerate(geometry.lines) if catalog.lookup(line) is None]
    state.assert_check("traces.lines_are_traces", not missing, f"lines {missing[:5]}")
    failures = _star_samples(state)
    state.assert_check(
        "traces.star_witness",
        not failures,
        f"{state.config.overrides.star_samples} samples, seed {state.config.seed}; " + "; ".join(failures[:3]),
    )

    for p, words in state.words.items():
        block = state.block(p)
        histogram: Counter = Counter()
        unclassified = 0
        for word in words:
            if word.weight != s + 1:
                continue
            word.trace_match = classify_support(geometry, oracle, word.support, catalog)
            if word.trace_match is None:
                unclassified += 1
            else:
                histogram[word.trace_match.d] += 1
        block.classification = dict(sorted(histogram.items()))
        block.unclassified = unclassified
        detail = f"d histogram {block.classification}, unclassified {unclassified}"
        if state.theorem_applicable(p) and block.min_weight == s + 1:
            state.assert_check(
                "classification.traces",
                unclassified == 0 and all(1 <= d <= m for d in histogram),
                detail,
                p,
            )
            if s < t:
                state.assert_check("classification.odd_d", all(d % 2 for d in histogram), detail, p)
        else:
            state.observe("classification.observed", detail, p)


def stage_blocking(state: PipelineState) -> None:
    if not state.has_even_gonality:
        state.observe("blocking.skipped", f"X-blocking sets need an even gonality, n = {state.n}")
        return
    geometry, oracle, m = state.geometry, state.oracle, state.m
    s, t = state.order.s, state.order.t
    cap = state.config.overrides.exhaustive_cap
    block = BlockingBlock()
    state.report.blocking = block

    if s * t > 1:
        block.line_blocking_bound = line_blocking_bound(geometry, s, t)
        survey = lines_blocking_survey(geometry, oracle, s, t)
        state.assert_check("blocking.lines", not survey, _summary(survey))

    try:
        block.min_size = min_x_blocking_size(geometry, oracle, s, cap=cap, workers=state.workers)
        detail = f"size {block.min_size.size}, s+1 = {s + 1}"
        if s * t > 1:
            state.assert_check("blocking.min_size", block.min_size.size == s + 1, detail)
        else:
            state.observe("blocking.min_size", detail)
    except CostGuardExceededException as e:
        state.notice(f"blocking.min_size: {e}")

    try:
        block.converse = check_blocking_converse(
            geometry, oracle, s, state.trace_catalog(), cap=cap, workers=state.workers
        )
    except CostGuardExceededException as e:
        state.notice(f"blocking.converse: {e}")
        return
    converse = block.converse
    detail = (
        f"{converse.blocking} of {converse.candidates} sets block; "
        f"d histogram {converse.d_histogram}; {len(converse.non_trace_examples)} non-traces shown"
    )
    if s <= t and s * t > 1:
        state.assert_check(
            "blocking.converse",
            converse.all_traces and all(1 <= d <= m for d in converse.d_histogram),
            detail,
        )
        if s < t:
            state.assert_check("blocking.odd_d", converse.odd_only, detail)
    else:
        state.observe("blocking.converse", detail)


def stage_perp(state: PipelineState) -> None:
    if not state.has_even_gonality:
        state.observe("perp.skipped", f"perp geometries need an even gonality, n = {state.n}")
        return
    geometry, oracle = state.geometry, state.oracle
    augmented = literal = 0
    failures: List[int] = []
    for x in range(geometry.num_points):
        if is_projective_point(geometry, oracle, x, "literal"):
            literal += 1
        if is_projective_point(geometry, oracle, x, "augmented"):
            augmented += 1
            if unblocking_opposites(geometry, oracle, x):
                failures.append(x)
    state.report.perp = PerpBlock(
        points=geometry.num_points,
        projective_augmented=augmented,
        projective_literal=literal,
        trace_blocking_failures=failures,
    )
    detail = f"{augmented} of {geometry.num_points} points projective (augmented), {literal} (literal)"
    if state.family in PROJECTIVE_FAMILIES and state.is_embedded:
        state.assert_check("perp.projective_points", augmented == geometry.num_points, detail)
    else:
        state.observe("perp.projective_points", detail)
    if augmented:
        state.assert_check("perp.trace_blocking", not failures, f"points {failures[:5]}")


def stage_dual(state: PipelineState) -> None:
    overrides = state.config.overrides
    m, t = state.m, state.order.t
    for p in state.config.fields:
        code = state.code(p)
        block = state.block(p)
        block.rank, block.dual_dimension = code.rank, code.dual_dimension
        try:
            result = dual_min_weight(
                code,
                cap=overrides.dual_cap,
                m=m,
                max_terms=overrides.max_search_terms,
                workers=state.workers,
                exhaustive_limit=overrides.dual_exhaustive_limit or ROW_SPACE_LIMIT,
            )
        except (CostGuardExceededException, CodeException) as e:
            state.notice(f"dualwt GF({p}): {e}")
            continue
        block.dual = result
        if result.weight is not None and result.bound is not None and state.order.is_thick:
            state.assert_check(
                "dualwt.bound",
                result.weight >= result.bound,
                f"weight {result.weight}, bound {result.bound} ({result.method})",
                p,
            )
            if state.is_regular:
                state.assert_check(
                    "dualwt.regular_equality",
                    result.weight == result.bound,
                    f"weight {result.weight}, regular polygons reach the bound {result.bound}",
                    p,
                )
        elif result.exceeds_cap:
            state.observe("dualwt.cap", f"no dual word of weight <= {result.cap}; bound {result.bound}", p)
        else:
            state.observe("dualwt.observed", f"weight {result.weight} ({result.method})", p)


STAGE_FUNCTIONS: Dict[str, Callable[[PipelineState], None]] = {
    "axioms": stage_axioms,
    "cx": stage_cx,
    "minwt": stage_minwt,
    "classification": stage_classification,
    "blocking": stage_blocking,
    "perp": stage_perp,
    "dual": stage_dual,
}
