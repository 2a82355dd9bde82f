"""Verification suites and corpus drivers.

Each suite runs one family of checks over an exhaustive range of small graphs
(isomorphism classes) and, where configured, seeded random samples beyond it.
Results are plain counts plus violation payloads, deterministic for a fixed
config, so two runs of the same suite are byte-identical once serialized.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .graphs import (
    Graph,
    GraphFormatError,
    all_graphs,
    emit_graph6,
    er_random,
    invariants,
    parse_graph6,
)
from .coloring import (
    Guards,
    DEFAULT_GUARDS,
    b_r,
    bounded_stats,
    check_complete_condition,
    check_frame3_sufficiency,
    Coloring,
    ColoringProperty,
    enumerate_colorings,
    enumerate_optimal_colorings,
    is_frame_property,
    is_proper,
    is_singleton_friendly,
    one_optimal_coloring,
)
from . import lonely
from .bounds import (
    VerificationParams,
    VERDICT_VIOLATION,
    evaluate_bounds,
    evaluate_generalized,
    full_report,
)

DENSITIES = (0.2, 0.5, 0.8)


@dataclass
class SuiteResult:
    suite: str
    config: dict
    checked: int = 0
    vacuous: int = 0
    violations: list[dict] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "config": self.config,
            "checked": self.checked,
            "vacuous": self.vacuous,
            "violations": self.violations,
            "details": self.details,
            "passed": self.passed,
        }


def exhaustive_graphs(min_n: int, max_n: int) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from all_graphs(n)


def split_counts(total: int, buckets: int) -> list[int]:
    """Deterministic near-even split; remainders go to the earliest buckets."""
    base, extra = divmod(total, buckets)
    return [base + (1 if i < extra else 0) for i in range(buckets)]


def sample_specs(total: int, ns: tuple[int, ...],
                 densities: tuple[float, ...] = DENSITIES) -> list[tuple[int, float, int]]:
    """(n, p, count) triples covering ``total`` samples across the grid."""
    combos = [(n, p) for n in ns for p in densities]
    counts = split_counts(total, len(combos))
    return [(n, p, c) for (n, p), c in zip(combos, counts)]


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------


def suite_swap(max_n: int, guards: Guards = DEFAULT_GUARDS) -> SuiteResult:
    """Every mutually-lonely swap in every proper coloring of every graph up
    to max_n must stay proper on the same frame."""
    result = SuiteResult("swap", {"max_n": max_n})
    colorings = 0
    for g in exhaustive_graphs(0, max_n):
        for c in enumerate_colorings(g, guards):
            colorings += 1
            for v in range(g.n):
                for w in range(v + 1, g.n):
                    if not (lonely.is_lonely(g, c, v, w)
                            and lonely.is_lonely(g, c, w, v)):
                        continue
                    result.checked += 1
                    swapped = lonely.swap(g, c, v, w)
                    if not is_proper(g, swapped) or swapped.frame() != c.frame():
                        result.violations.append({
                            "g6": emit_graph6(g),
                            "coloring": c.as_lists(),
                            "pair": [v, w],
                        })
    result.details["colorings"] = colorings
    return result


def suite_lonely_path(max_n: int, max_len: int = 3, samples: int = 0,
                      sample_ns: tuple[int, ...] = (7, 8), seed: int = 0,
                      densities: tuple[float, ...] = DENSITIES,
                      guards: Guards = DEFAULT_GUARDS) -> SuiteResult:
    """Joined-paths property over all optimal colorings exhaustively up to
    max_n, then over seeded random (graph, optimal coloring) samples."""
    result = SuiteResult("lonely-path", {
        "max_n": max_n, "max_len": max_len, "samples": samples,
        "sample_ns": list(sample_ns), "seed": seed, "densities": list(densities),
    })
    colorings = 0
    for g in exhaustive_graphs(0, max_n):
        g6 = emit_graph6(g)
        for c in enumerate_optimal_colorings(g, guards=guards):
            colorings += 1
            pairs = list(lonely.enumerate_lonely_path_pairs(g, c, max_len))
            result.checked += len(pairs)
            for bad in lonely.check_lonely_paths(g, c, max_len):
                bad["g6"] = g6
                result.violations.append(bad)
    if samples:
        rng = random.Random(seed)
        for n, p, count in sample_specs(samples, sample_ns, densities):
            for _ in range(count):
                g = er_random(n, p, seed=rng.getrandbits(32))
                c = one_optimal_coloring(g, rng=rng)
                colorings += 1
                pairs = list(lonely.enumerate_lonely_path_pairs(g, c, max_len))
                result.checked += len(pairs)
                for bad in lonely.check_lonely_paths(g, c, max_len):
                    bad["g6"] = emit_graph6(g)
                    result.violations.append(bad)
    result.details["colorings"] = colorings
    return result


def suite_gen_lonely_path(max_n: int, rs: tuple[int, ...] = (2, 3),
                          max_len: int = 3,
                          guards: Guards = DEFAULT_GUARDS) -> SuiteResult:
    """Joined-paths property for size-capped colorings (properties B_r)."""
    result = SuiteResult("generalized-lonely-path",
                         {"max_n": max_n, "rs": list(rs), "max_len": max_len})
    for g in exhaustive_graphs(0, max_n):
        g6 = emit_graph6(g)
        for r in rs:
            rep = lonely.verify_lonely_path_lemma(
                g, mode="property", prop=b_r(r), max_len=max_len, guards=guards)
            result.checked += rep.checks
            for bad in rep.violations:
                bad = dict(bad)
                bad.update({"g6": g6, "r": r})
                result.violations.append(bad)
    return result


def suite_replete(max_n: int, t2s: tuple[int, ...] = (0, 1),
                  rs: tuple[int, ...] = (2, 3),
                  guards: Guards = DEFAULT_GUARDS) -> SuiteResult:
    """Lonely-out-degree lower bounds plus the touches-everybody checks,
    classic and r-bounded."""
    result = SuiteResult("replete", {"max_n": max_n, "t2s": list(t2s), "rs": list(rs)})

    def absorb(g6: str, rep: lonely.LemmaReport):
        if not rep.hypothesis_holds:
            result.vacuous += 1
            return
        result.checked += rep.checks
        for bad in rep.violations:
            bad = dict(bad)
            bad.update({"g6": g6, "claim": rep.name})
            result.violations.append(bad)

    for g in exhaustive_graphs(0, max_n):
        g6 = emit_graph6(g)
        absorb(g6, lonely.verify_touches_lemma(g, guards=guards))
        for t2 in t2s:
            absorb(g6, lonely.verify_replete_lemma(g, t2=t2, guards=guards))
        for r in rs:
            absorb(g6, lonely.verify_touches_lemma(g, r=r, guards=guards))
            for t2 in t2s:
                absorb(g6, lonely.verify_replete_lemma(g, r=r, t2=t2, guards=guards))
    return result


def suite_identities(max_n: int, guards: Guards = DEFAULT_GUARDS) -> SuiteResult:
    """iota_2 = n - 2 nu(complement) and chi_2 - M_2 = iota_2, exhaustively."""
    result = SuiteResult("identities", {"max_n": max_n})
    for g in exhaustive_graphs(0, max_n):
        bs = bounded_stats(g, 2, guards)
        nu_comp = invariants(g.complement()).nu if g.n else 0
        result.checked += 2
        if bs.iota_r != g.n - 2 * nu_comp:
            result.violations.append({
                "g6": emit_graph6(g), "identity": "iota2 = n - 2 nu(complement)",
                "iota_2": bs.iota_r, "n": g.n, "nu_complement": nu_comp,
            })
        if bs.chi_r - bs.m_r != bs.iota_r:
            result.violations.append({
                "g6": emit_graph6(g), "identity": "chi2 - M2 = iota2",
                "chi_2": bs.chi_r, "m_2": bs.m_r, "iota_2": bs.iota_r,
            })
    return result


def random_subset_property(colorings: list[Coloring], rng: random.Random,
                           name: str) -> ColoringProperty:
    chosen = frozenset(c for c in colorings if rng.random() < 0.5)
    return ColoringProperty(lambda c: c in chosen, name)


def suite_properties(seed: int = 0, predicates: int = 100, max_n_br: int = 5,
                     guards: Guards = DEFAULT_GUARDS) -> SuiteResult:
    """Checks the property-framework characterizations.

    Part 1: B_r (r = 2, 3) must pass both the frame-property and the
    singleton-friendliness checks on every graph up to max_n_br.
    Part 2: on K3, P4 and C5, random subset predicates probe two statements:
    the frame>=3 condition must imply both checks (a proved implication), and
    the (small-count, frame>=3) condition is compared against their
    conjunction (a claimed equivalence). Disagreements are reported as
    violations rather than resolved.
    """
    from .graphs import complete, cycle, path

    result = SuiteResult("properties", {
        "seed": seed, "predicates": predicates, "max_n_br": max_n_br,
    })
    for g in exhaustive_graphs(0, max_n_br):
        for r in (2, 3):
            result.checked += 1
            prop = b_r(r)
            ok_frame = is_frame_property(g, prop, guards)
            ok_sf = is_singleton_friendly(g, prop, guards)
            if not (ok_frame and ok_sf):
                result.violations.append({
                    "claim": "b_r-checks", "g6": emit_graph6(g), "r": r,
                    "frame_property": ok_frame, "singleton_friendly": ok_sf,
                })

    rng = random.Random(seed)
    for label, g in (("K3", complete(3)), ("P4", path(4)), ("C5", cycle(5))):
        colorings = list(enumerate_colorings(g, guards))
        for i in range(predicates):
            prop = random_subset_property(colorings, rng, f"rand-{label}-{i}")
            fp = is_frame_property(g, prop, guards)
            sf = is_singleton_friendly(g, prop, guards)
            f3 = check_frame3_sufficiency(g, prop, guards)
            cc = check_complete_condition(g, prop, guards)
            result.checked += 2
            if f3 and not (fp and sf):
                result.violations.append({
                    "claim": "frame3-sufficiency", "graph": label, "predicate": i,
                    "satisfying": [c.as_lists() for c in colorings if prop(c)],
                })
            if cc != (fp and sf):
                result.violations.append({
                    "claim": "complete-condition-iff", "graph": label, "predicate": i,
                    "complete_condition": cc, "frame_property": fp,
                    "singleton_friendly": sf,
                    "satisfying": [c.as_lists() for c in colorings if prop(c)],
                })
    return result


SUITES = {
    "lonely-path": suite_lonely_path,
    "generalized-lonely-path": suite_gen_lonely_path,
    "replete": suite_replete,
    "swap": suite_swap,
    "properties": suite_properties,
    "identities": suite_identities,
}


# ---------------------------------------------------------------------------
# Sweep and search drivers
# ---------------------------------------------------------------------------


def load_graph6_lines(path: str) -> tuple[list[tuple[int, Graph]], list[tuple[int, str]]]:
    """Parse a one-graph-per-line corpus. Returns (lineno, graph) pairs and
    (lineno, message) errors; blank lines are skipped."""
    graphs: list[tuple[int, Graph]] = []
    errors: list[tuple[int, str]] = []
    with open(path, "r", encoding="ascii", errors="replace") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped:
                continue
            try:
                graphs.append((lineno, parse_graph6(stripped)))
            except (GraphFormatError, ValueError) as exc:
                errors.append((lineno, str(exc)))
    return graphs, errors


def sweep_reports(graphs: Iterable[Graph],
                  params: VerificationParams) -> list[dict]:
    """One full report per graph, ordered by (n, graph6 id)."""
    reports = [full_report(g, params) for g in graphs]
    reports.sort(key=lambda rep: (rep["inv"]["n"], rep["g6"]))
    return reports


CLASSIC_CLAIMS = (
    "very-stingy-reed", "stinginess-patching", "chi-avg-bound",
    "reed-disjunct", "reed-disjunct-gap", "reed-chi-above-half",
    "reed-alpha-two", "simple-bound", "chi-at-least-half", "ceil-reed-gap",
    "matching-bound", "iota2-matching-identity",
)
GENERALIZED_CLAIMS = (
    "gen-very-stingy-reed", "gen-reed-conjecture", "gen-reed-disjunct",
    "gen-disjunct-gap", "gen-stinginess-patching", "gen-chi-avg-bound",
    "r1-sanity", "iota2-bound", "chi2-identity",
)
LONELY_CLAIMS = (
    "lonely-path-join", "class-meets-all-classes", "lonely-degree-bound",
    "swap-preserves-frame", "doubly-critical-iff-two-singletons",
    "singleton-meets-small-classes", "gen-lonely-degree-bound",
)
ALL_CLAIM_BASES = CLASSIC_CLAIMS + GENERALIZED_CLAIMS + LONELY_CLAIMS


def _base_name(claim: str) -> str:
    return claim.split("[", 1)[0]


class UnknownClaimError(ValueError):
    def __init__(self, claim: str):
        valid = ", ".join(sorted(ALL_CLAIM_BASES))
        super().__init__(f"unknown claim {claim!r}; valid claims: {valid}")


def claim_records_for(g: Graph, query: str, params: VerificationParams) -> list:
    """The claim records on ``g`` whose name matches ``query`` (exact name or
    base name, in which case every parameterization in params is covered)."""
    base = _base_name(query)
    if base not in ALL_CLAIM_BASES:
        raise UnknownClaimError(query)
    records = []
    if base in CLASSIC_CLAIMS:
        records.extend(evaluate_bounds(g, params).claims)
    if base in GENERALIZED_CLAIMS:
        for r in params.r_list:
            records.extend(evaluate_generalized(g, r, params).claims)
    if base in LONELY_CLAIMS:
        from .bounds import _lonely_claims

        records.extend(_lonely_claims(g, params))
    return [
        rec for rec in records
        if rec.name == query or (query == base and _base_name(rec.name) == base)
    ]


def search_claim(query: str, params: VerificationParams, min_n: int = 1,
                 max_n: int = 6, samples: int = 0,
                 sample_ns: tuple[int, ...] = (), seed: int = 0,
                 densities: tuple[float, ...] = DENSITIES) -> dict:
    """Hunt for VIOLATION verdicts of one claim. Exhaustive over min_n..max_n,
    then seeded random samples. Returns counts plus counterexample artifacts."""
    _ = _base_name(query)
    if _ not in ALL_CLAIM_BASES:
        raise UnknownClaimError(query)
    artifacts: list[dict] = []
    graphs_seen = 0
    records_seen = 0

    def visit(g: Graph):
        nonlocal graphs_seen, records_seen
        graphs_seen += 1
        for rec in claim_records_for(g, query, params):
            records_seen += 1
            if rec.verdict == VERDICT_VIOLATION:
                artifacts.append({
                    "claim": rec.name,
                    "g6": emit_graph6(g),
                    "r": rec.witness.get("r"),
                    "witness": rec.witness,
                })

    for g in exhaustive_graphs(min_n, max_n):
        visit(g)
    if samples:
        rng = random.Random(seed)
        for n, p, count in sample_specs(samples, sample_ns, densities):
            for _ in range(count):
                visit(er_random(n, p, seed=rng.getrandbits(32)))
    return {
        "claim": query,
        "graphs": graphs_seen,
        "records": records_seen,
        "counterexamples": artifacts,
    }
