"""Certify Z3-flow-criticality and check the density bounds on concrete graphs.

Certification uses only the brute-force oracle, never the solver, so it can
serve as ground truth for the solver's tests.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

import networkx as nx

from . import constraints
from .flows import Flow, oracle_nz_flow, zero_edge_flow
from .multigraph import (
    MultiGraph,
    contract_or_delete,
    degree3_induced_forest,
    degree_profile,
    is_connected,
    wheel_recognition,
)


class NotCriticalError(ValueError):
    pass


class BoundViolationError(AssertionError):
    """A critical graph broke a proven bound: the implementation (or the theorem) is wrong."""


@dataclass(frozen=True)
class CriticalityReport:
    is_critical: bool
    connected: bool
    flow: Optional[Flow]
    failing_edge: Optional[int]
    contraction_has_flow: dict[int, bool]

    @property
    def failing_evidence(self) -> Union[Flow, int, None]:
        return self.flow if self.flow is not None else self.failing_edge

    def as_dict(self) -> dict:
        return {
            "critical": self.is_critical,
            "connected": self.connected,
            "flow": None if self.flow is None else self.flow.as_dict(),
            "failing_edge": self.failing_edge,
            "contractions": {str(e): ok for e, ok in self.contraction_has_flow.items()},
        }


def certify_criticality(g: MultiGraph, cap: Optional[int] = None, exhaustive: bool = True) -> CriticalityReport:
    """Connected, no nowhere-zero flow, and every single-edge contraction has one.

    Contracting a loop deletes it. With ``exhaustive=False`` the per-edge
    scan stops at the first contraction without a flow.
    """
    if not is_connected(g):
        return CriticalityReport(False, False, None, None, {})
    flow = oracle_nz_flow(g, cap)
    if flow is not None:
        return CriticalityReport(False, True, flow, None, {})
    results: dict[int, bool] = {}
    failing = None
    for e in g.edge_ids:
        ok = oracle_nz_flow(contract_or_delete(g, e), cap) is not None
        results[e] = ok
        if not ok and failing is None:
            failing = e
            if not exhaustive:
                break
    return CriticalityReport(failing is None, True, None, failing, results)


def is_k2(g: MultiGraph) -> bool:
    return g.vertex_count == 2 and g.m == 1 and not g.has_loops()


def is_k4(g: MultiGraph) -> bool:
    return g.vertex_count == 4 and g.m == 6 and g.is_simple()


@dataclass(frozen=True)
class BoundsReport:
    n: int
    m: int
    n3: int
    excluded: bool
    thm_lb: bool
    thm_best: bool
    l_main_value: int
    l_main_holds: bool
    l_main_equality: bool
    wheel: bool
    odd_wheel: bool
    min_degree_ok: bool
    deg3_forest: bool

    @property
    def lemma4(self) -> bool:
        return self.min_degree_ok and (self.deg3_forest or self.odd_wheel)

    def as_dict(self) -> dict:
        d = dict(self.__dict__)
        d["lemma4"] = self.lemma4
        d["lb_8n_plus_2_over_5"] = str(Fraction(8 * self.n + 2, 5))
        d["lb_5n_over_3"] = str(Fraction(5 * self.n, 3))
        return d


def bounds_report(g: MultiGraph, report: CriticalityReport) -> BoundsReport:
    """Recompute every density bound for a critical graph.

    K2 and K4 are exempt from the theorem flags; for any other critical graph
    a failed flag raises ``BoundViolationError``.
    """
    if not report.is_critical:
        raise NotCriticalError("bounds apply to critical graphs only")
    n, m = g.vertex_count, g.m
    prof = degree_profile(g)
    wheel = wheel_recognition(g)
    excluded = is_k2(g) or is_k4(g)
    main = n + prof.n3 - 1
    rep = BoundsReport(
        n=n,
        m=m,
        n3=prof.n3,
        excluded=excluded,
        thm_lb=5 * m >= 8 * n + 2,
        thm_best=3 * m >= 5 * n,
        l_main_value=main,
        l_main_holds=m >= main,
        l_main_equality=m == main,
        wheel=wheel is not None,
        odd_wheel=wheel is not None and wheel.is_odd,
        min_degree_ok=prof.min_degree >= 3,
        deg3_forest=degree3_induced_forest(g),
    )
    if not excluded:
        failures = [
            name
            for name, ok in [
                ("m >= (8n+2)/5", rep.thm_lb),
                ("m >= 5n/3", rep.thm_best),
                ("m >= n + n3 - 1", rep.l_main_holds),
                ("equality only for wheels", rep.l_main_equality == rep.wheel),
                ("min degree >= 3", rep.min_degree_ok),
                ("degree-3 forest or odd wheel", rep.lemma4),
            ]
            if not ok
        ]
        if failures:
            raise BoundViolationError(f"critical graph violates: {', '.join(failures)}")
    return rep


def isomorphic_brute_force(a: MultiGraph, b: MultiGraph) -> bool:
    """Isomorphism of the underlying undirected multigraphs by trying every bijection."""
    if a.vertex_count != b.vertex_count or a.m != b.m or sorted(a.degrees) != sorted(b.degrees):
        return False
    target = sorted(tuple(sorted(p)) for p in b.endpoint_list())
    for perm in itertools.permutations(range(a.vertex_count)):
        mapped = sorted(tuple(sorted((perm[t], perm[h]))) for t, h in a.endpoint_list())
        if mapped == target:
            return True
    return False


def canonical_edges(g: MultiGraph) -> tuple[tuple[int, int], ...]:
    """Lexicographically smallest sorted undirected edge list over all relabelings."""
    best = None
    pairs = g.endpoint_list()
    for perm in itertools.permutations(range(g.vertex_count)):
        cand = tuple(sorted(tuple(sorted((perm[t], perm[h]))) for t, h in pairs))
        if best is None or cand < best:
            best = cand
    return best if best is not None else ()


def canonical_graph(g: MultiGraph) -> MultiGraph:
    """Canonical relabeling with edges oriented lower to higher index, sorted."""
    return MultiGraph(g.vertex_count, tuple((i, t, h) for i, (t, h) in enumerate(canonical_edges(g))))


@dataclass(frozen=True)
class LemmaChecks:
    min_degree: bool
    forest_or_odd_wheel: bool
    cubic_is_k4: bool
    independent_for_all_u: bool
    zero_exactly_at_each_edge: bool
    loopless: bool

    def violations(self) -> list[str]:
        return [k for k, ok in self.__dict__.items() if not ok]


def lemma_checks(g: MultiGraph, cap: Optional[int] = None) -> LemmaChecks:
    """Structural statements every critical graph must satisfy, recomputed from scratch."""
    k2 = is_k2(g)
    prof = degree_profile(g)
    wheel = wheel_recognition(g)
    cubic = g.vertex_count > 0 and all(d == 3 for d in prof.degrees)
    if cubic:
        k4 = MultiGraph(4, tuple((i, t, h) for i, (t, h) in enumerate(itertools.combinations(range(4), 2))))
        cubic_ok = g.vertex_count == 4 and isomorphic_brute_force(g, k4)
    else:
        cubic_ok = True
    loopless = not g.has_loops()
    independent = loopless and all(
        isinstance(constraints.independence_test(g, u, strict=False), constraints.IndependentData)
        for u in range(g.vertex_count)
    )
    zero_ok = True
    for e in g.edge_ids:
        if g.is_loop(e):
            zero_ok = False
            break
        z = zero_edge_flow(g, e, cap)
        if z is None or not z.zero_exactly_at_edge:
            zero_ok = False
            break
    return LemmaChecks(
        min_degree=k2 or prof.min_degree >= 3,
        forest_or_odd_wheel=k2 or degree3_induced_forest(g) or (wheel is not None and wheel.is_odd),
        cubic_is_k4=k2 or cubic_ok,
        independent_for_all_u=independent,
        zero_exactly_at_each_edge=zero_ok,
        loopless=loopless,
    )


# -- enumeration -------------------------------------------------------------

MAX_SIMPLE_N = 7
MAX_MULTI_N = 3
MAX_MULTIPLICITY = 3


def _nx_simple(n: int, pairs) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from(pairs)
    return h


def _invariant(h: nx.Graph) -> tuple:
    degs = dict(h.degree())
    return tuple(sorted((degs[v], tuple(sorted(degs[w] for w in h[v]))) for v in h))


def simple_graph_classes(n: int) -> list[tuple[tuple[int, int], ...]]:
    """One representative edge list per isomorphism class of simple graphs on n vertices.

    Every graph on n vertices is some graph on n-1 vertices plus a vertex
    joined to a subset, so extending every class of the previous order by
    every subset is exhaustive. Candidates are bucketed by a degree invariant
    and compared exactly within a bucket.
    """
    if n <= 0:
        return [()]
    if n == 1:
        return [()]
    classes: list[tuple[tuple[int, int], ...]] = []
    buckets: dict[tuple, list[nx.Graph]] = defaultdict(list)
    new = n - 1
    for base in simple_graph_classes(n - 1):
        for r in range(n):
            for subset in itertools.combinations(range(new), r):
                pairs = tuple(sorted(base + tuple((v, new) for v in subset)))
                h = _nx_simple(n, pairs)
                key = _invariant(h)
                if any(nx.is_isomorphic(h, other) for other in buckets[key]):
                    continue
                buckets[key].append(h)
                classes.append(pairs)
    return classes


def connected_simple_graphs(n: int) -> list[MultiGraph]:
    out = []
    for pairs in simple_graph_classes(n):
        g = MultiGraph(n, tuple((i, t, h) for i, (t, h) in enumerate(pairs)))
        if is_connected(g):
            out.append(g)
    return sorted(out, key=lambda g: (g.m, g.edges))


def connected_multigraphs(n: int, max_mult: int = MAX_MULTIPLICITY) -> list[MultiGraph]:
    """Loopless connected multigraphs on n vertices, up to isomorphism, multiplicity <= max_mult."""
    pairs = list(itertools.combinations(range(n), 2))
    seen = set()
    out = []
    for mult in itertools.product(range(max_mult + 1), repeat=len(pairs)):
        ends = [p for p, k in zip(pairs, mult) for _ in range(k)]
        g = MultiGraph(n, tuple((i, t, h) for i, (t, h) in enumerate(ends)))
        if not is_connected(g):
            continue
        key = canonical_edges(g)
        if key in seen:
            continue
        seen.add(key)
        out.append(canonical_graph(g))
    return sorted(out, key=lambda g: (g.m, g.edges))


# -- survey ------------------------------------------------------------------


@dataclass
class SurveyConfig:
    max_n: int = 6
    simple_only: bool = True
    oracle_cap: Optional[int] = None
    run_lemma_checks: bool = True


@dataclass
class CensusEntry:
    n: int
    universe: str
    examined: int
    critical: list[MultiGraph] = field(default_factory=list)
    bounds: list[BoundsReport] = field(default_factory=list)
    lemma_violations: list[tuple[tuple, list[str]]] = field(default_factory=list)

    @property
    def ell(self) -> Optional[int]:
        return min((g.m for g in self.critical), default=None)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "universe": self.universe,
            "examined": self.examined,
            "critical": [[list(p) for p in g.endpoint_list()] for g in self.critical],
            "ell": self.ell,
            "bounds": [b.as_dict() for b in self.bounds],
            "lemma_violations": [[list(map(list, k)), v] for k, v in self.lemma_violations],
        }


@dataclass
class Census:
    config: SurveyConfig
    entries: list[CensusEntry]

    @property
    def all_bounds_held(self) -> bool:
        return all(
            b.excluded or (b.thm_lb and b.thm_best and b.l_main_holds and b.lemma4)
            for e in self.entries
            for b in e.bounds
        )

    @property
    def lemma_violations(self) -> int:
        return sum(len(e.lemma_violations) for e in self.entries)

    def as_dict(self) -> dict:
        return {
            "max_n": self.config.max_n,
            "simple_only": self.config.simple_only,
            "all_bounds_held": self.all_bounds_held,
            "lemma_violations": self.lemma_violations,
            "census": [e.as_dict() for e in self.entries],
        }


def _survey_universe(n: int, cfg: SurveyConfig) -> tuple[str, list[MultiGraph]]:
    graphs = connected_simple_graphs(n)
    universe = f"connected simple graphs on {n} vertices up to isomorphism"
    if not cfg.simple_only and n <= MAX_MULTI_N:
        graphs = connected_multigraphs(n)
        universe = (
            f"connected loopless multigraphs on {n} vertices, "
            f"edge multiplicity <= {MAX_MULTIPLICITY}, up to isomorphism"
        )
    return universe, graphs


def survey(max_n: int, simple_only: bool = True, config: Optional[SurveyConfig] = None) -> Census:
    """Exhaustive census of critical graphs for every order up to ``max_n``.

    Each critical graph is certified twice and gets a bounds report; lemma
    checks run on each unless disabled. ``ell`` is the minimum edge count
    within the stated universe only.
    """
    cfg = config or SurveyConfig(max_n=max_n, simple_only=simple_only)
    if cfg.max_n > MAX_SIMPLE_N:
        raise ValueError(f"survey is exhaustive only up to n = {MAX_SIMPLE_N}")
    entries = []
    for n in range(1, cfg.max_n + 1):
        universe, graphs = _survey_universe(n, cfg)
        entry = CensusEntry(n, universe, len(graphs))
        for g in graphs:
            rep = certify_criticality(g, cfg.oracle_cap, exhaustive=False)
            if not rep.is_critical:
                continue
            again = certify_criticality(g, cfg.oracle_cap)
            assert again.is_critical, "re-certification disagrees"
            assert not g.has_loops()
            g = canonical_graph(g)
            entry.critical.append(g)
            entry.bounds.append(bounds_report(g, again))
            if cfg.run_lemma_checks:
                bad = lemma_checks(g, cfg.oracle_cap).violations()
                if bad:
                    entry.lemma_violations.append((g.endpoint_list(), bad))
        order = sorted(range(len(entry.critical)), key=lambda i: (entry.critical[i].m, entry.critical[i].edges))
        entry.critical = [entry.critical[i] for i in order]
        entry.bounds = [entry.bounds[i] for i in order]
        entries.append(entry)
    return Census(cfg, entries)
