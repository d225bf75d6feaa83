"""Graph universes and outcome checks shared by the sweep scripts and the acceptance tests."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .flows import oracle_nz_flow, verify_flow
from .multigraph import MultiGraph, build_graph, contract_or_delete, is_connected
from .solver import FlowFound, IrrelevantEdge, NoFlow, solve_full, solve_sparse
from .families import random_multigraph


def labeled_connected_simple_graphs(n: int) -> Iterator[MultiGraph]:
    """Every connected labeled simple graph on ``n`` vertices, edges oriented low to high."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        ends = [p for k, p in enumerate(pairs) if mask >> k & 1]
        g = build_graph(n, ends)
        if is_connected(g):
            yield g


def random_sample(count: int = 1000, n: int = 7, max_m: int = 14, seed: int = 0) -> Iterator[MultiGraph]:
    """Seeded connected multigraphs on ``n`` vertices; every third one may carry loops."""
    rng = random.Random(seed)
    for i in range(count):
        m = rng.randint(n - 1, max_m)
        yield random_multigraph(n, m, seed=rng.randrange(2**32), loops=(i % 3 == 2))


def sparse_min_degree3(n: int, seed: int, slack: int = 3) -> Optional[MultiGraph]:
    """Connected multigraph with minimum degree 3 and at most ceil(5n/3) + slack edges.

    Returns None if the seed's construction overshoots the edge cap.
    """
    rng = random.Random(seed)
    cap = math.ceil(5 * n / 3) + slack
    order = list(range(n))
    rng.shuffle(order)
    pairs = [(order[i], order[rng.randrange(i)]) for i in range(1, n)]
    deg = [0] * n
    for a, b in pairs:
        deg[a] += 1
        deg[b] += 1
    while min(deg) < 3:
        low = [v for v in range(n) if deg[v] < 3]
        a = rng.choice(low)
        others = [v for v in low if v != a] or [v for v in range(n) if v != a]
        b = rng.choice(others)
        pairs.append((a, b))
        deg[a] += 1
        deg[b] += 1
    target = rng.randint(len(pairs), max(len(pairs), cap))
    while len(pairs) < target:
        a, b = rng.sample(range(n), 2)
        pairs.append((a, b))
    if len(pairs) > cap:
        return None
    rng.shuffle(pairs)
    return build_graph(n, [(a, b) if rng.random() < 0.5 else (b, a) for a, b in pairs])


@dataclass
class SweepStats:
    graphs: int = 0
    flows: int = 0
    no_flows: int = 0
    irrelevant: int = 0
    independent_runs: int = 0
    full_failures: list[str] = field(default_factory=list)
    sparse_failures: list[str] = field(default_factory=list)
    budget_failures: list[str] = field(default_factory=list)

    @property
    def failures(self) -> list[str]:
        return self.full_failures + self.sparse_failures + self.budget_failures

    def merge(self, other: "SweepStats") -> "SweepStats":
        out = SweepStats()
        for name, value in self.__dict__.items():
            setattr(out, name, value + getattr(other, name))
        return out


def check_graph(g: MultiGraph, stats: SweepStats, label: str = "") -> None:
    """Compare both solvers with the oracle on ``g`` and record any disagreement."""
    stats.graphs += 1
    truth = oracle_nz_flow(g) is not None
    trace: list = []
    full = solve_full(g, trace)
    if isinstance(full, FlowFound):
        stats.flows += 1
        if not verify_flow(g, full.flow).nowhere_zero:
            stats.full_failures.append(f"{label}: solve_full flow is not nowhere-zero")
    else:
        stats.no_flows += 1
    if truth != isinstance(full, FlowFound):
        stats.full_failures.append(f"{label}: solve_full says {type(full).__name__}, oracle says {truth}")

    out, _ = solve_sparse(g)
    if isinstance(out, FlowFound):
        if not verify_flow(g, out.flow).nowhere_zero or not truth:
            stats.sparse_failures.append(f"{label}: solve_sparse flow invalid")
    elif isinstance(out, NoFlow):
        if truth:
            stats.sparse_failures.append(f"{label}: solve_sparse NoFlow but oracle found a flow")
    else:
        stats.irrelevant += 1
        child_truth = oracle_nz_flow(contract_or_delete(g, out.edge)) is not None
        if child_truth != truth:
            stats.sparse_failures.append(f"{label}: edge {out.edge} ({out.provenance.value}) is not irrelevant")

    for _, _, budget in trace:
        if budget.b is not None:
            stats.independent_runs += 1
            if budget.b > budget.bound or budget.enumerated != 2 ** budget.b:
                stats.budget_failures.append(f"{label}: budget violated {budget.as_dict()}")


def sweep_labeled(max_n: int = 6) -> SweepStats:
    stats = SweepStats()
    for n in range(1, max_n + 1):
        for g in labeled_connected_simple_graphs(n):
            check_graph(g, stats, f"n={n} {g.endpoint_list()}")
    return stats


def sweep_random(count: int = 1000, n: int = 7, max_m: int = 14, seed: int = 0) -> SweepStats:
    stats = SweepStats()
    for i, g in enumerate(random_sample(count, n, max_m, seed)):
        check_graph(g, stats, f"random #{i} {g.endpoint_list()}")
    return stats


def budget_sweep(count: int = 100, seed: int = 0, sizes=range(8, 17)) -> SweepStats:
    """Solve seeded sparse min-degree-3 graphs, checking the free-edge bound on every pass."""
    stats = SweepStats()
    rng = random.Random(seed)
    sizes = list(sizes)
    while stats.graphs < count:
        n = rng.choice(sizes)
        g = sparse_min_degree3(n, rng.randrange(2**32))
        if g is None:
            continue
        stats.graphs += 1
        trace: list = []
        full = solve_full(g, trace)
        if isinstance(full, FlowFound):
            stats.flows += 1
            if not verify_flow(g, full.flow).nowhere_zero:
                stats.full_failures.append(f"budget #{stats.graphs}: invalid flow")
        else:
            stats.no_flows += 1
        for _, _, budget in trace:
            if budget.b is not None:
                stats.independent_runs += 1
                if budget.b > budget.bound or budget.enumerated != 2 ** budget.b:
                    stats.budget_failures.append(f"budget #{stats.graphs}: {budget.as_dict()}")
    return stats
