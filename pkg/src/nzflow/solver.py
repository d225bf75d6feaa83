"""Sparse-graph nowhere-zero Z3-flow algorithm and its recursive closure.

``solve_sparse`` makes a single pass and ends in exactly one of three
outcomes: a nowhere-zero flow, a proof that none exists, or an edge whose
contraction does not change the answer. Branch order is fixed: low-degree
vertices, then the cubic case, then the constraint-independence test from a
maximum-degree vertex. ``solve_full`` contracts the returned edges until a
definite answer appears and lifts the flow back.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

import numpy as np

from . import constraints
from .flows import Flow, extend_flow, verify_flow
from .multigraph import (
    GraphError,
    MultiGraph,
    bipartition,
    components,
    contract_edge,
    is_connected,
    remove_loops,
)

LOOP_VALUE = 1
_CHUNK = 1 << 14


class DisconnectedGraphError(GraphError):
    pass


class NoFlowReason(str, enum.Enum):
    DEGREE_ONE = "degree-1 vertex"
    NON_BIPARTITE_CUBIC = "non-bipartite cubic"
    VPERP_EXHAUSTED = "V^⊥ exhausted"
    COMPONENT = "component-wise failure"


class Provenance(str, enum.Enum):
    DEGREE_TWO = "degree-2"
    WITNESS = "dependency-witness"


class Branch(str, enum.Enum):
    TRIVIAL = "single-vertex"
    CUBIC = "cubic-bipartite"
    ENUMERATION = "vperp-enumeration"


@dataclass(frozen=True)
class FlowFound:
    flow: Flow
    via: Branch


@dataclass(frozen=True)
class NoFlow:
    reason: NoFlowReason


@dataclass(frozen=True)
class IrrelevantEdge:
    edge: int
    provenance: Provenance


SolveOutcome = Union[FlowFound, NoFlow, IrrelevantEdge]


@dataclass
class SparsityBudget:
    """Edge surplus over 5n/3 and the free-edge count it bounds.

    ``n`` and ``m`` describe the loopless graph the algorithm works on.
    ``b`` and ``enumerated`` are filled only by the independent branch.
    """

    n: int
    m: int
    k: Fraction
    b: Optional[int] = None
    enumerated: int = 0
    u: Optional[int] = None

    @property
    def bound(self) -> Fraction:
        return 3 * max(self.k, Fraction(0)) + 1

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "k": str(self.k),
            "b": self.b,
            "bound": str(self.bound),
            "enumerated": self.enumerated,
            "excluded_vertex": self.u,
        }


@dataclass
class Preprocessed:
    graph: MultiGraph
    log: list[tuple[str, int, int]] = field(default_factory=list)
    outcome: Optional[SolveOutcome] = None


def _attach_loops(original: MultiGraph, reduced_values: dict[int, int], log) -> Flow:
    values = dict(reduced_values)
    for action, e, x in log:
        if action == "remove-loop":
            values[e] = x
    return Flow.on(original, [values[e] for e in original.edge_ids])


def preprocess(g: MultiGraph) -> Preprocessed:
    """Strip loops, then handle single-vertex, degree-2 and degree-1 cases.

    A degree-2 vertex is looked for before a degree-1 vertex; either rule is
    sound, and this order reports an irrelevant edge on paths.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("input graph is not connected; split it into components first")
    log = [("remove-loop", e, LOOP_VALUE) for e, t, h in g.edges if t == h]
    reduced = remove_loops(g)
    out = Preprocessed(reduced, log)
    if reduced.vertex_count <= 1:
        out.outcome = FlowFound(_attach_loops(g, {}, log), Branch.TRIVIAL)
        return out
    degs = reduced.degrees
    for v, d in enumerate(degs):
        if d == 2:
            out.outcome = IrrelevantEdge(reduced.incident(v)[0], Provenance.DEGREE_TWO)
            return out
    if 1 in degs:
        out.outcome = NoFlow(NoFlowReason.DEGREE_ONE)
    return out


def cubic_bipartite_flow(g: MultiGraph) -> SolveOutcome:
    """A loopless connected 3-regular graph has a nowhere-zero Z3-flow iff it is bipartite.

    The flow sends one unit from side 0 to side 1 along every edge.
    """
    if g.has_loops() or any(d != 3 for d in g.degrees):
        raise GraphError("cubic_bipartite_flow needs a loopless 3-regular graph")
    sides = bipartition(g)
    if sides is None:
        return NoFlow(NoFlowReason.NON_BIPARTITE_CUBIC)
    values = [1 if sides[t] == 0 else 2 for _, t, _ in g.edges]
    return FlowFound(Flow.on(g, values), Branch.CUBIC)


def _enumerate_free_assignments(data: constraints.VPerpData, m: int):
    """Evaluate all 2^b nonzero assignments on the free edges; return (first hit row, count)."""
    b = data.b
    basis = np.array(data.basis, dtype=np.int64).reshape(b, m)
    first = None
    count = 0
    assignments = itertools.product((1, 2), repeat=b)
    while True:
        chunk = list(itertools.islice(assignments, _CHUNK))
        if not chunk:
            break
        a = np.array(chunk, dtype=np.int64).reshape(len(chunk), b)
        vals = (a @ basis) % 3
        count += len(chunk)
        if first is None:
            hits = np.flatnonzero(vals.all(axis=1))
            if hits.size:
                first = vals[hits[0]].tolist()
    return first, count


def solve_sparse(g: MultiGraph) -> tuple[SolveOutcome, SparsityBudget]:
    """One pass of the sparse-graph algorithm; exactly one outcome, deterministically."""
    pre = preprocess(g)
    r = pre.graph
    budget = SparsityBudget(r.vertex_count, r.m, r.m - Fraction(5 * r.vertex_count, 3))
    if pre.outcome is not None:
        return pre.outcome, budget

    if all(d == 3 for d in r.degrees):
        out = cubic_bipartite_flow(r)
        if isinstance(out, FlowFound):
            out = FlowFound(_attach_loops(g, out.flow.as_dict(), pre.log), out.via)
        return out, budget

    degs = r.degrees
    u = max(range(r.vertex_count), key=lambda v: (degs[v], -v))
    budget.u = u
    test = constraints.independence_test(r, u)
    if isinstance(test, constraints.DependencyWitness):
        e = constraints.witness_to_irrelevant_edge(r, test)
        return IrrelevantEdge(e, Provenance.WITNESS), budget

    data = constraints.vperp(r, u, test)
    budget.b = data.b
    assert data.b == r.m - (r.vertex_count + sum(1 for d in degs if d == 3) - 1)
    assert data.b <= budget.bound, f"free-edge count {data.b} exceeds 3k+1 = {budget.bound}"
    first, count = _enumerate_free_assignments(data, r.m)
    budget.enumerated = count
    assert count == 2 ** data.b
    if first is None:
        return NoFlow(NoFlowReason.VPERP_EXHAUSTED), budget
    flow = _attach_loops(g, dict(zip(r.edge_ids, first)), pre.log)
    assert verify_flow(g, flow).nowhere_zero
    return FlowFound(flow, Branch.ENUMERATION), budget


def solve_full(
    g: MultiGraph,
    trace: Optional[list] = None,
    _depth: int = 0,
    _cap: Optional[int] = None,
) -> Union[FlowFound, NoFlow]:
    """Run ``solve_sparse`` and resolve irrelevant edges by contracting and lifting.

    If ``trace`` is a list, every single pass appends ``(graph, outcome, budget)``.
    """
    cap = g.vertex_count if _cap is None else _cap
    if _depth > cap:
        raise RuntimeError("contraction recursion exceeded the vertex count")
    outcome, budget = solve_sparse(g)
    if trace is not None:
        trace.append((g, outcome, budget))
    if not isinstance(outcome, IrrelevantEdge):
        return outcome
    e = outcome.edge
    child, corr = contract_edge(g, e)
    sub = solve_full(child, trace, _depth + 1, cap)
    if isinstance(sub, NoFlow):
        return sub
    flow = extend_flow(g, e, sub.flow, corr)
    # both provenances guarantee the lifted value on e is nonzero
    assert verify_flow(g, flow).nowhere_zero, f"lift across irrelevant edge {e} produced a zero"
    return FlowFound(flow, sub.via)


def solve_components(g: MultiGraph) -> Union[FlowFound, NoFlow]:
    """``solve_full`` per connected component; a flow exists iff every component has one."""
    if is_connected(g):
        return solve_full(g)
    values: dict[int, int] = {}
    vias = []
    for comp, _ in components(g):
        out = solve_full(comp)
        if isinstance(out, NoFlow):
            return NoFlow(NoFlowReason.COMPONENT)
        values.update(out.flow.as_dict())
        vias.append(out.via)
    flow = Flow.on(g, [values[e] for e in g.edge_ids])
    assert verify_flow(g, flow).nowhere_zero
    via = Branch.ENUMERATION if Branch.ENUMERATION in vias else (vias[0] if vias else Branch.TRIVIAL)
    return FlowFound(flow, via)
