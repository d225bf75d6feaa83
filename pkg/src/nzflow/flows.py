"""Z3-flows: incidence vectors, verification, brute-force search and lifting.

The brute-force oracle builds the flow space from fundamental cycles of a
spanning forest, so it shares no elimination code with the constraint-based
solver and can be used to check it.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence, Union

import numpy as np

from . import gf3
from .multigraph import EdgeCorrespondence, GraphError, MultiGraph, contract_edge

DEFAULT_ORACLE_CAP = 20
ORACLE_CAP_ENV = "NZFLOW_ORACLE_CAP"


class FlowError(ValueError):
    pass


class OracleTooLargeError(RuntimeError):
    """The flow space is too large to enumerate."""


def oracle_cap() -> int:
    raw = os.environ.get(ORACLE_CAP_ENV)
    return int(raw) if raw else DEFAULT_ORACLE_CAP


def incidence(g: MultiGraph, v: int, e: int) -> int:
    """[v, e] as a residue: 1 if e points into v, 2 (= -1) if out of v, 0 otherwise or for loops."""
    t, h = g.endpoints(e)
    if t == h:
        return 0
    if v == h:
        return 1
    if v == t:
        return 2
    return 0


def incidence_vector(g: MultiGraph, v: int) -> gf3.Vector:
    if not 0 <= v < g.vertex_count:
        raise GraphError(f"no vertex {v}")
    out = [0] * g.m
    for e in g.incident(v):
        out[g.column(e)] = incidence(g, v, e)
    return tuple(out)


@dataclass(frozen=True)
class Flow:
    """Edge values of a Z3-flow, ordered like ``graph.edges``."""

    values: gf3.Vector
    fingerprint: str
    edge_ids: tuple[int, ...]

    @classmethod
    def on(cls, g: MultiGraph, values: Sequence[int]) -> "Flow":
        if len(values) != g.m:
            raise FlowError(f"expected {g.m} values, got {len(values)}")
        return cls(gf3.vector(values), g.fingerprint, g.edge_ids)

    def value(self, e: int) -> int:
        return self.values[self.edge_ids.index(e)]

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.edge_ids, self.values))

    def zero_edges(self) -> list[int]:
        return [e for e, x in zip(self.edge_ids, self.values) if x == 0]


@dataclass(frozen=True)
class FlowVerdict:
    is_flow: bool
    violating_vertices: tuple[int, ...]
    zero_edges: tuple[int, ...]

    @property
    def nowhere_zero(self) -> bool:
        return self.is_flow and not self.zero_edges


def verify_flow(g: MultiGraph, candidate: Union[Flow, Sequence[int]]) -> FlowVerdict:
    if isinstance(candidate, Flow):
        if candidate.fingerprint != g.fingerprint:
            raise FlowError("flow belongs to a different graph")
        values = candidate.values
    else:
        values = gf3.vector(candidate)
    if len(values) != g.m:
        raise FlowError(f"candidate has dimension {len(values)}, graph has {g.m} edges")
    net = [0] * g.vertex_count
    for (_, t, h), x in zip(g.edges, values):
        net[h] += x
        net[t] -= x
    return FlowVerdict(
        is_flow=all(s % 3 == 0 for s in net),
        violating_vertices=tuple(v for v, s in enumerate(net) if s % 3),
        zero_edges=tuple(e for e, x in zip(g.edge_ids, values) if x == 0),
    )


def _spanning_forest(g: MultiGraph):
    """BFS forest: parent vertex, parent edge and depth per vertex, plus the non-tree edges."""
    parent = [-1] * g.vertex_count
    parent_edge = [-1] * g.vertex_count
    depth = [-1] * g.vertex_count
    tree = set()
    for s in range(g.vertex_count):
        if depth[s] >= 0:
            continue
        depth[s] = 0
        frontier = [s]
        while frontier:
            nxt = []
            for v in frontier:
                for e in g.incident(v):
                    w = g.other_end(e, v)
                    if depth[w] < 0:
                        depth[w] = depth[v] + 1
                        parent[w] = v
                        parent_edge[w] = e
                        tree.add(e)
                        nxt.append(w)
            frontier = nxt
    non_tree = [e for e in g.edge_ids if e not in tree]
    return parent, parent_edge, depth, non_tree


def _fundamental_cycle(g: MultiGraph, e: int, parent, parent_edge, depth) -> gf3.Vector:
    # one unit along e from tail to head, then back from head to tail through the tree
    out = [0] * g.m
    out[g.column(e)] = 1
    t, h = g.endpoints(e)
    if t == h:
        return tuple(out)
    a, b = h, t
    down = []  # tree edges on the tail side, walked from the meeting point down to t
    while a != b:
        if depth[a] >= depth[b]:
            f = parent_edge[a]
            out[g.column(f)] = 1 if g.endpoints(f)[0] == a else 2
            a = parent[a]
        else:
            down.append(b)
            b = parent[b]
    for child in down:
        f = parent_edge[child]
        out[g.column(f)] = 1 if g.endpoints(f)[1] == child else 2
    return tuple(out)


def flow_space_basis(g: MultiGraph) -> list[Flow]:
    """Fundamental-cycle basis of all Z3-flows; its size is m - n + (number of components)."""
    parent, parent_edge, depth, non_tree = _spanning_forest(g)
    return [Flow.on(g, _fundamental_cycle(g, e, parent, parent_edge, depth)) for e in non_tree]


_GRID_DIGITS = 9


@lru_cache(maxsize=None)
def _grid(d: int) -> np.ndarray:
    # all of {0,1,2}^d in lexicographic order, first coordinate most significant
    if d == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(itertools.product(range(3), repeat=d)), dtype=np.int64)


def oracle_nz_flow(g: MultiGraph, cap: Optional[int] = None) -> Optional[Flow]:
    """Exhaustive search for a nowhere-zero Z3-flow over the whole flow space.

    Combinations of the fundamental-cycle basis are tried in lexicographic
    order of their coefficients; the first nowhere-zero one is returned.
    """
    cap = oracle_cap() if cap is None else cap
    basis = flow_space_basis(g)
    d = len(basis)
    if d > cap:
        raise OracleTooLargeError(f"flow space has dimension {d}, above the oracle cap {cap}")
    if g.m == 0:
        return Flow.on(g, ())
    mat = np.array([b.values for b in basis], dtype=np.int64).reshape(d, g.m)
    low = min(d, _GRID_DIGITS)
    high = d - low
    grid = _grid(low)
    low_part = grid @ mat[high:]
    for prefix in itertools.product(range(3), repeat=high):
        offset = np.asarray(prefix, dtype=np.int64) @ mat[:high] if high else 0
        flows = (low_part + offset) % 3
        hits = np.flatnonzero(flows.all(axis=1))
        if hits.size:
            return Flow.on(g, flows[hits[0]].tolist())
    return None


def extend_flow(g: MultiGraph, e: int, contracted_flow: Flow, corr: EdgeCorrespondence) -> Flow:
    """Lift a flow of ``g / e`` to ``g`` by solving conservation for the value on ``e``.

    The value is computed at the tail of ``e`` and cross-checked at the head.
    """
    t, h = g.endpoints(e)
    if t == h:
        raise GraphError(f"edge {e} is a loop")
    if corr.contracted_edge != e:
        raise FlowError("correspondence belongs to a different contraction")
    if not verify_flow(corr.child, contracted_flow).is_flow:
        raise FlowError("contracted flow violates conservation")
    lifted = {corr.child_to_parent[c]: x for c, x in contracted_flow.as_dict().items()}

    def forced(v: int) -> int:
        s = sum(incidence(g, v, f) * lifted[f] for f in g.incident(v) if f != e)
        return (-gf3.inverse(incidence(g, v, e)) * s) % 3

    value = forced(t)
    assert value == forced(h), "conservation-forced values disagree at the two endpoints"
    lifted[e] = value
    flow = Flow.on(g, [lifted[f] for f in g.edge_ids])
    assert verify_flow(g, flow).is_flow
    return flow


@dataclass(frozen=True)
class ZeroEdgeFlow:
    flow: Flow
    edge: int
    zero_at_edge: bool
    zero_exactly_at_edge: bool


def zero_edge_flow(g: MultiGraph, e: int, cap: Optional[int] = None) -> Optional[ZeroEdgeFlow]:
    """Lift the oracle's nowhere-zero flow of ``g / e`` back to ``g``, if there is one."""
    child, corr = contract_edge(g, e)
    found = oracle_nz_flow(child, cap)
    if found is None:
        return None
    flow = extend_flow(g, e, found, corr)
    zeros = flow.zero_edges()
    return ZeroEdgeFlow(flow, e, flow.value(e) == 0, zeros == [e])
