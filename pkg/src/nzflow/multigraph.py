"""Oriented multigraphs with stable edge identities.

Vertices are ``0..vertex_count-1``. Each edge is ``(edge_id, tail, head)`` and
points from tail to head; ``tail == head`` is a loop. Edge ids survive
contraction unchanged, so the id space may develop holes.
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence


class GraphError(ValueError):
    pass


class LoopContractionError(GraphError):
    """Contracting a loop is the same as deleting it; use ``delete_edge``."""


@dataclass(frozen=True)
class MultiGraph:
    vertex_count: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise GraphError("vertex_count must be nonnegative")
        edges = tuple(sorted((int(i), int(t), int(h)) for i, t, h in self.edges))
        seen = set()
        for i, t, h in edges:
            if i in seen:
                raise GraphError(f"duplicate edge id {i}")
            seen.add(i)
            if not (0 <= t < self.vertex_count and 0 <= h < self.vertex_count):
                raise GraphError(f"edge {i} ({t}, {h}) has an endpoint outside 0..{self.vertex_count - 1}")
        object.__setattr__(self, "edges", edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def n(self) -> int:
        return self.vertex_count

    @cached_property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(i for i, _, _ in self.edges)

    @cached_property
    def _column(self) -> dict[int, int]:
        return {e: k for k, e in enumerate(self.edge_ids)}

    @cached_property
    def _ends(self) -> dict[int, tuple[int, int]]:
        return {i: (t, h) for i, t, h in self.edges}

    def column(self, e: int) -> int:
        """Position of edge ``e`` in ``edges`` (the coordinate index of vectors)."""
        try:
            return self._column[e]
        except KeyError:
            raise GraphError(f"no edge with id {e}") from None

    def has_edge(self, e: int) -> bool:
        return e in self._column

    def endpoints(self, e: int) -> tuple[int, int]:
        try:
            return self._ends[e]
        except KeyError:
            raise GraphError(f"no edge with id {e}") from None

    def is_loop(self, e: int) -> bool:
        t, h = self.endpoints(e)
        return t == h

    def other_end(self, e: int, v: int) -> int:
        t, h = self.endpoints(e)
        if v == t:
            return h
        if v == h:
            return t
        raise GraphError(f"edge {e} is not incident with vertex {v}")

    @cached_property
    def _incident(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for i, t, h in self.edges:
            inc[t].append(i)
            if h != t:
                inc[h].append(i)
        return tuple(tuple(x) for x in inc)

    def incident(self, v: int) -> tuple[int, ...]:
        """Ids of edges incident with ``v`` in increasing order (a loop appears once)."""
        return self._incident[v]

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.vertex_count
        for _, t, h in self.edges:
            deg[t] += 1
            deg[h] += 1
        return tuple(deg)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def neighbors(self, v: int) -> list[int]:
        return sorted({self.other_end(e, v) for e in self.incident(v)})

    @cached_property
    def fingerprint(self) -> str:
        payload = repr((self.vertex_count, self.edges)).encode()
        return hashlib.sha256(payload).hexdigest()[:16]

    def has_loops(self) -> bool:
        return any(t == h for _, t, h in self.edges)

    def is_simple(self) -> bool:
        pairs = set()
        for _, t, h in self.edges:
            if t == h:
                return False
            key = (min(t, h), max(t, h))
            if key in pairs:
                return False
            pairs.add(key)
        return True

    def endpoint_list(self) -> list[tuple[int, int]]:
        return [(t, h) for _, t, h in self.edges]


def build_graph(vertex_count: int, endpoints: Iterable[Sequence[int]]) -> MultiGraph:
    """Graph whose edges are numbered 0, 1, ... in input order."""
    edges = []
    for i, pair in enumerate(endpoints):
        t, h = pair
        if not (0 <= t < vertex_count and 0 <= h < vertex_count):
            raise GraphError(f"edge {i} ({t}, {h}) has an endpoint outside 0..{vertex_count - 1}")
        edges.append((i, t, h))
    return MultiGraph(vertex_count, tuple(edges))


@dataclass(frozen=True)
class EdgeCorrespondence:
    """Bookkeeping from ``g / e`` back to ``g``.

    Edge ids are never renumbered, so ``child_to_parent`` is the identity on
    the surviving ids; it is kept explicit for callers that lift values.
    """

    child_to_parent: dict[int, int]
    contracted_edge: int
    vertex_map: tuple[int, ...]
    child: MultiGraph


def contract_edge(g: MultiGraph, e: int) -> tuple[MultiGraph, EdgeCorrespondence]:
    """Merge the endpoints of ``e`` and drop ``e``; other edges keep their ids.

    Edges parallel to ``e`` become loops. The merged vertex takes the smaller
    endpoint index and higher indices shift down by one.
    """
    t, h = g.endpoints(e)
    if t == h:
        raise LoopContractionError(f"edge {e} is a loop: contracting it equals deleting it")
    keep, gone = min(t, h), max(t, h)
    vmap = tuple(keep if v == gone else (v - 1 if v > gone else v) for v in range(g.vertex_count))
    edges = tuple((i, vmap[a], vmap[b]) for i, a, b in g.edges if i != e)
    child = MultiGraph(g.vertex_count - 1, edges)
    corr = EdgeCorrespondence({i: i for i, _, _ in edges}, e, vmap, child)
    return child, corr


def delete_edge(g: MultiGraph, e: int) -> MultiGraph:
    g.endpoints(e)
    return MultiGraph(g.vertex_count, tuple(x for x in g.edges if x[0] != e))


def contract_or_delete(g: MultiGraph, e: int) -> MultiGraph:
    """``g / e`` with the multigraph rule that contracting a loop deletes it."""
    if g.is_loop(e):
        return delete_edge(g, e)
    return contract_edge(g, e)[0]


def remove_loops(g: MultiGraph) -> MultiGraph:
    return MultiGraph(g.vertex_count, tuple(x for x in g.edges if x[1] != x[2]))


def relabel(g: MultiGraph, perm: Sequence[int]) -> MultiGraph:
    """Rename vertex ``v`` to ``perm[v]``; edge ids and orientations are kept."""
    return MultiGraph(g.vertex_count, tuple((i, perm[t], perm[h]) for i, t, h in g.edges))


def component_labels(g: MultiGraph) -> list[int]:
    label = [-1] * g.vertex_count
    c = 0
    for s in range(g.vertex_count):
        if label[s] >= 0:
            continue
        label[s] = c
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for e in g.incident(v):
                w = g.other_end(e, v)
                if label[w] < 0:
                    label[w] = c
                    queue.append(w)
        c += 1
    return label


def is_connected(g: MultiGraph) -> bool:
    return g.vertex_count <= 1 or max(component_labels(g)) == 0


def components(g: MultiGraph) -> list[tuple[MultiGraph, tuple[int, ...]]]:
    """Connected components as graphs that keep the original edge ids.

    Each entry pairs the component with the original index of each of its
    vertices.
    """
    label = component_labels(g)
    out = []
    for c in range(max(label, default=-1) + 1):
        verts = tuple(v for v in range(g.vertex_count) if label[v] == c)
        local = {v: k for k, v in enumerate(verts)}
        edges = tuple((i, local[t], local[h]) for i, t, h in g.edges if label[t] == c)
        out.append((MultiGraph(len(verts), edges), verts))
    return out


def bipartition(g: MultiGraph) -> Optional[tuple[int, ...]]:
    """A 0/1 coloring with every edge bichromatic, or None if an odd closed walk exists."""
    color = [-1] * g.vertex_count
    for s in range(g.vertex_count):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for e in g.incident(v):
                w = g.other_end(e, v)
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    return tuple(color)


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    n3: int

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)


def degree_profile(g: MultiGraph) -> DegreeProfile:
    """Degrees with loops counted twice, and the number of degree-3 vertices."""
    return DegreeProfile(g.degrees, sum(1 for d in g.degrees if d == 3))


def degree3_induced_forest(g: MultiGraph) -> bool:
    """Whether the degree-3 vertices induce an acyclic subgraph.

    A loop or a parallel pair inside the induced subgraph counts as a cycle.
    """
    deg3 = {v for v, d in enumerate(g.degrees) if d == 3}
    parent = list(range(g.vertex_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for _, t, h in g.edges:
        if t in deg3 and h in deg3:
            rt, rh = find(t), find(h)
            if rt == rh:
                return False
            parent[rt] = rh
    return True


@dataclass(frozen=True)
class Wheel:
    hub: int
    rim_length: int

    @property
    def is_odd(self) -> bool:
        return self.rim_length % 2 == 1


def wheel_recognition(g: MultiGraph) -> Optional[Wheel]:
    """Recognize a simple wheel: a cycle of length >= 3 plus a hub joined once to each rim vertex.

    For K4 every vertex qualifies as hub; the lowest index is reported.
    """
    n = g.vertex_count
    if n < 4 or g.m != 2 * (n - 1) or not g.is_simple():
        return None
    for hub in range(n):
        if g.degree(hub) != n - 1:
            continue
        rim_edges = [(t, h) for _, t, h in g.edges if hub not in (t, h)]
        rim_deg = [0] * n
        for t, h in rim_edges:
            rim_deg[t] += 1
            rim_deg[h] += 1
        if any(rim_deg[v] != 2 for v in range(n) if v != hub):
            continue
        # 2-regular on n-1 vertices; a single cycle iff connected
        adj: dict[int, list[int]] = {v: [] for v in range(n) if v != hub}
        for t, h in rim_edges:
            adj[t].append(h)
            adj[h].append(t)
        start = next(iter(adj))
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) == n - 1:
            return Wheel(hub, n - 1)
    return None
