"""Per-vertex constraint subspaces and what their (in)dependence tells us.

Every vertex ``v`` contributes a subspace of edge space that annihilates
every nowhere-zero Z3-flow: the span of its incidence vector, plus, at a
degree-3 vertex, the pair vector forcing equal outflow on two of its edges.
With one vertex ``u`` left out, either these subspaces are independent, and
the flows they cut out are parametrized by a small set of free edges, or a
dependency exists and yields an edge that can be contracted without changing
whether a nowhere-zero flow exists.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Union

from . import gf3
from .flows import incidence, incidence_vector
from .multigraph import GraphError, MultiGraph, is_connected


class PreconditionError(ValueError):
    pass


def delta_pair(g: MultiGraph, v: int, e1: int, e2: int) -> gf3.Vector:
    """Vector with ``[v,e1]`` at e1, ``-[v,e2]`` at e2, zero elsewhere."""
    if e1 == e2:
        raise GraphError("delta_pair needs two distinct edges")
    for e in (e1, e2):
        if g.is_loop(e):
            raise GraphError(f"edge {e} is a loop")
        if v not in g.endpoints(e):
            raise GraphError(f"edge {e} is not incident with vertex {v}")
    out = [0] * g.m
    out[g.column(e1)] = incidence(g, v, e1)
    out[g.column(e2)] = (-incidence(g, v, e2)) % 3
    return tuple(out)


def vertex_generators(g: MultiGraph, v: int) -> tuple[gf3.Vector, ...]:
    """Generators of the constraint subspace at ``v``.

    Degree 3 uses the two lowest-id incident edges for the pair vector; the
    spanned subspace does not depend on that choice.
    """
    delta = incidence_vector(g, v)
    if g.degree(v) != 3:
        return (delta,)
    inc = g.incident(v)
    if any(g.is_loop(e) for e in inc):
        raise GraphError(f"vertex {v} carries a loop")
    pair = delta_pair(g, v, inc[0], inc[1])
    # inc[2] is in the support of delta but not of pair, so the two are independent
    assert delta[g.column(inc[2])] != 0 and pair[g.column(inc[2])] == 0
    return (delta, pair)


@dataclass(frozen=True)
class DeltaGenerators:
    per_vertex: dict[int, tuple[gf3.Vector, ...]]
    ncols: int

    def matrix(self, exclude: int) -> gf3.Gf3Matrix:
        rows, labels = [], []
        for v, gens in sorted(self.per_vertex.items()):
            if v == exclude:
                continue
            for k, r in enumerate(gens):
                rows.append(r)
                labels.append((v, k))
        return gf3.Gf3Matrix(tuple(rows), self.ncols, tuple(labels))

    def span(self, v: int) -> set[gf3.Vector]:
        gens = self.per_vertex[v]
        return {
            gf3.combine(coeffs, gens, self.ncols)
            for coeffs in itertools.product(range(3), repeat=len(gens))
        }


def delta_generators(g: MultiGraph) -> DeltaGenerators:
    if g.has_loops():
        raise GraphError("constraint generators need a loopless graph")
    return DeltaGenerators({v: vertex_generators(g, v) for v in range(g.vertex_count)}, g.m)


@dataclass(frozen=True)
class IndependentData:
    u: int
    generators: DeltaGenerators
    matrix: gf3.Gf3Matrix
    echelon: gf3.EchelonForm

    @property
    def rank(self) -> int:
        return self.echelon.rank


@dataclass(frozen=True)
class DependencyWitness:
    """Vectors ``x_v`` in the constraint subspaces, summing to zero, with ``x_u = 0``."""

    u: int
    vectors: dict[int, gf3.Vector]
    coefficients: dict[int, tuple[int, ...]]

    def nonzero_vertices(self) -> list[int]:
        return [v for v, x in sorted(self.vectors.items()) if any(x)]


def _check_preconditions(g: MultiGraph, u: int, strict: bool) -> None:
    if not 0 <= u < g.vertex_count:
        raise PreconditionError(f"no vertex {u}")
    if g.has_loops():
        raise PreconditionError("graph has loops")
    if not strict:
        return
    if not is_connected(g):
        raise PreconditionError("graph is not connected")
    if min(g.degrees, default=0) < 3:
        raise PreconditionError("minimum degree is below 3")
    if g.degree(u) < 4:
        raise PreconditionError(f"excluded vertex {u} has degree {g.degree(u)} < 4")


def independence_test(
    g: MultiGraph, u: int, strict: bool = True
) -> Union[IndependentData, DependencyWitness]:
    """Decide whether the constraint subspaces of all vertices other than ``u`` are independent.

    ``strict=False`` drops the connectivity and degree preconditions; test
    harnesses use it to probe graphs where ``u`` has degree 3 or less.
    """
    _check_preconditions(g, u, strict)
    gens = delta_generators(g)
    mat = gens.matrix(exclude=u)
    ef = gf3.rref(mat)
    expected = sum(len(gs) for v, gs in gens.per_vertex.items() if v != u)
    assert mat.nrows == expected
    if ef.rank == expected:
        return IndependentData(u, gens, mat, ef)

    lam = ef.null_combinations[0]
    by_vertex: dict[int, list[int]] = {v: [] for v in range(g.vertex_count)}
    for (v, _), c in zip(mat.labels, lam):
        by_vertex[v].append(c)
    vectors, coefficients = {}, {}
    for v in range(g.vertex_count):
        if v == u:
            vectors[v] = gf3.zeros(g.m)
            coefficients[v] = ()
            continue
        cs = tuple(by_vertex[v])
        x = gf3.combine(cs, gens.per_vertex[v], g.m)
        # the generators at v are independent, so a nonzero coefficient block cannot vanish
        assert any(x) == any(cs)
        vectors[v] = x
        coefficients[v] = cs
    witness = DependencyWitness(u, vectors, coefficients)
    _validate_witness(g, witness, gens)
    return witness


def _validate_witness(g: MultiGraph, w: DependencyWitness, gens: DeltaGenerators) -> None:
    if set(w.vectors) != set(range(g.vertex_count)):
        raise GraphError("witness must assign a vector to every vertex")
    if any(w.vectors[w.u]):
        raise GraphError("witness is nonzero at the excluded vertex")
    total = gf3.zeros(g.m)
    for v, x in w.vectors.items():
        if len(x) != g.m:
            raise GraphError(f"witness vector at {v} has the wrong dimension")
        if x not in gens.span(v):
            raise GraphError(f"witness vector at {v} is outside its constraint subspace")
        total = gf3.add(total, x)
    if any(total):
        raise GraphError("witness vectors do not sum to zero")
    if not w.nonzero_vertices():
        raise GraphError("witness is identically zero")


def witness_to_irrelevant_edge(g: MultiGraph, w: DependencyWitness) -> int:
    """An edge ``e`` with: g has a nowhere-zero Z3-flow iff g / e does.

    Breadth-first search from the excluded vertex through vertices whose
    witness vector is zero; the first edge reaching a vertex with a nonzero
    vector is returned. Neighbors are scanned by vertex index, then edge id.
    """
    gens = delta_generators(g)
    _validate_witness(g, w, gens)
    zero = {v for v, x in w.vectors.items() if not any(x)}
    seen = {w.u}
    queue = deque([w.u])
    while queue:
        a = queue.popleft()
        for e in sorted(g.incident(a), key=lambda f: (g.other_end(f, a), f)):
            b = g.other_end(e, a)
            if b in zero:
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
                continue
            assert g.degree(b) == 3, "nonzero witness vector with zero entry forces degree 3"
            assert w.vectors[b][g.column(e)] == 0
            return e
    raise GraphError("zero region of the witness has no boundary; is the graph connected?")


@dataclass(frozen=True)
class VPerpData:
    """Orthogonal complement of the constraint span, parametrized by free edges.

    ``coefficients[e]`` expresses the value on a non-free edge ``e`` as a
    combination of the values on ``free_edges``.
    """

    u: int
    b: int
    free_edges: tuple[int, ...]
    basis: tuple[gf3.Vector, ...]
    coefficients: dict[int, tuple[int, ...]]
    kernel: gf3.KernelData

    def reconstruct(self, free_values) -> gf3.Vector:
        return self.kernel.reconstruct(free_values)


def vperp(g: MultiGraph, u: int, independent: IndependentData) -> VPerpData:
    if independent.u != u:
        raise PreconditionError("independence data was computed for a different vertex")
    kd = gf3.kernel_from_echelon(independent.echelon)
    ids = g.edge_ids
    b = g.m - independent.rank
    assert b == len(kd.free_columns)
    data = VPerpData(
        u=u,
        b=b,
        free_edges=tuple(ids[c] for c in kd.free_columns),
        basis=kd.basis,
        coefficients={ids[p]: cs for p, cs in kd.coefficients.items()},
        kernel=kd,
    )
    for x in data.basis:
        assert all(gf3.dot(r, x) == 0 for r in independent.matrix.rows)
    return data
