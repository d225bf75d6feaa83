"""Named graph families and a seeded random connected multigraph generator."""

from __future__ import annotations

import itertools
import random

from .multigraph import MultiGraph, build_graph

FAMILIES = ("k2", "k4", "wheel", "k33e", "random", "petersen", "k33")


def _sorted_simple(n: int, pairs) -> MultiGraph:
    return build_graph(n, sorted((min(a, b), max(a, b)) for a, b in pairs))


def k2() -> MultiGraph:
    return build_graph(2, [(0, 1)])


def k4() -> MultiGraph:
    return _sorted_simple(4, itertools.combinations(range(4), 2))


def wheel(spokes: int) -> MultiGraph:
    """Hub 0 joined to a rim cycle 1..spokes."""
    if spokes < 3:
        raise ValueError("a wheel needs at least 3 spokes")
    pairs = [(0, i) for i in range(1, spokes + 1)]
    pairs += [(i, i % spokes + 1) for i in range(1, spokes + 1)]
    return _sorted_simple(spokes + 1, pairs)


def k33e(n: int) -> MultiGraph:
    """K_{3,n-3} plus one edge joining two vertices of the part of size 3 (vertices 0 and 1)."""
    if n < 7:
        raise ValueError("k33e needs n >= 7")
    pairs = [(a, b) for a in range(3) for b in range(3, n)] + [(0, 1)]
    return _sorted_simple(n, pairs)


def k33() -> MultiGraph:
    return _sorted_simple(6, [(a, b) for a in range(3) for b in range(3, 6)])


def petersen() -> MultiGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return _sorted_simple(10, outer + spokes + inner)


def random_multigraph(n: int, m: int, seed: int = 0, loops: bool = False) -> MultiGraph:
    """Connected multigraph: a random spanning tree plus ``m - n + 1`` random extra edges.

    Orientation and edge order are random too; the result depends only on the arguments.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if m < n - 1:
        raise ValueError(f"a connected graph on {n} vertices needs at least {n - 1} edges")
    if n == 1 and m > 0 and not loops:
        raise ValueError("a single vertex can only carry loops")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    pairs = [(order[i], order[rng.randrange(i)]) for i in range(1, n)]
    while len(pairs) < m:
        a, b = rng.randrange(n), rng.randrange(n)
        if a == b and not loops:
            continue
        pairs.append((a, b))
    rng.shuffle(pairs)
    pairs = [(a, b) if rng.random() < 0.5 else (b, a) for a, b in pairs]
    return build_graph(n, pairs)


def generate(name: str, *params: int, seed: int = 0) -> MultiGraph:
    name = name.lower()
    if name == "k2":
        return k2()
    if name == "k4":
        return k4()
    if name == "k33":
        return k33()
    if name == "petersen":
        return petersen()
    if name == "wheel":
        if len(params) != 1:
            raise ValueError("wheel takes one parameter: spokes")
        return wheel(params[0])
    if name == "k33e":
        if len(params) != 1:
            raise ValueError("k33e takes one parameter: n")
        return k33e(params[0])
    if name == "random":
        if len(params) != 2:
            raise ValueError("random takes two parameters: n m")
        return random_multigraph(params[0], params[1], seed)
    raise ValueError(f"unknown family {name!r}; known: {', '.join(FAMILIES)}")
