"""Shared builders and independent oracles for the test suite."""

from __future__ import annotations

import itertools
import random

import pytest

from topoverlap import build_complex
from topoverlap.complexes import SimplicialComplex, as_graph


def path(n: int) -> SimplicialComplex:
    return build_complex([[i, i + 1] for i in range(n - 1)], extra_vertices=range(n))


def cycle(n: int) -> SimplicialComplex:
    return build_complex([[i, (i + 1) % n] for i in range(n)])


def clique(n: int) -> SimplicialComplex:
    return build_complex([[i, j] for i in range(n) for j in range(i + 1, n)])


def star(leaves: int) -> SimplicialComplex:
    return build_complex([[0, i] for i in range(1, leaves + 1)])


def grid(rows: int, cols: int) -> SimplicialComplex:
    edges = [[cols * r + c, cols * r + c + 1] for r in range(rows) for c in range(cols - 1)]
    edges += [[cols * r + c, cols * (r + 1) + c] for r in range(rows - 1) for c in range(cols)]
    return build_complex(edges)


def hypercube(dim: int) -> SimplicialComplex:
    return build_complex(
        [[a, a ^ (1 << b)] for a in range(2**dim) for b in range(dim) if a < a ^ (1 << b)]
    )


def random_graph(rng: random.Random, n: int, p: float) -> SimplicialComplex:
    edges = [[u, v] for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return build_complex(edges, extra_vertices=range(n))


def random_complex(rng: random.Random, n_max=32, deg_max=6) -> SimplicialComplex:
    """Random complex of dimension <= 2 with bounded edge-degree: sampled
    edges respecting the degree cap, then a random subset of the triangles
    they span."""
    n = rng.randint(1, n_max)
    deg = {v: 0 for v in range(n)}
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    target_m = rng.randint(0, n * deg_max // 2)
    edges = []
    for u, v in pairs:
        if len(edges) >= target_m:
            break
        if deg[u] < deg_max and deg[v] < deg_max:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    eset = set(edges)
    triangles = [
        [u, v, w]
        for u, v in edges
        for w in range(v + 1, n)
        if (u, w) in eset and (v, w) in eset and rng.random() < 0.7
    ]
    return build_complex(triangles + [list(e) for e in edges], extra_vertices=range(n))


# --- independent oracles -------------------------------------------------


def oracle_cutwidth(graph: SimplicialComplex) -> int:
    """Min over all orderings of the max gap crossing count, by definition."""
    verts, edges = as_graph(graph)
    n = len(verts)
    if n <= 1:
        return 0
    best = None
    for perm in itertools.permutations(verts):
        pos = {v: i for i, v in enumerate(perm)}
        width = 0
        for gap in range(n - 1):
            width = max(width, sum(1 for u, v in edges if min(pos[u], pos[v]) <= gap < max(pos[u], pos[v])))
        best = width if best is None else min(best, width)
    return best


def oracle_sweep(graph: SimplicialComplex, order) -> int:
    """Overlap of the sweep map by sampling every integer level and gap
    midpoint against interval membership."""
    verts, edges = as_graph(graph)
    pos = {v: i + 1.0 for i, v in enumerate(order)}
    n = len(verts)
    best = 0
    levels = [float(i) for i in range(1, n + 1)] + [i + 0.5 for i in range(1, n)]
    for z in levels:
        count = sum(1 for v in verts if pos[v] == z)
        count += sum(1 for u, v in edges if min(pos[u], pos[v]) <= z <= max(pos[u], pos[v]))
        best = max(best, count)
    return best


def oracle_separation(graph: SimplicialComplex) -> int:
    """Smallest balanced separator by scanning all vertex subsets."""
    verts, edges = as_graph(graph)
    n = len(verts)
    for size in range(n + 1):
        for cand in itertools.combinations(verts, size):
            removed = set(cand)
            comps = _components([v for v in verts if v not in removed],
                                [(u, v) for u, v in edges if u not in removed and v not in removed])
            if all(len(c) <= n / 2 for c in comps):
                return size
    raise AssertionError


def oracle_cheeger(graph: SimplicialComplex):
    """Exact vertex expansion by scanning all subsets of size <= n/2."""
    from fractions import Fraction

    verts, edges = as_graph(graph)
    n = len(verts)
    if n <= 1:
        return None
    adj = {v: set() for v in verts}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    best = None
    for size in range(1, n // 2 + 1):
        for cand in itertools.combinations(verts, size):
            a = set(cand)
            boundary = set().union(*(adj[v] for v in a)) - a
            val = Fraction(len(boundary), len(a))
            if best is None or val < best:
                best = val
    return best


def _components(verts, edges):
    adj = {v: [] for v in verts}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen, comps = set(), []
    for s in verts:
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(comp)
    return comps


def all_subgraph_values(host: SimplicialComplex, value_fn) -> dict:
    """max of value_fn over ALL subgraphs (any vertex subset, any edge
    subset) with at most r vertices, for every r.  Tiny hosts only."""
    verts, edges = as_graph(host)
    best = {r: 0 for r in range(len(verts) + 1)}
    for size in range(len(verts) + 1):
        for vs in itertools.combinations(verts, size):
            vset = set(vs)
            avail = [e for e in edges if e[0] in vset and e[1] in vset]
            for k in range(len(avail) + 1):
                for es in itertools.combinations(avail, k):
                    sub = build_complex([list(e) for e in es], extra_vertices=vs)
                    val = value_fn(sub)
                    for r in range(size, len(verts) + 1):
                        best[r] = max(best[r], val)
    return best


@pytest.fixture
def rng():
    return random.Random(12345)
