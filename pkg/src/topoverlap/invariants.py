"""Exact dimension-1 invariants with witnesses.

Cutwidth (optimal linear arrangements), the sweep-map overlap bound pair,
balanced vertex separators and the vertex Cheeger constant.  Everything here
is exact: optima come with witnesses, Cheeger values are rationals, and the
only non-certified routine (the annealing heuristic) is clearly marked as an
upper bound.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._util import SizeLimitError, components_of
from .complexes import SimplicialComplex, as_graph

__all__ = [
    "LinearArrangement",
    "SeparatorWitness",
    "CheegerWitness",
    "To1Bounds",
    "cutwidth_exact",
    "cutwidth_bruteforce",
    "cutwidth_heuristic",
    "sweep_overlap",
    "to1_bounds",
    "separation_cut",
    "cheeger_exact",
    "DEFAULT_DP_LIMIT",
]

DEFAULT_DP_LIMIT = 24
_BRUTEFORCE_LIMIT = 9
_SUBSET_SCAN_LIMIT = 20

# numpy pays off for the subset DP only once the state space is large
_PURE_PYTHON_DP_MAX = 15


@dataclass(frozen=True)
class LinearArrangement:
    """A vertex ordering together with its cut profile.

    ``order[i]`` is the vertex at position i+1; ``cut_profile[i]`` counts the
    edges vw with position(v) < i+1 <= position(w).  ``width`` is the maximum
    profile entry (0 for at most one vertex).
    """

    order: tuple
    cut_profile: tuple
    width: int

    @classmethod
    def from_order(cls, graph: SimplicialComplex, order) -> "LinearArrangement":
        verts, edges = as_graph(graph)
        order = tuple(order)
        if sorted(order) != list(verts):
            raise ValueError("order is not a bijection on the graph's vertices")
        pos = {v: i + 1 for i, v in enumerate(order)}
        n = len(order)
        profile = [0] * n
        for u, v in edges:
            a, b = sorted((pos[u], pos[v]))
            for i in range(a + 1, b + 1):
                profile[i - 1] += 1
        return cls(order, tuple(profile), max(profile, default=0))

    @property
    def position(self) -> dict:
        return {v: i + 1 for i, v in enumerate(self.order)}


@dataclass(frozen=True)
class SeparatorWitness:
    """A minimum balanced separator: removing ``separator`` leaves every
    connected component with at most half of the original vertex count."""

    separator: tuple
    max_component: int


@dataclass(frozen=True)
class CheegerWitness:
    """Exact vertex Cheeger constant |boundary(A)| / |A| with its minimiser.

    ``value`` is a Fraction, or +inf when no witness exists (graphs with at
    most one vertex).
    """

    value: object
    witness_set: tuple | None

    @property
    def is_infinite(self) -> bool:
        return self.witness_set is None


@dataclass(frozen=True)
class To1Bounds:
    """Certified two-sided bounds for the minimal sweep overlap of a graph:
    cutwidth below, cutwidth + degree + 1 above, plus the overlap realized
    by the optimal arrangement's sweep map."""

    lower: int
    upper: int
    realized_overlap: int


def _index_graph(graph: SimplicialComplex):
    verts, edges = as_graph(graph)
    index = {v: i for i, v in enumerate(verts)}
    iedges = [(index[u], index[v]) for u, v in edges]
    adj = [0] * len(verts)
    for u, v in iedges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return verts, iedges, adj


def _suffix_dp_python(n, adj):
    """cut[S] and b[S] for all prefix sets S.

    cut[S] = edges between S and its complement; b[S] = best achievable max
    cut over completions of the prefix S.  b[0] is the cutwidth.
    """
    full = (1 << n) - 1
    deg = [adj[v].bit_count() for v in range(n)]
    cut = [0] * (full + 1)
    for s in range(1, full + 1):
        v = (s & -s).bit_length() - 1
        rest = s & (s - 1)
        cut[s] = cut[rest] + deg[v] - 2 * (adj[v] & rest).bit_count()
    inf = float("inf")
    b = [inf] * (full + 1)
    b[full] = 0
    for s in range(full - 1, -1, -1):
        best = inf
        free = full & ~s
        while free:
            bit = free & -free
            t = s | bit
            cand = cut[t]
            if b[t] > cand:
                cand = b[t]
            if cand < best:
                best = cand
            free ^= bit
        b[s] = best
    return cut, b


def _suffix_dp_numpy(n, iedges):
    """Same contract as :func:`_suffix_dp_python`, vectorised over subsets."""
    size = 1 << n
    states = np.arange(size, dtype=np.uint32)
    cut = np.zeros(size, dtype=np.uint16)
    for u, v in iedges:
        cut += ((states >> u) ^ (states >> v)).astype(np.uint16) & 1
    inf = np.uint16(60000)
    b = np.full(size, inf, dtype=np.uint16)
    b[size - 1] = 0
    # b[S] only depends on supersets; n in-place sweeps propagate every level
    for _ in range(n):
        for v in range(n):
            shape = (1 << (n - 1 - v), 2, 1 << v)
            bv = b.reshape(shape)
            cv = cut.reshape(shape)
            np.minimum(bv[:, 0, :], np.maximum(cv[:, 1, :], bv[:, 1, :]), out=bv[:, 0, :])
    return cut, b


def cutwidth_exact(graph: SimplicialComplex, dp_limit: int = DEFAULT_DP_LIMIT) -> LinearArrangement:
    """Optimal linear arrangement by dynamic programming over vertex subsets.

    The cut between a placed prefix and the rest depends only on the prefix
    set, so the min-max recursion runs over the 2^n subsets.  Returns the
    lexicographically smallest optimal ordering.
    """
    verts, iedges, adj = _index_graph(graph)
    n = len(verts)
    if n > dp_limit:
        raise SizeLimitError(
            f"graph has {n} > {dp_limit} vertices; use cutwidth_heuristic for an upper bound"
        )
    if n == 0:
        return LinearArrangement((), (), 0)
    if n <= _PURE_PYTHON_DP_MAX:
        cut, b = _suffix_dp_python(n, adj)
    else:
        cut, b = _suffix_dp_numpy(n, iedges)
    width = int(b[0])
    order = []
    s, reached = 0, 0
    for _ in range(n):
        for v in range(n):
            if s >> v & 1:
                continue
            t = s | (1 << v)
            c = int(cut[t])
            if max(reached, c, int(b[t])) <= width:
                order.append(verts[v])
                s, reached = t, max(reached, c)
                break
    arrangement = LinearArrangement.from_order(graph, order)
    assert arrangement.width == width
    return arrangement


_PERM_CACHE: dict = {}


def _perm_tables(n: int):
    if n not in _PERM_CACHE:
        perms = np.array(list(itertools.permutations(range(n))), dtype=np.int8)
        _PERM_CACHE[n] = (perms, np.argsort(perms, axis=1).astype(np.int8))
    return _PERM_CACHE[n]


def cutwidth_bruteforce(graph: SimplicialComplex) -> LinearArrangement:
    """Cutwidth by evaluating every one of the n! orderings.

    Exists as the independent oracle for :func:`cutwidth_exact`; shares no
    logic with the subset DP beyond the cut-profile definition.
    """
    verts, iedges, _ = _index_graph(graph)
    n = len(verts)
    if n > _BRUTEFORCE_LIMIT:
        raise SizeLimitError(f"brute force limited to {_BRUTEFORCE_LIMIT} vertices, got {n}")
    if n <= 1:
        return LinearArrangement(tuple(verts), (0,) * n, 0)
    perms, pos = _perm_tables(n)
    gaps = np.arange(n - 1, dtype=np.int8)
    widths = np.zeros(len(perms), dtype=np.int16)
    counts = np.zeros((len(perms), n - 1), dtype=np.int16)
    for u, v in iedges:
        lo = np.minimum(pos[:, u], pos[:, v])[:, None]
        hi = np.maximum(pos[:, u], pos[:, v])[:, None]
        counts += (lo <= gaps) & (gaps < hi)
    widths = counts.max(axis=1)
    best = int(widths.min())
    first = int(np.argmax(widths == best))  # permutations are in lex order
    order = tuple(verts[i] for i in perms[first])
    return LinearArrangement.from_order(graph, order)


def cutwidth_heuristic(
    graph: SimplicialComplex, seed: int = 0, budget: int = 2000
) -> LinearArrangement:
    """Simulated annealing over adjacent transpositions.

    Returns a valid arrangement, hence a certified upper bound on cutwidth;
    never used in certified inequalities.  Deterministic for a fixed seed.
    """
    verts, edges = as_graph(graph)
    n = len(verts)
    if n <= 1:
        return LinearArrangement(tuple(verts), (0,) * n, 0)
    rng = random.Random(seed)

    def width_of(order):
        pos = {v: i for i, v in enumerate(order)}
        profile = [0] * (n - 1)
        for u, v in edges:
            a, b = sorted((pos[u], pos[v]))
            for i in range(a, b):
                profile[i] += 1
        return max(profile, default=0)

    def descend(order):
        order = list(order)
        w = width_of(order)
        improved = True
        while improved:
            improved = False
            for i in range(n - 1):
                order[i], order[i + 1] = order[i + 1], order[i]
                w2 = width_of(order)
                if w2 < w:
                    w = w2
                    improved = True
                else:
                    order[i], order[i + 1] = order[i + 1], order[i]
        return order, w

    best_order = list(verts)
    best_w = width_of(best_order)
    restarts = 3
    for restart in range(restarts):
        order = list(verts)
        if restart:
            rng.shuffle(order)
        w = width_of(order)
        temp, cooling = 2.0, 0.995
        for _ in range(budget // restarts):
            i = rng.randrange(n - 1)
            order[i], order[i + 1] = order[i + 1], order[i]
            w2 = width_of(order)
            if w2 <= w or rng.random() < math.exp((w - w2) / max(temp, 1e-9)):
                w = w2
            else:
                order[i], order[i + 1] = order[i + 1], order[i]
            temp *= cooling
        order, w = descend(order)
        if (w, order) < (best_w, best_order):
            best_order, best_w = order, w
    return LinearArrangement.from_order(graph, best_order)


def sweep_overlap(graph: SimplicialComplex, arrangement: LinearArrangement) -> int:
    """Exact overlap of the piecewise-linear sweep map of an arrangement.

    The sweep sends vertex v to its position and edge vw to the interval
    between its endpoint positions.  The overlap at level z counts the closed
    simplices whose image contains z; it can only change at integer levels,
    so the maximum over integer levels and gap midpoints is exact.  A vertex
    contributes only at its own level, so isolated vertices count 1 there
    and nothing elsewhere.
    """
    verts, edges = as_graph(graph)
    pos = arrangement.position
    if set(pos) != set(verts):
        raise ValueError("arrangement does not match the graph")
    n = len(verts)
    if n == 0:
        return 0
    spans = [tuple(sorted((pos[u], pos[v]))) for u, v in edges]
    best = 0
    for level in range(1, n + 1):
        at_vertex = 1 + sum(1 for a, b in spans if a <= level <= b)
        strictly_between = sum(1 for a, b in spans if a <= level < b)
        best = max(best, at_vertex, strictly_between)
    return best


def to1_bounds(graph: SimplicialComplex, dp_limit: int = DEFAULT_DP_LIMIT) -> To1Bounds:
    """Certified sandwich: cutwidth <= minimal sweep overlap <= cutwidth + degree + 1."""
    arrangement = cutwidth_exact(graph, dp_limit=dp_limit)
    lower = arrangement.width
    upper = lower + graph.degree + 1
    realized = sweep_overlap(graph, arrangement)
    assert lower <= realized <= upper
    return To1Bounds(lower, upper, realized)


def separation_cut(graph: SimplicialComplex, limit: int = _SUBSET_SCAN_LIMIT) -> SeparatorWitness:
    """Minimum vertex set whose removal leaves all components of order <= n/2.

    Enumerates candidate separators in increasing size, lexicographically
    within a size, so the witness is the lexicographically smallest minimum
    separator.
    """
    verts, edges = as_graph(graph)
    n = len(verts)
    if n > limit:
        raise SizeLimitError(f"separation brute force limited to {limit} vertices, got {n}")
    half = n / 2
    for size in range(n + 1):
        for cand in itertools.combinations(verts, size):
            removed = set(cand)
            rest = [v for v in verts if v not in removed]
            kept = [(u, v) for u, v in edges if u not in removed and v not in removed]
            comps = components_of(rest, kept)
            largest = max((len(c) for c in comps), default=0)
            if largest <= half:
                return SeparatorWitness(tuple(cand), largest)
    raise AssertionError("removing all vertices always balances the graph")


def cheeger_exact(graph: SimplicialComplex, limit: int = _SUBSET_SCAN_LIMIT) -> CheegerWitness:
    """Exact vertex Cheeger constant via a full subset scan.

    h = min |boundary(A)| / |A| over non-empty A with |A| <= n/2, as an exact
    Fraction; +inf when n <= 1 (the minimum ranges over an empty set).
    """
    verts, _, adj = _index_graph(graph)
    n = len(verts)
    if n > limit:
        raise SizeLimitError(f"Cheeger subset scan limited to {limit} vertices, got {n}")
    if n <= 1:
        return CheegerWitness(float("inf"), None)
    best_val = None
    best_set = None
    max_size = n // 2
    for mask in range(1, 1 << n):
        size = mask.bit_count()
        if size > max_size:
            continue
        nb = 0
        rest = mask
        while rest:
            bit = rest & -rest
            nb |= adj[bit.bit_length() - 1]
            rest ^= bit
        boundary = (nb & ~mask).bit_count()
        val = Fraction(boundary, size)
        if best_val is None or val < best_val:
            cand = tuple(verts[i] for i in range(n) if mask >> i & 1)
            best_val, best_set = val, cand
        elif val == best_val:
            cand = tuple(verts[i] for i in range(n) if mask >> i & 1)
            if cand < best_set:
                best_set = cand
    return CheegerWitness(best_val, best_set)
