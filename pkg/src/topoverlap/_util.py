"""Small shared helpers: size guards, deterministic thread mapping, components."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

__all__ = ["SizeLimitError", "parallel_map", "components_of"]


class SizeLimitError(ValueError):
    """An input exceeds the configured limit of an exhaustive method."""


def parallel_map(fn, items, threads: int = 1):
    """Map ``fn`` over ``items`` preserving order.

    With ``threads > 1`` work is spread over a thread pool; results come back
    in input order, so reductions downstream are independent of the thread
    count.
    """
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def components_of(vertices, edges):
    """Connected components of a graph, each a sorted tuple of vertices."""
    adj = {v: [] for v in vertices}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = set()
    comps = []
    for start in sorted(adj):
        if start in seen:
            continue
        stack = [start]
        comp = []
        seen.add(start)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(tuple(sorted(comp)))
    return comps
