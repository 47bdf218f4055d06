"""Unit-cube covers on the half-integer lattice and the translate bound.

A cube set is a finite union of axis-aligned unit cubes whose corners sit on
the half-integer lattice; each cube is stored by its integer root m, the
cube being the product of intervals [m_j + 1/2, m_j + 3/2].  Such a cube
contains exactly one integer point per axis (m_j + 1), which makes all
skeleton intersections pure residue arithmetic.  Against the coarse side-r
cubulation rooted on r*Z^k, the (k-q)-skeleton neighborhood consists of the
unit cubes whose integer point lies on the skeleton in at least q axes.

Cover sizes are exact by construction: the minimal cover of a union of unit
cubes is the union itself.  The averaging step of the translate bound is
replaced by an exhaustive search over the r^k translation classes, which is
stronger at this scale and needs no measure theory.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from ._util import parallel_map

__all__ = [
    "CubeSet",
    "TranslateResult",
    "cube_in_Y",
    "cov_c",
    "intersect_with_Y",
    "find_translate",
    "cubes_covering_unit_ball",
    "balls_covering_cube",
]


@dataclass(frozen=True)
class CubeSet:
    """Ambient dimension and the set of integer cube roots."""

    k: int
    roots: frozenset

    @classmethod
    def of(cls, k: int, roots) -> "CubeSet":
        roots = frozenset(tuple(int(x) for x in r) for r in roots)
        if any(len(r) != k for r in roots):
            raise ValueError(f"every root needs exactly {k} coordinates")
        return cls(k, roots)

    def translate(self, v) -> "CubeSet":
        return CubeSet(self.k, frozenset(tuple(m - d for m, d in zip(r, v)) for r in self.roots))

    def sorted_roots(self) -> list:
        return sorted(self.roots)


@dataclass(frozen=True)
class TranslateResult:
    """Outcome of the exhaustive translate search: the minimising shift v,
    its skeleton-neighborhood cover count, and the guaranteed bound."""

    v: tuple
    count: int
    bound: int


def cube_in_Y(m, r: int, q: int, k: int) -> bool:
    """Does the unit cube rooted at m meet the (k-q)-skeleton neighborhood?

    True iff the cube's integer point m+1 lies on a multiple of r in at
    least q coordinates.
    """
    if r < 2 or not 0 <= q <= k:
        raise ValueError("need r >= 2 and 0 <= q <= k")
    return sum(1 for x in m if (x + 1) % r == 0) >= q


def cov_c(cubes: CubeSet) -> int:
    """Cover count of a union of unit cubes: the number of distinct roots."""
    return len(cubes.roots)


def intersect_with_Y(cubes: CubeSet, r: int, q: int) -> CubeSet:
    """The sub-union of cubes meeting the (k-q)-skeleton neighborhood."""
    keep = (m for m in cubes.roots if cube_in_Y(m, r, q, cubes.k))
    return CubeSet(cubes.k, frozenset(keep))


def find_translate(cubes: CubeSet, r: int, q: int, threads: int = 1) -> TranslateResult:
    """Best translate of a cube set away from the coarse skeleton.

    Searches every v in {0..r-1}^k (translation by r*Z^k is a symmetry of
    the skeleton) and returns the lexicographically smallest minimiser.
    Requires at most r^k cubes; the returned count is then guaranteed to be
    at most C(k, q) * r^(k-q).
    """
    k = cubes.k
    if len(cubes.roots) > r**k:
        raise ValueError(f"translate bound needs at most r^k = {r**k} cubes, got {len(cubes.roots)}")
    bound = math.comb(k, q) * r ** (k - q)

    def count_at(v):
        return sum(1 for m in cubes.roots if cube_in_Y(tuple(x - d for x, d in zip(m, v)), r, q, k))

    candidates = list(itertools.product(range(r), repeat=k))
    counts = parallel_map(count_at, candidates, threads)
    best_count, best_v = min(zip(counts, candidates))
    assert best_count <= bound
    return TranslateResult(best_v, best_count, bound)


def cubes_covering_unit_ball(center, k: int) -> CubeSet:
    """The 3^k unit cubes around a point; they cover its radius-1 ball.

    The cube holding coordinate c is rooted at floor(c - 1/2); its two axis
    neighbors extend the covered range to [c - 3/2, c + 3/2] per axis.
    """
    base = tuple(math.floor(c - 0.5) for c in center)
    roots = [
        tuple(b + d for b, d in zip(base, delta))
        for delta in itertools.product((-1, 0, 1), repeat=k)
    ]
    return CubeSet.of(k, roots)


def balls_covering_cube(m, k: int) -> list:
    """k^k unit-ball centers covering the cube rooted at m: the grid points
    root + 1/2 + (n_1, .., n_k)/k with each n_j in {0..k-1}."""
    return [
        tuple(x + 0.5 + n / k for x, n in zip(m, steps))
        for steps in itertools.product(range(k), repeat=k)
    ]
