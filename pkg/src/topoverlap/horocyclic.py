"""Coarse constructions of finite complexes into horocyclic products of trees.

The target is modelled directly on tuples of binary strings: a vertex of the
depth-limited product is a (d+1)-tuple of words whose lengths sum to
(d+1)*ell, and two vertices are adjacent when one coordinate of the first
extends the matching coordinate of the second by one trailing character and
vice versa at another coordinate, all remaining coordinates equal.  The
ambient tree is never materialised (a coordinate's height is its length
minus ell).

The source complex is subdivided in two stages: barycentric subdivision,
then the lattice refinement whose vertices are integer weight functions on
chains of simplices with a fixed total weight.  The vertex-wise coding map
from that refinement into the word model is simplicial; together with the
bookkeeping of which original simplex carries each refinement cell it yields
a validated coarse construction with a measured interference constant and a
measured volume.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .complexes import (
    MalformedComplexError,
    SimplicialComplex,
    barycentric_subdivision,
    build_complex,
    induced_subcomplex,
)
from .reporting import CheckRow

__all__ = [
    "EncodingError",
    "ConstructionError",
    "HorocyclicComplex",
    "DLatticeComplex",
    "CoarseConstruction",
    "binary_code",
    "words_adjacent",
    "build_H_ell",
    "build_D_ell",
    "map_s",
    "coarse_construct",
    "identity_construction",
    "validate_construction",
    "compose",
    "write_manifest",
    "parse_manifest",
    "revalidate_manifest",
]

DEFAULT_VERTEX_LIMIT = 10**6


class EncodingError(ValueError):
    """A vertex id does not fit the binary code width."""


class ConstructionError(RuntimeError):
    """An internal guarantee of the construction failed; indicates a bug."""


def binary_code(k: int, i: int, ell: int, d: int) -> str:
    """First ``i`` characters of d+1 concatenated copies of the ell-bit
    big-endian binary representation of ``k``."""
    if not 0 <= k < 2**ell:
        raise EncodingError(f"id {k} does not fit in {ell} bits")
    if not 0 <= i <= (d + 1) * ell:
        raise EncodingError(f"prefix length {i} outside [0, {(d + 1) * ell}]")
    block = format(k, f"0{ell}b")
    return (block * (d + 1))[:i]


def _extends(x: str, y: str) -> bool:
    return len(x) == len(y) + 1 and x.startswith(y)


def words_adjacent(a, b) -> bool:
    """Adjacency of two word tuples: exactly two coordinates differ, one
    growing by a single trailing character and the other shrinking by one."""
    if len(a) != len(b):
        raise ValueError("word tuples must have the same arity")
    diff = [i for i in range(len(a)) if a[i] != b[i]]
    if len(diff) != 2:
        return False
    i, j = diff
    return (_extends(a[i], b[i]) and _extends(b[j], a[j])) or (
        _extends(b[i], a[i]) and _extends(a[j], b[j])
    )


def _word_neighbors(w):
    """Rule neighbors of a word tuple: shrink one coordinate, grow another."""
    arity = len(w)
    for j in range(arity):
        if not w[j]:
            continue
        for k in range(arity):
            if k == j:
                continue
            for bit in "01":
                yield tuple(
                    w[t][:-1] if t == j else (w[t] + bit if t == k else w[t])
                    for t in range(arity)
                )


def _maximal_cliques(ids, nbrs):
    """Maximal cliques (including isolated vertices) via Bron-Kerbosch with
    pivoting; output sorted for determinism."""
    cliques = []

    def expand(r, p, x):
        if not p and not x:
            cliques.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda u: len(nbrs[u] & p))
        for v in sorted(p - nbrs[pivot]):
            expand(r | {v}, p & nbrs[v], x & nbrs[v])
            p = p - {v}
            x = x | {v}

    expand(frozenset(), frozenset(ids), frozenset())
    return sorted(cliques)


@dataclass(frozen=True)
class HorocyclicComplex:
    """Finite piece of the horocyclic product in the word model."""

    d: int
    ell: int
    complex: SimplicialComplex
    words: tuple  # vertex id -> word tuple

    @property
    def index(self) -> dict:
        return {w: i for i, w in enumerate(self.words)}


def build_H_ell(d: int, ell: int, max_vertices: int = DEFAULT_VERTEX_LIMIT) -> HorocyclicComplex:
    """All word tuples of total length (d+1)*ell, with rule edges and flag
    completion.  Vertex ids follow (length profile, words) order."""
    if d < 1 or ell < 1:
        raise ValueError("need d >= 1 and ell >= 1")
    total = (d + 1) * ell
    count = math.comb(total + d, d) * 2**total
    if count > max_vertices:
        raise ConstructionError(f"would create {count} > {max_vertices} vertices")

    words = []
    for cut in itertools.combinations(range(total + d), d):
        cuts = (-1, *cut, total + d)
        lengths = [cuts[t + 1] - cuts[t] - 1 for t in range(d + 1)]
        pools = [["".join(b) for b in itertools.product("01", repeat=m)] for m in lengths]
        words.extend(itertools.product(*pools))
    words.sort(key=lambda w: (tuple(len(x) for x in w), w))
    index = {w: i for i, w in enumerate(words)}

    nbrs = {i: set() for i in range(len(words))}
    for i, w in enumerate(words):
        for nb in _word_neighbors(w):
            j = index.get(nb)
            if j is not None:
                nbrs[i].add(j)
                nbrs[j].add(i)
    cliques = _maximal_cliques(range(len(words)), nbrs)
    if any(len(c) > d + 1 for c in cliques):
        raise ConstructionError("flag completion exceeded the product dimension")
    cx = build_complex(cliques, extra_vertices=range(len(words)))
    assert cx.degree <= 2 * d * (d + 1)
    return HorocyclicComplex(d, ell, cx, tuple(words))


def _canonical_function(items) -> tuple:
    """Canonical form of a weight function: ((sorted simplex), count) pairs
    ordered by (size, simplex)."""
    out = [(tuple(sorted(simplex)), int(cnt)) for simplex, cnt in items]
    out.sort(key=lambda p: (len(p[0]), p[0]))
    return tuple(out)


def _support_is_chain(sets) -> bool:
    ordered = sorted(map(frozenset, sets), key=len)
    return all(a < b for a, b in zip(ordered, ordered[1:]))


@dataclass(frozen=True)
class DLatticeComplex:
    """Lattice refinement of a barycentric complex.

    Vertices are the admissible weight functions (``functions[i]`` is the
    canonical form of vertex i); ``complex`` holds them with the refinement's
    1-simplices (plus higher simplices when built with ``with_higher``).
    ``provenance`` maps each stored simplex to the top of its support chain:
    the smallest original simplex carrying it.
    """

    d: int
    ell: int
    functions: tuple
    complex: SimplicialComplex
    provenance: dict

    @property
    def index(self) -> dict:
        return {f: i for i, f in enumerate(self.functions)}


def build_D_ell(
    bary: SimplicialComplex,
    labels: dict,
    ell: int,
    d: int,
    max_vertices: int = DEFAULT_VERTEX_LIMIT,
    with_higher: bool = False,
) -> DLatticeComplex:
    """All admissible weight functions on the chains of ``bary`` and their
    increment/decrement 1-simplices.

    ``labels`` identifies each barycentric vertex with its original simplex.
    A vertex is a function with chain support and total weight (d+1)*ell; an
    edge moves one unit of weight between two sets whose join with the
    support is still a chain.  With ``with_higher`` the k-simplices (cliques
    of the edge relation whose supports join into a chain, k <= d) are
    enumerated as well.
    """
    total = (d + 1) * ell
    chains = sorted(bary.simplices, key=lambda c: (len(c), sorted(c)))
    expected = sum(math.comb(total - 1, len(c) - 1) for c in chains)
    if expected > max_vertices:
        raise ConstructionError(f"would create {expected} > {max_vertices} vertices")

    functions = []
    chain_of = {}
    for chain in chains:
        members = sorted(chain)
        sets = sorted((labels[m] for m in members), key=len)
        assert _support_is_chain(sets), "barycentric simplex is not a chain"
        assert len({len(s) for s in sets}) == len(sets)
        for cut in itertools.combinations(range(1, total), len(members) - 1):
            bounds = (0, *cut, total)
            weights = [bounds[t + 1] - bounds[t] for t in range(len(members))]
            fn = _canonical_function(zip(sets, weights))
            functions.append(fn)
            chain_of[fn] = chain
    functions.sort()
    index = {f: i for i, f in enumerate(functions)}
    assert len(index) == len(functions) == expected

    ext_cache: dict = {}

    def extensions(chain):
        """Original simplices whose join with the chain is again a chain."""
        hit = ext_cache.get(chain)
        if hit is None:
            hit = tuple(
                label
                for other, label in labels.items()
                if other not in chain and frozenset((*chain, other)) in bary.simplices
            )
            ext_cache[chain] = hit
        return hit

    edges = set()
    provenance = {}
    top_of = []
    for fn in functions:
        top_of.append(frozenset(fn[-1][0]))  # canonical order puts the largest set last
    for fn in functions:
        i = index[fn]
        provenance[frozenset((i,))] = top_of[i]
        chain = chain_of[fn]
        grow = [frozenset(s) for s, _ in fn] + list(extensions(chain))
        base = dict(fn)
        for dec, _cnt in fn:
            for inc in grow:
                inc_key = tuple(sorted(inc))
                if inc_key == dec:
                    continue
                moved = dict(base)
                moved[dec] -= 1
                moved[inc_key] = moved.get(inc_key, 0) + 1
                neighbor = _canonical_function((s, c) for s, c in moved.items() if c > 0)
                j = index.get(neighbor)
                if j is not None and j != i:
                    edges.add(frozenset((i, j)))
    for e in edges:
        a, b = e
        provenance[e] = max(top_of[a], top_of[b], key=len)

    simplices = [frozenset((i,)) for i in range(len(functions))] + list(edges)
    if with_higher:
        higher = _lattice_cliques(functions, edges, 3, d + 1, strict_cap=True)
        for simplex in higher:
            provenance[frozenset(simplex)] = max((top_of[i] for i in simplex), key=len)
        simplices += [frozenset(s) for s in higher]

    cx = SimplicialComplex(frozenset(range(len(functions))), frozenset(simplices))
    original = set(map(frozenset, labels.values()))
    deg_counts: dict = {}
    for s in original:
        if len(s) == 2:
            for v in s:
                deg_counts[v] = deg_counts.get(v, 0) + 1
    delta = max(deg_counts.values(), default=0)
    assert cx.degree <= delta * 2**delta
    assert len(functions) <= len(bary.simplices) * (total + 1) ** d
    _assert_dimension_witness(chains, labels, index, total, d)
    return DLatticeComplex(d, ell, tuple(functions), cx, provenance)


def _assert_dimension_witness(chains, labels, index, total, d):
    """The refinement reaches the source dimension: the corner cells of any
    longest chain give d+1 pairwise one-move functions, all admissible."""
    if d == 0 or total < 2:
        return
    longest = max(chains, key=len)
    if len(longest) < d + 1:
        return
    sets = sorted((labels[m] for m in longest), key=len)
    witness = [_canonical_function([(sets[0], total)])]
    for t in range(1, d + 1):
        witness.append(_canonical_function([(sets[0], total - 1), (sets[t], 1)]))
    assert all(fn in index for fn in witness)
    for a, b in itertools.combinations(witness, 2):
        assert _one_move_apart(a, b)


def _lattice_cliques(functions, edges, size_min, size_max, strict_cap=False):
    """Cliques of the refinement edge relation whose supports join into a
    chain, for sizes in [size_min, size_max]."""
    nbrs = {i: set() for i in range(len(functions))}
    for e in edges:
        a, b = e
        nbrs[a].add(b)
        nbrs[b].add(a)

    def join_is_chain(ids):
        union = set()
        for i in ids:
            union.update(frozenset(s) for s, _ in functions[i])
        return _support_is_chain(union)

    out = []
    current = sorted(tuple(sorted(e)) for e in edges)
    size = 2
    while size < size_max:
        nxt = []
        for simplex in current:
            common = set.intersection(*(nbrs[i] for i in simplex))
            for extra in sorted(c for c in common if c > simplex[-1]):
                cand = simplex + (extra,)
                if join_is_chain(cand):
                    nxt.append(cand)
        size += 1
        if size >= size_min:
            out.extend(nxt)
        current = nxt
    if strict_cap and current:
        for simplex in current:
            common = set.intersection(*(nbrs[i] for i in simplex))
            for extra in (c for c in common if c > simplex[-1]):
                if join_is_chain(simplex + (extra,)):
                    raise ConstructionError("refinement exceeded the source dimension")
    return out


def map_s(fn, ell: int, d: int, vertex_id_of: dict | None = None) -> tuple:
    """Word tuple of one refinement vertex: coordinate j encodes the minimal
    vertex of the support set of cardinality j, truncated to that set's
    weight; coordinates with no support set stay empty."""
    items = _canonical_function(fn.items() if isinstance(fn, dict) else fn)
    sets = [frozenset(s) for s, _ in items]
    if not _support_is_chain(sets):
        raise MalformedComplexError("support is not a chain")
    if any(c <= 0 for _, c in items):
        raise MalformedComplexError("weights must be positive")
    if sum(c for _, c in items) != (d + 1) * ell:
        raise MalformedComplexError(f"total weight must be {(d + 1) * ell}")
    words = [""] * (d + 1)
    for simplex, weight in items:
        card = len(simplex)
        if card > d + 1:
            raise MalformedComplexError("support set larger than d+1")
        ids = [vertex_id_of[v] for v in simplex] if vertex_id_of else list(simplex)
        words[card - 1] = binary_code(min(ids), weight, ell, d)
    return tuple(words)


@dataclass(frozen=True)
class CoarseConstruction:
    """A validated construction record.

    The subdivision is an indexed vertex set with its 1-simplices;
    ``provsets`` maps each stored subdivision simplex (vertex or edge, keyed
    by a frozenset of ids) to the antichain of minimal source simplices
    carrying it -- a singleton for directly built records, possibly larger or
    empty after composition.  ``target`` is the full subcomplex spanned by
    the image.  ``kind`` is "lattice", "identity" or "composite".
    """

    kind: str
    source: SimplicialComplex
    d: int
    ell: int
    functions: tuple | None
    sub_edges: tuple
    vertex_map: tuple
    provsets: dict
    target: SimplicialComplex
    target_words: dict | None
    measured_k: int
    volume: int

    @property
    def n_sub_vertices(self) -> int:
        return len(self.vertex_map)

    def carried_sub_vertices(self) -> list:
        return [i for i in range(len(self.vertex_map)) if self.provsets[frozenset((i,))]]


def _measured_k(target: SimplicialComplex, vertex_map, sub_edges, provsets) -> int:
    """Max over target simplices of the number of distinct carrier simplices
    whose refinement cells have images meeting that simplex; closed simplices
    meet exactly when their vertex sets intersect, so a cell counts towards
    every target vertex in its image."""
    reach = {t: set() for t in target.vertices}
    for i in range(len(vertex_map)):
        t = vertex_map[i]
        if t in reach:
            reach[t].update(provsets[frozenset((i,))])
    for i, j in sub_edges:
        prov = provsets[frozenset((i, j))]
        for t in (vertex_map[i], vertex_map[j]):
            if t in reach:
                reach[t].update(prov)
    nbrs = {v: set() for v in target.vertices}
    for u, v in target.edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    best = 0
    for clique in _maximal_cliques(target.vertices, nbrs):
        hit = set()
        for t in clique:
            hit |= reach[t]
        best = max(best, len(hit))
    return best


def coarse_construct(
    z: SimplicialComplex,
    max_vertices: int = DEFAULT_VERTEX_LIMIT,
    with_higher: bool = False,
) -> CoarseConstruction:
    """Full pipeline: relabel to 0-indexed ids, pick the code width from the
    vertex count, subdivide twice, apply the coding map, and measure.

    The map is checked to be simplicial edge by edge; a violation raises
    ``ConstructionError`` since the construction guarantees it.
    """
    n = z.n_vertices
    if n == 0:
        raise MalformedComplexError("cannot construct from an empty complex")
    relabel = {v: i for i, v in enumerate(sorted(z.vertices))}
    d = z.dimension
    ell = max(1, (n - 1).bit_length())

    bary, labels = barycentric_subdivision(z)
    lattice = build_D_ell(bary, labels, ell, d, max_vertices=max_vertices, with_higher=with_higher)

    words = [map_s(fn, ell, d, relabel) for fn in lattice.functions]
    sub_edges = tuple(sorted(tuple(sorted(e)) for e in lattice.complex.simplices if len(e) == 2))
    for i, j in sub_edges:
        if words[i] != words[j] and not words_adjacent(words[i], words[j]):
            raise ConstructionError(f"coding map is not simplicial on refinement edge {i}-{j}")

    image = sorted(set(words), key=lambda w: (tuple(len(x) for x in w), w))
    target_id = {w: t for t, w in enumerate(image)}
    vertex_map = tuple(target_id[w] for w in words)

    nbrs = {t: set() for t in range(len(image))}
    for t, w in enumerate(image):
        for nb in _word_neighbors(w):
            u = target_id.get(nb)
            if u is not None:
                nbrs[t].add(u)
                nbrs[u].add(t)
    cliques = _maximal_cliques(range(len(image)), nbrs)
    if any(len(c) > d + 1 for c in cliques):
        raise ConstructionError("image spans a simplex above the source dimension")
    target = build_complex(cliques, extra_vertices=range(len(image)))

    provsets = {
        simplex: frozenset((prov,))
        for simplex, prov in lattice.provenance.items()
        if len(simplex) <= 2
    }
    measured = _measured_k(target, vertex_map, sub_edges, provsets)
    volume = len(image)
    assert volume <= len(lattice.functions)
    assert measured <= 2**z.degree
    return CoarseConstruction(
        kind="lattice",
        source=z,
        d=d,
        ell=ell,
        functions=lattice.functions,
        sub_edges=sub_edges,
        vertex_map=vertex_map,
        provsets=provsets,
        target=target,
        target_words={t: w for t, w in enumerate(image)},
        measured_k=measured,
        volume=volume,
    )


def identity_construction(z: SimplicialComplex) -> CoarseConstruction:
    """The record of the identity map, usable as a composition operand."""
    verts = sorted(z.vertices)
    index = {v: i for i, v in enumerate(verts)}
    sub_edges = tuple(sorted((index[u], index[v]) for u, v in z.edges))
    provsets = {frozenset((index[v],)): frozenset((frozenset((v,)),)) for v in verts}
    for i, j in sub_edges:
        provsets[frozenset((i, j))] = frozenset((frozenset((verts[i], verts[j])),))
    vertex_map = tuple(verts)
    measured = _measured_k(z, vertex_map, sub_edges, provsets)
    return CoarseConstruction(
        kind="identity",
        source=z,
        d=max(z.dimension, 0),
        ell=0,
        functions=None,
        sub_edges=sub_edges,
        vertex_map=vertex_map,
        provsets=provsets,
        target=z,
        target_words=None,
        measured_k=measured,
        volume=z.n_vertices,
    )


def validate_construction(cc: CoarseConstruction, k_claim: int, vol_claim: int) -> list:
    """Recompute everything from the record's raw fields and compare with the
    claims: simpliciality, dimension preservation, the interference count
    against ``k_claim`` and the volume against ``vol_claim``."""
    rows = []

    target_edges = set(cc.target.edges)
    bad = 0
    for i, j in cc.sub_edges:
        if not cc.provsets[frozenset((i, j))]:
            continue
        a, b = cc.vertex_map[i], cc.vertex_map[j]
        if a != b and tuple(sorted((a, b))) not in target_edges:
            bad += 1
    rows.append(CheckRow("simplicial", bad, 0, bad == 0))

    src_dim = max(cc.source.dimension, 0)
    tgt_dim = max(cc.target.dimension, 0)
    rows.append(CheckRow("dimension-preserving", tgt_dim, src_dim, tgt_dim <= src_dim))

    measured = _measured_k(cc.target, cc.vertex_map, cc.sub_edges, cc.provsets)
    rows.append(CheckRow("measured_k <= claim", measured, k_claim, measured <= k_claim))

    carried = {cc.vertex_map[i] for i in cc.carried_sub_vertices()}
    rows.append(CheckRow("volume <= claim", len(carried), vol_claim, len(carried) <= vol_claim))
    return rows


def _cliques_with_prov(cc: CoarseConstruction, size: int):
    """(simplex ids, provenance antichain) for subdivision simplices with
    ``size`` vertices.  Sizes above 2 are recovered per record kind."""
    if size == 1:
        return [((i,), cc.provsets[frozenset((i,))]) for i in range(len(cc.vertex_map))]
    if size == 2:
        return [(e, cc.provsets[frozenset(e)]) for e in cc.sub_edges]
    if cc.kind == "identity":
        verts = sorted(cc.source.vertices)
        index = {v: i for i, v in enumerate(verts)}
        out = []
        for s in cc.source.simplices:
            if len(s) == size:
                ids = tuple(sorted(index[v] for v in s))
                out.append((ids, frozenset((frozenset(s),))))
        return out
    if cc.kind == "lattice":
        tops = [frozenset(fn[-1][0]) for fn in cc.functions]
        cliques = _lattice_cliques(cc.functions, [frozenset(e) for e in cc.sub_edges], size, size)
        return [
            (tuple(sorted(c)), frozenset((max((tops[i] for i in c), key=len),)))
            for c in cliques
        ]
    raise ConstructionError(
        "composing onto a composite with a target of dimension above 1 is not supported"
    )


def _min_antichain(sets) -> frozenset:
    out = []
    for s in sorted(sets, key=lambda x: (len(x), sorted(x))):
        if not any(t <= s for t in out):
            out.append(s)
    return frozenset(out)


def compose(cc1: CoarseConstruction, cc2: CoarseConstruction) -> CoarseConstruction:
    """Chain two records where the second was built on the image of the first.

    The composite keeps the second record's subdivision and vertex map but
    re-anchors every provenance antichain in the first source: a carrier of
    the second stage traces back to the minimal carriers of the first-stage
    cells whose images contain it.  Second-stage cells over simplices missed
    by the first image trace back to nothing and drop out of the volume.
    """
    if cc1.target != cc2.source:
        raise MalformedComplexError("target of the first record is not the source of the second")

    max_needed = max((len(s) for prov in cc2.provsets.values() for s in prov), default=1)
    sources1: dict = {}
    for size in range(1, max_needed + 1):
        for simplex, prov in _cliques_with_prov(cc1, size):
            image = frozenset(cc1.vertex_map[i] for i in simplex)
            if len(image) < size:
                continue  # collapsed cells are covered by their faces
            sources1.setdefault(image, set()).update(prov)

    def trace(provset) -> frozenset:
        hit = set()
        for carrier in provset:
            hit |= sources1.get(frozenset(carrier), set())
        return _min_antichain(hit)

    new_provsets = {key: trace(prov) for key, prov in cc2.provsets.items()}
    carried = sorted(
        {cc2.vertex_map[i] for i in range(len(cc2.vertex_map)) if new_provsets[frozenset((i,))]}
    )
    new_target = induced_subcomplex(cc2.target, carried)
    measured = _measured_k(new_target, cc2.vertex_map, cc2.sub_edges, new_provsets)
    volume = len(carried)
    assert measured <= cc1.measured_k * cc2.measured_k
    assert volume <= cc2.volume
    return CoarseConstruction(
        kind="composite",
        source=cc1.source,
        d=cc2.d,
        ell=cc2.ell,
        functions=cc2.functions,
        sub_edges=cc2.sub_edges,
        vertex_map=cc2.vertex_map,
        provsets=new_provsets,
        target=new_target,
        target_words=None
        if cc2.target_words is None
        else {t: cc2.target_words[t] for t in carried},
        measured_k=measured,
        volume=volume,
    )


def write_manifest(cc: CoarseConstruction) -> str:
    """Text form: one header line `h d ell n measured_k volume`, then one
    line per refinement vertex: `f <support:weight pairs> -> <words>` with
    0-indexed vertex ids and fields in canonical order."""
    if cc.kind != "lattice":
        raise ConstructionError("only directly constructed records have manifests")
    relabel = {v: i for i, v in enumerate(sorted(cc.source.vertices))}
    lines = [f"h {cc.d} {cc.ell} {cc.source.n_vertices} {cc.measured_k} {cc.volume}"]
    for i, fn in enumerate(cc.functions):
        pairs = " ".join(
            "-".join(str(relabel[v]) for v in simplex) + f":{cnt}" for simplex, cnt in fn
        )
        word = ",".join(cc.target_words[cc.vertex_map[i]])
        lines.append(f"f {pairs} -> {word}")
    return "\n".join(lines) + "\n"


def parse_manifest(text: str):
    """Inverse of :func:`write_manifest`: (d, ell, n, measured_k, volume,
    functions, words), all vertex ids 0-indexed."""
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines or not lines[0].startswith("h "):
        raise MalformedComplexError("manifest must start with a header line")
    d, ell, n, k, volume = map(int, lines[0].split()[1:6])
    functions = []
    words = []
    for ln in lines[1:]:
        if not ln.startswith("f ") or " -> " not in ln:
            raise MalformedComplexError(f"unexpected manifest line: {ln!r}")
        body, _, word = ln[2:].partition(" -> ")
        pairs = []
        for part in body.split():
            simplex, _, cnt = part.partition(":")
            pairs.append((tuple(int(v) for v in simplex.split("-")), int(cnt)))
        functions.append(_canonical_function(pairs))
        words.append(tuple(word.split(",")))
    return d, ell, n, k, volume, tuple(functions), tuple(words)


def _one_move_apart(fn_a, fn_b) -> bool:
    """Two weight functions differ by moving one unit of weight between two
    sets, and their supports join into a chain."""
    a = {frozenset(s): c for s, c in fn_a}
    b = {frozenset(s): c for s, c in fn_b}
    union_keys = set(a) | set(b)
    if not _support_is_chain(union_keys):
        return False
    deltas = sorted(v for k in union_keys if (v := a.get(k, 0) - b.get(k, 0)))
    return deltas == [-1, 1]


def revalidate_manifest(text: str) -> list:
    """Re-derive everything checkable from a manifest alone.

    Recomputes each word from its weight function, rebuilds the refinement
    edges from the one-move relation, and replays the admissibility,
    simpliciality and volume checks against the header claims.
    """
    d, ell, n, k_claim, vol_claim, functions, words = parse_manifest(text)
    total = (d + 1) * ell
    rows = []

    bad_fn = sum(
        1
        for fn in functions
        if not (
            _support_is_chain([frozenset(s) for s, _ in fn])
            and all(c >= 1 for _, c in fn)
            and sum(c for _, c in fn) == total
            and all(0 <= v < n for s, _ in fn for v in s)
        )
    )
    rows.append(CheckRow("functions admissible", bad_fn, 0, bad_fn == 0))

    recomputed = [map_s(fn, ell, d) for fn in functions]
    mismatches = sum(1 for a, b in zip(recomputed, words) if a != b)
    rows.append(CheckRow("words match coding map", mismatches, 0, mismatches == 0))

    bad_edges = 0
    for i, j in itertools.combinations(range(len(functions)), 2):
        if _one_move_apart(functions[i], functions[j]):
            if recomputed[i] != recomputed[j] and not words_adjacent(recomputed[i], recomputed[j]):
                bad_edges += 1
    rows.append(CheckRow("simplicial on rebuilt edges", bad_edges, 0, bad_edges == 0))

    vol = len(set(recomputed))
    rows.append(CheckRow("volume matches header", vol, vol_claim, vol == vol_claim))
    return rows
