"""Profile tables over induced subgraphs, and what they certify.

A profile maps r to the largest value of an invariant (cutwidth or balanced
separation) over induced subgraphs on at most r vertices.  Maximising over
induced subgraphs is enough: both invariants are monotone under removing
edges from a fixed vertex set, so the maximum over all subgraphs of a given
order is attained on an induced one.  On top of the tables sit the
cutwidth/separation recursion check, expander certification and extraction,
and the line-by-line verification of the expander-to-separator chain.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from ._util import SizeLimitError, components_of, parallel_map
from .complexes import SimplicialComplex, as_graph, induced_subcomplex, skeleton
from .invariants import DEFAULT_DP_LIMIT, cheeger_exact, cutwidth_exact, separation_cut
from .reporting import CheckRow, all_passed

__all__ = [
    "ProfileEntry",
    "ProfileTable",
    "ExpanderCertificate",
    "CertificateRefusal",
    "ExtractionResult",
    "ChainReport",
    "profile",
    "verify_cwsep",
    "expander_certificate",
    "extract_expander",
    "verify_expander_chain",
    "host_signature",
]

_EXACT_PROFILE_LIMIT = 16

INVARIANTS = ("cutwidth", "separation")


@dataclass(frozen=True)
class ProfileEntry:
    value: int
    witness: tuple
    mode: str  # "exact" or "lower_bound"


@dataclass(frozen=True)
class ProfileTable:
    """Map r -> (value, witness, mode); entries are monotone in r."""

    invariant_name: str
    entries: dict
    host: tuple | None = None

    @property
    def r_max(self) -> int:
        return max(self.entries)

    def value(self, r: int) -> int:
        """Table value at r, clamped into the tabulated range below and
        capped by r_max above (profiles are constant past the host size)."""
        if r <= 0:
            return 0
        return self.entries[min(r, self.r_max)].value

    def is_exact(self) -> bool:
        return all(e.mode == "exact" for e in self.entries.values())


@dataclass(frozen=True)
class ExpanderCertificate:
    """Evidence that each member of a graph family has a certified overlap
    lower bound of at least epsilon times its size."""

    epsilon: Fraction
    delta: int
    per_member: tuple  # (index, size, cutwidth lower bound) per member


@dataclass(frozen=True)
class CertificateRefusal:
    epsilon: Fraction
    reasons: tuple


@dataclass(frozen=True)
class ExtractionResult:
    success: bool
    subgraph: SimplicialComplex
    cheeger_value: object
    removals: tuple  # (removed vertex set, its ratio) per greedy step


@dataclass(frozen=True)
class ChainReport:
    """Per-line replay of the expander-to-separator chain.

    ``rows`` holds the chain inequalities (and, when asserted, the
    conclusion); the size hypothesis is kept separate because failing it
    only withdraws the conclusion, it does not falsify any chain line.
    """

    rows: tuple
    hypothesis: CheckRow
    conclusion_asserted: bool
    notes: tuple = field(default_factory=tuple)

    @property
    def hypothesis_met(self) -> bool:
        return self.hypothesis.passed

    def passed(self) -> bool:
        return all_passed(self.rows)


def host_signature(graph: SimplicialComplex) -> tuple:
    return (graph.n_vertices, tuple(graph.sorted_simplices()))


def _connected(verts, edges) -> bool:
    if len(verts) <= 1:
        return True
    return len(components_of(verts, edges)) == 1


def _invariant_value(graph: SimplicialComplex, invariant: str) -> int:
    if invariant == "cutwidth":
        return cutwidth_exact(graph).width
    return len(separation_cut(graph).separator)


def profile(
    host: SimplicialComplex,
    invariant: str,
    r_max: int,
    mode: str = "exact",
    candidates=None,
    threads: int = 1,
) -> ProfileTable:
    """Profile table of an invariant over induced subgraphs of ``host``.

    Exact mode enumerates every vertex subset of size <= r_max (host capped
    at 16 vertices); disconnected subsets are skipped because both invariants
    reach their maximum on a connected induced subgraph of no larger order.
    Candidates mode evaluates only the supplied vertex sets and tags all
    entries as lower bounds.  Hosts of higher dimension are reduced to their
    1-skeleton first; both invariants only see vertices and edges.
    """
    if invariant not in INVARIANTS:
        raise ValueError(f"unknown invariant {invariant!r}")
    if host.dimension > 1:
        host = skeleton(host, 1)
    verts, edges = as_graph(host)
    n = len(verts)
    sig = host_signature(host)

    if mode == "candidates":
        if candidates is None:
            raise ValueError("candidates mode requires candidate vertex sets")
        scored = []
        for cand in candidates:
            sub = induced_subcomplex(host, cand)
            scored.append((len(cand), tuple(sorted(cand)), _invariant_value(sub, invariant)))
        entries = {}
        best, witness = 0, ()
        for r in range(r_max + 1):
            for size, cand, val in scored:
                if size <= r and val > best:
                    best, witness = val, cand
            entries[r] = ProfileEntry(best, witness, "lower_bound")
        return ProfileTable(invariant, entries, sig)

    if mode != "exact":
        raise ValueError(f"unknown profile mode {mode!r}")
    if n > _EXACT_PROFILE_LIMIT:
        raise SizeLimitError(
            f"exact profiles enumerate subsets; host limited to {_EXACT_PROFILE_LIMIT} vertices, got {n}"
        )

    def score(subset):
        sub_edges = [(u, v) for u, v in edges if u in subset and v in subset]
        if not _connected(subset, sub_edges):
            return None
        return _invariant_value(induced_subcomplex(host, subset), invariant)

    entries = {0: ProfileEntry(0, (), "exact")}
    best, witness = 0, ()
    for r in range(1, r_max + 1):
        if r <= n:
            subsets = list(itertools.combinations(verts, r))  # lexicographic
            values = parallel_map(score, subsets, threads)
            for subset, val in zip(subsets, values):
                if val is not None and val > best:
                    best, witness = val, subset
        entries[r] = ProfileEntry(best, witness, "exact")
    return ProfileTable(invariant, entries, sig)


def verify_cwsep(cw_table: ProfileTable, sep_table: ProfileTable, delta: int):
    """Check cw(r) <= cw(ceil(r/2)) + delta * sep(r) for every tabulated r.

    The half-point is rounded up (the safe reading); the floor variant is
    reported alongside.  Requires exact tables over the same host and range.
    """
    if cw_table.invariant_name != "cutwidth" or sep_table.invariant_name != "separation":
        raise ValueError("verify_cwsep needs a cutwidth table and a separation table")
    if not (cw_table.is_exact() and sep_table.is_exact()):
        raise ValueError("verify_cwsep requires exact tables")
    if set(cw_table.entries) != set(sep_table.entries):
        raise ValueError("tables cover different r ranges")
    if cw_table.host and sep_table.host and cw_table.host != sep_table.host:
        raise ValueError("tables come from different hosts")
    rows = []
    for r in sorted(cw_table.entries):
        lhs = cw_table.value(r)
        rhs_ceil = cw_table.value(math.ceil(r / 2)) + delta * sep_table.value(r)
        rhs_floor = cw_table.value(r // 2) + delta * sep_table.value(r)
        rows.append(CheckRow(f"cwsep r={r} half=ceil", lhs, rhs_ceil, lhs <= rhs_ceil))
        rows.append(CheckRow(f"cwsep r={r} half=floor", lhs, rhs_floor, lhs <= rhs_floor))
    return rows


def expander_certificate(family, epsilon, dp_limit: int = DEFAULT_DP_LIMIT):
    """Certify a family as epsilon-expanding from exact cutwidths.

    Issues a certificate iff sizes strictly grow, degrees do not grow without
    bound (a strictly increasing degree sequence is refused), and every
    member satisfies cutwidth >= epsilon * size; cutwidth is a certified
    lower bound for the minimal sweep overlap.
    """
    epsilon = Fraction(epsilon)
    members = list(family)
    if not members:
        return CertificateRefusal(epsilon, ("empty family",))
    reasons = []
    sizes = [g.n_vertices for g in members]
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        reasons.append(f"sizes do not strictly increase: {sizes}")
    degrees = [g.degree for g in members]
    if len(degrees) > 1 and all(b > a for a, b in zip(degrees, degrees[1:])):
        reasons.append(f"degree grows along the whole family: {degrees}")
    per_member = []
    for i, g in enumerate(members):
        width = cutwidth_exact(g, dp_limit=dp_limit).width
        per_member.append((i, g.n_vertices, width))
        if Fraction(width) < epsilon * g.n_vertices:
            reasons.append(
                f"member {i}: cutwidth {width} < epsilon*size = {epsilon * g.n_vertices}"
            )
    if reasons:
        return CertificateRefusal(epsilon, tuple(reasons))
    return ExpanderCertificate(epsilon, max(degrees), tuple(per_member))


def extract_expander(graph: SimplicialComplex, target, limit: int = 20) -> ExtractionResult:
    """Greedy extraction of an induced subgraph with Cheeger constant >= target.

    While the exact Cheeger witness of the current graph has ratio below the
    target, delete the witness set and recurse on the remaining induced
    subgraph.  Fails once the graph shrinks to at most one vertex; the
    removal history is returned either way.
    """
    target = Fraction(target)
    current = graph
    removals = []
    while True:
        if current.n_vertices <= 1:
            return ExtractionResult(False, current, float("inf"), tuple(removals))
        cheeger = cheeger_exact(current, limit=limit)
        if cheeger.value >= target:
            return ExtractionResult(True, current, cheeger.value, tuple(removals))
        removals.append((cheeger.witness_set, cheeger.value))
        keep = current.vertices - frozenset(cheeger.witness_set)
        current = induced_subcomplex(current, keep)


def _floor_log2(x: Fraction) -> int:
    """Exact floor of log2 of a positive rational."""
    if x <= 0:
        raise ValueError("log2 of a non-positive value")
    e = x.numerator.bit_length() - x.denominator.bit_length()
    while Fraction(2) ** e > x:
        e -= 1
    while Fraction(2) ** (e + 1) <= x:
        e += 1
    return e


def _ceil_log2(x: Fraction) -> int:
    f = _floor_log2(x)
    return f if Fraction(2) ** f == x else f + 1


def verify_expander_chain(
    graph: SimplicialComplex,
    epsilon,
    cw_table: ProfileTable | None = None,
    sep_table: ProfileTable | None = None,
) -> ChainReport:
    """Numerically replay the chain bounding separation from below by the
    expansion hypothesis, line by line, on one concrete graph.

    Each displayed inequality is evaluated with measured cutwidth and
    separation profile values.  The final lower bound on sep(r) is asserted
    only when the size hypothesis r >= 12(degree+1)/epsilon holds; otherwise
    the report says so and the conclusion is not asserted.
    """
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    verts, _ = as_graph(graph)
    r = len(verts)
    delta = graph.degree
    if r < 2 or delta < 1:
        raise ValueError("chain verification needs a graph with at least one edge")
    if cw_table is None:
        cw_table = profile(graph, "cutwidth", r)
    if sep_table is None:
        sep_table = profile(graph, "separation", r)

    k = _ceil_log2(Fraction(r))
    assert 2 ** (k - 1) < r <= 2**k

    def sep_at(x: Fraction) -> int:
        return sep_table.value(math.floor(x))

    cw_self = cutwidth_exact(graph).width
    rows = []

    def row(name, lhs, rhs, ok):
        rows.append(CheckRow(name, lhs, rhs, ok))

    # hypothesis: epsilon * r is a lower bound for the overlap, certified by cutwidth
    lhs1 = epsilon * r
    row("expansion-hypothesis eps*r <= cw", lhs1, cw_self, lhs1 <= cw_self)

    # overlap upper bound against the profile at full size
    row(
        "sandwich cw+deg+1 <= 1+deg+cw_prof(r)",
        cw_self + delta + 1,
        1 + delta + cw_table.value(r),
        cw_self <= cw_table.value(r),
    )

    full_sum = sum(sep_at(Fraction(r, 2 ** (k - i))) for i in range(k + 1))
    row(
        "recursion cw_prof(r) <= deg*sum sep",
        cw_table.value(r),
        delta * full_sum,
        cw_table.value(r) <= delta * full_sum,
    )

    x = epsilon * r / (3 * delta)
    m = _floor_log2(x)
    c = _ceil_log2(x)
    low_sum = sum(sep_at(Fraction(r, 2 ** (k - i))) for i in range(0, min(m, k) + 1))
    high_sum = sum(sep_at(Fraction(r, 2 ** (k - i))) for i in range(max(c, 0), k + 1))
    row("split sum <= low+high", full_sum, low_sum + high_sum, full_sum <= low_sum + high_sum)

    geo = sum(Fraction(2) ** (i - 1) for i in range(0, min(m, k) + 1))
    row("low part <= sum 2^(i-1)", low_sum, geo, Fraction(low_sum) <= geo)
    count = k - c + 1
    row(
        "high part <= count*sep(r)",
        high_sum,
        count * sep_at(Fraction(r)),
        high_sum <= count * sep_at(Fraction(r)),
    )

    pow_m = Fraction(2) ** m
    row("geometric sum <= 2^m", geo, pow_m, geo <= pow_m)
    log_term = math.log2(3 * delta / float(epsilon))
    row("count <= log2(3*deg/eps)+2", count, log_term + 2, count <= log_term + 2)
    row("deg*2^m <= (2/3)*eps*r", delta * pow_m, Fraction(2, 3) * epsilon * r, delta * pow_m <= Fraction(2, 3) * epsilon * r)

    combined_rhs = 1 + delta + float(Fraction(2, 3) * epsilon * r) + delta * (2 + log_term) * sep_at(Fraction(r))
    row("combined eps*r <= chain bound", float(lhs1), combined_rhs, float(lhs1) <= combined_rhs + 1e-9)

    hyp_rhs = Fraction(12 * (delta + 1)) / epsilon
    hypothesis_met = Fraction(r) >= hyp_rhs
    hypothesis = CheckRow("size-hypothesis r >= 12(deg+1)/eps", r, hyp_rhs, hypothesis_met)

    notes = [
        "extraction-size constants differ between statement and derivation: "
        f"eps/(8*log2(12*deg/eps)) = {float(epsilon) / (8 * math.log2(12 * delta / float(epsilon))):.6g} "
        f"vs eps/(8*deg*log2(12*deg/eps)) = {float(epsilon) / (8 * delta * math.log2(12 * delta / float(epsilon))):.6g}; "
        "the weaker derived constant is the one used here",
    ]
    conclusion_asserted = False
    if hypothesis_met:
        conclusion_asserted = True
        quarter = Fraction(1, 4) * epsilon * r
        third = Fraction(1, 3) * epsilon * r - 1 - delta
        row("rearranged eps*r/4 <= eps*r/3-1-deg", quarter, third, quarter <= third)
        sep_bound = delta * (2 + log_term) * sep_at(Fraction(r))
        row("rearranged eps*r/3-1-deg <= deg*log*sep(r)", float(third), sep_bound, float(third) <= sep_bound + 1e-9)
        conclusion = float(epsilon) / (4 * delta * math.log2(12 * delta / float(epsilon))) * r
        row("conclusion sep(r) >= eps*r/(4*deg*log2(12*deg/eps))", conclusion, sep_at(Fraction(r)), conclusion <= sep_at(Fraction(r)) + 1e-9)
    else:
        notes.append("size hypothesis not met; conclusion not asserted")

    return ChainReport(tuple(rows), hypothesis, conclusion_asserted, tuple(notes))
