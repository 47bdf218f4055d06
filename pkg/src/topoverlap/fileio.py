"""Plain-text formats: complex files, cube files, CSV emission.

Everything round-trips byte-identically: writers emit canonical orderings
only, and parse(emit(parse(x))) == parse(x).
"""

from __future__ import annotations

from fractions import Fraction

from .complexes import MalformedComplexError, SimplicialComplex, build_complex
from .cubes import CubeSet
from .profiles import ProfileEntry, ProfileTable
from .reporting import CheckRow

__all__ = [
    "ParseError",
    "parse_complex",
    "emit_complex",
    "parse_cubes",
    "emit_cubes",
    "emit_csv",
    "parse_profile_csv",
    "parse_candidates",
    "parse_fraction",
]


class ParseError(MalformedComplexError):
    """Malformed input file; carries a 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_complex(text: str) -> SimplicialComplex:
    """Read the complex text format.

    `c <n>` declares vertices 0..n-1, each later `s v1 v2 ...` line lists one
    maximal simplex; the loader applies downward closure.
    """
    n_vertices = None
    simplices = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "c":
            if n_vertices is not None:
                raise ParseError(no, "duplicate header")
            if len(parts) != 2 or not parts[1].isdigit():
                raise ParseError(no, "header must be `c <n_vertices>`")
            n_vertices = int(parts[1])
        elif parts[0] == "s":
            if n_vertices is None:
                raise ParseError(no, "simplex listed before header")
            if len(parts) == 1:
                raise ParseError(no, "empty simplex")
            try:
                verts = [int(p) for p in parts[1:]]
            except ValueError:
                raise ParseError(no, f"bad vertex id in {line!r}") from None
            if any(v < 0 or v >= n_vertices for v in verts):
                raise ParseError(no, f"vertex out of range 0..{n_vertices - 1}")
            if len(set(verts)) != len(verts):
                raise ParseError(no, "duplicate vertex inside one simplex")
            simplices.append(verts)
        else:
            raise ParseError(no, f"unknown directive {parts[0]!r}")
    if n_vertices is None:
        raise ParseError(1, "missing `c <n_vertices>` header")
    return build_complex(simplices, extra_vertices=range(n_vertices))


def emit_complex(cx: SimplicialComplex) -> str:
    """Inclusion-maximal simplices in lexicographic order under a `c` header."""
    n = max(cx.vertices, default=-1) + 1
    lines = [f"c {n}"]
    lines += ["s " + " ".join(map(str, s)) for s in cx.maximal_simplices()]
    return "\n".join(lines) + "\n"


def parse_cubes(text: str):
    """Cube file: first line `k r`, then one root (k integers) per line.
    Returns (CubeSet, r)."""
    k = r = None
    roots = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if k is None:
            if len(parts) != 2:
                raise ParseError(no, "first line must be `k r`")
            k, r = int(parts[0]), int(parts[1])
            if k < 1 or r < 2:
                raise ParseError(no, "need k >= 1 and r >= 2")
        else:
            if len(parts) != k:
                raise ParseError(no, f"expected {k} coordinates")
            try:
                roots.append(tuple(int(p) for p in parts))
            except ValueError:
                raise ParseError(no, f"bad coordinate in {line!r}") from None
    if k is None:
        raise ParseError(1, "missing `k r` header")
    return CubeSet.of(k, roots), r


def emit_cubes(cubes: CubeSet, r: int) -> str:
    lines = [f"{cubes.k} {r}"]
    lines += [" ".join(map(str, root)) for root in cubes.sorted_roots()]
    return "\n".join(lines) + "\n"


def _format_value(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return f"{x:.6g}"
    return str(x)


def emit_csv(payload) -> str:
    """CSV text for a profile table (`r,value,mode,witness`) or a list of
    check rows (`check,lhs,rhs,pass`)."""
    if isinstance(payload, ProfileTable):
        lines = ["r,value,mode,witness"]
        for r in sorted(payload.entries):
            e = payload.entries[r]
            witness = " ".join(map(str, e.witness))
            lines.append(f"{r},{e.value},{e.mode},{witness}")
        return "\n".join(lines) + "\n"
    rows = list(payload)
    lines = ["check,lhs,rhs,pass"]
    for row in rows:
        if not isinstance(row, CheckRow):
            raise TypeError(f"cannot emit {type(row).__name__} as CSV")
        lines.append(
            f"{row.check},{_format_value(row.lhs)},{_format_value(row.rhs)},{_format_value(row.passed)}"
        )
    return "\n".join(lines) + "\n"


def parse_profile_csv(text: str, invariant_name: str) -> ProfileTable:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != "r,value,mode,witness":
        raise ParseError(1, "expected header `r,value,mode,witness`")
    entries = {}
    for no, line in enumerate(lines[1:], start=2):
        parts = line.split(",")
        if len(parts) != 4:
            raise ParseError(no, "expected 4 columns")
        r, value, mode, witness = parts
        if mode not in ("exact", "lower_bound"):
            raise ParseError(no, f"unknown mode {mode!r}")
        wit = tuple(int(v) for v in witness.split()) if witness else ()
        entries[int(r)] = ProfileEntry(int(value), wit, mode)
    if not entries:
        raise ParseError(2, "table has no rows")
    return ProfileTable(invariant_name, entries, None)


def parse_candidates(text: str) -> list:
    """Candidate vertex sets, one per line of space-separated ids."""
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            out.append(frozenset(int(p) for p in line.split()))
        except ValueError:
            raise ParseError(no, f"bad vertex id in {line!r}") from None
    return out


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse {text!r} as a rational") from exc
