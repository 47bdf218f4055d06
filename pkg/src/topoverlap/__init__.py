"""Exact overlap-style invariants of finite bounded-degree simplicial complexes.

Core pieces: simplicial complex combinatorics, exact cutwidth / separation /
Cheeger with witnesses, profile tables with certified recursion checks,
expander certification and extraction, coarse constructions into horocyclic
products of trees, and the lattice cube translate bound.
"""

from ._util import SizeLimitError
from .complexes import (
    ComplexStats,
    MalformedComplexError,
    SimplicialComplex,
    barycentric_subdivision,
    build_complex,
    induced_subcomplex,
    skeleton,
    stats,
)
from .cubes import (
    CubeSet,
    TranslateResult,
    cov_c,
    cube_in_Y,
    find_translate,
    intersect_with_Y,
)
from .horocyclic import (
    CoarseConstruction,
    ConstructionError,
    DLatticeComplex,
    EncodingError,
    HorocyclicComplex,
    binary_code,
    build_D_ell,
    build_H_ell,
    coarse_construct,
    compose,
    identity_construction,
    map_s,
    revalidate_manifest,
    validate_construction,
    words_adjacent,
    write_manifest,
)
from .invariants import (
    CheegerWitness,
    LinearArrangement,
    SeparatorWitness,
    To1Bounds,
    cheeger_exact,
    cutwidth_bruteforce,
    cutwidth_exact,
    cutwidth_heuristic,
    separation_cut,
    sweep_overlap,
    to1_bounds,
)
from .profiles import (
    CertificateRefusal,
    ChainReport,
    ExpanderCertificate,
    ExtractionResult,
    ProfileTable,
    expander_certificate,
    extract_expander,
    profile,
    verify_cwsep,
    verify_expander_chain,
)
from .reporting import CheckRow, all_passed

__version__ = "0.1.0"
