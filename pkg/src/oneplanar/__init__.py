"""Verification toolkit for combinatorial 1-planar drawings.

A drawing is a rotation system plus explicit crossing records.  The toolkit
validates good drawings, enumerates regions, triangulates by edge
insertion, checks the counting identities tying (n, m, x, t, n7) together,
certifies the 24-vertex lower bound for minimum degree 7, and bounds
matchings on glued families via Tutte-Berge separators.
"""

__version__ = "0.1.0"

from .census import (
    Census,
    IdentityReport,
    TheoremReport,
    WitnessReport,
    census,
    check_identities,
    verify_degree7_witnesses,
    verify_min_degree7_theorem,
)
from .constructions import (
    FIXTURE_NAMES,
    GlueSpec,
    fixture,
    glue_copies,
    glued_family,
    insert_vertex_in_region,
    random_insertion_variant,
    stacked_triangulation,
)
from .core import (
    CombinatorialDrawing,
    CrossingRecord,
    HalfEdge,
    IntegrityError,
    PlanarSkeleton,
    PreconditionError,
    Region,
    StructureError,
    ValidationReport,
    Violation,
    enumerate_regions,
    planarize,
    remove_one_edge_per_crossing,
    underlying_graph,
    validate,
)
from .io1pd import DrawingDocument, ParseError, load, parse, save, serialize
from .matching import (
    MatchingResult,
    TutteBergeCertificate,
    UndirectedSimpleGraph,
    brute_force_matching_size,
    lemma_matching_bound,
    maximum_matching,
    tutte_berge_upper_bound,
)
from .render import LayoutError, barycentric_layout, render_svg
from .triangulation import (
    InsertionStep,
    TriangulationResult,
    insert_edge_in_region,
    is_triangulated,
    triangulate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
