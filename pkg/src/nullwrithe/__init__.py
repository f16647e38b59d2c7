"""Nullification writhe and chirality detection for oriented alternating link diagrams."""

from .catalog import CatalogEntry, TableReport, bundled_table, load_catalog, reproduce_table
from .diagram import (
    Crossing,
    Diagram,
    component_count,
    crossing_signs,
    is_alternating,
    mirror,
    parse_diagram,
    reverse_components,
)
from .errors import (
    ArcConsistencyError,
    CatalogError,
    CodeSyntaxError,
    DegenerateError,
    DiagramError,
    DuplicateNameError,
    LoopEdgeError,
    NotAlternatingError,
    NotApplicableError,
)
from .nullification import (
    InvariantReport,
    SpanningForest,
    Verdict,
    WritheSplit,
    chirality_verdict,
    count_spanning_forests,
    enumerate_spanning_forests,
    forest_independence,
    nullification_number,
    sign_violations,
    spanning_forest,
    verify_forest_independence,
    verify_mirror_antisymmetry,
    verify_parity_law,
    writhe_split,
)
from .seifert import (
    SeifertCircle,
    SeifertGraph,
    build_seifert_graph,
    is_reduced,
    seifert_circles,
    split_components,
)

__version__ = "0.1.0"
