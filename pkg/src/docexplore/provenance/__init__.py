from .events import (
    EventTarget,
    InteractionEvent,
    InvalidEvent,
    TimestampRegression,
    append_event,
    event_from_dict,
    event_from_json,
    event_to_json,
    read_events,
    write_events,
)
from .metrics import (
    ProvenanceMetrics,
    analysis_report,
    centrality,
    compute_metrics,
    count_identical_triples,
    count_loops,
    count_multiple_edges,
)
from .taxonomy import (
    PROCESS_CATEGORIES,
    ProcessId,
    Taxonomy,
    TaxonomyError,
    ToolId,
    ToolKind,
    default_taxonomy,
    load_taxonomy,
    taxonomy_from_dict,
)
from .triples import (
    DEFAULT_MIN_DURATION_S,
    InteractionTriple,
    UnmappedTool,
    UnorderedEvents,
    coarsen,
    derive_triples,
    kind_map,
)
from .views import (
    MatrixCell,
    MatrixTransition,
    MatrixView,
    ProcessGraph,
    TransitionMatrix,
    build_matrix_view,
    build_process_graph,
    process_graph_dot,
    transition_matrix,
)

__all__ = [
    "PROCESS_CATEGORIES",
    "DEFAULT_MIN_DURATION_S",
    "EventTarget",
    "InteractionEvent",
    "InteractionTriple",
    "InvalidEvent",
    "MatrixCell",
    "MatrixTransition",
    "MatrixView",
    "ProcessGraph",
    "ProcessId",
    "ProvenanceMetrics",
    "Taxonomy",
    "TaxonomyError",
    "TimestampRegression",
    "ToolId",
    "ToolKind",
    "TransitionMatrix",
    "UnmappedTool",
    "UnorderedEvents",
    "analysis_report",
    "append_event",
    "build_matrix_view",
    "build_process_graph",
    "centrality",
    "coarsen",
    "compute_metrics",
    "count_identical_triples",
    "count_loops",
    "count_multiple_edges",
    "default_taxonomy",
    "derive_triples",
    "event_from_dict",
    "event_from_json",
    "event_to_json",
    "kind_map",
    "load_taxonomy",
    "process_graph_dot",
    "read_events",
    "taxonomy_from_dict",
    "transition_matrix",
    "write_events",
]
