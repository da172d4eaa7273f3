"""Check-in mobility toolkit: ingest histories, label places, mine frequent
visit patterns, and serve per-user mobility graphs."""

from .ingest import (
    CheckinRecord,
    FieldCountError,
    IngestError,
    IngestReport,
    NumericRangeError,
    TimestampError,
    UserHistory,
    ingest_file,
    ingest_text,
    merge_histories,
    parse_line,
    render_line,
)
from .taxonomy import (
    EmptyLabelError,
    LabeledVisit,
    LabelTaxonomy,
    Rule,
    RuleSyntaxError,
    TaxonomyError,
    identity_taxonomy,
    load_taxonomy,
    parse_taxonomy,
    relabel,
)
from .sessionize import VisitSequence, sessionize
from .miner import (
    ConfigError,
    MiningConfig,
    SequentialPattern,
    contains_pattern,
    count_support,
    mine,
    patterns_to_dicts,
    patterns_to_json,
)
from .serialize import canonical_json
from .graph import Edge, InconsistencyError, MobilityGraph, Node, build_graph
from .store import DatasetStore, UnknownUserError, UploadRejectedError, build_store
from .service import create_app

__version__ = "0.1.0"

__all__ = [
    "CheckinRecord",
    "ConfigError",
    "DatasetStore",
    "Edge",
    "EmptyLabelError",
    "FieldCountError",
    "IngestError",
    "IngestReport",
    "InconsistencyError",
    "LabelTaxonomy",
    "LabeledVisit",
    "MiningConfig",
    "MobilityGraph",
    "Node",
    "NumericRangeError",
    "Rule",
    "RuleSyntaxError",
    "SequentialPattern",
    "TaxonomyError",
    "TimestampError",
    "UnknownUserError",
    "UploadRejectedError",
    "UserHistory",
    "VisitSequence",
    "build_graph",
    "build_store",
    "canonical_json",
    "contains_pattern",
    "count_support",
    "create_app",
    "identity_taxonomy",
    "ingest_file",
    "ingest_text",
    "load_taxonomy",
    "merge_histories",
    "mine",
    "parse_line",
    "parse_taxonomy",
    "patterns_to_dicts",
    "patterns_to_json",
    "relabel",
    "render_line",
    "sessionize",
]
