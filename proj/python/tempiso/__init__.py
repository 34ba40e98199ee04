"""Time-respecting subgraph matching in temporal networks."""

from ._tempiso import (  # noqa: F401
    ParseError,
    QueryGraph,
    ResourceLimitError,
    TemporalGraph,
    adjacent_deltas,
    catalog,
    derive_schedule,
    detect_elbow,
    embedding_time_respecting,
    enumerate_bruteforce,
    load_edge_list,
    match,
    match_jsonl,
    parse_duration,
    parse_edge_list,
)

STRATEGIES = ("static", "toti", "titoto", "tbt")
