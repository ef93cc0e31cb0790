"""Enumeration of maximal isolated cliques in temporal graphs.

A temporal clique is a vertex set that stays fully connected over a
closed window of layers; it is isolated when few edges leave it, with
six ways to aggregate "few" over the vertex and time dimensions.  This
package provides the fast fixed-parameter enumerator for five of the six
isolation kinds, a brute-force oracle covering all six, contact-list
ingestion, and a benchmark CLI.
"""

from .enumeration import (
    CandidateSet,
    TimeLimitExceeded,
    UnsupportedKind,
    candidate_set,
    enumerate_maximal_isolated,
    isolated_subsets,
    maximal_cliques_min_size,
)
from .graphs import (
    IntersectionView,
    StaticGraph,
    TemporalGraph,
    TimeWindow,
    delta_union_transform,
    extend_intersection,
    intersection_graph,
    is_temporal_clique,
    min_degree_in_set,
    outdeg_vertex,
)
from .ingest import (
    ContactRecord,
    IngestConfig,
    ParseError,
    bin_to_layers,
    generate_random_temporal_graph,
    parse_contact_list,
    plant_isolated_clique,
    scale_delta,
    serialize_contact_list,
)
from .isolation import (
    FAST_KINDS,
    KINDS,
    IsolationSpec,
    OutdegProfile,
    is_isolated,
    outdeg_profile,
    parse_c,
)
from .oracle import (
    OracleCapsExceeded,
    OracleIndex,
    brute_force_enumerate,
    brute_force_isolated_subsets,
)
from .results import ResultSet, TemporalClique

__version__ = "0.1.0"

__all__ = [
    "CandidateSet",
    "ContactRecord",
    "FAST_KINDS",
    "IngestConfig",
    "IntersectionView",
    "IsolationSpec",
    "KINDS",
    "OracleCapsExceeded",
    "OracleIndex",
    "OutdegProfile",
    "ParseError",
    "ResultSet",
    "StaticGraph",
    "TemporalClique",
    "TemporalGraph",
    "TimeLimitExceeded",
    "TimeWindow",
    "UnsupportedKind",
    "bin_to_layers",
    "brute_force_enumerate",
    "brute_force_isolated_subsets",
    "candidate_set",
    "delta_union_transform",
    "enumerate_maximal_isolated",
    "extend_intersection",
    "generate_random_temporal_graph",
    "intersection_graph",
    "is_isolated",
    "is_temporal_clique",
    "isolated_subsets",
    "maximal_cliques_min_size",
    "min_degree_in_set",
    "outdeg_profile",
    "outdeg_vertex",
    "parse_contact_list",
    "parse_c",
    "plant_isolated_clique",
    "scale_delta",
    "serialize_contact_list",
]
