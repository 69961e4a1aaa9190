"""cyclesmith: decompose and cover graphs by cycles, edges, even and
2-regular subgraphs, with verifiable certificates and exact small-graph
oracles."""

__version__ = "0.1.0"

from .cover import cover_cycles_edges, even_cycle_cover  # noqa: F401
from .decomposer import (  # noqa: F401
    decompose_auto,
    decompose_clawfree,
    decompose_greedy,
    decompose_maxdeg4,
)
from .even_split import classify_n3, even_forest_split  # noqa: F401
from .graph import (  # noqa: F401
    Graph,
    Walk,
    parse_edge_list,
    parse_graph6,
    write_dot,
    write_edge_list,
    write_graph6,
)
from .limits import Limits  # noqa: F401
from .odd_linkage import (  # noqa: F401
    PathLinkage,
    edge_disjoint_reduce,
    initial_pairing,
    min_linkage_exact,
    vertex_disjoint_reduce,
)
from .oracle import exact_ce, exact_gce, exact_re  # noqa: F401
from .regular_decomp import (  # noqa: F401
    even_to_two_regular,
    girth_bound_decompose,
    petersen_two_factorization,
)
from .verify import (  # noqa: F401
    Cover,
    Decomposition,
    Part,
    PartKind,
    Verdict,
    verify_cover,
    verify_decomposition,
)
