"""Combinatorial checks around topological lower bounds on the chromatic number.

Graph families (Kneser, Schrijver, Mycielski, total graphs), complete
bipartite subgraph checkers, box complexes with mod-2 homology, exact
chromatic invariants, and verifiable odd K_t minor certificates.
"""

__version__ = "0.1.0"
EDGE_LIST_FORMAT_VERSION = 1
CERT_FORMAT_VERSION = 1

from .graph import (  # noqa: E402
    AdjacencyOracle,
    Graph,
    GraphOracle,
    direct_product,
    is_homomorphism,
    is_proper_coloring,
    make_graph,
    max_degree,
    read_edge_list,
    write_edge_list,
)
from .generators import (  # noqa: E402
    kneser,
    kneser_oracle,
    mycielskian,
    schrijver,
    schrijver_oracle,
    standard_graph,
    total_graph,
)
