"""Chain decomposition, compact encoding and brute-force checks for P7-free bipartite graphs."""

from .bigraph import (
    BipartiteGraph,
    Side,
    bipartite_complement,
    connected_components,
    induced_subgraph,
    is_anticomplete_to,
    is_complete_to,
    make_graph,
    neighbourhood,
)
from .chain import (
    ChainDecomposition,
    Handedness,
    LemmaEightInstance,
    chain_from_cutset,
    components_of,
    lemma8_build,
    reconstruct_from_components,
    validate_chain,
)
from .codec import BitStream, decode_stream, encode_tree, read_graph, write_graph
from .dectree import build_tree, decode_tree, tree_metrics, verify_2decomposition
from .neighbourhood import (
    SimpleGraph,
    is_complete_graph,
    neighbourhood_graph,
    quasi_threshold_witness,
    universal_clique_cutset,
)
from .patterns import find_induced_path, is_p7_free

__version__ = "0.1.0"
