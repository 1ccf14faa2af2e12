'''Exact graph representation, degree statistics and per-node deletion probabilities.'''

# API exports
from .graph import Graph, Edge, normalize_edge
from .degree import DegreeDistribution, degree_distribution
from .deletion import DeletionRule, DeletionProbabilities, deletion_probabilities, delete_node
from .edgelist import parse_edge_list, format_edge_list, load_edge_list, save_edge_list
