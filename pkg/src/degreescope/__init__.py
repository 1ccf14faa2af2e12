'''Computes exact and steady-state degree distributions of evolving networks with node addition and deletion'''

__version__ = '1.0.0'

from .arithmetic import Arithmetic
from .graph import Graph, DegreeDistribution, DeletionRule, degree_distribution, deletion_probabilities, parse_edge_list, load_edge_list
from .ensemble import GraphEnsemble, enumerate_deletion_step, average_degree_distribution, state_distribution_of
from .kernel import EvolutionRule, AttachmentRule, StateDistribution, step_state_distribution, steady_state
from .simulation import SimConfig, run_trial, empirical_degree_distribution
