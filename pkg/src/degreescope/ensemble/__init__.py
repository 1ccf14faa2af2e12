'''Probability-weighted graph ensembles and the exhaustive enumeration oracle.'''

# API exports
from .ensemble import GraphEnsemble, average_degree_distribution, state_distribution_of
from .enumeration import enumerate_deletion_step, MergePolicy, DEFAULT_CAP
