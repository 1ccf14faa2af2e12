'''Direct Monte Carlo simulation of the evolving network.'''

# API exports
from .config import SimConfig
from .trial import Trajectory, Event, EventKind, run_trial, evolve_graph, census, trial_rng
from .empirical import EmpiricalDistribution, empirical_degree_distribution
