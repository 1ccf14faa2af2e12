'''The (n, k) state-space kernel: transition rows, the state-distribution update and the steady-state solver.'''

# API exports
from .rule import EvolutionRule, AttachmentRule
from .state import NodeState, StateDistribution
from .survivors import SurvivorProfile, survivor_transitions, state_level_survivor_row, survivor_profile
from .transitions import (
    TransitionRow,
    ReassignmentForm,
    attachment_probability,
    attachment_probabilities,
    growth_transitions,
    growth_image,
    uniform_deletion_transitions,
    reassignment_vector,
    isolated_reassignment,
    decay_transition_row,
    decay_image,
)
from .step import step_state_distribution, decay_state_distribution, evolve
from .solver import steady_state, SolverDiagnostics, EXACT_SIZE_LIMIT
