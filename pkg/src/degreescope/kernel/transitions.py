'''
    Transition rows of the state-level kernel.

    Growth and uniform-deletion rows only depend on the state (n, k). Decay rows under an
    arbitrary deletion rule also depend on the state distribution at size n, through the
    reassignment of the removed node's share of probability mass.
'''

from .rule import AttachmentRule, EvolutionRule
from .state import NodeState, StateDistribution
from .survivors import SurvivorProfile
from ..arithmetic import Arithmetic, Number
from ..errors import DegenerateReassignmentError, ValidationError

from dataclasses import dataclass, field
from enum import StrEnum

import numpy as np


@dataclass(frozen=True)
class TransitionRow:
    '''Outgoing transition probabilities of one state. Zero entries are omitted.'''

    source: NodeState
    targets: dict[NodeState, Number] = field(default_factory=dict)

    def __getitem__(self, state: tuple[int, int]) -> Number:
        return self.targets.get(NodeState(*state), 0)

    def __len__(self) -> int:
        return len(self.targets)

    @property
    def total(self) -> Number:
        return sum(self.targets.values(), 0)

    def to_dict(self, arithmetic: Arithmetic) -> dict:
        '''Converts the TransitionRow to a dictionary.'''
        return {
            'source': list(self.source),
            'targets': [[s.n, s.k, arithmetic.format(p)] for s, p in sorted(self.targets.items())],
        }


def _row(source: NodeState, entries: list[tuple[tuple[int, int], Number]]) -> TransitionRow:
    targets: dict[NodeState, Number] = {}
    for state, p in entries:
        if p == 0:
            continue
        state = NodeState(*state)
        targets[state] = targets.get(state, 0) + p
    return TransitionRow(source, targets)


# region Growth
def attachment_probability(n: int, k: int, rule: EvolutionRule, arithmetic: Arithmetic, mean_degree: Number | None = None) -> Number:
    '''
        Probability that an existing node of degree k at size n receives one of the new node's m edges.

        Uniform attachment picks m distinct nodes uniformly: m / n. Preferential attachment
        uses min(1, m k / (n kbar)), falling back to m / n when the network has no edges.
    '''

    if rule.attach == AttachmentRule.PREFERENTIAL:
        if mean_degree is None:
            raise ValidationError('mean_degree', 'preferential attachment needs the mean degree at size n')
        if mean_degree != 0:
            return min(arithmetic.number(1), arithmetic.number(rule.m * k) / (n * mean_degree))
    return arithmetic.ratio(rule.m, n)


def attachment_probabilities(cond: np.ndarray, n: int, rule: EvolutionRule, arithmetic: Arithmetic) -> np.ndarray:
    '''Returns the attachment probability for every degree 0..n-1 given the degree distribution `cond` at size n.'''
    mean_degree = sum(k * cond[k] for k in range(n)) if rule.attach == AttachmentRule.PREFERENTIAL else None
    return arithmetic.array(attachment_probability(n, k, rule, arithmetic, mean_degree) for k in range(n))


def growth_transitions(s: tuple[int, int], rule: EvolutionRule, mean_degree: Number | None = None) -> TransitionRow:
    '''
        Returns the growth fragment of the row of s = (n, k), already weighted by p.

        A present node keeps its degree with p n/(n+1) (1 - pi) and gains an edge with
        p n/(n+1) pi; the newcomer enters at (n+1, m) with p/(n+1).
    '''

    source = NodeState(*s)
    n, k = source
    if rule.m > n:
        raise ValidationError('m', f'cannot attach {rule.m} edges in a network of {n} nodes')

    arithmetic = Arithmetic.of(rule.p)
    p = rule.p
    pi = attachment_probability(n, k, rule, arithmetic, mean_degree)
    present = p * arithmetic.ratio(n, n + 1)

    return _row(source, [
        ((n + 1, k), present * (1 - pi)),
        ((n + 1, k + 1), present * pi),
        ((n + 1, rule.m), p * arithmetic.ratio(1, n + 1)),
    ])


def growth_image(cond: np.ndarray, n: int, rule: EvolutionRule, arithmetic: Arithmetic) -> np.ndarray:
    '''
        Pushes the degree distribution `cond` at size n through one growth event.

        Returns the degree distribution at size n + 1 (degrees 0..n); it sums to 1.
    '''

    if rule.m > n:
        raise ValidationError('m', f'cannot attach {rule.m} edges in a network of {n} nodes')

    pi = attachment_probabilities(cond, n, rule, arithmetic)
    present = arithmetic.ratio(n, n + 1)

    image = arithmetic.zeros(n + 1)
    image[:n] += present * cond * (1 - pi)
    image[1:] += present * cond * pi
    image[rule.m] += arithmetic.ratio(1, n + 1)
    return image
# endregion


# region Decay
def uniform_deletion_transitions(s: tuple[int, int], q_decay: Number) -> TransitionRow:
    '''
        Returns the decay fragment of the row of s = (n, k) under uniform deletion, weighted by q_decay.

        (n-1, k) with (n-k-1) q / (n-1) and (n-1, k-1) with k q / (n-1); the two sum to q.
        The deleted node's own share 1/n has been spread proportionally, which is why these
        rows do not depend on the rest of the distribution.
    '''

    source = NodeState(*s)
    n, k = source
    if n < 2:
        raise ValidationError('n', 'decay needs at least two nodes')

    arithmetic = Arithmetic.of(q_decay)
    return _row(source, [
        ((n - 1, k), q_decay * arithmetic.ratio(n - k - 1, n - 1)),
        ((n - 1, k - 1), q_decay * arithmetic.ratio(k, n - 1)),
    ])


class ReassignmentForm(StrEnum):
    SIMPLIFIED = 'simplified'
    '''r = n/(n-1) [c stay + shifted c lose]; normalized whenever the mean removal probability is 1/n.'''

    GENERAL = 'general'
    '''Normalizes each survivor contribution by (1 - q_k); always sums to 1.'''


def reassignment_vector(cond: np.ndarray, profile: SurvivorProfile, form: ReassignmentForm = ReassignmentForm.SIMPLIFIED) -> np.ndarray:
    '''
        Returns r[k'] for k' = 0..n-1: the degree distribution at size n-1 of the survivors of a
        single deletion, conditioned on that deletion having happened.

        It is the share of mass each removed node passes on; entry n-1 is always zero.
    '''

    n = profile.n
    arithmetic = profile.arithmetic
    survivors = (1 - profile.q) * cond
    norm = survivors.sum()
    if norm == 0:
        raise DegenerateReassignmentError(f'no survivor mass at size {n}: every node is removed with certainty')

    kept = cond * profile.stay
    shifted = arithmetic.zeros(n)
    shifted[:-1] = (cond * profile.lose)[1:]

    if ReassignmentForm(form) == ReassignmentForm.SIMPLIFIED:
        return arithmetic.ratio(n, n - 1) * (kept + shifted)

    moves = profile.stay + profile.lose
    zero = arithmetic.number(0)
    stay_share = arithmetic.array(
        survivors[k] / norm * profile.stay[k] / moves[k] if moves[k] != 0 else zero
        for k in range(n)
    )
    lose_share = arithmetic.zeros(n)
    for k in range(1, n):
        if moves[k] != 0:
            lose_share[k - 1] = survivors[k] / norm * profile.lose[k] / moves[k]
    return stay_share + lose_share


def isolated_reassignment(sd: StateDistribution,
                          profile: SurvivorProfile,
                          k_prime: int,
                          form: ReassignmentForm = ReassignmentForm.SIMPLIFIED) -> Number:
    '''Returns r_(n,k') for size n = profile.n under the distribution `sd`.'''

    if not 0 <= k_prime < profile.n - 1:
        return sd.arithmetic.number(0)
    return reassignment_vector(sd.conditional(profile.n), profile, form)[k_prime]


def decay_transition_row(sd: StateDistribution,
                         profile: SurvivorProfile,
                         k: int,
                         form: ReassignmentForm = ReassignmentForm.SIMPLIFIED) -> TransitionRow:
    '''
        Returns the decay row of (n, k) at unit decay probability:

            Pi[(n,k) -> (n-1,k')] = [k'=k] stay_k + [k'=k-1] lose_k + q_k r_(n,k')
    '''

    n = profile.n
    if n < 2:
        raise ValidationError('n', 'decay needs at least two nodes')

    r = reassignment_vector(sd.conditional(n), profile, form)
    stay, lose = profile.row(k)
    q = profile.q[k]

    entries = [((n - 1, k_prime), q * r[k_prime]) for k_prime in range(n - 1)]
    if k < n - 1:
        entries.append(((n - 1, k), stay))
    if k > 0:
        entries.append(((n - 1, k - 1), lose))
    return _row(NodeState(n, k), entries)


def decay_image(cond: np.ndarray, profile: SurvivorProfile, form: ReassignmentForm = ReassignmentForm.SIMPLIFIED) -> np.ndarray:
    '''
        Pushes the degree distribution `cond` at size n through one deletion event.

        Returns the degree distribution at size n - 1 (degrees 0..n-2).
    '''

    n = profile.n
    if n < 2:
        raise ValidationError('n', 'decay needs at least two nodes')

    r = reassignment_vector(cond, profile, form)
    assert r[n - 1] == 0, f'Survivors cannot keep degree n - 1 after a deletion. Offending reassignment: {r}'

    removed = (cond * profile.q).sum()
    image = cond[:n - 1] * profile.stay[:n - 1] + cond[1:] * profile.lose[1:]
    return image + removed * r[:n - 1]
# endregion
