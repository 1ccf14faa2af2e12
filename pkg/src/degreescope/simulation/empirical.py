'''Empirical degree distributions averaged over many independent trials.'''

from .config import SimConfig
from .trial import census, evolve_graph
from ..arithmetic import Arithmetic
from ..graph import DegreeDistribution

from dataclasses import dataclass
from multiprocessing import Pool
import json
import logging

import numpy as np

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EmpiricalDistribution:
    '''Monte Carlo estimate of the degree distribution with per-degree standard errors.'''

    distribution: DegreeDistribution
    standard_errors: tuple[float, ...]
    trials: int
    samples: int
    '''Number of censuses averaged: trials times sampled steps per trial.'''

    def z_scores(self, reference: DegreeDistribution) -> tuple[float | None, ...]:
        '''(estimate - reference) / standard error per degree; None where the standard error is zero.'''
        length = max(len(self.distribution), len(reference))
        scores = []
        for k in range(length):
            se = self.standard_errors[k] if k < len(self.standard_errors) else 0.0
            diff = float(self.distribution[k]) - float(reference[k])
            scores.append(diff / se if se > 0 else None)
        return tuple(scores)

    def to_dict(self) -> dict:
        '''Converts the EmpiricalDistribution to a dictionary.'''
        return {
            'trials': self.trials,
            'samples': self.samples,
            'probs': [float(p) for p in self.distribution],
            'standard_errors': list(self.standard_errors),
        }

    def to_json(self, *, indent: int | None = 2) -> str:
        '''Converts the EmpiricalDistribution to a JSON string.'''
        return json.dumps(self.to_dict(), indent=indent)


def _trial_mean(args: tuple[SimConfig, int]) -> np.ndarray:
    '''Time average of the node degree distribution over the sampled steps of one trial.'''
    cfg, trial_index = args

    total = np.zeros(cfg.max_size, dtype=np.float64)
    for t, graph, _ in evolve_graph(cfg, trial_index):
        if t < cfg.burn_in:
            continue
        counts = census(graph)
        total[:len(counts)] += counts / counts.sum()
    return total / cfg.sampled_steps


def empirical_degree_distribution(cfg: SimConfig, workers: int = 1) -> EmpiricalDistribution:
    '''
        Averages the post-burn-in degree distributions of `cfg.trials` independent trials.

        The standard error of each degree is the sample standard deviation of the per-trial
        averages over sqrt(trials), zero for a single trial. Per-trial results are reduced in
        trial order, so the outcome does not depend on `workers`.
    '''

    tasks = [(cfg, idx) for idx in range(cfg.trials)]
    if workers > 1 and cfg.trials > 1:
        with Pool(workers) as pool:
            means = pool.map(_trial_mean, tasks)
    else:
        means = [_trial_mean(task) for task in tasks]
    logger.debug('Simulated %d trials of %d steps', cfg.trials, cfg.t_max)

    stacked = np.stack(means)
    estimate = stacked.mean(axis=0)
    estimate = estimate / estimate.sum()
    if cfg.trials > 1:
        errors = stacked.std(axis=0, ddof=1) / np.sqrt(cfg.trials)
    else:
        errors = np.zeros_like(estimate)

    return EmpiricalDistribution(
        distribution=DegreeDistribution(tuple(float(p) for p in estimate), Arithmetic.FLOAT),
        standard_errors=tuple(float(se) for se in errors),
        trials=cfg.trials,
        samples=cfg.trials * cfg.sampled_steps,
    )
