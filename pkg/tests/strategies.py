'''Hypothesis strategies shared by the test modules.'''

from fractions import Fraction

from hypothesis import strategies as st
from hypothesis.strategies import composite

from degreescope.graph import Graph


@composite
def graphs(draw, min_nodes: int = 2, max_nodes: int = 6) -> Graph:
    '''Random simple graphs on nodes "1".."n", isolated nodes allowed.'''
    n = draw(st.integers(min_value=min_nodes, max_value=max_nodes))
    labels = tuple(str(i) for i in range(1, n + 1))
    pairs = [(labels[i], labels[j]) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return Graph(labels, frozenset(chosen))


@composite
def degree_distributions(draw, min_nodes: int = 2, max_nodes: int = 8) -> tuple[int, list[Fraction]]:
    '''A size n and an exact degree distribution over 0..n-1, sparse and lopsided ones included.'''
    n = draw(st.integers(min_value=min_nodes, max_value=max_nodes))
    counts = draw(st.lists(st.integers(min_value=0, max_value=20), min_size=n, max_size=n).filter(any))
    total = sum(counts)
    return n, [Fraction(c, total) for c in counts]
