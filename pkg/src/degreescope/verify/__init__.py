'''Executable checks of the kernel against enumeration, closed forms and simulation.'''

# API exports
from .theorem1 import Theorem1Report, CorpusReport, verify_theorem1, verify_corpus, small_graph_corpus
from .theorem2 import Theorem2Report, CoefficientCheck, verify_theorem2, check_size
from .smt import prove_uniform_update
from .compare import CompareReport, compare_methods, is_tail_monotone, DEFAULT_THRESHOLD
from . import reference
