"""p-orderings of subsets of Z/p^k, representative roots and small-level root sets."""
from .arith import INFINITY, PAdicContext, factorial_valuation, factorial_valuation_table, is_prime, residue_split, valuation
from .errors import PAdicError
from .estimators import MinimalRepresentation, POrderingTransformer
from .fast import fast_p_ordering, merge_orderings, recurse_translate
from .ordering import POrdering, TieBreak, is_p_ordering, naive_p_ordering, p_value, pseq_of
from .rep import RepOrderingState, correlate, p_exp_increase, rep_p_ordering
from .reproots import (
    MinimalRep,
    Relation,
    RepRoot,
    canonicalize,
    compare,
    expand,
    interaction_valuation,
    minimal_representation,
    normalize_root_list,
)
from .rootsets import (
    RootSetClass,
    brute_force_root_sets,
    classify_root_sets,
    count_root_sets,
    enumerate_poly_functions,
    root_set_of,
    total_root_sets,
)

__version__ = "0.1.0"
