"""Exact Grothendieck-ring computations for the braided Hopf algebra of n_+ sl(2)."""
from .errors import ConsistencyError, DomainError, ResourceLimitError
from .graded import TruncatedSeries, comult_on_constant, graded_rank, hilbert_series, mult_on_constant
from .hopf import (
    CoherenceReport,
    HopfElement,
    TensorElement,
    associativity_check,
    braid,
    coassociativity_check,
    coherence_check,
    comultiply,
    multiply,
    orbit_coefficient,
    y,
)
from .kledger import KClass, KRelation, filtration_chain, octahedron_relations, orbit_decomposition, triangle_relation
from .laurent import LaurentPoly, lp_add, lp_bar, lp_eval_one, lp_mul, lp_shift, parse_text
from .parabolic import (
    CosetMatrix,
    braid_permutation,
    braiding_shift,
    double_cosets,
    group_dims,
    quadruples,
    shift_dimension,
    unipotent_dims,
    weighted_inversions,
)
from .qcomb import BettiVector, betti, box_partitions, q_binomial, q_factorial, q_integer, q_multinomial

__version__ = "0.1.0"
