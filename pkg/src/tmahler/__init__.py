"""t-metric Mahler measures of rational numbers.

Computes M_t(alpha) for nonzero rational alpha by enumerating coprime
factorizations, pruning their measure tuples under the all-t dominance
order, and minimizing the resulting L^t norm functions.  Values for
1 < t < infinity assume the conjecture that the defining infimum is attained
at rational points; every structured result carries an assumes_conjecture
flag.
"""

from .envelope import (
    AxiomReport,
    CrossingPoint,
    CrossingSearchConfig,
    EnvelopeProfile,
    ExceptionalPoint,
    Piece,
    attaining_tuples,
    check_axioms,
    find_crossings,
    integer_closed_form,
    minimal_tuples,
    mt_measure,
    profile,
)
from .errors import DomainError, EnumerationCapError
from .factorization import (
    Part,
    enumerate_measure_tuples,
    enumerate_representations,
    multiplicative_partitions,
    part_count_bound,
    prime_factors,
)
from .rational import (
    ReducedRational,
    invert,
    mahler_measure,
    multiply,
    parse_rational,
    reduce,
)
from .tuples import (
    MeasureTuple,
    as_measure_tuple,
    dominates,
    log_power_sum,
    measure_tuple,
    norm_t,
    prune_minimal,
)

__all__ = [
    "AxiomReport",
    "CrossingPoint",
    "CrossingSearchConfig",
    "DomainError",
    "EnumerationCapError",
    "EnvelopeProfile",
    "ExceptionalPoint",
    "MeasureTuple",
    "Part",
    "Piece",
    "ReducedRational",
    "as_measure_tuple",
    "attaining_tuples",
    "check_axioms",
    "dominates",
    "enumerate_measure_tuples",
    "enumerate_representations",
    "find_crossings",
    "integer_closed_form",
    "invert",
    "log_power_sum",
    "mahler_measure",
    "measure_tuple",
    "minimal_tuples",
    "mt_measure",
    "multiplicative_partitions",
    "multiply",
    "norm_t",
    "parse_rational",
    "part_count_bound",
    "prime_factors",
    "profile",
    "prune_minimal",
    "reduce",
]
