"""Exact computation of the eigenvalue cone of sums of Hermitian matrices.

The package enumerates intersecting Schubert-class tuples by the Horn
recursion (with an optional restriction to tuples fixed by a coordinate
permutation), cross-checks them against a Littlewood-Richardson backend,
generates the resulting inequality descriptions of the cone, decides
exact rational membership, prunes redundant inequalities with an exact
simplex, and searches for explicit matrix witnesses numerically.
"""

from .subsets import (
    CompositionError,
    InvalidShift,
    Permutation,
    Subset,
    SubsetTuple,
    all_subsets,
    all_tuples,
    entry_sum,
    expected_dim,
    gap_partition,
    group_into_orbits,
    orbit_representative,
    schubert_partitions,
    slope,
    stable_tuples,
)
from .lr import (
    IntersectionClass,
    classify,
    lr_coefficient,
    schubert_product,
    subset_to_schubert_partition,
)
from .horn import (
    HornStore,
    HornTable,
    MissingDependency,
    NotSigmaStable,
    count_intersecting,
    cross_check,
    horn_check,
)
from .cone import (
    InequalitySystem,
    SpectrumFamily,
    generate_system,
    lr_membership,
    member,
    shift_rescale,
)
from .lp import (
    is_redundant,
    minimize_system,
    redundancy_report,
    solve_lp,
)
from .witness import (
    NumericalFailure,
    WitnessResult,
    find_witness,
    hermitian_eigh,
    project_to_orbit,
    sample_orbit,
)

__version__ = "0.1.0"

__all__ = [
    "CompositionError", "InvalidShift", "Permutation", "Subset",
    "SubsetTuple", "all_subsets", "all_tuples", "entry_sum", "expected_dim",
    "gap_partition", "group_into_orbits", "orbit_representative",
    "schubert_partitions", "slope", "stable_tuples",
    "IntersectionClass", "classify", "lr_coefficient", "schubert_product",
    "subset_to_schubert_partition",
    "HornStore", "HornTable", "MissingDependency", "NotSigmaStable",
    "count_intersecting", "cross_check", "horn_check",
    "InequalitySystem", "SpectrumFamily", "generate_system", "lr_membership",
    "member", "shift_rescale",
    "is_redundant", "minimize_system", "redundancy_report", "solve_lp",
    "NumericalFailure", "WitnessResult", "find_witness", "hermitian_eigh",
    "project_to_orbit", "sample_orbit",
]
