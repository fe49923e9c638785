"""Rough-set algebras of quasiorders and the representation of finite Nelson algebras."""

from .algebra import (
    DeMorganAlgebra,
    Verdict,
    condition_M,
    find_delta,
    interpolation_prime_filters,
    make_algebra,
    partition_J,
    star,
    verify_all,
    verify_demorgan,
    verify_kleene,
    verify_lukasiewicz,
    verify_nelson,
    weak_impl,
)
from .errors import (
    CapacityError,
    ConsistencyError,
    InputError,
    LatticeValidationError,
    PreconditionError,
    RelationClassError,
    RoughNelsonError,
    UnsupportedStructureError,
)
from .lattice import FiniteLattice, join_irreducibles, lattice_from_hasse, validate_lattice
from .relations import BinaryRelation, Universe, build_relation, chain_order, equivalence_from_blocks
from .representation import RepresentationResult, boolean_characterization, minimality_check, represent
from .rough import (
    RoughPair,
    RoughSetLattice,
    enumerate_rs,
    enumerate_rs_bruteforce,
    enumerate_rs_generated,
    lower_approx,
    rough_pair,
    rs_algebra,
    upper_approx,
)

__version__ = "0.1.0"

__all__ = [
    "BinaryRelation",
    "boolean_characterization",
    "build_relation",
    "CapacityError",
    "chain_order",
    "condition_M",
    "ConsistencyError",
    "DeMorganAlgebra",
    "enumerate_rs",
    "enumerate_rs_bruteforce",
    "enumerate_rs_generated",
    "equivalence_from_blocks",
    "find_delta",
    "FiniteLattice",
    "InputError",
    "interpolation_prime_filters",
    "join_irreducibles",
    "lattice_from_hasse",
    "LatticeValidationError",
    "lower_approx",
    "make_algebra",
    "minimality_check",
    "partition_J",
    "PreconditionError",
    "RelationClassError",
    "represent",
    "RepresentationResult",
    "rough_pair",
    "RoughNelsonError",
    "RoughPair",
    "RoughSetLattice",
    "rs_algebra",
    "star",
    "Universe",
    "UnsupportedStructureError",
    "upper_approx",
    "validate_lattice",
    "Verdict",
    "verify_all",
    "verify_demorgan",
    "verify_kleene",
    "verify_lukasiewicz",
    "verify_nelson",
    "weak_impl",
]
