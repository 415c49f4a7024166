"""nilcalc: exact dominance-lattice, Jordan-type and stratification calculator."""

from .errors import (
    CalcError,
    DomainMismatchError,
    EmptyInputError,
    InvalidPartError,
    InvalidSpecError,
    ModelViolationError,
    NotNilpotentError,
    NotUnipotentError,
    ParseError,
    ResourceLimitError,
    SingularMatrixError,
    SizeMismatchError,
    UnknownIdError,
    UnsupportedDomainError,
)
from .partitions import (
    Partition,
    conjugate,
    dominates,
    join,
    jordan_matrix,
    make_partition,
    meet,
    meet_all,
    min_element,
    partitions_of,
)
from .exactlin import (
    ExactMatrix,
    direct_sum,
    identity,
    is_nilpotent,
    jordan_type,
    kron,
    mat_add,
    mat_inv,
    mat_mul,
    mat_pow,
    mat_sub,
    matrix_from_json,
    matrix_to_json,
    rank,
    scalar_mul,
    unipotent_log,
    zeros,
)
from .monodromy import (
    TameBlockSpec,
    direct_sum_type,
    induced_type,
    spec_from_json,
    spec_to_json,
    tensor_type,
    tensor_type_matrix,
    total_type,
)
from .stratification import (
    ComponentComplex,
    closure_test,
    complex_from_json,
    complex_to_json,
    factors_from_json,
    minimal_lift,
    mu_of_point,
    product_complex,
    stratum,
    validate,
)
from .moduli import (
    ModuliInstance,
    StratifyResult,
    enumerate_pairs,
    orbit_count,
    sigma_stratify,
    unipotent_part_type,
)
from .reducedmodel import ProductRingElem, regular_complement

__version__ = "0.1.0"
