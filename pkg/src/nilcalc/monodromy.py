"""Jordan-type calculus: tensor products, direct sums, induction, total types.

The normative meaning of the tensor type is the Jordan type of the Kronecker
sum N_alpha (x) I + I (x) N_beta; ``tensor_type`` uses the classical
characteristic-zero per-block closed form (for blocks J_s, J_t the summands
have sizes s+t-1, s+t-3, ..., |s-t|+1), which the test suite proves equal to
the matrix computation ``tensor_type_matrix`` on every pair up to size 36.
Everything here assumes characteristic 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Sequence

from .errors import EmptyInputError, InvalidSpecError, ParseError, SizeMismatchError
from .exactlin import identity, kron, mat_add, jordan_type
from .partitions import Partition, jordan_matrix, make_partition


@dataclass(frozen=True)
class TameBlockSpec:
    """Configuration of one tame block: fixed tensor factor and induction multiplicity."""

    label: str
    tau_dim: int
    tau_type: Partition
    mult: int

    def __post_init__(self):
        if self.tau_dim < 1:
            raise InvalidSpecError(f"tau_dim must be >= 1, got {self.tau_dim}")
        if self.mult < 1:
            raise InvalidSpecError(f"mult must be >= 1, got {self.mult}")
        if self.tau_type.n != self.tau_dim:
            raise SizeMismatchError(
                f"tau_type sums to {self.tau_type.n}, expected tau_dim {self.tau_dim}"
            )


def tensor_type(alpha: Partition, beta: Partition) -> Partition:
    """Jordan type of the Kronecker sum of N_alpha and N_beta (closed form)."""
    if alpha.n == 0 or beta.n == 0:
        raise EmptyInputError("tensor_type requires nonempty partitions")
    parts: list[int] = []
    for s in alpha:
        for t in beta:
            parts.extend(range(s + t - 1, abs(s - t), -2))
    return make_partition(parts)


def tensor_type_matrix(alpha: Partition, beta: Partition) -> Partition:
    """Tensor type computed from the explicit Kronecker-sum matrix."""
    if alpha.n == 0 or beta.n == 0:
        raise EmptyInputError("tensor_type requires nonempty partitions")
    left = kron(jordan_matrix(alpha), identity(beta.n))
    right = kron(identity(alpha.n), jordan_matrix(beta))
    return jordan_type(mat_add(left, right))


def direct_sum_type(alpha: Partition, beta: Partition) -> Partition:
    """Jordan type of a block-diagonal sum: multiset union of the parts."""
    return make_partition(alpha.parts + beta.parts)


def induced_type(alpha: Partition, mult: int) -> Partition:
    """mult-fold direct sum of alpha with itself."""
    if mult < 1:
        raise InvalidSpecError(f"mult must be >= 1, got {mult}")
    return make_partition(alpha.parts * mult)


def total_type(blocks: Sequence[tuple[TameBlockSpec, Partition]]) -> Partition:
    """Composite type over tame blocks: (+) over tau of mult copies of alpha (x) tau_type.

    Monotone in each alpha under dominance.
    """
    if not blocks:
        raise EmptyInputError("total_type requires at least one block")
    acc = Partition()
    for spec, alpha in blocks:
        if alpha.n == 0:
            raise EmptyInputError(f"block {spec.label!r} has an empty partition")
        acc = direct_sum_type(acc, induced_type(tensor_type(alpha, spec.tau_type), spec.mult))
    return acc


# -- JSON wire format --------------------------------------------------------


def spec_to_json(spec: TameBlockSpec) -> dict:
    return {
        "label": spec.label,
        "tau_dim": spec.tau_dim,
        "tau_type": list(spec.tau_type.parts),
        "mult": spec.mult,
    }


def spec_from_json(doc) -> TameBlockSpec:
    if not isinstance(doc, dict):
        raise ParseError("block spec must be an object")
    try:
        label = doc["label"]
        tau_dim = doc["tau_dim"]
        tau_type = doc["tau_type"]
        mult = doc["mult"]
    except KeyError as exc:
        raise ParseError(f"block spec missing field {exc}") from None
    if not isinstance(label, str) or not isinstance(tau_dim, int) or not isinstance(mult, int):
        raise ParseError("block spec fields have the wrong types")
    if not isinstance(tau_type, list):
        raise ParseError("tau_type must be a list of parts")
    return TameBlockSpec(label, tau_dim, make_partition(tau_type), mult)
