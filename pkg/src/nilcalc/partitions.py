"""Integer partitions with the dominance partial order.

A partition of n is a non-increasing tuple of positive integers summing to n;
the empty partition is the unique partition of 0.  Partitions of a fixed n
form a lattice under dominance (prefix-sum comparison), with conjugation as
an order-reversing involution.  Reads past the last part return 0.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .errors import EmptyInputError, InvalidPartError, SizeMismatchError


class Partition:
    """Canonical (sorted, positive) partition; immutable value object."""

    __slots__ = ("parts", "n")

    def __init__(self, parts: Iterable[int] = ()):
        pt = tuple(parts)
        for v in pt:
            if not isinstance(v, int) or v <= 0:
                raise InvalidPartError(f"part {v!r} is not a positive integer")
        if any(pt[i] < pt[i + 1] for i in range(len(pt) - 1)):
            raise InvalidPartError(f"parts {list(pt)} are not non-increasing")
        self.parts = pt
        self.n = sum(pt)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        # tacit extension: parts beyond the last are 0
        if isinstance(i, int) and i >= len(self.parts):
            return 0
        return self.parts[i]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"


def make_partition(values: Iterable[int]) -> Partition:
    """Sort values into canonical non-increasing order; reject parts < 1."""
    return Partition(sorted(values, reverse=True))


def _raw_partition(parts: tuple[int, ...]) -> Partition:
    # trusted constructor for parts already in canonical form
    p = object.__new__(Partition)
    p.parts = parts
    p.n = sum(parts)
    return p


def conjugate(mu: Partition) -> Partition:
    """Transpose of the Young diagram: result_i = #{j : mu_j >= i+1}."""
    if not mu.parts:
        return mu
    out = [0] * mu.parts[0]
    for v in mu.parts:
        for i in range(v):
            out[i] += 1
    return _raw_partition(tuple(out))


def _check_same_n(mu: Partition, nu: Partition) -> None:
    if mu.n != nu.n:
        raise SizeMismatchError(
            f"partitions of different integers are incomparable ({mu.n} vs {nu.n})"
        )


def dominates(mu: Partition, nu: Partition) -> bool:
    """True iff mu <= nu in dominance: every prefix sum of mu is <= nu's."""
    _check_same_n(mu, nu)
    a = b = 0
    for i in range(max(len(mu), len(nu))):
        a += mu[i]
        b += nu[i]
        if a > b:
            return False
    return True


def meet(mu: Partition, nu: Partition) -> Partition:
    """Greatest lower bound under dominance.

    Pointwise minima of the two prefix-sum sequences, then first differences.
    The min of two concave integer sequences is concave, so the differences
    are already non-increasing and no repair pass is needed.
    """
    _check_same_n(mu, nu)
    k = max(len(mu), len(nu))
    diffs = []
    a = b = prev = 0
    for i in range(k):
        a += mu[i]
        b += nu[i]
        m = a if a < b else b
        diffs.append(m - prev)
        prev = m
    return Partition([d for d in diffs if d > 0])


def join(mu: Partition, nu: Partition) -> Partition:
    """Least upper bound: conjugate of the meet of the conjugates."""
    _check_same_n(mu, nu)
    return conjugate(meet(conjugate(mu), conjugate(nu)))


def meet_all(parts: Iterable[Partition]) -> Partition:
    """Meet of a nonempty collection of partitions of a common n."""
    it = iter(parts)
    try:
        acc = next(it)
    except StopIteration:
        raise EmptyInputError("meet of an empty collection") from None
    for p in it:
        acc = meet(acc, p)
    return acc


def min_element(parts: Iterable[Partition]) -> Partition | None:
    """The minimum of the set if it exists, else None.

    The meet of the set is the minimum exactly when it is itself a member.
    """
    elems = list(parts)
    if not elems:
        raise EmptyInputError("min_element of an empty collection")
    m = meet_all(elems)
    return m if m in elems else None


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of n in descending lexicographic order."""
    if n < 0:
        raise InvalidPartError(f"cannot partition {n}")

    def gen(remaining: int, cap: int, prefix: list[int]) -> Iterator[Partition]:
        if remaining == 0:
            yield Partition(prefix)
            return
        for head in range(min(cap, remaining), 0, -1):
            prefix.append(head)
            yield from gen(remaining - head, head, prefix)
            prefix.pop()

    return gen(n, n, [])


def jordan_matrix(mu: Partition):
    """Nilpotent n x n matrix in Jordan form with block lengths mu, in order."""
    from .exactlin import ExactMatrix

    n = mu.n
    rows = [[0] * n for _ in range(n)]
    pos = 0
    for block in mu.parts:
        for i in range(pos, pos + block - 1):
            rows[i][i + 1] = 1
        pos += block
    return ExactMatrix._raw(n, n, tuple(tuple(r) for r in rows), None, intonly=True)
