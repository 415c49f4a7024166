"""Product-of-domains model of a reduced Noetherian ring.

Elements of Z^k with componentwise arithmetic; the k coordinate kernels play
the minimal primes, so an element is regular (not a zero divisor) exactly
when every coordinate is nonzero.  ``regular_complement`` produces the s with
r*s = 0 and r+s regular, filling zero coordinates with the unit 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyInputError, SizeMismatchError


@dataclass(frozen=True)
class ProductRingElem:
    """Element of Z^k, k >= 1."""

    coords: tuple[int, ...]

    def __post_init__(self):
        if not self.coords:
            raise EmptyInputError("product ring elements need at least one coordinate")
        if any(not isinstance(v, int) for v in self.coords):
            raise SizeMismatchError("coordinates must be integers")

    @property
    def k(self) -> int:
        return len(self.coords)

    def _check(self, other: "ProductRingElem") -> None:
        if self.k != other.k:
            raise SizeMismatchError(f"elements of Z^{self.k} and Z^{other.k}")

    def __add__(self, other: "ProductRingElem") -> "ProductRingElem":
        self._check(other)
        return ProductRingElem(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __mul__(self, other: "ProductRingElem") -> "ProductRingElem":
        self._check(other)
        return ProductRingElem(tuple(a * b for a, b in zip(self.coords, other.coords)))

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.coords)

    def is_regular(self) -> bool:
        return all(v != 0 for v in self.coords)

    def is_zero_divisor(self) -> bool:
        return not self.is_zero() and not self.is_regular()


def regular_complement(r: ProductRingElem) -> ProductRingElem:
    """The s with s_i = 1 where r_i = 0 and s_i = 0 elsewhere.

    Guarantees r*s = 0 and r+s regular; 1 is the fixed filler unit so the
    result is deterministic.
    """
    return ProductRingElem(tuple(0 if v else 1 for v in r.coords))
