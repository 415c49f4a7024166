"""Brute-force enumeration of the conjugation-twist relation on matrix pairs.

Enumerates pairs (Phi, Sigma) of invertible r x r matrices over a prime field
F_p satisfying Phi Sigma Phi^-1 = Sigma^q, and stratifies them by the Jordan
type of Sigma^a - 1 when that matrix is nilpotent (i.e. Sigma^a unipotent).
Everything is exhaustive over the finite field, guarded by a candidate cap;
matrices are handled internally as flat entry tuples for speed and exposed
as ExactMatrix values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct

from .errors import (
    InvalidSpecError,
    ResourceLimitError,
    SingularMatrixError,
    SizeMismatchError,
    UnsupportedDomainError,
)
from .exactlin import ExactMatrix, _is_prime, identity, jordan_type, mat_mul, mat_pow, mat_sub, rank
from .partitions import Partition

DEFAULT_PAIR_CAP = 2**24


@dataclass(frozen=True)
class ModuliInstance:
    """Parameters of one enumeration: exponent q, size r, field F_p, optional a."""

    q: int
    r: int
    p: int
    a: int | None = None
    cap: int = DEFAULT_PAIR_CAP

    def __post_init__(self):
        if self.q < 1:
            raise InvalidSpecError(f"q must be >= 1, got {self.q}")
        if self.r < 1:
            raise InvalidSpecError(f"r must be >= 1, got {self.r}")
        if not _is_prime(self.p):
            raise InvalidSpecError(f"p must be prime, got {self.p}")
        if self.a is not None and self.a < 1:
            raise InvalidSpecError(f"a must be >= 1, got {self.a}")

    def candidate_pairs(self) -> int:
        return self.p ** (2 * self.r * self.r)


# -- flat-tuple mod-p matrix helpers ------------------------------------------


def _tmul(a: tuple, b: tuple, r: int, p: int) -> tuple:
    out = []
    for i in range(r):
        base = i * r
        for j in range(r):
            s = 0
            for k in range(r):
                s += a[base + k] * b[k * r + j]
            out.append(s % p)
    return tuple(out)


def _tpow(a: tuple, e: int, r: int, p: int) -> tuple:
    result = _tidentity(r)
    base = a
    while e:
        if e & 1:
            result = _tmul(result, base, r, p)
        e >>= 1
        if e:
            base = _tmul(base, base, r, p)
    return result


def _tidentity(r: int) -> tuple:
    return tuple(1 if i % (r + 1) == 0 else 0 for i in range(r * r))


def _tinvertible(a: tuple, r: int, p: int) -> bool:
    rows = [list(a[i * r : (i + 1) * r]) for i in range(r)]
    rk = 0
    for col in range(r):
        piv = next((i for i in range(rk, r) if rows[i][col] % p), None)
        if piv is None:
            return False
        rows[rk], rows[piv] = rows[piv], rows[rk]
        inv = pow(rows[rk][col], -1, p)
        for i in range(rk + 1, r):
            f = (rows[i][col] * inv) % p
            if f:
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rk])]
        rk += 1
    return True


def _tinv(a: tuple, r: int, p: int) -> tuple:
    rows = [
        list(a[i * r : (i + 1) * r]) + [int(i == j) for j in range(r)]
        for i in range(r)
    ]
    for col in range(r):
        piv = next((i for i in range(col, r) if rows[i][col]), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = pow(rows[col][col], -1, p)
        rows[col] = [(x * inv) % p for x in rows[col]]
        for i in range(r):
            if i != col and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[col])]
    return tuple(v for row in rows for v in row[r:])


def _general_linear(r: int, p: int) -> list[tuple]:
    """Invertible r x r matrices as flat tuples, ascending lexicographic."""
    return [
        t for t in iproduct(range(p), repeat=r * r) if _tinvertible(t, r, p)
    ]


def _to_matrix(t: tuple, r: int, p: int) -> ExactMatrix:
    return ExactMatrix([t[i * r : (i + 1) * r] for i in range(r)], p)


def _check_cap(inst: ModuliInstance) -> None:
    count = inst.candidate_pairs()
    if count > inst.cap:
        raise ResourceLimitError(
            f"enumeration needs {count} candidate pairs, cap is {inst.cap}"
        )


def _solution_tuples(inst: ModuliInstance) -> list[tuple[tuple, tuple]]:
    _check_cap(inst)
    r, p, q = inst.r, inst.p, inst.q
    gl = _general_linear(r, p)
    sigma_pows = [(s, _tpow(s, q, r, p)) for s in gl]
    out = []
    for phi in gl:
        for sigma, sq in sigma_pows:
            if _tmul(phi, sigma, r, p) == _tmul(sq, phi, r, p):
                out.append((phi, sigma))
    return out


def enumerate_pairs(inst: ModuliInstance) -> list[tuple[ExactMatrix, ExactMatrix]]:
    """All invertible pairs with Phi Sigma Phi^-1 = Sigma^q, ordered by entry tuples."""
    r, p = inst.r, inst.p
    return [
        (_to_matrix(phi, r, p), _to_matrix(sigma, r, p))
        for phi, sigma in _solution_tuples(inst)
    ]


@dataclass(frozen=True)
class StratifyResult:
    """Pair counts bucketed by the Jordan type of Sigma^a - 1."""

    total: int
    buckets: dict[Partition, int] = field(compare=False)
    residual: int = 0


def sigma_stratify(inst: ModuliInstance) -> StratifyResult:
    """Bucket enumerated pairs by jordan_type(Sigma^a - 1); non-unipotent Sigma^a is residual."""
    if inst.a is None:
        raise InvalidSpecError("sigma_stratify requires the exponent a")
    r, p, a = inst.r, inst.p, inst.a
    ident = identity(r, p)
    miss = object()
    type_cache: dict[tuple, Partition | None] = {}
    buckets: dict[Partition, int] = {}
    residual = 0
    total = 0
    for _phi, sigma in _solution_tuples(inst):
        total += 1
        cached = type_cache.get(sigma, miss)
        if cached is miss:
            m = _to_matrix(sigma, r, p)
            t = mat_sub(mat_pow(m, a), ident)
            if mat_pow(t, r).is_zero():
                cached = jordan_type(t)
            else:
                cached = None
            type_cache[sigma] = cached
        if cached is None:
            residual += 1
        else:
            buckets[cached] = buckets.get(cached, 0) + 1
    return StratifyResult(total=total, buckets=buckets, residual=residual)


def unipotent_part_type(sigma: ExactMatrix) -> Partition:
    """Jordan type of (Sigma^o' - 1) where o' is the prime-to-p part of Sigma's order."""
    p = sigma.modulus
    if p is None:
        raise UnsupportedDomainError("unipotent_part_type requires a prime-field matrix")
    if not sigma.is_square():
        raise SizeMismatchError("unipotent part of a non-square matrix")
    r = sigma.rows
    if rank(sigma) != r:
        raise SingularMatrixError("matrix is not invertible")
    ident = identity(r, p)
    bound = 1
    for i in range(r):
        bound *= p**r - p**i
    order = 1
    power = sigma
    while power != ident:
        power = mat_mul(power, sigma)
        order += 1
        if order > bound:
            raise SingularMatrixError("order search exceeded the group order")
    reduced = order
    while reduced % p == 0:
        reduced //= p
    return jordan_type(mat_sub(mat_pow(sigma, reduced), ident))


def orbit_count(inst: ModuliInstance) -> int:
    """Orbits of the solution set under simultaneous GL_r(F_p) conjugation."""
    r, p = inst.r, inst.p
    solutions = _solution_tuples(inst)
    solution_set = set(solutions)
    gl = _general_linear(r, p)
    conj = [(g, _tinv(g, r, p)) for g in gl]
    seen: set[tuple[tuple, tuple]] = set()
    orbits = 0
    for pair in solutions:
        if pair in seen:
            continue
        orbits += 1
        phi, sigma = pair
        for g, ginv in conj:
            image = (
                _tmul(_tmul(g, phi, r, p), ginv, r, p),
                _tmul(_tmul(g, sigma, r, p), ginv, r, p),
            )
            assert image in solution_set
            seen.add(image)
    return orbits
