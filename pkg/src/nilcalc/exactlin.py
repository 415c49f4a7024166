"""Exact dense linear algebra over arbitrary-precision rationals and prime fields.

Matrices are immutable, stored densely (tuple of row tuples).  Rational
entries are Python ints or ``Fraction`` in lowest terms (integral values are
kept as plain ints, and matrices remember whether they are integer-only so
the common all-int case never pays Fraction overhead); prime field entries
are ints in [0, p) with the prime recorded in ``modulus``.

Rank and Jordan-type computations clear denominators row by row and run a
fraction-free integer elimination on sparse working rows, with per-row gcd
normalization to keep intermediate values small.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import chain
from math import gcd, lcm

from .errors import (
    DomainMismatchError,
    NotNilpotentError,
    NotUnipotentError,
    ParseError,
    SingularMatrixError,
    SizeMismatchError,
    UnsupportedDomainError,
)
from .partitions import Partition, conjugate

Scalar = int | Fraction


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _norm_rational(v) -> Scalar:
    if isinstance(v, int):
        return v
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else v
    raise TypeError(f"not an exact rational scalar: {v!r}")


class ExactMatrix:
    """Dense exact matrix; ``modulus is None`` means rational entries."""

    __slots__ = ("rows", "cols", "entries", "modulus", "_intonly", "_zero")

    def __init__(self, entries, modulus: int | None = None):
        rows = [tuple(r) for r in entries]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise SizeMismatchError("ragged rows")
        intonly = True
        if modulus is None:
            rows = [tuple(_norm_rational(v) for v in r) for r in rows]
            intonly = not any(type(v) is Fraction for r in rows for v in r)
        else:
            if not _is_prime(modulus):
                raise UnsupportedDomainError(f"modulus {modulus} is not prime")
            for r in rows:
                for v in r:
                    if not isinstance(v, int):
                        raise DomainMismatchError(
                            f"prime-field entries must be integers, got {v!r}"
                        )
            rows = [tuple(v % modulus for v in r) for r in rows]
        self.rows = len(rows)
        self.cols = ncols
        self.entries = tuple(rows)
        self.modulus = modulus
        self._intonly = intonly
        self._zero = None

    @classmethod
    def _raw(cls, rows: int, cols: int, entries, modulus, intonly=False) -> "ExactMatrix":
        # trusted constructor: entries already normalized
        m = object.__new__(cls)
        m.rows = rows
        m.cols = cols
        m.entries = entries
        m.modulus = modulus
        m._intonly = intonly
        m._zero = None
        return m

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ExactMatrix)
            and self.modulus == other.modulus
            and self.entries == other.entries
            and self.cols == other.cols
        )

    def __hash__(self) -> int:
        return hash((self.entries, self.cols, self.modulus))

    def __repr__(self) -> str:
        dom = "Q" if self.modulus is None else f"F{self.modulus}"
        return f"ExactMatrix({self.rows}x{self.cols} over {dom})"

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        return mat_add(self, other)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return mat_sub(self, other)

    def __mul__(self, other: "ExactMatrix") -> "ExactMatrix":
        return mat_mul(self, other)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        if self._zero is None:
            self._zero = all(not v for r in self.entries for v in r)
        return self._zero


def identity(n: int, modulus: int | None = None) -> ExactMatrix:
    if modulus is not None and not _is_prime(modulus):
        raise UnsupportedDomainError(f"modulus {modulus} is not prime")
    ent = tuple(
        tuple(1 if i == j else 0 for j in range(n)) for i in range(n)
    )
    return ExactMatrix._raw(n, n, ent, modulus, intonly=True)


def zeros(rows: int, cols: int, modulus: int | None = None) -> ExactMatrix:
    if modulus is not None and not _is_prime(modulus):
        raise UnsupportedDomainError(f"modulus {modulus} is not prime")
    zrow = (0,) * cols
    return ExactMatrix._raw(rows, cols, (zrow,) * rows, modulus, intonly=True)


def _check_domains(a: ExactMatrix, b: ExactMatrix) -> None:
    if a.modulus != b.modulus:
        raise DomainMismatchError(
            f"mixed scalar domains: {a.modulus} vs {b.modulus}"
        )


def mat_add(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    _check_domains(a, b)
    if a.rows != b.rows or a.cols != b.cols:
        raise SizeMismatchError(
            f"cannot add {a.rows}x{a.cols} and {b.rows}x{b.cols}"
        )
    # adding a known-zero matrix is the identity; matrices are immutable
    if a._zero:
        return b
    if b._zero:
        return a
    p = a.modulus
    if p is not None:
        ent = tuple(
            tuple((x + y) % p for x, y in zip(ra, rb))
            for ra, rb in zip(a.entries, b.entries)
        )
        return ExactMatrix._raw(a.rows, a.cols, ent, p, intonly=True)
    if a._intonly and b._intonly:
        ent = tuple(
            tuple(x + y for x, y in zip(ra, rb))
            for ra, rb in zip(a.entries, b.entries)
        )
        return ExactMatrix._raw(a.rows, a.cols, ent, None, intonly=True)
    ent = tuple(
        tuple(_norm_rational(x + y) for x, y in zip(ra, rb))
        for ra, rb in zip(a.entries, b.entries)
    )
    return ExactMatrix._raw(a.rows, a.cols, ent, None)


def mat_sub(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    return mat_add(a, scalar_mul(-1, b))


def scalar_mul(c: Scalar, a: ExactMatrix) -> ExactMatrix:
    p = a.modulus
    if p is None:
        c = _norm_rational(c)
        if type(c) is int and a._intonly:
            ent = tuple(tuple(c * v for v in r) for r in a.entries)
            return ExactMatrix._raw(a.rows, a.cols, ent, None, intonly=True)
        ent = tuple(tuple(_norm_rational(c * v) for v in r) for r in a.entries)
        return ExactMatrix._raw(a.rows, a.cols, ent, None)
    if not isinstance(c, int):
        raise DomainMismatchError("prime-field scalar must be an integer")
    c %= p
    ent = tuple(tuple((c * v) % p for v in r) for r in a.entries)
    return ExactMatrix._raw(a.rows, a.cols, ent, p, intonly=True)


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    _check_domains(a, b)
    if a.cols != b.rows:
        raise SizeMismatchError(
            f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}"
        )
    p = a.modulus
    intonly = a._intonly and b._intonly
    brows = b.entries
    out = []
    for arow in a.entries:
        acc = [0] * b.cols
        for k, av in enumerate(arow):
            if not av:
                continue
            brow = brows[k]
            if av == 1:
                for j, bv in enumerate(brow):
                    if bv:
                        acc[j] += bv
            else:
                for j, bv in enumerate(brow):
                    if bv:
                        acc[j] += av * bv
        if p is not None:
            out.append(tuple(v % p for v in acc))
        elif intonly:
            out.append(tuple(acc))
        else:
            out.append(tuple(_norm_rational(v) for v in acc))
    return ExactMatrix._raw(a.rows, b.cols, tuple(out), p, intonly=p is not None or intonly)


def mat_pow(a: ExactMatrix, k: int) -> ExactMatrix:
    if not a.is_square():
        raise SizeMismatchError("power of a non-square matrix")
    if k < 0:
        raise UnsupportedDomainError("negative matrix powers are not supported")
    result = identity(a.rows, a.modulus)
    base = a
    while k:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


def kron(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Kronecker product; entry blocks are a[i][j] * B."""
    _check_domains(a, b)
    p = a.modulus
    intonly = a._intonly and b._intonly
    zrow = (0,) * b.cols
    out = []
    for arow in a.entries:
        for brow in b.entries:
            pieces = []
            for av in arow:
                if not av:
                    pieces.append(zrow)
                elif av == 1:
                    pieces.append(brow)
                elif p is not None:
                    pieces.append(tuple((av * bv) % p for bv in brow))
                elif intonly:
                    pieces.append(tuple(av * bv for bv in brow))
                else:
                    pieces.append(tuple(_norm_rational(av * bv) for bv in brow))
            out.append(pieces[0] if len(pieces) == 1 else tuple(chain.from_iterable(pieces)))
    m = ExactMatrix._raw(
        a.rows * b.rows, a.cols * b.cols, tuple(out), p,
        intonly=p is not None or intonly,
    )
    m._zero = a.is_zero() or b.is_zero()
    return m


def direct_sum(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    _check_domains(a, b)
    out = []
    zright = (0,) * b.cols
    zleft = (0,) * a.cols
    for r in a.entries:
        out.append(r + zright)
    for r in b.entries:
        out.append(zleft + r)
    return ExactMatrix._raw(
        a.rows + b.rows, a.cols + b.cols, tuple(out), a.modulus,
        intonly=a._intonly and b._intonly,
    )


# -- elimination internals ----------------------------------------------------


def _sparse_int_rows(m: ExactMatrix) -> list[dict[int, int]]:
    """Rows as {col: int} dicts; rational rows are scaled by the denominator lcm."""
    if m._intonly or m.modulus is not None:
        return [
            {j: v for j, v in enumerate(row) if v} for row in m.entries
        ]
    out = []
    for row in m.entries:
        d = 1
        for v in row:
            if type(v) is Fraction:
                d = lcm(d, v.denominator)
        if d == 1:
            out.append({j: int(v) for j, v in enumerate(row) if v})
        else:
            out.append({j: int(v * d) for j, v in enumerate(row) if v})
    return out


def _normalize_row(row: dict[int, int], lead_col: int) -> dict[int, int]:
    if len(row) == 1:
        return {lead_col: 1}
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    if row[lead_col] < 0:
        g = -g
    if g != 1:
        return {j: v // g for j, v in row.items()}
    return row


def _echelon_insert(pivots: dict[int, dict[int, int]], row: dict[int, int], p) -> bool:
    """Reduce row against pivots; install it if independent.

    Never mutates existing rows, so callers may pass shared dicts.
    """
    while row:
        c = min(row)
        piv = pivots.get(c)
        if piv is None:
            if len(row) == 1:
                pivots[c] = {c: 1}
                return True
            if p is None:
                row = _normalize_row(row, c)
            else:
                inv = pow(row[c], -1, p)
                if inv != 1:
                    row = {j: (v * inv) % p for j, v in row.items()}
            pivots[c] = row
            return True
        if len(piv) == 1 and len(row) == 1:
            return False
        if p is None:
            a = piv[c]
            b = row[c]
            new = {j: a * v for j, v in row.items() if j != c}
            for j, v in piv.items():
                if j == c:
                    continue
                w = new.get(j, 0) - b * v
                if w:
                    new[j] = w
                else:
                    new.pop(j, None)
            if new:
                new = _normalize_row(new, min(new))
        else:
            b = row[c]  # pivot lead is normalized to 1
            new = {j: v for j, v in row.items() if j != c}
            for j, v in piv.items():
                if j == c:
                    continue
                w = (new.get(j, 0) - b * v) % p
                if w:
                    new[j] = w
                else:
                    new.pop(j, None)
        row = new
    return False


def _echelon(rows, p) -> dict[int, dict[int, int]]:
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        if row:
            _echelon_insert(pivots, row, p)
    return pivots


def rank(m: ExactMatrix) -> int:
    """Exact rank over the fraction field of the scalar domain."""
    return len(_echelon(_sparse_int_rows(m), m.modulus))


def is_nilpotent(n: ExactMatrix) -> bool:
    """True iff N^rows is exactly zero."""
    if not n.is_square():
        raise SizeMismatchError("nilpotency is defined for square matrices")
    power = n
    for _ in range(n.rows):
        if power.is_zero():
            return True
        power = mat_mul(power, n)
    return power.is_zero()


def _row_times_matrix(row: dict[int, int], nrows: list[dict[int, int]], p):
    if len(row) == 1:
        (k, v), = row.items()
        src = nrows[k]
        if v == 1:
            return src  # aliasing is safe: working rows are never mutated
        if p is None:
            return {j: v * w for j, w in src.items()}
        return {j: r for j, w in src.items() if (r := (v * w) % p)}
    acc: dict[int, int] = {}
    for k, v in row.items():
        for j, w in nrows[k].items():
            acc[j] = acc.get(j, 0) + v * w
    if p is None:
        return {j: v for j, v in acc.items() if v}
    return {j: r for j, v in acc.items() if (r := v % p)}


def _type_from_ranks(ranks: list[int]) -> Partition:
    # nu^T_i = rank(N^(i-1)) - rank(N^i)
    ranks.append(0)
    conj_parts = [ranks[i] - ranks[i + 1] for i in range(len(ranks) - 1)]
    return conjugate(Partition(conj_parts))


def jordan_type(n: ExactMatrix) -> Partition:
    """Partition of Jordan block lengths of a nilpotent matrix.

    With r_i = rank(N^i) (r_0 = size), the conjugate type has parts
    r_{i-1} - r_i; ranks are computed by compressing a row-space basis
    through repeated multiplication by N, which never forms dense powers.
    """
    if not n.is_square():
        raise SizeMismatchError("Jordan type is defined for square matrices")
    size = n.rows
    if size == 0:
        return Partition()
    p = n.modulus
    nrows = _sparse_int_rows(n)
    ranks = [size]
    if all(len(d) <= 1 for d in nrows):
        # rows v_k * e_f(k): rank(N^i) is the size of the image of f^i
        nxt = {k: next(iter(d)) for k, d in enumerate(nrows) if d}
        cols = set(nxt.values())
        while cols:
            r = len(cols)
            if r == ranks[-1]:
                raise NotNilpotentError(
                    "matrix is not nilpotent (rank sequence stabilized)"
                )
            ranks.append(r)
            cols = {nxt[c] for c in cols if c in nxt}
        return _type_from_ranks(ranks)
    basis = _echelon(nrows, p)
    while basis:
        r = len(basis)
        if r == ranks[-1]:
            raise NotNilpotentError("matrix is not nilpotent (rank sequence stabilized)")
        ranks.append(r)
        basis = _echelon(
            [_row_times_matrix(row, nrows, p) for row in basis.values()], p
        )
    return _type_from_ranks(ranks)


def unipotent_log(m: ExactMatrix) -> ExactMatrix:
    """Finite logarithm sum((-1)^(k+1) (M-I)^k / k, k = 1..n-1) of a unipotent matrix."""
    if m.modulus is not None:
        raise UnsupportedDomainError(
            "unipotent_log requires rational entries (division by k)"
        )
    if not m.is_square():
        raise SizeMismatchError("unipotent_log of a non-square matrix")
    size = m.rows
    t = mat_sub(m, identity(size))
    if not is_nilpotent(t):
        raise NotUnipotentError("matrix is not unipotent")
    total = zeros(size, size)
    power = identity(size)
    for k in range(1, size):
        power = mat_mul(power, t)
        if power.is_zero():
            break
        total = mat_add(total, scalar_mul(Fraction((-1) ** (k + 1), k), power))
    return total


def mat_inv(m: ExactMatrix) -> ExactMatrix:
    """Exact inverse via Gauss-Jordan; raises SingularMatrixError."""
    if not m.is_square():
        raise SizeMismatchError("inverse of a non-square matrix")
    size = m.rows
    p = m.modulus
    if p is None:
        work = [
            [Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(size)]
            for i, row in enumerate(m.entries)
        ]
    else:
        work = [
            list(row) + [int(i == j) for j in range(size)]
            for i, row in enumerate(m.entries)
        ]
    for col in range(size):
        piv = next((r for r in range(col, size) if work[r][col]), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        work[col], work[piv] = work[piv], work[col]
        lead = work[col][col]
        inv = pow(lead, -1, p) if p is not None else None
        for j in range(col, 2 * size):
            if p is None:
                work[col][j] /= lead
            else:
                work[col][j] = (work[col][j] * inv) % p
        for r in range(size):
            if r == col or not work[r][col]:
                continue
            f = work[r][col]
            for j in range(col, 2 * size):
                if p is None:
                    work[r][j] -= f * work[col][j]
                else:
                    work[r][j] = (work[r][j] - f * work[col][j]) % p
    ent = [row[size:] for row in work]
    return ExactMatrix(ent, p)


# -- JSON wire format ----------------------------------------------------------


def _scalar_to_json(v: Scalar):
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    return v


def _scalar_from_json(v, modulus):
    if isinstance(v, bool):
        raise ParseError(f"bad matrix entry {v!r}")
    if isinstance(v, int):
        return v
    if isinstance(v, str) and modulus is None:
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational entry {v!r}") from exc
    raise ParseError(f"bad matrix entry {v!r}")


def matrix_to_json(m: ExactMatrix) -> dict:
    doc = {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[_scalar_to_json(v) for v in row] for row in m.entries],
    }
    if m.modulus is not None:
        doc["modulus"] = m.modulus
    return doc


def matrix_from_json(doc) -> ExactMatrix:
    if not isinstance(doc, dict) or "entries" not in doc:
        raise ParseError("matrix document must be an object with an 'entries' field")
    modulus = doc.get("modulus")
    entries = doc["entries"]
    if not isinstance(entries, list) or any(not isinstance(r, list) for r in entries):
        raise ParseError("'entries' must be a list of rows")
    if modulus is not None and not isinstance(modulus, int):
        raise ParseError("'modulus' must be an integer")
    rows = [[_scalar_from_json(v, modulus) for v in r] for r in entries]
    m = ExactMatrix(rows, modulus)
    if "rows" in doc and doc["rows"] != m.rows:
        raise ParseError(f"declared rows {doc['rows']} != actual {m.rows}")
    if "cols" in doc and doc["cols"] != m.cols:
        raise ParseError(f"declared cols {doc['cols']} != actual {m.cols}")
    return m
