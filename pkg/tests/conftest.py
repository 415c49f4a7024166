"""Shared test helpers: independent oracles and seeded random generators."""

from fractions import Fraction
import random

import pytest

from nilcalc import ExactMatrix, mat_inv, mat_mul


def naive_rank(m: ExactMatrix) -> int:
    """Plain Gaussian elimination over Fraction (or F_p), independent of the library path."""
    p = m.modulus
    if p is None:
        work = [[Fraction(v) for v in row] for row in m.entries]
    else:
        work = [list(row) for row in m.entries]
    nrows, ncols = m.rows, m.cols
    rk = 0
    for col in range(ncols):
        piv = next((r for r in range(rk, nrows) if work[r][col]), None)
        if piv is None:
            continue
        work[rk], work[piv] = work[piv], work[rk]
        lead = work[rk][col]
        for r in range(rk + 1, nrows):
            if not work[r][col]:
                continue
            if p is None:
                f = work[r][col] / lead
                work[r] = [x - f * y for x, y in zip(work[r], work[rk])]
            else:
                f = (work[r][col] * pow(lead, -1, p)) % p
                work[r] = [(x - f * y) % p for x, y in zip(work[r], work[rk])]
        rk += 1
        if rk == nrows:
            break
    return rk


def random_rational_matrix(rng: random.Random, rows: int, cols: int, span: int = 6) -> ExactMatrix:
    ent = [
        [
            Fraction(rng.randint(-span, span), rng.randint(1, 3))
            for _ in range(cols)
        ]
        for _ in range(rows)
    ]
    return ExactMatrix(ent)


def random_int_matrix(rng: random.Random, rows: int, cols: int, span: int = 4) -> ExactMatrix:
    return ExactMatrix(
        [[rng.randint(-span, span) for _ in range(cols)] for _ in range(rows)]
    )


def random_invertible(rng: random.Random, n: int, span: int = 3) -> ExactMatrix:
    while True:
        m = random_int_matrix(rng, n, n, span)
        try:
            mat_inv(m)
        except Exception:
            continue
        return m


def conjugate_by(p: ExactMatrix, m: ExactMatrix) -> ExactMatrix:
    return mat_mul(mat_mul(p, m), mat_inv(p))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240817)
