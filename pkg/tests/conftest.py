"""Shared random generators for the test suite (all explicitly seeded)."""

from __future__ import annotations

import random
import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from karalcp.matrix import RationalMatrix, rank  # noqa: E402
from karalcp.minor_classes import MClass, is_m_matrix, minor_class, structural_flags  # noqa: E402


def rand_fraction(rng: random.Random, num_bound: int = 6, den_bound: int = 3) -> Fraction:
    return Fraction(rng.randint(-num_bound, num_bound), rng.randint(1, den_bound))


def rand_matrix(rng: random.Random, n: int, num_bound: int = 6, den_bound: int = 3) -> RationalMatrix:
    return RationalMatrix(n, n, [[rand_fraction(rng, num_bound, den_bound)
                                  for _ in range(n)] for _ in range(n)])


def rand_int_matrix(rng: random.Random, rows: int, cols: int, bound: int = 3) -> RationalMatrix:
    return RationalMatrix(rows, cols, [[Fraction(rng.randint(-bound, bound))
                                        for _ in range(cols)] for _ in range(rows)])


def rand_vector(rng: random.Random, n: int, bound: int = 4) -> tuple[Fraction, ...]:
    return tuple(Fraction(rng.randint(-bound, bound)) for _ in range(n))


def rand_nonzero_vector(rng: random.Random, n: int, bound: int = 4):
    while True:
        v = rand_vector(rng, n, bound)
        if any(x != 0 for x in v):
            return v


def rand_z_matrix(rng: random.Random, n: int) -> RationalMatrix:
    data = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            data[i][j] = Fraction(rng.randint(-1, 4)) if i == j else Fraction(-max(0, rng.randint(-3, 3)))
    return RationalMatrix(n, n, data)


def rand_symmetric_z_matrix(rng: random.Random, n: int) -> RationalMatrix:
    data = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        data[i][i] = Fraction(rng.randint(-1, 4))
        for j in range(i + 1, n):
            v = Fraction(-max(0, rng.randint(-3, 3)))
            data[i][j] = data[j][i] = v
    return RationalMatrix(n, n, data)


def rand_p_matrix(rng: random.Random, n: int) -> RationalMatrix:
    """R^T R plus a positive diagonal shift is positive definite, hence P."""
    while True:
        r = rand_int_matrix(rng, n, n, 2)
        m = r.transpose() @ r
        shift = RationalMatrix(n, n, [[Fraction(rng.randint(1, 3)) if i == j else Fraction(0)
                                       for j in range(n)] for i in range(n)])
        candidate = m + shift
        if minor_class(candidate).is_p:
            return candidate


def rand_group_invertible(rng: random.Random, n: int, max_rank: int | None = None) -> RationalMatrix:
    """Random A with rank A = rank A^2, mixing singular and invertible cases."""
    while True:
        r = rng.randint(1, max_rank or n)
        f = rand_int_matrix(rng, n, r, 2)
        g = rand_int_matrix(rng, r, n, 2)
        a = f @ g
        if rank(a) == r and rank(a @ a) == r:
            return a


def rand_permutation(rng: random.Random, n: int) -> RationalMatrix:
    perm = list(range(n))
    rng.shuffle(perm)
    return RationalMatrix(n, n, [[Fraction(1) if j == perm[i] else Fraction(0)
                                  for j in range(n)] for i in range(n)])


def rand_symmetric_irreducible_invertible_m(rng: random.Random, n: int) -> RationalMatrix:
    """Symmetric Z, strictly diagonally dominant with positive diagonal."""
    while True:
        data = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                v = Fraction(-rng.randint(0, 3))
                data[i][j] = data[j][i] = v
        for i in range(n):
            data[i][i] = sum(abs(data[i][j]) for j in range(n) if j != i) + rng.randint(1, 3)
        m = RationalMatrix(n, n, data)
        if structural_flags(m).irreducible and is_m_matrix(m) is MClass.NONSINGULAR_M:
            return m


def rand_singular_irreducible_m(rng: random.Random, n: int) -> tuple[RationalMatrix, tuple]:
    """s I - B with B >= 0 irreducible and a known positive Perron vector v
    (B v = s v exactly), so A v = 0: a singular irreducible M-matrix."""
    v = [Fraction(rng.randint(1, 4)) for _ in range(n)]
    b = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        j = (i + 1) % n  # a cycle keeps the pattern irreducible
        b[i][j] = Fraction(rng.randint(1, 3))
        for j2 in range(n):
            if j2 != i and j2 != j and rng.random() < Fraction(1, 3):
                b[i][j2] = Fraction(rng.randint(0, 2))
    s = max(sum(b[i][j] * v[j] for j in range(n) if j != i) / v[i] for i in range(n))
    for i in range(n):
        b[i][i] = s - sum(b[i][j] * v[j] for j in range(n) if j != i) / v[i]
    a = RationalMatrix(n, n, [[(s if i == j else Fraction(0)) - b[i][j]
                               for j in range(n)] for i in range(n)])
    return a, tuple(v)
