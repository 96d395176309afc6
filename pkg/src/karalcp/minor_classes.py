"""Determinant- and structure-based matrix classes.

P / P0 / N (with category) / adequate come from exhaustive principal-minor
scans (2^n - 1 exact determinants, size-capped).  M-matrices are decided
by the Fiedler-Ptak characterization Z + P (nonsingular) / Z + P0
(singular), which sidesteps the spectral radius entirely, and property c
by "M-matrix and rank A = rank A^2" (zero eigenvalue of index <= 1).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import TooLargeError
from .geninv import index_at_most_one
from .lp import LinearSystem, lp_feasible
from .matrix import RationalMatrix, determinant, rank

DEFAULT_MINOR_CAP = 12


class MClass(Enum):
    NOT_M = "NotM"
    SINGULAR_M = "SingularM"
    NONSINGULAR_M = "NonsingularM"


@dataclass(frozen=True)
class StructuralFlags:
    nonnegative: bool
    positive: bool
    z_matrix: bool
    symmetric: bool
    irreducible: bool
    has_nonpositive_row: bool


@dataclass(frozen=True)
class MinorClassReport:
    is_p: bool
    is_p0: bool
    is_n: bool
    n_first_category: bool
    is_adequate: bool


def structural_flags(a: RationalMatrix) -> StructuralFlags:
    a.require_square("structural flags")
    d = a.data
    n = a.rows
    nonneg = all(x >= 0 for row in d for x in row)
    return StructuralFlags(
        nonnegative=nonneg,
        positive=all(x > 0 for row in d for x in row),
        z_matrix=all(d[i][j] <= 0 for i in range(n) for j in range(n) if i != j),
        symmetric=all(d[i][j] == d[j][i] for i in range(n) for j in range(i + 1, n)),
        irreducible=is_irreducible(a),
        has_nonpositive_row=any(all(x <= 0 for x in row) for row in d),
    )


def is_irreducible(a: RationalMatrix) -> bool:
    """Strong connectivity of the digraph with an edge i->j iff a_ij != 0.

    The 1x1 zero matrix counts as reducible; any other 1x1 is irreducible.
    """
    a.require_square("irreducibility")
    n = a.rows
    if n == 1:
        return a.data[0][0] != 0
    adj = [[j for j in range(n) if j != i and a.data[i][j] != 0] for i in range(n)]
    radj = [[] for _ in range(n)]
    for i in range(n):
        for j in adj[i]:
            radj[j].append(i)

    def reaches_all(graph) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in graph[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return len(seen) == n

    return reaches_all(adj) and reaches_all(radj)


def _check_cap(a: RationalMatrix, cap: int) -> None:
    if a.rows > cap:
        raise TooLargeError(f"order {a.rows} exceeds the minor-scan cap {cap}")


def minor_class(a: RationalMatrix, cap: int = DEFAULT_MINOR_CAP) -> MinorClassReport:
    a.require_square("minor classes")
    _check_cap(a, cap)
    n = a.rows
    is_p = is_p0 = is_n = True
    vanished: list[tuple[int, ...]] = []
    for k in range(1, n + 1):
        for idx in itertools.combinations(range(n), k):
            d = determinant(a.submatrix(idx, idx))
            if d <= 0:
                is_p = False
            if d < 0:
                is_p0 = False
            if d >= 0:
                is_n = False
            if d == 0:
                vanished.append(idx)
            if not (is_p or is_p0 or is_n):
                # Nothing can change anymore except adequacy, which needs is_p0.
                return MinorClassReport(False, False, False, False, False)
    first_cat = is_n and any(x > 0 for row in a.data for x in row)
    adequate = is_p0 and all(_rows_and_cols_dependent(a, idx) for idx in vanished)
    return MinorClassReport(is_p, is_p0, is_n, first_cat, adequate)


def _rows_and_cols_dependent(a: RationalMatrix, idx: tuple[int, ...]) -> bool:
    rows_block = a.submatrix(idx, range(a.cols))
    cols_block = a.submatrix(range(a.rows), idx)
    return rank(rows_block) < len(idx) and rank(cols_block) < len(idx)


def is_m_matrix(a: RationalMatrix, cap: int = DEFAULT_MINOR_CAP) -> MClass:
    """Z + P => nonsingular M; Z + P0 (not P) => singular M; else not M."""
    a.require_square("M-matrix test")
    flags = structural_flags(a)
    if not flags.z_matrix:
        return MClass.NOT_M
    report = minor_class(a, cap)
    if report.is_p:
        return MClass.NONSINGULAR_M
    if report.is_p0:
        return MClass.SINGULAR_M
    return MClass.NOT_M


def has_property_c(a: RationalMatrix, cap: int = DEFAULT_MINOR_CAP) -> bool:
    """M-matrix whose zero eigenvalue (if any) has index <= 1."""
    a.require_square("property c")
    if is_m_matrix(a, cap) is MClass.NOT_M:
        return False
    return index_at_most_one(a)


def is_h_matrix_positive_diag(a: RationalMatrix) -> bool:
    """Positive diagonal and a positive scaling vector d making |a_ii| d_i
    strictly dominate the off-diagonal row sums; exact via a slack-1 LP."""
    a.require_square("H-matrix test")
    n = a.rows
    if any(a.data[i][i] <= 0 for i in range(n)):
        return False
    system = LinearSystem(n, nonneg=True)
    for i in range(n):
        coeffs = [Fraction(0)] * n
        coeffs[i] = abs(a.data[i][i])
        for j in range(n):
            if j != i:
                coeffs[j] = -abs(a.data[i][j])
        system.ge(coeffs, 1)
    for i in range(n):
        e = [Fraction(0)] * n
        e[i] = Fraction(1)
        system.ge(e, 1)
    return lp_feasible(system).is_feasible
