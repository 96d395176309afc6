"""The monotonicity family.

Each predicate is either a closed-form inverse-sign check or a small set
of per-coordinate LP infeasibility tests (the defining implications are
homogeneous, so "x_i < 0 somewhere" scales to "x_i <= -1" exactly).
"""

from __future__ import annotations

from fractions import Fraction

from .geninv import group_inverse, moore_penrose
from .lp import LinearSystem, lp_feasible
from .matrix import RationalMatrix, Subspace, inverse, subspace_bases

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _matrix_nonneg(a: RationalMatrix) -> bool:
    return all(x >= 0 for row in a.data for x in row)


def is_monotone(a: RationalMatrix) -> bool:
    """Ax >= 0 implies x >= 0, i.e. A invertible with A^-1 >= 0."""
    a.require_square("monotonicity")
    inv = inverse(a)
    return inv is not None and _matrix_nonneg(inv)


def _cone_implies_nonneg(a: RationalMatrix, subspace: Subspace) -> bool:
    """Ax >= 0 and x in `subspace` imply x >= 0 (exact, per coordinate)."""
    n = a.rows
    complement = _orthogonal_complement_rows(subspace)
    for i in range(n):
        system = LinearSystem(n)
        for w in complement:
            system.eq(w, 0)
        for r in range(n):
            system.ge(a.row_vec(r), 0)
        bad = [_ZERO] * n
        bad[i] = _ONE
        system.le(bad, -1)
        if lp_feasible(system).is_feasible:
            return False
    return True


def _orthogonal_complement_rows(subspace: Subspace) -> list:
    """Rows w with (w . x = 0 for all rows) <=> x in subspace."""
    if not subspace.basis:
        return [tuple(_ONE if j == i else _ZERO for j in range(subspace.ambient_dim))
                for i in range(subspace.ambient_dim)]
    stacked = RationalMatrix.from_rows(subspace.basis)
    return list(subspace_bases(stacked).null.basis)


def is_range_monotone(a: RationalMatrix) -> bool:
    """Ax >= 0 with x in R(A) implies x >= 0."""
    a.require_square("range monotonicity")
    return _cone_implies_nonneg(a, subspace_bases(a).range)


def is_row_monotone(a: RationalMatrix) -> bool:
    """Ax >= 0 with x in R(A^T) implies x >= 0."""
    a.require_square("row monotonicity")
    return _cone_implies_nonneg(a, Subspace(a.cols, subspace_bases(a).row.basis))


def is_group_monotone(a: RationalMatrix) -> bool:
    """Group inverse exists and is entrywise nonnegative."""
    a.require_square("group monotonicity")
    gi = group_inverse(a)
    return gi.exists and _matrix_nonneg(gi.inverse)


def is_gi_semimonotone(a: RationalMatrix) -> bool:
    """Moore-Penrose inverse entrywise nonnegative (the generalized-inverse
    'semimonotone' notion; renamed to avoid the LCP class of the same name)."""
    a.require_square("generalized-inverse semimonotonicity")
    return _matrix_nonneg(moore_penrose(a))


def is_almost_monotone(a: RationalMatrix) -> bool:
    """Ax >= 0 implies Ax = 0."""
    a.require_square("almost monotonicity")
    n = a.rows
    for i in range(n):
        system = LinearSystem(n)
        for r in range(n):
            system.ge(a.row_vec(r), 0)
        system.ge(a.row_vec(i), 1)
        if lp_feasible(system).is_feasible:
            return False
    return True
