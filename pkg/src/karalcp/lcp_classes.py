"""LCP matrix classes decided by exact feasibility search.

"Nonzero vector" conditions are encoded by orthant/support normalization
(sum of |x_i| = 1), which an LP handles exactly; strict conditions become
slack maximization.  The P# test runs one LP per sign orthant (halved by
the x -> -x symmetry); strict range semimonotonicity runs one LP per
nonempty support.

Copositivity over a polyhedral cone with generator matrix G reduces to
the sign of min over the standard simplex of lambda^T (G^T Q G) lambda.
That minimum is found exactly by enumerating KKT supports: on the face
with support T the stationary points satisfy M_TT lambda = nu * e with
e^T lambda = 1, the quadratic is constant (= nu) on each face's
stationary set, and the global minimizer is stationary on the relative
interior of its own support face, so the minimum over all supports'
feasible stationary values is the true minimum.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .errors import EmptyConeError, TooLargeError
from .matrix import (
    RationalMatrix,
    Subspace,
    Vector,
    dot,
    is_zero_vec,
    solve_linear,
    subspace_bases,
    vec,
)
from .lp import LinearSystem, lp_feasible

DEFAULT_CLASS_CAP = 12
DEFAULT_GENERATOR_CAP = 12

_ZERO = Fraction(0)
_ONE = Fraction(1)


# -- semipositivity ----------------------------------------------------


def is_semipositive(a: RationalMatrix) -> bool:
    """Exists x > 0 with Ax > 0; exact by homogenizing both strict signs."""
    system = LinearSystem(a.cols, nonneg=True)
    for j in range(a.cols):
        row = [_ZERO] * a.cols
        row[j] = _ONE
        system.ge(row, 1)
    for i in range(a.rows):
        system.ge(a.row_vec(i), 1)
    return lp_feasible(system).is_feasible


def is_weakly_semipositive(a: RationalMatrix) -> bool:
    """Exists 0 != x >= 0 with Ax >= 0."""
    system = LinearSystem(a.cols, nonneg=True)
    system.eq([_ONE] * a.cols, 1)
    for i in range(a.rows):
        system.ge(a.row_vec(i), 0)
    return lp_feasible(system).is_feasible


def _principal_submatrices(a: RationalMatrix, proper_only: bool = False):
    n = a.rows
    top = n - 1 if proper_only else n
    for k in range(1, top + 1):
        for idx in itertools.combinations(range(n), k):
            yield a.submatrix(idx, idx)


def is_semimonotone(a: RationalMatrix, cap: int = DEFAULT_CLASS_CAP) -> bool:
    """Every principal submatrix (including A) is weakly semipositive."""
    a.require_square("semimonotonicity")
    if a.rows > cap:
        raise TooLargeError(f"order {a.rows} exceeds cap {cap}")
    return all(is_weakly_semipositive(sub) for sub in _principal_submatrices(a))


def is_strictly_semimonotone(a: RationalMatrix, cap: int = DEFAULT_CLASS_CAP) -> bool:
    """Every principal submatrix (including A) is semipositive."""
    a.require_square("strict semimonotonicity")
    if a.rows > cap:
        raise TooLargeError(f"order {a.rows} exceeds cap {cap}")
    return all(is_semipositive(sub) for sub in _principal_submatrices(a))


def is_almost_semimonotone(a: RationalMatrix, cap: int = DEFAULT_CLASS_CAP) -> bool:
    """All proper principal submatrices semimonotone, A itself not.

    Since a submatrix of a proper submatrix is again a proper submatrix,
    the first condition is equivalent to every proper principal submatrix
    being weakly semipositive, and the second then reduces to A itself
    failing weak semipositivity.  A 1x1 matrix has no proper submatrices,
    so the quantification is vacuous there.
    """
    a.require_square("almost semimonotonicity")
    if a.rows > cap:
        raise TooLargeError(f"order {a.rows} exceeds cap {cap}")
    if not all(is_weakly_semipositive(sub) for sub in _principal_submatrices(a, proper_only=True)):
        return False
    return not is_weakly_semipositive(a)


# -- sign-reversal classes ----------------------------------------------


def is_p_hash(a: RationalMatrix, cap: int = DEFAULT_CLASS_CAP) -> bool:
    """No nonzero x in R(A) with x_i (Ax)_i <= 0 for every i.

    One LP per sign orthant: substituting x = s * z with z >= 0 makes the
    orthant constraints structural, range membership is W^T x = 0 for a
    left-null basis W, and sum z = 1 rules out zero.  The pair (s, -s)
    describes the same problem, so only orthants with s_1 = +1 run.
    """
    a.require_square("P# test")
    n = a.rows
    if n > cap:
        raise TooLargeError(f"order {a.rows} exceeds cap {cap}")
    left_null = subspace_bases(a).left_null.basis
    rows_a = [a.row_vec(i) for i in range(n)]
    for signs in itertools.product((1, -1), repeat=n - 1):
        s = (1,) + signs
        system = LinearSystem(n, nonneg=True)
        for w in left_null:
            system.eq([w[j] * s[j] for j in range(n)], 0)
        system.eq([_ONE] * n, 1)
        for i in range(n):
            system.ge([-s[i] * rows_a[i][j] * s[j] for j in range(n)], 0)
        if lp_feasible(system).is_feasible:
            return False
    return True


def is_strictly_range_semimonotone(a: RationalMatrix, cap: int = DEFAULT_CLASS_CAP) -> bool:
    """No nonzero x >= 0 in R(A) with x * Ax <= 0; one LP per support."""
    a.require_square("strict range semimonotonicity")
    n = a.rows
    if n > cap:
        raise TooLargeError(f"order {a.rows} exceeds cap {cap}")
    left_null = subspace_bases(a).left_null.basis
    for k in range(1, n + 1):
        for support in itertools.combinations(range(n), k):
            system = LinearSystem(k, nonneg=True)
            for w in left_null:
                system.eq([w[j] for j in support], 0)
            system.eq([_ONE] * k, 1)
            for i in support:
                system.ge([-a.data[i][j] for j in support], 0)
            if lp_feasible(system).is_feasible:
                return False
    return True


# -- copositivity over polyhedral cones ----------------------------------


@dataclass(frozen=True)
class ConeRep:
    """Polyhedral cone: conic hull of `generators`, optionally also known
    as (subspace intersect nonnegative orthant) via `constraint_subspace`."""

    ambient_dim: int
    generators: tuple[Vector, ...]
    constraint_subspace: Subspace | None = None

    @classmethod
    def nonnegative_orthant(cls, n: int) -> "ConeRep":
        gens = tuple(tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n))
        return cls(n, gens)


class CopositivityStatus(Enum):
    STRICTLY_COPOSITIVE = "StrictlyCopositive"
    COPOSITIVE_ONLY = "CopositiveOnly"
    NOT_COPOSITIVE = "NotCopositive"


@dataclass(frozen=True)
class CopositivityResult:
    status: CopositivityStatus
    minimum: Fraction
    witness: Vector | None = None


def copositivity_on_cone(q: RationalMatrix, cone: ConeRep,
                         cap: int = DEFAULT_GENERATOR_CAP) -> CopositivityResult:
    """Exact sign of min x^T Q x over the cone's simplex base.

    Uses the symmetrized form (Q + Q^T)/2.  The witness (when the minimum
    is <= 0) is the base point of the lexicographically first support
    attaining the minimum, mapped back to ambient coordinates.
    """
    q.require_square("copositivity")
    gens = cone.generators
    if not gens:
        raise EmptyConeError("cone has no generators (K = {0})")
    if len(gens) > cap:
        raise TooLargeError(f"{len(gens)} generators exceed cap {cap}")
    if any(is_zero_vec(g) for g in gens):
        raise EmptyConeError("zero vector is not a valid generator")
    qhat = q + q.transpose()  # factor 2 is sign-irrelevant and kept exact below
    m = len(gens)
    qg = [qhat.mul_vec(g) for g in gens]
    gram = [[dot(gens[i], qg[j]) / 2 for j in range(m)] for i in range(m)]

    best: Fraction | None = None
    best_lambda: tuple[int, ...] | None = None
    best_weights: Vector | None = None
    for k in range(1, m + 1):
        for support in itertools.combinations(range(m), k):
            sol = _face_stationary_value(gram, support)
            if sol is None:
                continue
            value, weights = sol
            if best is None or value < best:
                best = value
                best_lambda = support
                best_weights = weights
    assert best is not None  # singleton supports always produce values
    if best > 0:
        return CopositivityResult(CopositivityStatus.STRICTLY_COPOSITIVE, best)
    witness = _combine(gens, best_lambda, best_weights, cone.ambient_dim)
    status = (CopositivityStatus.COPOSITIVE_ONLY if best == 0
              else CopositivityStatus.NOT_COPOSITIVE)
    return CopositivityResult(status, best, witness)


def _face_stationary_value(gram: list[list[Fraction]], support: tuple[int, ...]):
    """Feasible stationary value of the quadratic on one simplex face.

    Solves M_TT lambda = nu e, sum lambda = 1 with lambda >= 0; the value
    of the quadratic there is nu.  Returns (nu, lambda) or None.
    """
    k = len(support)
    if k == 1:
        i = support[0]
        return gram[i][i], (Fraction(1),)
    rows = [[gram[i][j] for j in support] + [Fraction(-1)] for i in support]
    rows.append([Fraction(1)] * k + [Fraction(0)])
    system_m = RationalMatrix(k + 1, k + 1, rows)
    rhs = [Fraction(0)] * k + [Fraction(1)]
    sol = solve_linear(system_m, rhs)
    if sol is None:
        return None
    if not sol.null_basis:
        lam = sol.particular[:k]
        if any(x < 0 for x in lam):
            return None
        return sol.particular[k], tuple(lam)
    # Degenerate face: pick any feasible stationary point by LP; the value
    # is constant on the stationary set.
    lp = LinearSystem(k + 1, nonneg=[True] * k + [False])
    for i in range(k):
        lp.eq(rows[i], 0)
    lp.eq([Fraction(1)] * k + [Fraction(0)], 1)
    out = lp_feasible(lp)
    if not out.is_feasible:
        return None
    return out.witness[k], tuple(out.witness[:k])


def _combine(gens: Sequence[Vector], support: tuple[int, ...],
             weights: Vector, n: int) -> Vector:
    out = [_ZERO] * n
    for idx, w in zip(support, weights):
        if w:
            g = gens[idx]
            for i in range(n):
                out[i] += w * g[i]
    return tuple(out)
