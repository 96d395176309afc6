"""Standard LCP(A, q) by complementary-support enumeration, and the
Q-matrix semi-decision.

For each support S the complementary system A_SS x_S = -q_S is solved
exactly; an invertible block gives at most one candidate, a singular but
consistent block gives an affine family that is intersected with the sign
constraints and classified as empty, a point, or a positive-dimensional
family (flagged degenerate with one representative).

Q-matrix membership is only semi-decidable at desk scale, so the verdict
type carries its epistemic state: Yes and No come with re-checkable
certificates, Unknown with the sampling log.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatchError, QNotNonnegativeError, TooLargeError
from .lcp_classes import (
    ConeRep,
    CopositivityStatus,
    copositivity_on_cone,
)
from .lp import BOUNDED, UNBOUNDED, LinearSystem, lp_feasible, lp_optimize
from .matrix import (
    RationalMatrix,
    Vector,
    rank,
    solve_linear,
    vec,
    zeros_vec,
)
from .minor_classes import minor_class, structural_flags

YES = "Yes"
NO = "No"
UNKNOWN = "Unknown"

DEFAULT_LCP_CAP = 12
DEFAULT_SAMPLE_BOUND = 10

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class Verdict:
    """Three-valued result with evidence.

    Yes/No carry a rule identifier and witness vectors that re-verify
    against the rule's defining conditions; Unknown carries the sample or
    candidate log plus the seed that produced it.
    """

    status: str
    rule: str | None = None
    witnesses: dict = field(default_factory=dict)
    evidence: dict | None = None


@dataclass(frozen=True)
class LcpSolutionSet:
    """Exact solutions plus positive-dimensional family flags.

    `solutions` holds one exact vector per isolated solution and one
    representative per degenerate family; supports whose solution set is
    positive-dimensional are listed in `degenerate_supports`.  `complete`
    records that all 2^n supports were enumerated.
    """

    solutions: tuple[Vector, ...]
    degenerate_supports: tuple[tuple[int, ...], ...]
    complete: bool

    @property
    def has_degenerate(self) -> bool:
        return bool(self.degenerate_supports)


def lcp_solutions(a: RationalMatrix, q: Sequence, cap: int = DEFAULT_LCP_CAP) -> LcpSolutionSet:
    """Every exact solution of x >= 0, y = Ax + q >= 0, x^T y = 0."""
    a.require_square("LCP")
    n = a.rows
    if n > cap:
        raise TooLargeError(f"order {n} exceeds cap {cap}")
    qv = vec(q)
    if len(qv) != n:
        raise DimensionMismatchError("q length must match matrix order")
    solutions: set[Vector] = set()
    degenerate: list[tuple[int, ...]] = []
    if all(t >= 0 for t in qv):
        solutions.add(zeros_vec(n))
    for k in range(1, n + 1):
        for support in itertools.combinations(range(n), k):
            sub = a.submatrix(support, support)
            rhs = [-qv[i] for i in support]
            sol = solve_linear(sub, rhs)
            if sol is None:
                continue
            if not sol.null_basis:
                x = _expand(sol.particular, support, n)
                if _accept(a, qv, x, support):
                    solutions.add(x)
                continue
            found, is_family = _family_solutions(a, qv, support, sol)
            if found is not None:
                solutions.add(found)
                if is_family:
                    degenerate.append(support)
    return LcpSolutionSet(tuple(sorted(solutions)), tuple(degenerate), complete=True)


def _expand(x_s: Sequence[Fraction], support, n: int) -> Vector:
    x = [_ZERO] * n
    for val, i in zip(x_s, support):
        x[i] = val
    return tuple(x)


def _accept(a: RationalMatrix, q: Vector, x: Vector, support) -> bool:
    if any(x[i] < 0 for i in support):
        return False
    y = [sum((a.data[i][j] * x[j] for j in range(a.rows)), _ZERO) + q[i] for i in range(a.rows)]
    return all(y[i] >= 0 for i in range(a.rows) if i not in support)


def _family_solutions(a: RationalMatrix, q: Vector, support, sol):
    """Classify an affine family of complementary candidates against the
    sign constraints: returns (representative | None, positive_dimensional)."""
    n = a.rows
    d = len(sol.null_basis)
    k = len(support)
    comp = [i for i in range(n) if i not in set(support)]

    def build() -> LinearSystem:
        system = LinearSystem(d)
        for idx in range(k):
            coeffs = [nb[idx] for nb in sol.null_basis]
            system.ge(coeffs, -sol.particular[idx])
        for i in comp:
            base = sum((a.data[i][support[idx]] * sol.particular[idx] for idx in range(k)), _ZERO)
            coeffs = [sum((a.data[i][support[idx]] * nb[idx] for idx in range(k)), _ZERO)
                      for nb in sol.null_basis]
            system.ge(coeffs, -q[i] - base)
        return system

    out = lp_feasible(build())
    if not out.is_feasible:
        return None, False

    def to_x(t) -> Vector:
        x_s = [sol.particular[idx] + sum(nb[idx] * t[j] for j, nb in enumerate(sol.null_basis))
               for idx in range(k)]
        return _expand(x_s, support, n)

    for idx in range(k):
        coeffs = [nb[idx] for nb in sol.null_basis]
        lo = lp_optimize(coeffs, build(), "min")
        hi = lp_optimize(coeffs, build(), "max")
        if hi.status == UNBOUNDED:
            # the coordinate is unbounded above: pin it one unit past the
            # minimum to produce a representative with that coordinate > 0
            pinned = build().eq(coeffs, lo.value + 1)
            pick = lp_feasible(pinned)
            return to_x(pick.witness), True
        if lo.value != hi.value:
            # hi > lo >= 0 on the support, so the max witness is nonzero
            return to_x(hi.witness), True
    return to_x(out.witness), False


def lcp_unique_zero(a: RationalMatrix, q: Sequence, cap: int = DEFAULT_LCP_CAP) -> bool:
    """True iff zero is the only solution (q >= 0 so that zero solves)."""
    a.require_square("LCP uniqueness")
    qv = vec(q)
    if any(t < 0 for t in qv):
        raise QNotNonnegativeError("q must be entrywise nonnegative")
    result = lcp_solutions(a, qv, cap)
    return result.solutions == (zeros_vec(a.rows),) and not result.has_degenerate


# -- Q-matrix semi-decision -------------------------------------------------

RULE_NONPOSITIVE_ROW = "NONPOSITIVE_ROW"
RULE_NONNEG_ZERO_DIAG = "NONNEG_ZERO_DIAGONAL"
RULE_Z_AND_P = "Z_AND_P"
RULE_Z_NOT_P = "Z_NOT_P"
RULE_NONNEG_POS_DIAG = "NONNEG_POS_DIAG"
RULE_P_MATRIX = "P_MATRIX"
RULE_N_FIRST_CATEGORY = "N_FIRST_CATEGORY"
RULE_STRICTLY_COPOSITIVE = "STRICTLY_COPOSITIVE"
RULE_KARAMARDIAN_INVERTIBLE = "KARAMARDIAN_INVERTIBLE"
RULE_UNSOLVABLE_Q = "UNSOLVABLE_Q"


def is_q_matrix(a: RationalMatrix, samples: int = 64, seed: int = 0,
                bound: int = DEFAULT_SAMPLE_BOUND, cap: int = DEFAULT_LCP_CAP) -> Verdict:
    """Exact Yes/No where a sound rule fires, else sampling refutation,
    else Unknown with the sample log."""
    a.require_square("Q-matrix test")
    n = a.rows
    if n > cap:
        raise TooLargeError(f"order {n} exceeds cap {cap}")
    flags = structural_flags(a)
    if flags.has_nonpositive_row:
        row = next(i for i in range(n) if all(x <= 0 for x in a.data[i]))
        q = tuple(-_ONE if j == row else _ZERO for j in range(n))
        return Verdict(NO, rule=RULE_NONPOSITIVE_ROW, witnesses={"q": q, "row": row})
    diag_positive = all(a.data[i][i] > 0 for i in range(n))
    if flags.nonnegative and not diag_positive:
        return Verdict(NO, rule=RULE_NONNEG_ZERO_DIAG)
    minors = minor_class(a, cap)
    if flags.z_matrix:
        if minors.is_p:
            return Verdict(YES, rule=RULE_Z_AND_P)
        return Verdict(NO, rule=RULE_Z_NOT_P)
    if flags.nonnegative and diag_positive:
        return Verdict(YES, rule=RULE_NONNEG_POS_DIAG)
    if minors.is_p:
        return Verdict(YES, rule=RULE_P_MATRIX)
    if minors.n_first_category and all(any(a.data[i][j] > 0 for i in range(n)) for j in range(n)):
        return Verdict(YES, rule=RULE_N_FIRST_CATEGORY)
    cop = copositivity_on_cone(a, ConeRep.nonnegative_orthant(n))
    if cop.status is CopositivityStatus.STRICTLY_COPOSITIVE:
        return Verdict(YES, rule=RULE_STRICTLY_COPOSITIVE)
    if rank(a) == n:
        from .conelcp import is_karamardian

        kara = is_karamardian(a, seed=seed, cap=cap)
        if kara.status == YES:
            return Verdict(YES, rule=RULE_KARAMARDIAN_INVERTIBLE,
                           witnesses=dict(kara.witnesses, via=kara.rule))
    tried = []
    for q in _sample_qs(n, samples, seed, bound):
        tried.append(q)
        if not lcp_solutions(a, q, cap).solutions:
            return Verdict(NO, rule=RULE_UNSOLVABLE_Q, witnesses={"q": q})
    return Verdict(UNKNOWN, evidence={"tried": tuple(tried), "seed": seed, "bound": bound})


def _sample_qs(n: int, samples: int, seed: int, bound: int):
    yield tuple(-_ONE for _ in range(n))
    for i in range(n):
        yield tuple(-_ONE if j == i else _ZERO for j in range(n))
    for i in range(n):
        yield tuple(_ONE if j == i else _ZERO for j in range(n))
    rng = random.Random(seed)
    for _ in range(samples):
        yield tuple(Fraction(rng.randint(-bound, bound)) for _ in range(n))
