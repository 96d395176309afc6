import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from karalcp.errors import BadIndexSetError, DimensionMismatchError, NonSquareError
from karalcp.matrix import (
    RationalMatrix,
    determinant,
    full_rank_factorization,
    inverse,
    principal_minor,
    rank,
    rref,
    solve_linear,
    subspace_bases,
    vec,
)
from conftest import rand_matrix
from oracles import det_cofactor

fractions_st = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 3))


def square_matrices(max_n=4):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(fractions_st, min_size=n, max_size=n),
                           min_size=n, max_size=n).map(RationalMatrix.from_rows))


M3 = RationalMatrix.from_rows([[0, -1, -2], [0, 1, 2], [1, 1, 1]])


class TestRref:
    def test_identity(self):
        r = rref(RationalMatrix.identity(3))
        assert r.matrix == RationalMatrix.identity(3)
        assert r.rank == 3
        assert r.pivots == (0, 1, 2)

    def test_all_ones_rank_one(self):
        assert rref(RationalMatrix.from_rows([[1, 1, 1]] * 3)).rank == 1

    def test_hand_elimination(self):
        # row-reduce [[0,-1,-2],[0,1,2],[1,1,1]] by hand: two pivots survive
        assert rref(M3).rank == 2


class TestDeterminant:
    def test_identity(self):
        for n in range(1, 5):
            assert determinant(RationalMatrix.identity(n)) == 1

    def test_2x2_cofactor(self):
        assert determinant(RationalMatrix.from_rows([[-1, 2], [1, -1]])) == -1

    def test_invertible_m_base(self):
        assert determinant(RationalMatrix.from_rows([[1, -1], [-1, 2]])) == 1

    def test_rejects_rectangular(self):
        with pytest.raises(NonSquareError):
            determinant(RationalMatrix.zeros(2, 3))

    @settings(max_examples=60, deadline=None)
    @given(square_matrices())
    def test_matches_cofactor_expansion(self, m):
        assert determinant(m) == det_cofactor(m)


class TestPrincipalMinor:
    def test_singleton(self):
        assert principal_minor(M3, [1]) == 1

    def test_trailing_2x2_is_negative(self):
        assert principal_minor(M3, [1, 2]) == -1

    def test_vanishing_block(self):
        b = RationalMatrix.from_rows([[1, 1, 0], [1, 1, 0], [0, 1, 0]])
        assert principal_minor(b, [0, 1]) == 0

    def test_full_set_equals_determinant(self):
        assert principal_minor(M3, [0, 1, 2]) == determinant(M3)

    def test_bad_index_set(self):
        with pytest.raises(BadIndexSetError):
            principal_minor(M3, [])
        with pytest.raises(BadIndexSetError):
            principal_minor(M3, [3])


class TestSubspaces:
    def test_identity_null_empty(self):
        assert subspace_bases(RationalMatrix.identity(3)).null.dim == 0

    def test_block_z_range(self):
        a = RationalMatrix.from_rows([[1, -1, 0], [-1, 1, 0], [0, 0, 1]])
        rng = subspace_bases(a).range
        assert rng.dim == 2
        assert rng.contains(vec([1, -1, 0]))
        assert rng.contains(vec([0, 0, 1]))
        assert not rng.contains(vec([1, 0, 0]))

    def test_shift_matrix_range_equals_null(self):
        a = RationalMatrix.from_rows([[0, 1], [0, 0]])
        bases = subspace_bases(a)
        assert bases.range.basis == ((Fraction(1), Fraction(0)),)
        assert bases.null.basis == ((Fraction(1), Fraction(0)),)

    @settings(max_examples=60, deadline=None)
    @given(square_matrices())
    def test_rank_dimension_identities(self, m):
        bases = subspace_bases(m)
        r = rank(m)
        assert bases.range.dim == r == bases.row.dim
        assert bases.range.dim + bases.null.dim == m.cols
        assert bases.row.dim + bases.left_null.dim == m.rows

    @settings(max_examples=60, deadline=None)
    @given(square_matrices())
    def test_det_nonzero_iff_trivial_null(self, m):
        assert (determinant(m) != 0) == (subspace_bases(m).null.dim == 0)


class TestFullRankFactorization:
    def test_identity(self):
        f, g = full_rank_factorization(RationalMatrix.identity(3))
        assert f == RationalMatrix.identity(3) and g == RationalMatrix.identity(3)

    def test_all_ones_2x2(self):
        f, g = full_rank_factorization(RationalMatrix.from_rows([[1, 1], [1, 1]]))
        assert f.cols == 1 and g.rows == 1
        assert f @ g == RationalMatrix.from_rows([[1, 1], [1, 1]])

    def test_rank_two_reproduces(self):
        a = RationalMatrix.from_rows([[1, 1, 1], [0, 1, 1], [0, 0, 0]])
        f, g = full_rank_factorization(a)
        assert f.cols == 2
        assert f @ g == a

    def test_zero_matrix_empty_factors(self):
        a = RationalMatrix.zeros(3, 3)
        f, g = full_rank_factorization(a)
        assert f.cols == 0 and g.rows == 0
        assert f @ g == a

    def test_thousand_random_reproduce(self):
        rng = random.Random(0)
        for _ in range(1000):
            n = rng.randint(1, 6)
            m = rand_matrix(rng, n)
            f, g = full_rank_factorization(m)
            assert f @ g == m
            assert f.cols == rank(m)


class TestSolveLinear:
    def test_identity(self):
        sol = solve_linear(RationalMatrix.identity(3), vec([5, -2, 7]))
        assert sol.particular == vec([5, -2, 7]) and sol.null_basis == ()

    def test_outside_range(self):
        assert solve_linear(RationalMatrix.from_rows([[0, 1], [0, 0]]), vec([0, 1])) is None

    def test_underdetermined(self):
        sol = solve_linear(RationalMatrix.from_rows([[1, 1], [1, 1]]), vec([2, 2]))
        x = sol.particular
        assert x[0] + x[1] == 2
        assert len(sol.null_basis) == 1
        v = sol.null_basis[0]
        assert v[0] + v[1] == 0 and v != (0, 0)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            solve_linear(RationalMatrix.identity(2), vec([1, 2, 3]))

    @settings(max_examples=60, deadline=None)
    @given(square_matrices(), st.integers(0, 10_000))
    def test_solutions_substitute_back(self, m, seed):
        rng = random.Random(seed)
        x = tuple(Fraction(rng.randint(-4, 4)) for _ in range(m.cols))
        b = m.mul_vec(x)
        sol = solve_linear(m, b)
        assert sol is not None
        assert m.mul_vec(sol.particular) == b
        for v in sol.null_basis:
            assert m.mul_vec(v) == tuple([Fraction(0)] * m.rows)


class TestInverse:
    @settings(max_examples=60, deadline=None)
    @given(square_matrices())
    def test_inverse_is_two_sided(self, m):
        inv = inverse(m)
        if determinant(m) == 0:
            assert inv is None
        else:
            eye = RationalMatrix.identity(m.rows)
            assert m @ inv == eye and inv @ m == eye


class TestBasisIndependence:
    @settings(max_examples=40, deadline=None)
    @given(square_matrices())
    def test_all_bases_are_linearly_independent(self, m):
        bases = subspace_bases(m)
        for space in (bases.range, bases.null, bases.row, bases.left_null):
            if space.basis:
                stacked = RationalMatrix.from_rows(space.basis)
                assert rank(stacked) == len(space.basis)


class TestExactCoercion:
    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            vec([0.5, 1])

    def test_strings_parse_exactly(self):
        assert vec(["0.125", "3/7"]) == (Fraction(1, 8), Fraction(3, 7))


class TestJsonFormat:
    def test_round_trip_with_strings(self):
        obj = {"rows": 2, "cols": 2, "entries": [[1, "1/3"], ["-0.25", 0]]}
        m = RationalMatrix.from_json(obj)
        assert m.data[0][1] == Fraction(1, 3)
        assert m.data[1][0] == Fraction(-1, 4)
        again = RationalMatrix.from_json(m.to_json())
        assert again == m

    def test_error_names_field(self):
        with pytest.raises(ValueError, match="entries"):
            RationalMatrix.from_json({"rows": 1, "cols": 2, "entries": [[1]]})
        with pytest.raises(ValueError, match="rows"):
            RationalMatrix.from_json({"cols": 2, "entries": []})
