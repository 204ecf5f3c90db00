"""
Tests for exact rational linear algebra
"""

from fractions import Fraction

import pytest
import sympy
from sympy.matrices.normalforms import smith_normal_form

from src.exactla import (
    DependentRowsError, DimensionError, RatMat, SingularMatrixError, det, det_mod_p, format_rational,
    hnf, hnf_basis, integer_left_kernel, inverse, inverse_mod_p, invariant_factors, is_positive_definite,
    kernel, left_nullspace_mod_p, lll, lll_gram, matmul_mod_p, nullspace_mod_p, rank, rank_mod_p,
    rational_hnf_basis, rref_mod_p, snf, solve, solve_integer, solve_left, to_fraction, xgcd,
)


def random_int_matrix(rng, rows, cols, bound=6):
    return RatMat(rng.integers(-bound, bound + 1, size=(rows, cols)).tolist())


class TestRatMat:
    def test_parses_strings_and_rejects_floats(self):
        m = RatMat([["1/2", 3], [0, "-4/6"]])
        assert m[0, 0] == Fraction(1, 2)
        assert m[1, 1] == Fraction(-2, 3)
        with pytest.raises(TypeError):
            to_fraction(0.5)

    def test_ragged_rows_rejected(self):
        with pytest.raises(DimensionError):
            RatMat([[1, 2], [3]])

    def test_format_rational(self):
        assert format_rational(Fraction(6, 3)) == "2"
        assert format_rational(Fraction(-3, 9)) == "-1/3"

    def test_stacking_and_kron(self):
        a = RatMat([[1, 2], [3, 4]])
        b = RatMat([[0, 1], [1, 0]])
        assert RatMat.hstack(a, b).shape == (2, 4)
        assert RatMat.vstack(a, b).row(3) == (Fraction(1), Fraction(0))
        bd = RatMat.block_diagonal(a, b)
        assert bd.shape == (4, 4) and bd[2, 3] == 1 and bd[0, 2] == 0
        k = RatMat.kron(a, b)
        assert k[1, 0] == 1 and k[3, 2] == 4 and k[0, 0] == 0

    def test_arithmetic_matches_sympy(self, rng):
        a = random_int_matrix(rng, 3, 4)
        b = random_int_matrix(rng, 4, 2)
        expected = sympy.Matrix(a.to_ints()) * sympy.Matrix(b.to_ints())
        assert (a @ b).to_ints() == [[int(x) for x in row] for row in expected.tolist()]
        assert (a * Fraction(1, 2)) * 2 == a
        assert a.T.T == a

    def test_vecmul_is_row_times_matrix(self):
        m = RatMat([[1, 2], [3, 4]])
        assert m.vecmul([1, 1]) == (Fraction(4), Fraction(6))
        with pytest.raises(DimensionError):
            m.vecmul([1, 2, 3])

    def test_hashable_and_equal(self):
        assert hash(RatMat.identity(3)) == hash(RatMat([[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
        assert len({RatMat.identity(2), RatMat.identity(2)}) == 1

    def test_scaled_ints(self):
        rows, d = RatMat([["1/2", "1/3"]]).scaled_ints()
        assert d == 6 and rows == [[3, 2]]
        with pytest.raises(ValueError):
            RatMat([["1/2"]]).to_ints()


class TestLinalg:
    def test_det_matches_sympy(self, rng):
        for _ in range(10):
            m = random_int_matrix(rng, 5, 5)
            assert det(m) == int(sympy.Matrix(m.to_ints()).det())

    def test_det_rational(self):
        assert det(RatMat([["1/2", 0], [0, "2/3"]])) == Fraction(1, 3)

    def test_inverse(self, rng):
        m = RatMat([[2, 1], [5, 3]])
        assert inverse(m) == RatMat([[3, -1], [-5, 2]])
        with pytest.raises(SingularMatrixError):
            inverse(RatMat([[1, 2], [2, 4]]))
        for _ in range(5):
            a = random_int_matrix(rng, 4, 4)
            if det(a) != 0:
                assert a @ inverse(a) == RatMat.identity(4)

    def test_rank_and_kernel(self):
        m = RatMat([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
        assert rank(m) == 2
        k = kernel(m)
        assert k.rows == 1
        assert (m @ k.T).is_zero()

    def test_solve(self):
        m = RatMat([[1, 1], [1, -1]])
        assert solve(m, [2, 0]) == (Fraction(1), Fraction(1))
        assert solve(RatMat([[1, 1], [1, 1]]), [1, 2]) is None
        x = solve_left(RatMat([[1, 2], [0, 1]]), [1, 3])
        assert RatMat([x]) @ RatMat([[1, 2], [0, 1]]) == RatMat([[1, 3]])

    def test_positive_definite(self):
        assert is_positive_definite(RatMat([[2, -1], [-1, 2]]))
        assert not is_positive_definite(RatMat([[1, 2], [2, 1]]))
        assert not is_positive_definite(RatMat([[1, 0], [1, 1]]))


class TestNormalForms:
    def test_xgcd(self):
        g, x, y = xgcd(240, 46)
        assert g == 2 and 240 * x + 46 * y == 2

    def test_hnf_transform(self, rng):
        m = random_int_matrix(rng, 4, 3)
        h, u = hnf(m)
        assert u @ m == h
        assert abs(det(u)) == 1

    def test_hnf_basis_is_canonical(self):
        a = RatMat([[2, 0], [0, 3]])
        b = RatMat([[2, 3], [2, 6], [4, 0]])
        assert hnf_basis(a) == hnf_basis(b)

    @pytest.mark.parametrize("shape", [(4, 3), (3, 5), (5, 5)])
    def test_hnf_basis_matches_transformed_form(self, rng, shape):
        m = random_int_matrix(rng, *shape)
        h, _ = hnf(m)
        assert hnf_basis(m) == RatMat([row for row in h if any(row)], cols=m.cols)

    def test_hnf_basis_rank_deficient(self):
        assert hnf_basis(RatMat([[2, 4], [1, 2], [3, 6]])) == RatMat([[1, 2]])
        assert hnf_basis(RatMat([[0, 0]])).rows == 0

    def test_rational_hnf_basis(self):
        basis = rational_hnf_basis(RatMat([["1/2", 0], [0, 1], [1, 1]]))
        assert basis.rows == 2
        assert abs(det(basis)) == Fraction(1, 2)

    def test_snf_transform_and_divisibility(self, rng):
        for _ in range(5):
            m = random_int_matrix(rng, 4, 4)
            ours = snf(m)
            assert ours.u @ m @ ours.v == ours.d
            assert abs(det(ours.u)) == 1 and abs(det(ours.v)) == 1
            diag = [abs(x) for x in ours.diagonal]
            assert all(b % a == 0 for a, b in zip(diag, diag[1:]) if a)
            product = 1
            for x in diag:
                product *= x
            assert product == abs(det(m))

    def test_invariant_factors_match_sympy(self):
        m = RatMat([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
        theirs = smith_normal_form(sympy.Matrix(m.to_ints()), domain=sympy.ZZ)
        assert invariant_factors(m) == [2, 6, 12]
        assert [abs(int(theirs[i, i])) for i in range(3)] == [2, 6, 12]

    def test_integer_left_kernel(self):
        m = RatMat([[1, 2], [2, 4], [0, 1]])
        k = integer_left_kernel(m)
        assert k.rows == 1
        assert (k @ m).is_zero()
        assert sorted(abs(x) for x in k.row(0)) == [0, 1, 2]

    def test_solve_integer(self):
        m = RatMat([[2, 0], [0, 3]])
        assert solve_integer(m, [4, 9]) == [2, 3]
        assert solve_integer(m, [1, 0]) is None
        with pytest.raises(DimensionError):
            solve_integer(m, [1, 2, 3])


class TestLll:
    def test_reduces_skewed_basis(self):
        basis = RatMat([[1, 0, 0], [57, 1, 0], [113, 42, 1]])
        reduced = lll(basis)
        assert abs(det(reduced)) == 1
        assert max(sum(x * x for x in row) for row in reduced) <= 3

    def test_gram_transform_is_unimodular(self, e8):
        u, g = lll_gram(e8.gram)
        assert abs(det(u)) == 1
        assert u @ e8.gram @ u.T == g

    def test_rejects_bad_delta(self):
        with pytest.raises(ValueError):
            lll_gram(RatMat.identity(2), Fraction(1, 5))

    def test_dependent_rows(self):
        with pytest.raises(DependentRowsError):
            lll(RatMat([[1, 2], [2, 4]]))


class TestModP:
    def test_rank_and_nullspace(self):
        rows = [[1, 1, 0], [0, 1, 1], [1, 2, 1]]
        assert rank_mod_p(rows, 3) == 2
        null = nullspace_mod_p(rows, 3)
        assert len(null) == 1
        assert all(sum(a * b for a, b in zip(r, null[0])) % 3 == 0 for r in rows)

    def test_inverse_and_det(self):
        rows = [[2, 1], [1, 1]]
        inv = inverse_mod_p(rows, 3)
        assert matmul_mod_p(rows, inv, 3) == [[1, 0], [0, 1]]
        assert det_mod_p(rows, 3) == 1
        with pytest.raises(ValueError):
            inverse_mod_p([[1, 2], [2, 1]], 3)

    def test_results_are_reduced_residues(self):
        rows = [[5, -1, 7], [2, 2, -3]]
        reduced, pivots = rref_mod_p(rows, 5)
        assert pivots == [0, 1]
        assert all(0 <= x < 5 for row in reduced for x in row)
        assert det_mod_p([[-1, 0], [0, 1]], 3) == 2
        assert matmul_mod_p([[4, 4]], [[1], [1]], 7) == [[1]]
        assert left_nullspace_mod_p([[1], [2]], 3) == [[1, 1]]
