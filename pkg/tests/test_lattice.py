"""
Tests for lattices, sublattices and isometries
"""

from fractions import Fraction

import pytest
import sympy

from src.exactla import RatMat
from src.lattice import (
    INFINITE_INDEX, Isometry, Lattice, LatticeError, NotAnIsometryError, NotInLatticeError,
    annihilator, char_poly, cofixed, direct_sum, dual, extend_isometry, fixed_sublattice,
    has_fixed_points, index, is_primitive, isometric, isometry_from_ambient, lattice_from_dict,
    lattice_to_dict, load_lattice, permutation_matrix, reflection, restrict_isometry, saturation,
    save_lattice, scale, sublattice, sublattice_from_vectors, sum_of, tensor, trace,
)


class TestLattice:
    def test_e8_invariants(self, e8):
        assert e8.rank == 8
        assert e8.is_even and e8.is_unimodular
        assert e8.determinant == 1

    def test_from_basis_reproduces_gram(self):
        lattice = Lattice.from_basis([[1, -1, 0], [0, 1, -1]], name="A2")
        assert lattice.gram == RatMat([[2, -1], [-1, 2]])
        assert lattice.determinant == 3

    def test_rejects_indefinite_gram(self):
        with pytest.raises(LatticeError):
            Lattice.from_gram([[1, 2], [2, 1]])
        with pytest.raises(LatticeError):
            Lattice.from_gram([[2, 1], [0, 2]])

    def test_from_generators_drops_dependencies(self):
        lattice = Lattice.from_generators([[2, 0], [0, 2], [2, 2], [1, 1]])
        assert lattice.rank == 2
        assert lattice.determinant == 4

    def test_coordinates(self, a2):
        assert a2.lattice_coordinates([1, 0, -1]) == (1, 1)
        assert a2.coordinates([Fraction(1, 3), Fraction(1, 3), Fraction(-2, 3)]) == (
            Fraction(1, 3), Fraction(2, 3))
        with pytest.raises(NotInLatticeError):
            a2.lattice_coordinates([Fraction(1, 3), Fraction(1, 3), Fraction(-2, 3)])
        with pytest.raises(NotInLatticeError):
            a2.coordinates([1, 1, 1])

    def test_dual_and_scale(self, a2):
        assert dual(a2).determinant == Fraction(1, 3)
        tripled = scale(a2, 3)
        assert tripled.gram == a2.gram * 3
        assert tripled.embedding.ambient_scale == 3
        with pytest.raises(LatticeError):
            scale(a2, 0)

    def test_direct_sum_and_tensor(self, a2, e8):
        s = direct_sum(a2, e8)
        assert s.rank == 10 and s.determinant == 3
        t = tensor(a2, e8)
        assert t.rank == 16
        assert t.determinant == 3 ** 8
        # basis vector (i, j) at index 8i + j
        assert t.gram[8 * 1 + 2, 8 * 0 + 2] == a2.gram[1, 0] * e8.gram[2, 2]

    def test_json_round_trip(self, a2, tmp_path):
        path = save_lattice(a2, tmp_path / "a2.json")
        loaded = load_lattice(path)
        assert loaded.gram == a2.gram
        assert loaded.embedding.basis == a2.embedding.basis
        assert lattice_to_dict(loaded)["gram"] == [["2", "-1"], ["-1", "2"]]

    def test_malformed_file(self):
        with pytest.raises(LatticeError):
            lattice_from_dict({"rank": 2, "gram": [["2"]]})
        with pytest.raises(LatticeError):
            lattice_from_dict({"gram": [["2"]]})


class TestSublattice:
    def test_index_and_primitivity(self, e8):
        doubled = sublattice(e8, RatMat.identity(8) * 2)
        assert index(doubled) == 2 ** 8
        assert not is_primitive(doubled)
        line = sublattice(e8, [[1, 0, 0, 0, 0, 0, 0, 0]])
        assert index(line) == INFINITE_INDEX
        assert is_primitive(line)

    def test_saturation(self, e8):
        sub = sublattice(e8, [[2, 0, 0, 0, 0, 0, 0, 0], [0, 3, 0, 0, 0, 0, 0, 0]])
        sat = saturation(sub)
        assert sat.rank == 2 and is_primitive(sat)
        assert sat.contains([1, 0, 0, 0, 0, 0, 0, 0])

    def test_annihilator(self, a2, e8):
        s = direct_sum(a2, e8)
        first = sublattice(s, RatMat.hstack(RatMat.identity(2), RatMat.zeros(2, 8)))
        ann = annihilator(s, first)
        assert ann.rank == 8
        assert ann.lattice.is_even and ann.lattice.determinant == 1
        assert (ann.rows @ s.gram @ first.rows.T).is_zero()

    def test_contains_and_coordinates(self, e8):
        sub = sublattice(e8, RatMat.identity(8) * 2)
        assert sub.contains([2, 4, 0, 0, 0, 0, 0, -2])
        assert not sub.contains([1, 0, 0, 0, 0, 0, 0, 0])
        with pytest.raises(NotInLatticeError):
            sub.coordinates([1, 0, 0, 0, 0, 0, 0, 0])

    def test_same_as_ignores_generators(self, e8):
        a = sublattice(e8, [[1, 0, 0, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0, 0, 0]])
        b = sublattice(e8, [[1, 1, 0, 0, 0, 0, 0, 0], [1, 2, 0, 0, 0, 0, 0, 0]])
        assert a.same_as(b)
        assert sum_of(e8, a, b).same_as(a)

    def test_from_vectors(self, a2):
        sub = sublattice_from_vectors(a2, [[2, -2, 0]])
        assert sub.rank == 1 and sub.lattice.gram == RatMat([[8]])

    def test_non_integral_generators(self, e8):
        with pytest.raises(NotInLatticeError):
            sublattice(e8, [[Fraction(1, 2)] + [0] * 7])


class TestIsometry:
    def test_reflection(self, a2):
        s = reflection(a2, (1, 0))
        assert s.power(2).is_identity()
        assert trace(s) == 0
        assert s.apply((1, 0)) == (-1, 0)

    def test_rejects_non_isometry(self, a2):
        with pytest.raises(NotAnIsometryError):
            Isometry(a2, RatMat([[1, 1], [0, 1]]))
        with pytest.raises(NotAnIsometryError):
            reflection(Lattice.from_gram([[2, 1], [1, 4]]), (0, 1))

    def test_order_and_char_poly(self, h_e8):
        assert h_e8.order == 3
        x = sympy.Symbol("x")
        expected = sympy.Poly((x ** 2 + x + 1) ** 4, x).all_coeffs()
        assert char_poly(h_e8) == [int(c) for c in expected]
        assert not has_fixed_points(h_e8)
        assert trace(h_e8) == -4

    @pytest.mark.slow
    def test_fixed_and_cofixed(self, leech_h):
        lattice, h = leech_h
        fixed = fixed_sublattice(lattice, h)
        assert fixed.rank == 8 and is_primitive(fixed)
        assert cofixed(lattice, h).rank == 16

    def test_isometry_from_ambient(self, a2):
        swap = isometry_from_ambient(a2, permutation_matrix([2, 1, 0]))
        assert swap.order == 2
        with pytest.raises(LatticeError):
            isometry_from_ambient(a2, permutation_matrix([0, 1, 2], [2, 1, 1]))

    def test_permutation_matrix_convention(self):
        m = permutation_matrix([1, 2, 0], [1, -1, 1])
        assert m.vecmul([1, 0, 0]) == (0, 1, 0)
        assert m.vecmul([0, 1, 0]) == (0, 0, -1)

    def test_compose_is_self_first(self, a2):
        s1, s2 = reflection(a2, (1, 0)), reflection(a2, (0, 1))
        assert s1.compose(s2).apply((1, 0)) == s2.apply(s1.apply((1, 0)))

    def test_extend_isometry(self, tetracode_e8):
        sub = tetracode_e8.sub
        minus = Isometry(sub.lattice, -RatMat.identity(8))
        ext = extend_isometry(tetracode_e8.lattice, sub, minus)
        assert ext is not None and ext.matrix == -RatMat.identity(8)

    def test_extend_isometry_refusal(self):
        parent = Lattice.from_gram([[1, 0], [0, 4]])
        sub = sublattice(parent, [[2, 0], [0, 1]])
        swap = Isometry(sub.lattice, RatMat([[0, 1], [1, 0]]))
        assert extend_isometry(parent, sub, swap) is None

    def test_restrict_isometry(self, h_e8, tetracode_e8):
        lattice = tetracode_e8.lattice
        ident = RatMat.identity(8)
        moved = sublattice(lattice, h_e8.matrix - ident)
        restricted = restrict_isometry(h_e8, moved)
        assert restricted.lattice.rank == 8
        assert restricted.power(3).is_identity()

    def test_isometric(self, a2):
        other = Lattice.from_gram([[2, 1], [1, 2]])
        t = isometric(other, a2)
        assert t is not None
        assert t.matrix @ a2.gram @ t.matrix.T == other.gram
        assert isometric(Lattice.from_gram([[2, 0], [0, 2]]), a2) is None
