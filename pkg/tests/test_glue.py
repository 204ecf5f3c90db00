"""
Tests for discriminant groups, glue maps and mod-3 forms
"""

import json
from fractions import Fraction

import pytest

from src.catalog import root_lattice
from src.exactla import RatMat, det_mod_p
from src.glue import (
    DiscriminantAutomorphism, DiscriminantGroup, GlueError, GlueMap, NotASimilitudeError,
    bilinear_form_mod3, fixed_space_mod3, glue_of_overlattice, glue_overlattice,
    glue_overlattice_with_handles, is_even_glue, is_totally_singular, load_glue, mod3_space,
    random_valid_glue, save_glue, similitude_scale, twist,
)
from src.lattice import Isometry, Lattice, direct_sum, dual, reflection, sublattice
from src.shortvec import root_count


@pytest.fixture(scope="module")
def e6():
    return root_lattice("E", 6)


@pytest.fixture(scope="module")
def da2(a2):
    return DiscriminantGroup(a2)


@pytest.fixture(scope="module")
def de6(e6):
    return DiscriminantGroup(e6)


@pytest.fixture(scope="module")
def a2_e6_glue(da2, de6):
    return GlueMap(da2, de6, [(1,)], [(1,)])


class TestDiscriminantGroup:
    def test_a2(self, da2):
        assert da2.invariant_factors == [3]
        assert da2.order == 3 and da2.is_elementary(3)
        x = da2.unit(0)
        assert da2.quadratic(x) == Fraction(2, 3)
        assert da2.bilinear(x, x) == Fraction(2, 3)
        assert da2.quadratic(da2.scale(2, x)) == Fraction(2, 3)

    def test_unimodular_is_trivial(self, e8):
        group = DiscriminantGroup(e8)
        assert group.rank == 0 and group.order == 1
        assert group.quadratic(group.zero()) == 0

    def test_q_and_r_groups(self, dq, dr):
        assert dq.invariant_factors == [3] * 8
        assert dr.invariant_factors == [3] * 8
        assert mod3_space(dq).is_nonsingular()
        assert mod3_space(dr).is_nonsingular()

    def test_coords_and_lift(self, a2, da2):
        for x in da2.elements():
            assert da2.coords(da2.lift(x)) == x
        assert da2.coords([Fraction(1, 3), Fraction(2, 3)]) != da2.zero()
        assert da2.coords([1, -1]) == da2.zero()
        with pytest.raises(GlueError):
            da2.coords([Fraction(1, 2), 0])

    def test_rejects_non_integral(self, a2):
        with pytest.raises(GlueError):
            DiscriminantGroup(dual(a2))

    def test_induced_automorphism(self, a2, da2):
        minus = Isometry(a2, -RatMat.identity(2))
        induced = da2.automorphism(minus)
        assert induced == DiscriminantAutomorphism.scalar(da2, -1)
        assert induced.order == 2
        assert da2.automorphism(reflection(a2, (1, 0))).is_identity()
        assert similitude_scale(induced) == 1

    def test_not_a_similitude(self, a2):
        group = DiscriminantGroup(direct_sum(a2, a2))
        collapse = DiscriminantAutomorphism(group, [group.unit(0), group.unit(0)])
        with pytest.raises(NotASimilitudeError):
            similitude_scale(collapse)

    def test_mod3_form_needs_elementary_group(self):
        with pytest.raises(GlueError):
            bilinear_form_mod3(DiscriminantGroup(Lattice.from_gram([[4]])))


class TestGlueMap:
    def test_a2_e6_glue_to_e8(self, a2, e6, a2_e6_glue):
        assert a2_e6_glue.is_full()
        assert is_totally_singular(a2_e6_glue) and is_even_glue(a2_e6_glue)
        lattice = glue_overlattice(a2, e6, a2_e6_glue)
        assert lattice.rank == 8
        assert lattice.is_even and lattice.is_unimodular
        assert root_count(lattice) == 240

    def test_glue_read_back(self, a2, e6, da2, de6, a2_e6_glue):
        lattice, h1, h2 = glue_overlattice_with_handles(a2, e6, a2_e6_glue)
        assert glue_of_overlattice(lattice, h1, h2, da2, de6) == a2_e6_glue

    def test_trivial_glue(self, a2, e6, da2, de6):
        trivial = GlueMap.trivial(da2, de6)
        assert trivial.order == 1 and not trivial.is_full()
        assert glue_overlattice(a2, e6, trivial).determinant == 9

    def test_rejects_non_isomorphism(self, da2, de6):
        with pytest.raises(GlueError):
            GlueMap(da2, de6, [(1,)], [(0,)])
        with pytest.raises(GlueError):
            GlueMap(da2, de6, [(1,), (2,)], [(1,)])

    def test_equality_ignores_generators(self, da2, de6, a2_e6_glue):
        assert GlueMap(da2, de6, [(2,)], [(2,)]) == a2_e6_glue
        assert a2_e6_glue.inverse().inverse() == a2_e6_glue

    def test_twist(self, da2, de6, a2_e6_glue):
        minus_a = DiscriminantAutomorphism.scalar(da2, -1)
        minus_b = DiscriminantAutomorphism.scalar(de6, -1)
        twisted = twist(a2_e6_glue, minus_a)
        assert twisted != a2_e6_glue
        assert twisted.apply((1,)) == (2,)
        assert is_even_glue(twisted)
        assert twist(a2_e6_glue, minus_a, minus_b) == a2_e6_glue

    def test_apply(self, a2_e6_glue):
        assert a2_e6_glue.apply((1,)) == (1,)
        assert a2_e6_glue.apply((0,)) == (0,)

    def test_psi_is_read_off_the_graph(self, da2, de6, a2_e6_glue):
        negation = GlueMap(da2, de6, [(1,)], [(2,)])
        assert a2_e6_glue.psi == [[1]]
        assert negation.psi == [[2]]
        assert GlueMap(da2, de6, [(2,)], [(2,)]).psi == [[1]]
        assert negation.a_basis == ((1,),) and negation.b_basis == ((1,),)
        data = negation.to_dict()
        assert data["psi"] == [[2]]
        assert GlueMap.from_dict(data, da2, de6) == negation

    def test_save_and_load(self, da2, de6, a2_e6_glue, tmp_path):
        path = save_glue(a2_e6_glue, tmp_path / "glue.json")
        assert load_glue(path, da2, de6) == a2_e6_glue
        data = json.loads(path.read_text())
        assert data["source_invariant_factors"] == [3]

    def test_load_mismatched_groups(self, da2, a2_e6_glue, tmp_path):
        path = save_glue(a2_e6_glue, tmp_path / "glue.json")
        wrong = DiscriminantGroup(Lattice.from_gram([[4]]))
        with pytest.raises(GlueError):
            load_glue(path, da2, wrong)

    def test_read_back_needs_primitive_handles(self, a2, e6, a2_e6_glue):
        lattice, h1, h2 = glue_overlattice_with_handles(a2, e6, a2_e6_glue)
        doubled = sublattice(lattice, h1.rows * 2)
        with pytest.raises(GlueError):
            glue_of_overlattice(lattice, doubled, h2)


class TestRandomGlue:
    def test_deterministic_and_valid(self, q, r, dq, dr):
        glue = random_valid_glue(dq, dr, seed=7)
        assert glue == random_valid_glue(dq, dr, seed=7)
        assert glue.is_full() and is_even_glue(glue)
        lattice = glue_overlattice(q, r, glue)
        assert lattice.is_even and lattice.is_unimodular and lattice.rank == 24

    def test_seeds_differ(self, dq, dr):
        assert random_valid_glue(dq, dr, seed=1) != random_valid_glue(dq, dr, seed=2)

    def test_psi_is_invertible_mod_3(self, dq, dr):
        glue = random_valid_glue(dq, dr, seed=1)
        assert len(glue.psi) == 8 and all(len(row) == 8 for row in glue.psi)
        assert det_mod_p(glue.psi, 3) != 0
        assert glue.psi != random_valid_glue(dq, dr, seed=2).psi

    def test_order_mismatch(self, da2, dq):
        with pytest.raises(GlueError):
            random_valid_glue(da2, dq, seed=0)


class TestFixedSpace:
    def test_identity(self, e8):
        report = fixed_space_mod3([Isometry.identity(e8)])
        assert report.dim == 8 and report.nonsingular
        assert report.complement_dim == 0 and report.complement_nonsingular

    def test_reflection(self, e8):
        report = fixed_space_mod3([reflection(e8, (1, 0, 0, 0, 0, 0, 0, 0))])
        assert (report.dim, report.complement_dim) == (7, 1)
        assert report.nonsingular and report.complement_nonsingular

    def test_needs_a_space(self):
        with pytest.raises(GlueError):
            fixed_space_mod3([[[1, 0], [0, 1]]])
