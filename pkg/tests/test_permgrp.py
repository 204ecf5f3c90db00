"""
Tests for permutations, stabilizer chains and lattice automorphism searches
"""

import numpy as np
import pytest
from sympy.combinatorics import Permutation, PermutationGroup

from src.exactla import RatMat
from src.lattice import Isometry, Lattice, NotAnIsometryError, reflection
from src.permgrp import (
    PermAction, PointSetError, SearchBudgetExceeded, automorphism_group, centralizer_in,
    commutator, compose, conjugate, cycle_type, derived_subgroup_order, find_element,
    find_isometry, fixed_points, from_cycles, invert, is_identity, normal_closure, order,
    orbit_stabilizer, power, schreier_sims,
)
from src.shortvec import short_vectors

S4_GENS = [from_cycles([[0, 1]], 4), from_cycles([[0, 1, 2, 3]], 4)]


class TestPerm:
    def test_compose_applies_left_first(self):
        p = from_cycles([[0, 1]], 3)
        q = from_cycles([[1, 2]], 3)
        assert compose(p, q)[0] == q[p[0]] == 2

    def test_inverse_power_order(self):
        p = from_cycles([[0, 1, 2], [3, 4]], 6)
        assert is_identity(compose(p, invert(p)))
        assert order(p) == 6
        assert power(p, 6) == tuple(range(6))
        assert power(p, -1) == invert(p)
        assert cycle_type(p) == (3, 2, 1)
        assert fixed_points(p) == 1

    def test_conjugate_and_commutator(self):
        a, b = S4_GENS
        assert cycle_type(conjugate(a, b)) == cycle_type(a)
        assert is_identity(commutator(a, a))


class TestSchreierSims:
    def test_s4(self):
        chain = schreier_sims(S4_GENS, 4)
        assert chain.order == 24
        assert chain.contains(from_cycles([[1, 3]], 4))
        assert derived_subgroup_order(chain) == 12
        assert chain.point_stabilizer_order(0) == 6
        assert chain.stabilizer(2).order == 6

    def test_trivial_group(self):
        assert schreier_sims([], 5).order == 1
        assert schreier_sims([tuple(range(5))], 5).order == 1

    def test_degree_mismatch(self):
        with pytest.raises(ValueError):
            schreier_sims([(1, 0)], 3)

    @pytest.mark.parametrize("seed", [1, 2, 3, 4])
    def test_random_groups_match_sympy(self, seed):
        rng = np.random.default_rng(seed)
        gens = [tuple(int(x) for x in rng.permutation(9)) for _ in range(2)]
        chain = schreier_sims(gens, 9)
        group = PermutationGroup([Permutation(list(g)) for g in gens])
        assert chain.order == group.order()
        assert derived_subgroup_order(chain) == group.derived_subgroup().order()

    def test_random_elements_belong(self, rng):
        chain = schreier_sims([from_cycles([[0, 1, 2]], 5), from_cycles([[2, 3, 4]], 5)], 5)
        assert chain.order == 60
        for _ in range(20):
            assert chain.contains(chain.random_element(rng))
        assert not chain.contains(from_cycles([[0, 1]], 5))

    def test_find_element(self):
        chain = schreier_sims(S4_GENS, 4)
        g = find_element(chain, 3, fixed_points_wanted=1, seed=5)
        assert g is not None and order(g) == 3 and fixed_points(g) == 1
        assert find_element(chain, 5) is None

    def test_normal_closure(self):
        closure = normal_closure([from_cycles([[0, 1, 2]], 4)], S4_GENS, 4)
        assert closure.order == 12

    def test_orbit_stabilizer(self):
        length, stab = orbit_stabilizer(S4_GENS, 0, lambda i, x: S4_GENS[i][x], 4)
        assert (length, stab.order) == (4, 6)
        pairs, stab2 = orbit_stabilizer(
            S4_GENS, frozenset({0, 1}), lambda i, s: frozenset(S4_GENS[i][x] for x in s), 4,
            known_order=24)
        assert (pairs, stab2.order) == (6, 4)

    def test_centralizer_of_a_cycle(self):
        chain = schreier_sims(S4_GENS, 4)
        cycle = from_cycles([[0, 1, 2, 3]], 4)
        assert len(centralizer_in(chain, [cycle])) == 4


class TestPermAction:
    def test_reflection_round_trip(self, a2):
        action = PermAction(short_vectors(a2, 2))
        assert action.degree == 6
        s = reflection(a2, (1, 0))
        perm = action.perm_from_isometry(s)
        assert order(perm) == 2
        assert action.isometry_from_perm(perm).matrix == s.matrix

    def test_point_set_not_preserved(self, a2):
        action = PermAction(short_vectors(a2, 2))
        with pytest.raises(PointSetError):
            action.perm_from_matrix(RatMat([[2, 0], [0, 1]]))

    def test_non_linear_permutation(self, a2):
        action = PermAction(short_vectors(a2, 2))
        swap = list(range(6))
        swap[0], swap[1] = 1, 0
        with pytest.raises(NotAnIsometryError):
            action.isometry_from_perm(swap)


class TestAutomorphisms:
    @pytest.mark.parametrize("gram,expected", [
        ([[2, -1], [-1, 2]], 12),
        ([[2, 0], [0, 2]], 8),
        ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 48),
        ([[2, 0, -1, 0], [0, 2, -1, 0], [-1, -1, 2, -1], [0, 0, -1, 2]], 1152),
    ])
    def test_group_orders(self, gram, expected):
        group = automorphism_group(Lattice.from_gram(gram))
        assert group.order == expected
        assert group.chain.order == expected
        for g in group.generators:
            assert g.matrix @ g.lattice.gram @ g.matrix.T == g.lattice.gram

    def test_invariant_restricts_group(self, a2):
        line = RatMat([[1, 0]])
        group = automorphism_group(a2, [line])
        assert group.order == 4

    def test_find_isometry(self, a2):
        other = Lattice.from_gram([[2, 1], [1, 2]])
        g = find_isometry(a2, other)
        assert isinstance(g, Isometry)
        assert find_isometry(a2, Lattice.from_gram([[2, 1], [1, 4]])) is None

    def test_budget_exceeded_carries_partial(self, e8):
        with pytest.raises(SearchBudgetExceeded) as info:
            automorphism_group(e8, budget_seconds=0)
        assert isinstance(info.value.partial, list)

    @pytest.mark.slow
    def test_e8_weyl_group(self, e8):
        assert automorphism_group(e8).order == 696729600
