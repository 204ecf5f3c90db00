"""
Tests for short vector enumeration and root system identification
"""

import itertools
from fractions import Fraction

import numpy as np
import pytest

from src.catalog import root_lattice
from src.exactla import RatMat
from src.lattice import Lattice, LatticeError, direct_sum, dual
from src.shortvec import (
    EnumerationBudgetError, extended_path_subsystem, format_root_type, is_path_diagram, minimum,
    root_count, root_system_type, short_vectors, simple_roots, theta_coefficients,
)


def brute_force(lattice, bound, box):
    found = set()
    for coords in itertools.product(range(-box, box + 1), repeat=lattice.rank):
        if any(coords) and lattice.norm(coords) <= bound:
            found.add(coords)
    return found


class TestShortVectors:
    @pytest.mark.parametrize("gram,bound", [
        ([[2, -1], [-1, 2]], 8),
        ([[3, 1, 0], [1, 4, 1], [0, 1, 5]], 12),
        ([[2, 1, 1], [1, 2, 1], [1, 1, 2]], 6),
    ])
    def test_matches_box_search(self, gram, bound):
        lattice = Lattice.from_gram(gram)
        found = short_vectors(lattice, bound)
        assert {tuple(int(x) for x in v) for v in found.expanded} == brute_force(lattice, bound, 5)

    def test_rational_gram(self, a2):
        found = short_vectors(dual(a2), 2)
        assert found.norm_counts() == {Fraction(2, 3): 6, Fraction(2): 6}
        assert {tuple(int(x) for x in v) for v in found.expanded} == brute_force(dual(a2), 2, 4)

    def test_sign_normalized(self, e8):
        found = short_vectors(e8, 4)
        for row in found.array:
            first = row[np.flatnonzero(row)[0]]
            assert first > 0
        assert len(found.expanded) == found.count == 240 + 2160

    def test_restricted_and_bounds(self, e8):
        found = short_vectors(e8, "4")
        assert found.restricted(2).count == 240
        assert found.restricted(3).count == 0
        assert short_vectors(e8, 0).count == 0

    def test_budget(self, e8):
        with pytest.raises(EnumerationBudgetError):
            short_vectors(e8, 4, max_vectors=10)

    def test_budget_with_workers(self, e8):
        with pytest.raises(EnumerationBudgetError):
            short_vectors(e8, 4, max_vectors=10, workers=2)

    def test_workers_agree(self, e8):
        serial = short_vectors(e8, 4)
        parallel = short_vectors(e8, 4, workers=2)
        assert parallel.vectors == serial.vectors

    def test_theta_series(self, e8):
        assert theta_coefficients(e8, 6) == [1, 240, 2160, 6720]
        cube = Lattice.from_gram([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
        assert theta_coefficients(cube, 3) == [1, 6, 12, 8]

    def test_minimum(self, a2, e8):
        assert minimum(e8) == 2
        assert minimum(dual(a2)) == Fraction(2, 3)
        assert minimum(Lattice.from_gram([[4, 2], [2, 6]])) == 4

    def test_minimum_of_zero_lattice(self):
        with pytest.raises(LatticeError):
            minimum(Lattice(RatMat([]), name="zero", check=False))

    @pytest.mark.slow
    def test_leech_shell(self, leech_lattice):
        assert root_count(leech_lattice) == 0
        assert short_vectors(leech_lattice, 4).count == 196560


class TestRootSystems:
    @pytest.mark.parametrize("kind,n,count", [("A", 2, 6), ("A", 8, 72), ("D", 4, 24),
                                              ("D", 8, 112), ("E", 6, 72), ("E", 8, 240)])
    def test_root_counts(self, kind, n, count):
        lattice = root_lattice(kind, n)
        assert root_count(lattice) == count
        assert root_system_type(lattice) == (f"{kind}{n}",)

    def test_decomposable(self, a2, e8):
        labels = root_system_type(direct_sum(direct_sum(a2, e8), a2))
        assert labels == ("A2", "A2", "E8")
        assert format_root_type(labels) == "A2^2E8"

    def test_format(self):
        assert format_root_type(("A8", "A8", "A8")) == "A8^3"
        assert format_root_type(("D4",) * 6) == "D4^6"
        assert format_root_type(()) == "Leech"

    def test_odd_lattice_rejected(self):
        with pytest.raises(ValueError):
            root_system_type(Lattice.from_gram([[1, 0], [0, 1]]))

    def test_simple_roots_of_a2(self, a2):
        vectors = [tuple(int(x) for x in v) for v in short_vectors(a2, 2).expanded]
        simple = simple_roots(vectors)
        assert len(simple) == 2
        assert a2.inner(simple[0], simple[1]) == -1

    def test_a8_inside_e8(self, e8):
        vectors = [tuple(int(x) for x in v) for v in short_vectors(e8, 2).expanded]
        path = extended_path_subsystem(e8, vectors)
        assert len(path) == 8
        assert is_path_diagram(e8, path)
        for a, b in zip(path, path[1:]):
            assert e8.inner(a, b) == -1
