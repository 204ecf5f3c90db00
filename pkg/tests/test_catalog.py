"""
Tests for the named codes, lattices, embeddings and towers
"""

import importlib
import shutil
from copy import deepcopy
from fractions import Fraction

import pytest

from src.catalog import (
    EMBEDDING_FILE, NIEMEIER_TYPES, ChecksumMismatchError, ConstructionError, Refusal, a4_6_rejection,
    build_lattice, build_names, code, doubly_even_classes, ee8_sublattices, golay24, golay_element_3_8,
    hexacode, k_sublattice_3C, load_embedding_data, m4_set, m_phi, miyamoto_isometry, niemeier,
    normalize_type, phi_sign, sample_niemeier, shape_3_2_permutations, ternary_golay, tetracode,
)
from src.exactla import RatMat
from src.lattice import Isometry, Lattice, index, sublattice
from src.permgrp import cycle_type
from src.shortvec import root_count, root_system_type


class TestCodes:
    @pytest.mark.parametrize("name,size,min_weight", [
        ("golay24", 4096, 8), ("hamming8", 16, 4), ("ternary_golay", 729, 6),
        ("tetracode", 9, 3), ("hexacode", 64, 4), ("tripled_hamming8", 16, 12),
    ])
    def test_named_codes(self, name, size, min_weight):
        c = code(name)
        assert c.size == size
        assert c.min_weight == min_weight

    def test_self_duality(self):
        assert golay24().is_self_dual()
        assert ternary_golay().is_self_dual()
        assert tetracode().is_self_dual()

    def test_golay_weights(self):
        assert golay24().weight_distribution() == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}

    def test_hexacode_is_f4_linear(self):
        h = hexacode()
        assert h.dimension == 3
        word = next(w for w in h.words if any(w))
        assert h.contains(h.transform(word, range(6), [2] * 6))

    def test_unknown_code(self):
        with pytest.raises(ValueError):
            code("reed_muller")

    def test_golay_element_shape(self):
        perm = golay_element_3_8(0)
        assert cycle_type(perm) == (3,) * 8
        assert golay24().preserved_by(perm)


class TestEmbeddingData:
    def test_checksum_verified(self):
        data = load_embedding_data()
        assert set(NIEMEIER_TYPES) <= set(data["niemeier"])

    def test_tampered_file(self, tmp_path):
        copy = tmp_path / "embeddings.yaml"
        shutil.copy(EMBEDDING_FILE, copy)
        shutil.copy(str(EMBEDDING_FILE) + ".sha256", str(copy) + ".sha256")
        copy.write_text(copy.read_text(encoding="utf-8") + "\n# edited\n", encoding="utf-8")
        with pytest.raises(ChecksumMismatchError):
            load_embedding_data(copy)
        assert load_embedding_data(copy, verify=False)["version"] == 1


class TestE8Models:
    def test_tetracode_model(self, tetracode_e8):
        assert tetracode_e8.lattice.is_even and tetracode_e8.lattice.is_unimodular
        assert index(tetracode_e8.sub) == 9

    def test_a8_model(self, a8_e8):
        assert a8_e8.lattice.is_unimodular
        assert index(a8_e8.sub) == 3

    def test_h_has_order_three(self, h_e8):
        assert h_e8.order == 3
        assert h_e8.lattice.rank == 8


class TestTower:
    def test_m_and_m_prime(self, tower):
        assert tower.m.rank == tower.m_prime.rank == 8
        assert tower.q.rank == 16
        assert tower.q.lattice.determinant == 3 ** 8
        assert root_count(tower.q.lattice) == 0

    def test_norm4_classes(self, tower):
        classes = doubly_even_classes(tower.q.lattice)
        assert sorted(len(c) for c in classes) == [240, 240, 240]
        for handle in ee8_sublattices(tower.ambient, tower.q):
            assert handle.rank == 8
            assert handle.lattice.determinant == 2 ** 8

    def test_m4_needs_minimum_four(self, e8, tower):
        with pytest.raises(ValueError):
            m4_set(e8)
        assert m4_set(tower.q.lattice).count == 720

    def test_k_sublattice(self):
        data = k_sublattice_3C()
        assert index(data.k) == 3
        assert data.k.lattice.determinant == 9 * 2 ** 8
        beta = data.m.lattice_coordinates(data.beta_vec)
        assert data.character(beta) != 0
        assert all(data.character(row) == 0 for row in data.k.rows.to_ints())

    def test_phi_sign(self, e8):
        alpha = (1, 0, 0, 0, 0, 0, 0, 0)
        assert phi_sign((Fraction(1, 2), 0, 0, 0, 0, 0, 0, 0), alpha, e8) == -1
        assert phi_sign(alpha, alpha, e8) == 1
        with pytest.raises(ValueError):
            phi_sign((Fraction(1, 3), 0, 0, 0, 0, 0, 0, 0), alpha, e8)

    def test_miyamoto_map(self, e8):
        root = sublattice(e8, [[1, 0, 0, 0, 0, 0, 0, 0]])
        found = miyamoto_isometry(e8, root)
        assert isinstance(found, Isometry) and found.order == 2
        plane = Lattice.from_gram([[1, 0], [0, 1]])
        refused = miyamoto_isometry(plane, sublattice(plane, [[1, 2]]))
        assert isinstance(refused, Refusal)
        assert refused.witness in ((1, 0), (0, 1))


class TestNiemeier:
    def test_normalize_type(self):
        assert normalize_type("a8_3") == "A8^3"
        assert normalize_type("leech") == "Leech"
        with pytest.raises(ValueError):
            normalize_type("A5^4D4")

    def test_a4_6_has_no_3_2_symmetry(self):
        assert len(shape_3_2_permutations()) == 40
        result = a4_6_rejection()
        assert result["checked"] == 40
        assert result["preserving"] == 0

    def test_builds(self):
        assert "e8" in build_names() and "niemeier:Leech" in build_names()
        assert build_lattice("E8").is_unimodular
        assert build_lattice("eee8").determinant == 3 ** 8
        with pytest.raises(ValueError):
            build_lattice("d16")

    @pytest.mark.slow
    @pytest.mark.parametrize("type_name", NIEMEIER_TYPES)
    def test_embedding(self, type_name):
        emb = niemeier(type_name)
        assert emb.niemeier.is_even and emb.niemeier.is_unimodular
        assert emb.r_handle.rank == 8 and emb.q_handle.rank == 16
        assert emb.sigma.order == 3
        assert root_count(emb.niemeier) == emb.root_count_expected
        if type_name != "Leech":
            assert root_system_type(emb.niemeier)
        if emb.printed_r_matches is not None:
            assert emb.printed_r_matches and emb.printed_q_matches

    @pytest.mark.slow
    def test_m_phi_is_e8_cubed(self):
        lattice = m_phi()
        assert lattice.is_even and lattice.is_unimodular
        assert root_system_type(lattice) == ("E8", "E8", "E8")

    @pytest.mark.slow
    def test_samples_are_niemeier(self):
        for sample in sample_niemeier(3, seed=11):
            assert sample.even_unimodular
            assert sample.in_table


@pytest.fixture
def edited_embedding_data(monkeypatch):
    data = deepcopy(load_embedding_data())
    monkeypatch.setattr(importlib.import_module("src.catalog.niemeier"), "embedding_data", lambda: data)
    niemeier.cache_clear()
    yield data["niemeier"]
    niemeier.cache_clear()


class TestRecordedSpans:
    def test_d8_3_spans_match(self):
        emb = niemeier("D8^3")
        assert emb.printed_r_matches and emb.printed_q_matches
        assert emb.notes["errata"][0]["field"] == "q_span.vectors[0]"

    def test_vector_outside_n_raises(self, edited_embedding_data):
        record = edited_embedding_data["D8^3"]
        record["q_span"]["vectors"][0] = record["errata"][0]["printed"]
        with pytest.raises(ConstructionError, match="not in N"):
            niemeier("D8^3")

    def test_different_span_raises(self, edited_embedding_data):
        edited_embedding_data["D8^3"]["r_span"]["root_patterns"].append([1, -1, 0])
        with pytest.raises(ConstructionError, match="R differs"):
            niemeier("D8^3")

    def test_missing_glue_raises(self, edited_embedding_data):
        edited_embedding_data["E8^3"]["q_span"]["root_patterns"].pop()
        with pytest.raises(ConstructionError, match="Q differs"):
            niemeier("E8^3")

    @pytest.mark.slow
    @pytest.mark.parametrize("type_name", ["A1^24", "A2^12"])
    def test_orbit_rules_match(self, type_name):
        emb = niemeier(type_name)
        assert emb.printed_r_matches is True
        assert emb.printed_q_matches is True

    @pytest.mark.slow
    def test_wrong_glue_rule_raises(self, edited_embedding_data):
        edited_embedding_data["A2^12"]["q_span"]["glue_words"] = "fixed_subcode"
        with pytest.raises(ConstructionError, match="Q differs"):
            niemeier("A2^12")
