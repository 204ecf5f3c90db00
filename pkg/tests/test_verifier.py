"""
Tests for configuration, results and the lemma verifier
"""

from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

import src.verifier.lemmas as lemmas_module
from src.catalog import ConstructionError
from src.verifier import (
    CACHE_ENV, DEFAULTS, FAIL, LEMMAS, PASS, UNRESOLVED, ConfigError, Lemma, Outcome,
    UnknownLemmaError, VerificationResult, Verifier, all_passed, cache_dir, get_lemma, json_safe,
    lemma, lemma_ids, lie_identity_checks, load_config, parse_exact,
)

FAST_LEMMAS = ["lem-2.2", "lem-minvec", "lem-trivmodp", "nota-a8mod3", "eq-K-3C",
               "eq-eE-support", "lie-identities"]


@pytest.fixture
def verifier(tmp_path):
    return Verifier(config_path=tmp_path / "missing.yaml", seed=0)


class TestResults:
    def test_json_safe(self):
        assert json_safe(Fraction(3, 4)) == "3/4"
        assert json_safe(Fraction(4, 2)) == 2
        assert json_safe(np.int64(7)) == 7
        assert json_safe(np.bool_(True)) is True
        assert json_safe({1: {3, 1, 2}}) == {"1": [1, 2, 3]}
        assert json_safe((Fraction(1, 3), None)) == ["1/3", None]
        with pytest.raises(TypeError):
            json_safe(0.5)

    def test_parse_exact(self):
        assert parse_exact("16/9") == Fraction(16, 9)
        assert parse_exact("n/a") == "n/a"
        assert parse_exact(5) == 5

    def test_status_is_validated(self):
        with pytest.raises(ValueError):
            VerificationResult("lem-2.2", "maybe")

    def test_dict_round_trip(self):
        result = VerificationResult("eq-K-3C", PASS, {"gamma_norm": Fraction(16, 9)}, 12, seed=3)
        again = VerificationResult.from_dict(result.to_dict())
        assert again.metrics == {"gamma_norm": "16/9"}
        assert again.seed == 3 and again.passed
        assert again.timestamp == result.timestamp

    def test_all_passed(self):
        ok = VerificationResult("a", PASS)
        open_question = VerificationResult("b", UNRESOLVED)
        assert all_passed([ok, open_question])
        assert not all_passed([ok, VerificationResult("c", FAIL)])


class TestConfig:
    def test_missing_file_gives_defaults(self, tmp_path, monkeypatch):
        monkeypatch.delenv(CACHE_ENV, raising=False)
        assert load_config(tmp_path / "none.yaml") == DEFAULTS

    def test_partial_override(self, tmp_path, monkeypatch):
        monkeypatch.delenv(CACHE_ENV, raising=False)
        path = tmp_path / "config.yaml"
        path.write_text("verification:\n  ww_samples: 3\nshortvec:\n  workers: 4\n")
        config = load_config(path)
        assert config["verification"]["ww_samples"] == 3
        assert config["verification"]["lie_sizes"] == [2, 4, 8]
        assert config["shortvec"]["workers"] == 4
        assert DEFAULTS["shortvec"]["workers"] == 1

    def test_invalid_yaml(self, tmp_path):
        path = tmp_path / "config.yaml"
        path.write_text("verification: [unclosed\n")
        with pytest.raises(ConfigError):
            load_config(path)

    def test_top_level_must_be_mapping(self, tmp_path):
        path = tmp_path / "config.yaml"
        path.write_text("- 1\n- 2\n")
        with pytest.raises(ConfigError):
            load_config(path)

    def test_cache_dir_from_environment(self, tmp_path, monkeypatch):
        target = tmp_path / "cache"
        monkeypatch.setenv(CACHE_ENV, str(target))
        config = load_config(tmp_path / "none.yaml")
        assert cache_dir(config) == target
        assert target.is_dir()

    def test_repository_config_loads(self, monkeypatch):
        monkeypatch.delenv(CACHE_ENV, raising=False)
        config = load_config(Path(__file__).resolve().parents[1] / "config" / "config.yaml")
        assert set(DEFAULTS) <= set(config)


class TestRegistry:
    def test_ids(self):
        ids = lemma_ids()
        assert ids[0] == "lem-2.2"
        for expected in FAST_LEMMAS + ["thm-embed", "lem-lbeta-group", "appc-A8_3", "appc-Leech"]:
            assert expected in ids
        assert len(ids) == len(set(ids))

    def test_unknown_id(self):
        with pytest.raises(UnknownLemmaError):
            get_lemma("lem-9.9")

    def test_duplicate_registration(self):
        with pytest.raises(ValueError):
            lemma("lem-2.2")(lambda ctx: Outcome(True, {}))

    def test_slow_flags(self):
        assert get_lemma("lem-lbeta-group").slow
        assert not get_lemma("lie-identities").slow
        assert get_lemma("nota-mphi").randomized


class TestVerifier:
    @pytest.mark.parametrize("lemma_id", FAST_LEMMAS)
    def test_fast_lemmas_pass(self, verifier, lemma_id):
        result = verifier.run(lemma_id)
        assert result.status == PASS, result.witness
        assert result.runtime_ms >= 0

    def test_metrics(self, verifier):
        k = verifier.run("eq-K-3C").metrics
        assert k["index"] == 3
        assert k["gamma_norm"] == "16/9"
        tower = verifier.run("lem-2.2").metrics
        assert tower["root_count"] == 0
        assert tower["rank_sum"] == 16
        cube = verifier.run("lem-minvec").metrics
        assert cube["min_vectors"] == 720
        assert cube["class_sizes"] == [240, 240, 240]

    def test_sign_support_is_well_defined_mod_2m(self, verifier):
        metrics = verifier.run("eq-eE-support").metrics
        assert metrics["well_defined_mod_2m"] is True
        assert metrics["m4_count"] == 240
        assert metrics["pairs_checked"] == 4 * 8 * 9

    def test_sign_support_detects_sign_depending_on_representative(self, verifier, monkeypatch):
        real = lemmas_module.phi_sign

        def shifted_sign(x, alpha, lattice):
            flip = -1 if (int(alpha[0]) // 2) % 2 else 1
            return real(x, alpha, lattice) * flip

        monkeypatch.setattr(lemmas_module, "phi_sign", shifted_sign)
        result = verifier.run("eq-eE-support")
        assert result.status == FAIL
        assert result.metrics["well_defined_mod_2m"] is False
        assert result.witness["mu_index"] == 0

    def test_weyl_twists_count_only_nontrivial_words(self, tmp_path):
        v = Verifier(config_path=tmp_path / "none.yaml", settings={"ww_samples": 3})
        result = v.run("lem-ww-regular")
        assert result.status == PASS
        assert result.metrics["nontrivial_mod_3"] == 3
        assert result.metrics["twist_differs"] == 3
        assert result.metrics["attempts"] >= 3

    def test_weyl_twists_unresolved_without_enough_words(self, tmp_path):
        v = Verifier(config_path=tmp_path / "none.yaml",
                     settings={"ww_samples": 3, "ww_max_attempts": 1})
        result = v.run("lem-ww-regular")
        assert result.status == UNRESOLVED
        assert result.metrics["attempts"] == 1
        assert result.metrics["nontrivial_mod_3"] <= 1

    def test_weyl_twists_fail_when_twist_is_trivial(self, tmp_path, monkeypatch):
        monkeypatch.setattr(lemmas_module, "twist", lambda alpha, gq, gr: alpha)
        v = Verifier(config_path=tmp_path / "none.yaml", settings={"ww_samples": 2})
        result = v.run("lem-ww-regular")
        assert result.status == FAIL
        assert result.metrics["twist_differs"] == 0

    @pytest.mark.slow
    def test_leech_embedding_reports_each_isometry(self, verifier, monkeypatch):
        real = lemmas_module.isometric

        def no_r_isometry(first, second, budget_seconds=None):
            if first is lemmas_module.r_std():
                return None
            return real(first, second, budget_seconds=budget_seconds)

        monkeypatch.setattr(lemmas_module, "isometric", no_r_isometry)
        result = verifier.run("thm-embed")
        assert result.status == FAIL
        assert result.metrics["r_iso"] is False
        assert result.metrics["q_iso"] is True

    def test_seed_only_for_randomized(self, tmp_path):
        v = Verifier(config_path=tmp_path / "none.yaml", seed=5)
        assert v.run("lem-trivmodp").seed == 5
        assert v.run("lie-identities").seed is None

    def test_settings_override(self, tmp_path):
        v = Verifier(config_path=tmp_path / "none.yaml", settings={"lie_sizes": [3]})
        result = v.run("lie-identities")
        assert list(result.metrics) == ["n=3"]

    def test_lie_identity_checks(self):
        checks = lie_identity_checks(4)
        assert checks["eigenvalue_exponents"] == [1, 2, 3, 4, 0]
        assert all(v for k, v in checks.items() if k != "eigenvalue_exponents")

    def test_construction_error_becomes_fail(self, verifier, monkeypatch):
        def broken(ctx):
            raise ConstructionError("glue is not full")

        monkeypatch.setitem(LEMMAS, "test-broken", Lemma("test-broken", broken))
        result = verifier.run("test-broken")
        assert result.status == FAIL
        assert "glue is not full" in result.witness["error"]

    def test_failed_outcome_keeps_metrics(self, verifier, monkeypatch):
        monkeypatch.setitem(LEMMAS, "test-fails",
                            Lemma("test-fails", lambda ctx: Outcome(False, {"roots": 6})))
        result = verifier.run("test-fails")
        assert result.status == FAIL
        assert result.witness == {"metrics": {"roots": 6}}

    def test_unresolved_outcome(self, verifier, monkeypatch):
        monkeypatch.setitem(LEMMAS, "test-open",
                            Lemma("test-open", lambda ctx: Outcome(False, {}, unresolved=True)))
        assert verifier.run("test-open").status == UNRESOLVED

    def test_run_all_skips_slow(self, verifier):
        results = verifier.run_all(["lie-identities", "thm-embed"], include_slow=False)
        assert [r.lemma_id for r in results] == ["lie-identities"]

    @pytest.mark.slow
    @pytest.mark.parametrize("lemma_id", ["thm-embed", "lem-lbeta-rootless", "lem-lbeta-group",
                                          "lem-htrans-orbit", "appB-miyamoto", "prop-x1"])
    def test_slow_lemmas_pass(self, verifier, lemma_id):
        assert verifier.run(lemma_id).status == PASS
