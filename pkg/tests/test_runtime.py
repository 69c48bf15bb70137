"""Tests for WeylRuntime."""

import pytest

from weylcent.engine import WeylRuntime, get_runtime, reset_runtime
from weylcent.engine.centralizer_solver import CentralizerBasis
from weylcent.engine.errors import WrongCharacteristic
from weylcent.engine.models import ElementResult, OutputMode
from weylcent.engine.modp_certifier import Verdict


class TestWeylRuntime:
    """Tests for WeylRuntime."""

    def setup_method(self):
        """Reset runtime before each test."""
        reset_runtime()

    def test_initialize(self, config_dir):
        """Should initialize runtime with settings and adapters."""
        runtime = WeylRuntime(config_dir)
        runtime.initialize()

        assert runtime._initialized is True
        assert runtime.settings is not None
        assert runtime.settings.max_primes == 32
        assert sorted(runtime.list_adapters()) == ["json", "text"]

    def test_get_capabilities(self, runtime):
        """Should return capabilities."""
        caps = runtime.get_capabilities()

        assert caps["module"] == "weylcent"
        assert "version" in caps
        assert "schema_version" in caps
        assert "centralizer" in caps["subcommands"]
        assert caps["coefficient_domains"] == ["QQ", "GF(p)"]
        assert caps["limits"]["max_primes"] == 32
        assert set(caps) == {
            "module",
            "version",
            "schema_version",
            "subcommands",
            "coefficient_domains",
            "adapters",
            "limits",
        }

    def test_health_check_healthy(self, runtime):
        """Should return healthy status."""
        health = runtime.health_check()

        assert health["status"] == "healthy"
        assert health["checks"]["initialized"]["status"] == "ok"
        assert health["checks"]["algebra"]["status"] == "ok"

    def test_health_check_not_initialized(self, config_dir):
        """Should return unhealthy when not initialized."""
        runtime = WeylRuntime(config_dir)

        health = runtime.health_check()

        assert health["status"] == "unhealthy"

    def test_global_runtime(self, config_dir):
        """Should reuse the global runtime until reset."""
        first = get_runtime(config_dir)
        assert get_runtime() is first
        reset_runtime()
        assert get_runtime(config_dir) is not first

    def test_mul_and_commutator(self, runtime):
        """Should return element results over QQ and F_p."""
        result = runtime.mul("d^3", "x^2")
        assert isinstance(result, ElementResult)
        assert str(result.element) == "x^2*d^3 + 6*x*d^2 + 6*d"
        assert str(runtime.mul("d^3", "x^2", modulus=3).element) == "x^2*d^3"
        assert str(runtime.commutator("d^2", "x^2").element) == "4*x*d + 2"

    def test_default_degree(self, runtime):
        """Should default the centralizer bound to 2p."""
        assert runtime.default_degree(3) == 6
        result = runtime.centralizer("x", 3)
        assert isinstance(result, CentralizerBasis)
        assert result.degree_bound == 6
        assert len(result.basis) == 12

    def test_modulus_required(self, runtime):
        """Should insist on a prime for characteristic p operations."""
        for call in (
            lambda: runtime.reduce("x", None),
            lambda: runtime.centralizer("x", None),
            lambda: runtime.decompose("x", None),
            lambda: runtime.fraction_witness("d^2", "d", None),
            lambda: runtime.lemma("d", None),
            lambda: runtime.lemma_check(None),
        ):
            with pytest.raises(WrongCharacteristic):
                call()

    def test_lemma_check_uses_settings(self, runtime):
        """Should take sample count and degree bound from settings."""
        report = runtime.lemma_check(3)
        assert len(report.samples) == 5
        assert report.degree_bound == 4

    def test_certify_uses_settings(self, runtime):
        """Should apply configured prime cap and cross-check."""
        report = runtime.certify("d^2", "d^3")
        assert report.verdict == Verdict.COMMUTE
        assert report.cross_check is not None
        assert runtime.certify("d^2", "d^3", cross_check=False).cross_check is None

    def test_render_modes(self, runtime):
        """Should render through the text and json adapters."""
        result = runtime.mul("d", "x")
        assert runtime.render(result).content == "x*d + 1"
        assert runtime.render(result, OutputMode.JSON).content_type == "application/json"
        assert runtime.render(result, "json").adapter_type == "json"

    def test_describe_config_schema(self, runtime):
        """Should expose the settings schema."""
        assert "max_primes" in runtime.describe_config_schema()["properties"]
