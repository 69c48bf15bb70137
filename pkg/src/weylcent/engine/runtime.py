"""Runtime orchestrator for weylcent.

Loads configuration, applies setting defaults, and provides the single
entry point that the CLI and the MCP server call into. Operator arguments
are strings in the op_parser grammar.
"""

import logging
from pathlib import Path
from typing import Any

from . import centralizer_solver as cs
from . import modp_certifier as mc
from .adapters import JsonAdapter, RenderAdapter, RenderResult, TextAdapter
from .adapters.base import Report
from .config import ConfigLoader, WeylSettings
from .errors import WrongCharacteristic
from .exact_arith import QQ, GF, make_prime
from .models import ElementResult, OutputMode
from .op_parser import parse
from .weyl_core import (
    CenterDecomposition,
    WeylElement,
    commutator,
    decompose_over_center,
    mul,
    reduce_mod_p,
)

logger = logging.getLogger(__name__)

__version__ = "0.1.0"
SCHEMA_VERSION = "1.0.0"

SUBCOMMANDS = [
    "mul",
    "comm",
    "reduce",
    "centralizer",
    "decompose",
    "fraction-witness",
    "lemma",
    "lemma-check",
    "certify",
    "theorem",
]


class WeylRuntime:
    """Main runtime: settings plus one method per operation."""

    def __init__(self, config_dir: str | Path | None = None):
        self.config_loader = ConfigLoader(config_dir)
        self.settings: WeylSettings | None = None
        self._adapters: dict[str, RenderAdapter] = {}
        self._initialized = False
        self._last_error: str | None = None

    def initialize(self) -> None:
        """Initialize the runtime."""
        if self._initialized:
            return

        try:
            self.settings = self.config_loader.load_settings()
            for adapter in (TextAdapter(), JsonAdapter()):
                self._adapters[adapter.adapter_type] = adapter
            self._initialized = True
            logger.info("weylcent runtime initialized")
        except Exception as e:
            self._last_error = str(e)
            logger.error(f"Failed to initialize runtime: {e}")
            raise

    def _ensure_initialized(self) -> WeylSettings:
        if not self._initialized:
            self.initialize()
        assert self.settings is not None
        return self.settings

    # Rendering

    def render(self, report: Report, mode: OutputMode | str = OutputMode.TEXT) -> RenderResult:
        self._ensure_initialized()
        return self._adapters[OutputMode(mode).value].render(report)

    def list_adapters(self) -> list[str]:
        self._ensure_initialized()
        return list(self._adapters)

    # Defaults

    def default_degree(self, modulus: int) -> int:
        return self._ensure_initialized().default_degree_factor * modulus

    def _parse_fp(self, text: str, modulus: int, nvars: int = 1) -> WeylElement:
        return parse(text, nvars, GF(make_prime(modulus).p))

    # Operations

    def mul(
        self, left: str, right: str, nvars: int = 1, modulus: int | None = None
    ) -> ElementResult:
        domain = GF(make_prime(modulus).p) if modulus is not None else QQ
        a, b = parse(left, nvars, domain), parse(right, nvars, domain)
        return ElementResult("mul", mul(a, b))

    def commutator(
        self, left: str, right: str, nvars: int = 1, modulus: int | None = None
    ) -> ElementResult:
        domain = GF(make_prime(modulus).p) if modulus is not None else QQ
        a, b = parse(left, nvars, domain), parse(right, nvars, domain)
        return ElementResult("comm", commutator(a, b))

    def reduce(self, expr: str, modulus: int | None, nvars: int = 1) -> ElementResult:
        if modulus is None:
            raise WrongCharacteristic("reduce needs --mod p")
        return ElementResult("reduce", reduce_mod_p(parse(expr, nvars, QQ), modulus))

    def centralizer(
        self, expr: str, modulus: int | None, degree: int | None = None, nvars: int = 1
    ) -> cs.CentralizerBasis:
        if modulus is None:
            raise WrongCharacteristic("centralizer needs --mod p")
        a = self._parse_fp(expr, modulus, nvars)
        bound = self.default_degree(modulus) if degree is None else degree
        return cs.centralizer_basis(a, bound)

    def decompose(self, expr: str, modulus: int | None) -> CenterDecomposition:
        if modulus is None:
            raise WrongCharacteristic("decompose needs --mod p")
        return decompose_over_center(self._parse_fp(expr, modulus))

    def fraction_witness(
        self, a_expr: str, b_expr: str, modulus: int | None, degree: int | None = None
    ) -> cs.FractionWitness:
        if modulus is None:
            raise WrongCharacteristic("fraction-witness needs --mod p")
        a = self._parse_fp(a_expr, modulus)
        b = self._parse_fp(b_expr, modulus)
        bound = self.default_degree(modulus) if degree is None else degree
        return cs.fraction_witness(a, b, bound)

    def lemma(
        self, expr: str, modulus: int | None, degree: int | None = None, nvars: int = 1
    ) -> cs.LemmaReport:
        if modulus is None:
            raise WrongCharacteristic("lemma needs --mod p")
        a = self._parse_fp(expr, modulus, nvars)
        bound = self.default_degree(modulus) if degree is None else degree
        return cs.verify_lemma(a, bound)

    def lemma_check(
        self,
        modulus: int | None,
        samples: int | None = None,
        seed: int | None = None,
        degree: int | None = None,
    ) -> cs.LemmaSuiteReport:
        if modulus is None:
            raise WrongCharacteristic("lemma-check needs --mod p")
        settings = self._ensure_initialized()
        return cs.lemma_check(
            modulus,
            samples=settings.lemma_samples if samples is None else samples,
            seed=settings.lemma_seed if seed is None else seed,
            max_degree=settings.lemma_max_degree,
            degree_bound=settings.lemma_degree_bound if degree is None else degree,
        )

    def certify(
        self,
        p_expr: str,
        q_expr: str,
        max_primes: int | None = None,
        cross_check: bool | None = None,
        workers: int | None = None,
    ) -> mc.CertificateReport:
        settings = self._ensure_initialized()
        return mc.certify_zero_commutator(
            parse(p_expr, 1, QQ),
            parse(q_expr, 1, QQ),
            max_primes=settings.max_primes if max_primes is None else max_primes,
            cross_check=settings.cross_check if cross_check is None else cross_check,
            workers=settings.workers if workers is None else workers,
        )

    def theorem(
        self,
        a_expr: str,
        p_expr: str,
        q_expr: str,
        max_primes: int | None = None,
        cross_check: bool | None = None,
        workers: int | None = None,
    ) -> mc.CertificateReport:
        settings = self._ensure_initialized()
        return mc.theorem_pipeline(
            parse(a_expr, 1, QQ),
            parse(p_expr, 1, QQ),
            parse(q_expr, 1, QQ),
            max_primes=settings.max_primes if max_primes is None else max_primes,
            cross_check=settings.cross_check if cross_check is None else cross_check,
            workers=settings.workers if workers is None else workers,
        )

    # Introspection

    def get_capabilities(self) -> dict[str, Any]:
        """Version, operations, coefficient domains and limits."""
        settings = self._ensure_initialized()
        return {
            "module": "weylcent",
            "version": __version__,
            "schema_version": SCHEMA_VERSION,
            "subcommands": SUBCOMMANDS,
            "coefficient_domains": ["QQ", "GF(p)"],
            "adapters": self.list_adapters(),
            "limits": {
                "max_primes": settings.max_primes,
                "workers": settings.workers,
                "default_degree_factor": settings.default_degree_factor,
            },
        }

    def health_check(self) -> dict[str, Any]:
        """Runtime status plus a tiny end-to-end computation."""
        if not self._initialized:
            return {
                "status": "unhealthy",
                "checks": {"initialized": {"status": "not_initialized"}},
                "last_error": self._last_error,
            }

        checks: dict[str, Any] = {"initialized": {"status": "ok"}}
        status = "healthy"
        try:
            one = commutator(parse("d"), parse("x"))
            ok = one == WeylElement.one()
            checks["algebra"] = {"status": "ok" if ok else "error"}
            if not ok:
                status = "degraded"
        except Exception as e:
            checks["algebra"] = {"status": "error", "error": str(e)}
            status = "unhealthy"

        return {"status": status, "checks": checks, "last_error": self._last_error}

    def describe_config_schema(self) -> dict[str, Any]:
        """JSON schema for settings.yaml."""
        return self.config_loader.get_config_schema()


# Global runtime instance
_runtime: WeylRuntime | None = None


def get_runtime(config_dir: str | Path | None = None) -> WeylRuntime:
    """Get or create the global runtime instance."""
    global _runtime
    if _runtime is None:
        _runtime = WeylRuntime(config_dir)
        _runtime.initialize()
    return _runtime


def reset_runtime() -> None:
    """Reset the global runtime (for testing)."""
    global _runtime
    _runtime = None
