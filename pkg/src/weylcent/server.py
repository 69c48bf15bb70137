"""MCP server for weylcent.

Exposes the Weyl algebra operations as tools:
- Deterministic tools (capabilities, health, config schema)
- Algebra tools (product, commutator, reduction, center decomposition)
- Centralizer tools (truncated basis, fraction witness, lemma checks)
- Certificate tools (zero commutator over QQ, theorem pipeline)

Operators are strings in the grammar served at weyl://grammar. Every tool
returns the report's JSON form, or {"error": ...} when the input is rejected.
"""

import logging
import os
from collections.abc import Callable
from typing import Any

from mcp.server.fastmcp import FastMCP

from . import resources as res
from .engine.errors import WeylError
from .engine.runtime import WeylRuntime, get_runtime

logger = logging.getLogger(__name__)

# Initialize MCP server
mcp = FastMCP("weylcent")


def _get_runtime() -> WeylRuntime:
    """Get the runtime instance."""
    config_dir = os.environ.get("WEYLCENT_CONFIG_DIR")
    return get_runtime(config_dir)


def _call(operation: Callable[[], Any]) -> dict[str, Any]:
    """Run an operation and convert its report or error into a tool result."""
    try:
        return operation().to_dict()
    except (WeylError, ValueError) as e:
        logger.info(f"Tool rejected input: {e}")
        return {"error": str(e), "error_type": type(e).__name__}


# ============================================================================
# MCP Resources
# ============================================================================


@mcp.resource("weyl://grammar")
def resource_grammar() -> str:
    """Operator grammar with examples of printed normal forms."""
    return res.get_grammar_resource()["content"]


@mcp.resource("weyl://config/schema")
def resource_config_schema() -> str:
    """JSON schema for settings.yaml."""
    return res.get_config_schema_resource(_get_runtime().config_loader)["content"]


# ============================================================================
# Deterministic Tools
# ============================================================================


@mcp.tool()
def weyl_get_capabilities() -> dict[str, Any]:
    """Get module capabilities: version, subcommands, domains and limits."""
    return _get_runtime().get_capabilities()


@mcp.tool()
def weyl_health_check() -> dict[str, Any]:
    """Check service health with a one-line commutator computation."""
    return _get_runtime().health_check()


# ============================================================================
# Algebra Tools
# ============================================================================


@mcp.tool()
def weyl_mul(left: str, right: str, nvars: int = 1, modulus: int | None = None) -> dict[str, Any]:
    """Normal form of left * right.

    Args:
        left: Operator string, e.g. "d^3"
        right: Operator string, e.g. "x^2"
        nvars: Number of variables n
        modulus: Prime p to work over F_p; omit for QQ
    """
    return _call(lambda: _get_runtime().mul(left, right, nvars, modulus))


@mcp.tool()
def weyl_commutator(
    left: str, right: str, nvars: int = 1, modulus: int | None = None
) -> dict[str, Any]:
    """Normal form of [left, right] = left*right - right*left."""
    return _call(lambda: _get_runtime().commutator(left, right, nvars, modulus))


@mcp.tool()
def weyl_reduce(expr: str, modulus: int, nvars: int = 1) -> dict[str, Any]:
    """Reduce a rational operator modulo a prime."""
    return _call(lambda: _get_runtime().reduce(expr, modulus, nvars))


@mcp.tool()
def weyl_decompose(expr: str, modulus: int) -> dict[str, Any]:
    """Coordinates of an operator of A_1(F_p) over its center."""
    return _call(lambda: _get_runtime().decompose(expr, modulus))


# ============================================================================
# Centralizer Tools
# ============================================================================


@mcp.tool()
def weyl_centralizer(
    expr: str, modulus: int, degree: int | None = None, nvars: int = 1
) -> dict[str, Any]:
    """Basis of the centralizer of expr in A_n(F_p) up to a total degree.

    Args:
        expr: Operator string
        modulus: Prime p
        degree: Degree bound D; defaults to default_degree_factor * p
        nvars: Number of variables n
    """
    return _call(lambda: _get_runtime().centralizer(expr, modulus, degree, nvars))


@mcp.tool()
def weyl_fraction_witness(
    a: str, b: str, modulus: int, degree: int | None = None
) -> dict[str, Any]:
    """Find z1, z2 in Z[a] with b*z2 = z1 for b commuting with a."""
    return _call(lambda: _get_runtime().fraction_witness(a, b, modulus, degree))


@mcp.tool()
def weyl_lemma_check(
    modulus: int, samples: int | None = None, seed: int | None = None
) -> dict[str, Any]:
    """Check centralizer commutativity for seeded random noncentral operators."""
    return _call(lambda: _get_runtime().lemma_check(modulus, samples, seed))


# ============================================================================
# Certificate Tools
# ============================================================================


@mcp.tool()
def weyl_certify(
    p_expr: str, q_expr: str, max_primes: int | None = None, cross_check: bool | None = None
) -> dict[str, Any]:
    """Certify [P, Q] = 0 over QQ by checking reductions modulo primes.

    The verdict is COMMUTE once the product of passing primes exceeds twice
    the majorant bound, NOT_COMMUTE at the first failing prime, and
    INCONCLUSIVE when max_primes is reached first.
    """
    return _call(lambda: _get_runtime().certify(p_expr, q_expr, max_primes, cross_check))


@mcp.tool()
def weyl_theorem(
    a: str,
    p_expr: str,
    q_expr: str,
    max_primes: int | None = None,
    cross_check: bool | None = None,
) -> dict[str, Any]:
    """Certify [P, Q] = 0 for P and Q in the centralizer of a nonconstant a."""
    return _call(lambda: _get_runtime().theorem(a, p_expr, q_expr, max_primes, cross_check))
