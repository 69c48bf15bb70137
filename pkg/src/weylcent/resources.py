"""MCP resources for weylcent.

Read-only documents an agent can consult before calling the tools: the
operator grammar with examples and the settings schema.
"""

import json
from typing import Any

from .engine.config import ConfigLoader
from .engine.op_parser import GRAMMAR

GRAMMAR_EXAMPLES = [
    {"text": "d^3*x^2", "normal_form": "x^2*d^3 + 6*x*d^2 + 6*d"},
    {"text": "d*x - x*d", "normal_form": "1"},
    {"text": "(d + 1/2*x^2)^2", "normal_form": "1/4*x^4 + x^2*d + d^2 + x"},
    {"text": "x1*d2 - d2*x1", "nvars": 2, "normal_form": "0"},
]


def get_grammar_resource() -> dict[str, Any]:
    """Operator grammar, variable naming and printed normal forms."""
    return {
        "uri": "weyl://grammar",
        "name": "Operator Grammar",
        "description": "Lark grammar accepted by every tool taking an operator string",
        "mimeType": "application/json",
        "content": json.dumps(
            {
                "grammar": GRAMMAR,
                "variables": {
                    "n=1": ["x", "d"],
                    "n>1": ["x1..xn", "d1..dn"],
                },
                "notes": [
                    "Terms print in descending graded-lex order with x's before d's.",
                    "Over F_p coefficients print as integers in [0, p).",
                    "Fractions are INT/INT; negative exponents are rejected.",
                ],
                "examples": GRAMMAR_EXAMPLES,
            },
            indent=2,
        ),
    }


def get_config_schema_resource(loader: ConfigLoader | None = None) -> dict[str, Any]:
    """JSON schema for settings.yaml."""
    loader = loader or ConfigLoader()
    return {
        "uri": "weyl://config/schema",
        "name": "Configuration Schema",
        "description": "Schema for config/settings.yaml",
        "mimeType": "application/json",
        "content": json.dumps(loader.get_config_schema(), indent=2),
    }


def list_all_resources() -> list[dict[str, Any]]:
    """Resource descriptors without content."""
    return [
        {k: v for k, v in resource.items() if k != "content"}
        for resource in (get_grammar_resource(), get_config_schema_resource())
    ]
