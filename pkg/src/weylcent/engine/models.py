"""Result models shared by the runtime, the adapters and the interfaces."""

from dataclasses import dataclass
from enum import Enum
from typing import Any

from .weyl_core import WeylElement


class OutputMode(str, Enum):
    """Report formats."""

    TEXT = "text"
    JSON = "json"


@dataclass
class ElementResult:
    """A single computed element, e.g. a product or a commutator."""

    operation: str
    element: WeylElement

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            "operation": self.operation,
            "nvars": self.element.nvars,
            "p": self.element.characteristic or None,
            "result": str(self.element),
            "total_degree": _degree(self.element),
        }


def _degree(element: WeylElement) -> int | None:
    """Total degree for JSON output; None stands for the zero element."""
    if element.is_zero():
        return None
    return int(element.total_degree())
