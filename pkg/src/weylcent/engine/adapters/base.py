"""Base adapter protocol and types."""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Protocol


class Report(Protocol):
    """Anything the engine returns to an interface."""

    def to_dict(self) -> dict[str, Any]: ...


@dataclass
class RenderResult:
    """Result of rendering a report through an adapter."""

    adapter_type: str
    content: str
    content_type: str
    metadata: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary."""
        return {
            "adapter_type": self.adapter_type,
            "content": self.content,
            "content_type": self.content_type,
            "metadata": self.metadata,
        }


class RenderAdapter(ABC):
    """Base class for render adapters.

    Adapters turn engine reports into the text printed on stdout.
    """

    @property
    @abstractmethod
    def adapter_type(self) -> str:
        """Unique identifier for this adapter type."""
        ...

    @property
    @abstractmethod
    def content_type(self) -> str:
        """Content type produced by this adapter."""
        ...

    @abstractmethod
    def render(self, report: Report) -> RenderResult:
        """Render a report."""
        ...
