"""JSON adapter for machine consumption."""

import json

from .base import RenderAdapter, RenderResult, Report


class JsonAdapter(RenderAdapter):
    """Renders reports as indented JSON.

    Reports carry no timestamps, so identical inputs give byte-identical
    output.
    """

    @property
    def adapter_type(self) -> str:
        return "json"

    @property
    def content_type(self) -> str:
        return "application/json"

    def render(self, report: Report) -> RenderResult:
        """Render report as JSON."""
        return RenderResult(
            adapter_type=self.adapter_type,
            content=json.dumps(report.to_dict(), indent=2),
            content_type=self.content_type,
            metadata={"report": type(report).__name__},
        )
