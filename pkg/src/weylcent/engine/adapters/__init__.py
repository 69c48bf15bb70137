"""Report renderers."""

from .base import RenderAdapter, RenderResult
from .json_adapter import JsonAdapter
from .text_adapter import TextAdapter

__all__ = ["RenderAdapter", "RenderResult", "JsonAdapter", "TextAdapter"]
