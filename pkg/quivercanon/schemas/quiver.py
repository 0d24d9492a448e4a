"""Quiver file document model."""

from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, field_validator


class QuiverDocument(BaseModel):
    """Quiver description as read from a YAML or JSON file."""
    vertices: List[str]
    edges: List[Tuple[str, str]] = Field(default_factory=list)
    framing1: Optional[Dict[str, int]] = None
    framing2: Optional[Dict[str, int]] = None

    @field_validator("vertices", mode="before")
    @classmethod
    def _stringify_vertices(cls, value):
        if isinstance(value, list):
            return [str(v) for v in value]
        return value

    @field_validator("edges", mode="before")
    @classmethod
    def _stringify_edges(cls, value):
        if isinstance(value, list):
            return [tuple(str(v) for v in edge) if isinstance(edge, (list, tuple)) else edge for edge in value]
        return value

    @field_validator("framing1", "framing2", mode="before")
    @classmethod
    def _stringify_framing(cls, value):
        if isinstance(value, dict):
            return {str(k): v for k, v in value.items()}
        return value
