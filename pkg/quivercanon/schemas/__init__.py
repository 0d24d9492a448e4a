"""Pydantic schemas for quivercanon inputs and outputs."""

from .quiver import QuiverDocument
from .report import (
    CheckEntry,
    ConventionLedger,
    CrystalGraph,
    CrystalGraphEdge,
    CrystalGraphNode,
    DimensionRow,
    RunReport,
    SuiteReport,
)

__all__ = [
    "QuiverDocument",
    "CheckEntry",
    "ConventionLedger",
    "CrystalGraph",
    "CrystalGraphEdge",
    "CrystalGraphNode",
    "DimensionRow",
    "RunReport",
    "SuiteReport",
]
