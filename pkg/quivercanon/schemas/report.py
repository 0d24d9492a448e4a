"""Report, table and crystal graph models written by the check suites."""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field


class CheckEntry(BaseModel):
    """Single pass/fail record of an exact check."""
    check: str
    passed: bool
    vertices: List[str] = Field(default_factory=list)
    content: Optional[List[int]] = None
    detail: Optional[str] = None


class ConventionLedger(BaseModel):
    """Conventions every number in a report is relative to."""
    vertex_order: List[str]
    coproduct: str = "D(K_mu)=K_mu(x)K_mu; D(E_i)=E_i(x)1+K_i(x)E_i; D(F_i)=F_i(x)K_-i+1(x)F_i"
    tensor_order: str = "L(lambda2) (x) L(lambda1)"
    contravariant_form: str = "<F_i x, y> = <x, E_i y>, <v_lambda, v_lambda> = 1"
    crystal_limit: str = "v=0 for single modules, v=infinity for tensor pairs"
    string_order: str = "first differing (vertex, multiplicity) pair, vertex ascending in the vertex order"
    sign_normalization: str = "monomials rescaled so the canonical-to-monomial diagonal is +1"
    quasi_r_direction: str = "lower_first"


class SuiteReport(BaseModel):
    """Results of one check suite."""
    suite: str
    passed: bool
    degraded: bool = False
    entries: List[CheckEntry] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)

    @property
    def failures(self) -> List[CheckEntry]:
        return [entry for entry in self.entries if not entry.passed]


class RunReport(BaseModel):
    """Top-level report of a run of selected suites."""
    tool_version: str
    quiver: Dict[str, List[str]]
    weight: List[int]
    weight2: Optional[List[int]] = None
    height: int
    seed: int
    conventions: ConventionLedger
    suites: List[SuiteReport] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(suite.passed for suite in self.suites)


class DimensionRow(BaseModel):
    """One weight space: lowering content, Gram-rank dimension and crystal node count."""
    content: List[int]
    dimension: int
    node_count: int


class CrystalGraphNode(BaseModel):
    key: str
    content: List[int]
    weight: List[int]
    string: List[List] = Field(default_factory=list)
    eps: Dict[str, int] = Field(default_factory=dict)


class CrystalGraphEdge(BaseModel):
    source: str
    target: str
    vertex: str


class CrystalGraph(BaseModel):
    """Crystal graph with f-arrows labelled by vertex."""
    vertex_order: List[str]
    weight: List[int]
    height: int
    nodes: List[CrystalGraphNode] = Field(default_factory=list)
    edges: List[CrystalGraphEdge] = Field(default_factory=list)
