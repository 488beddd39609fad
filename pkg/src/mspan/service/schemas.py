"""Pydantic request/response models mirroring the toolkit's JSON formats."""

from __future__ import annotations

from typing import Any, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from ..buco import BucoInstance
from ..graphs import Edge, WeightedGraph
from ..objectives import ValueVector
from ..pareto import ParetoFront, front_to_dict


class EdgeModel(BaseModel):
    u: int
    v: int
    c1: int
    c2: int


class InstanceModel(BaseModel):
    directed: bool
    vertices: int
    edges: list[EdgeModel]

    def to_graph(self) -> WeightedGraph:
        return WeightedGraph(
            self.directed,
            self.vertices,
            tuple(Edge(e.u, e.v, e.c1, e.c2) for e in self.edges),
        )

    @classmethod
    def from_graph(cls, g: WeightedGraph) -> "InstanceModel":
        return cls(
            directed=g.directed,
            vertices=g.vertex_count,
            edges=[EdgeModel(u=e.u, v=e.v, c1=e.c1, c2=e.c2) for e in g.edges],
        )


class SpannerModel(BaseModel):
    edges: list[int]


class ValueVectorModel(BaseModel):
    f1: int
    f2: tuple[int, int]

    @classmethod
    def from_value(cls, v: ValueVector) -> "ValueVectorModel":
        return cls(f1=v.f1, f2=(v.f2.numerator, v.f2.denominator))


class FrontModel(BaseModel):
    points: list[ValueVectorModel]
    witnesses: Optional[dict[str, list[int]]] = None

    @classmethod
    def from_front(cls, front: ParetoFront, include_witnesses: bool) -> "FrontModel":
        data = front_to_dict(front, include_witnesses)
        points = [ValueVectorModel(f1=p["f1"], f2=tuple(p["f2"])) for p in data["points"]]
        return cls(points=points, witnesses=data["witnesses"])


class CertificateModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    point: ValueVectorModel
    lam: list[tuple[int, int]] = Field(alias="lambda")


class ReportModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    claim: str
    passed: bool = Field(alias="pass")
    details: dict[str, Any]
    counterexample: Optional[dict[str, Any]] = None


class GenerateIntractableRequest(BaseModel):
    n: int
    directed: bool = False


class BucoModel(BaseModel):
    c1: list[int]
    c2: list[int]

    def to_instance(self) -> BucoInstance:
        return BucoInstance(tuple(self.c1), tuple(self.c2))


class GenerateFromBucoRequest(BucoModel):
    directed: bool = False


class GenerateFromCnfRequest(BaseModel):
    dimacs: str


class GenerateResponse(BaseModel):
    instance: InstanceModel
    metadata: dict[str, Any]


class EvalRequest(BaseModel):
    instance: InstanceModel
    spanner: SpannerModel
    mode: Literal["edge-restricted", "all-pairs"] = "edge-restricted"


class ParetoRequest(BaseModel):
    instance: InstanceModel
    budget: Optional[int] = None
    witnesses: bool = False
    jobs: Optional[int] = None


class ExtremeRequest(BaseModel):
    instance: InstanceModel
    method: Literal["hull", "dichotomic"] = "hull"
    budget: Optional[int] = None
    jobs: Optional[int] = None


class BucoSolveRequest(BucoModel):
    method: Literal["brute", "dp"] = "brute"


class VerifyIntractableRequest(BaseModel):
    n: int
    directed: bool = False
    budget: Optional[int] = None


class VerifyBucoRequest(BucoModel):
    directed: bool = False
    budget: Optional[int] = None


class VerifyCaiRequest(BaseModel):
    dimacs: str
    assignment: list[bool]


class VerifyUnweightedRequest(BaseModel):
    instance: InstanceModel
    budget: Optional[int] = None
