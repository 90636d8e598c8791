"""Pydantic response models for the HTTP service.

These mirror the payload dicts from :mod:`prymal.payloads` exactly, so
a response body serialized with sorted keys is byte-identical to the
CLI's local JSON output.
"""

from __future__ import annotations

from typing import Dict, Generic, List, Literal, Optional, TypeVar

from pydantic import BaseModel, ConfigDict, Field

T = TypeVar("T")


class Tagged(BaseModel, Generic[T]):
    """A value together with its provenance tag."""

    provenance: Literal["golden", "oracle", "identity", "derived"]
    value: T


class HealthResponse(BaseModel):
    status: Literal["ok"]
    version: str


class LineEntry(BaseModel):
    coordinates: List[int]
    label: str


class LineCounts(BaseModel):
    lines: int
    roots: int
    sixers: int
    tritangent_triples: int
    weyl_order: int


class TransitivityBody(BaseModel):
    on_lines: bool
    on_sixers: bool


class LinesResponse(BaseModel):
    counts: Tagged[LineCounts]
    lines: Tagged[List[LineEntry]]
    sixers: Tagged[List[List[str]]]
    transitive: Tagged[TransitivityBody]
    tritangent_triples: Tagged[List[List[str]]]


class AffineFit(BaseModel):
    base: str
    slope: str


class DeltaGram(BaseModel):
    determinant: str
    entries: List[List[int]]
    generators: List[str]
    isometric_to_e6_scaled: bool
    scale: int


class PairingsResponse(BaseModel):
    affine_fit: Tagged[AffineFit]
    delta_gram: Tagged[DeltaGram]
    labels: List[str]
    matrix: Tagged[List[List[str]]]
    self_value: Tagged[str]
    triple_total: Tagged[str]
    variant: Literal["surfaces", "curves"]


class ChiQuotients(BaseModel):
    abelian: str
    theta: str


class Ranks(BaseModel):
    k: int
    k_minus: int
    k_plus: int


class HodgeResponse(BaseModel):
    chi_quotients: Tagged[ChiQuotients]
    chi_theta: Tagged[str]
    g: int
    hodge_K: Tagged[List[int]]
    hodge_K_minus: Tagged[List[int]]
    hodge_K_plus: Tagged[List[int]]
    ranks: Tagged[Ranks]


class PolyBody(BaseModel):
    coefficients_ascending: List[str]
    text: str


class HilbertResponse(BaseModel):
    chi_nPhi: Optional[Tagged[PolyBody]] = None
    hilbert: Tagged[PolyBody]
    plane_restriction: Optional[Tagged[List[str]]] = None
    self_intersection: Optional[Tagged[str]] = None
    two_route_agreement: Optional[Tagged[bool]] = None
    which: Literal["S", "V", "W"]


class PushforwardEntry(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    class_: str = Field(alias="class")
    coefficients: Dict[str, str]


class PushforwardResponse(BaseModel):
    d: int
    entries: Dict[str, Tagged[PushforwardEntry]]
    g: int


class CheckBody(BaseModel):
    computed: str
    expected: str
    name: str
    provenance: Literal["golden", "oracle", "identity", "derived"]
    status: Literal["pass", "fail"]
    suite: str


class CheckCounts(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    fail: int
    pass_: int = Field(alias="pass")


class VerifyResponse(BaseModel):
    checks: List[CheckBody]
    command: str
    counts: CheckCounts
    flags: Dict[str, str]
    passed: bool
