"""Request and response bodies for the service endpoints."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field, model_validator


class SynthSpec(BaseModel):
    """Either a recurrence (a + initial) or a basis expansion (bases + weights).

    Basis entries are (rho, theta, power) triples; weight entries are (b, c)
    pairs in the same order, with c = 0 required at boundary angles.
    """

    a: list[float] | None = None
    initial: list[float] | None = None
    bases: list[tuple[float, float, int]] | None = None
    weights: list[tuple[float, float]] | None = None

    @model_validator(mode="after")
    def _one_form(self):
        recurrence = self.a is not None or self.initial is not None
        expansion = self.bases is not None or self.weights is not None
        if recurrence == expansion:
            raise ValueError("give either a+initial or bases+weights, not both")
        if recurrence and (self.a is None or self.initial is None):
            raise ValueError("recurrence form needs both a and initial")
        if expansion and (self.bases is None or self.weights is None):
            raise ValueError("expansion form needs both bases and weights")
        if expansion and len(self.bases) != len(self.weights):
            raise ValueError("bases and weights must have equal length")
        return self


class SynthRequest(BaseModel):
    spec: SynthSpec
    count: int = Field(ge=1)


class SynthResponse(BaseModel):
    values: list[float]


class FitRequest(BaseModel):
    values: list[float] = Field(min_length=1)
    order: int = Field(ge=1)
    method: Literal["covariance", "autocorrelation"] = "covariance"


class ConstructRequest(BaseModel):
    values: list[float] = Field(min_length=1)
    method: Literal["dct", "diff"]
    order: int = Field(ge=1)


class ExperimentRequest(BaseModel):
    kind: Literal["refine", "order-sweep"]
    function: str
    coefficients: list[float] | None = None
    x_lo: float
    x_hi: float
    order: int | None = Field(default=None, ge=1)
    n_values: list[int] | None = None
    n: int | None = Field(default=None, ge=2)
    p_values: list[int] | None = None

    @model_validator(mode="after")
    def _kind_fields(self):
        if self.kind == "refine":
            if self.order is None or not self.n_values:
                raise ValueError("refine needs `order` and a nonempty `n_values`")
        else:
            if self.n is None or not self.p_values:
                raise ValueError("order-sweep needs `n` and a nonempty `p_values`")
        return self


class BasisOut(BaseModel):
    rho: float
    theta: float
    power: int
    b: float
    c: float


class ReportResponse(BaseModel):
    """Mirrors the report document; field order matches the published schema."""

    schema_version: str
    command: str
    inputs: dict
    coefficients: list[float] | None = None
    initial: list[float] | None = None
    bases: list[BasisOut] | None = None
    mse: float | None = None
    bound: float | None = None
    diagnostics: dict | None = None
    tables: list[dict] | None = None


class HealthResponse(BaseModel):
    status: str
    version: str
