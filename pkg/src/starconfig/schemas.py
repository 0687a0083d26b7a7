"""Pydantic request and response models for the service surface."""

from __future__ import annotations

from pydantic import BaseModel, Field


class ParamsRequest(BaseModel):
    s: int = Field(..., ge=2, description="number of variables / rows")
    b: int = Field(..., ge=1, description="multiplicity cap per variable")
    a: int = Field(..., ge=1, description="total fold degree")
    form_degree: int = Field(1, ge=1, description="degree of the underlying forms")


class SymbolicRequest(ParamsRequest):
    m: int = Field(1, ge=1, description="symbolic power order")
    oracle_check: bool = Field(
        False, description="also recompute via the localization definition and compare"
    )


class BettiRequest(ParamsRequest):
    m: int = Field(1, ge=1)
    methods: list[str] = Field(
        default=["formula", "cone"],
        description="any of: formula, cone, homology",
    )
    char: int = Field(2, description="field characteristic for the homology method")


class LinquotRequest(ParamsRequest):
    m: int = Field(1, ge=1)


class DualRequest(ParamsRequest):
    m: int = Field(1, ge=1)
    verify_route: bool = Field(
        False, description="also compute the dual through polarization and compare"
    )


class CertifyRequest(ParamsRequest):
    m: int = Field(1, ge=1)


class ContainmentRequest(ParamsRequest):
    k: int = Field(1, ge=1)
    l: int = Field(1, ge=1)
    m: int = Field(1, ge=1)
    n_max: int = Field(0, ge=0, description="if positive, include the alpha profile up to n_max")


class SweepRequest(BaseModel):
    s_values: list[int] = Field(..., description="row counts to sweep")
    b_values: list[int] = Field(default=[2, 3])
    l_max: int = Field(3, ge=1)
    m_max: int = Field(3, ge=1)
    strict_only: bool = Field(True, description="keep only packs with c0 < h")
    timings: bool = Field(False, description="fill the runtime column (non-reproducible)")


class ExportCasRequest(ParamsRequest):
    m: int = Field(1, ge=1)
    what: str = Field(
        "fold",
        description="which ideal to export: fold, symbolic, or dual",
    )


class HealthResponse(BaseModel):
    status: str
    version: str


class ContainmentResponse(BaseModel):
    holds: bool
    lhs_order: int
    mm_power: int
    generators_checked: int
    failures: list[list[int]]
    mu_bound: bool
    order_bound: bool
    profile: dict | None = None
