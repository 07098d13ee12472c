"""HTTP service exposing the same reports as the CLI.

Run with: uvicorn pcflag.api:app
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import reports
from .errors import PCFlagError

app = FastAPI(
    title="pcflag",
    description="Exact invariants of p-adic reflection groups and flag varieties",
    version="0.1.0",
)


class GroupRequest(BaseModel):
    group: str = Field(description="catalog name or path to a group file")
    prime: int
    precision: int | None = None


class FlagRequest(GroupRequest):
    subset: list[int] = Field(
        default_factory=list,
        description="1-based indices into the minimal generating reflections",
    )


class CentralizerRequest(GroupRequest):
    reflection: int = Field(description="index into the group's reflection list")


class SplittingRequest(BaseModel):
    prime: int
    l: int
    degree_bound: int | None = None
    precision: int | None = None


class CatalogEntryModel(BaseModel):
    name: str
    description: str


class CatalogResponse(BaseModel):
    entries: list[CatalogEntryModel]


class GroupInfoResponse(BaseModel):
    name: str
    prime: int
    conductor: int
    order: int
    reflections: int
    rank: int
    degrees: list[int]
    dimension: int
    rPrime: int
    kappa: int
    l: int


class FlagResponse(BaseModel):
    name: str
    prime: int
    subset: list[int]
    poincare: list[int]
    euler: int
    topDegree: int


class AdjointResponse(BaseModel):
    name: str
    prime: int
    k: int
    kappa: int
    dim: int
    topRank: int
    euler: int
    page: list[list[int]]
    note: str
    verdict: str
    ranks: dict[str, int] | None = None


class SplittingResponse(BaseModel):
    p: int
    l: int
    precision: int
    degreeBound: int
    zeta: int
    bgResidues: list[int]
    umkehrResidues: list[int]
    bnDegrees: list[int]
    thomDegrees: list[int]
    checksPassed: list[str]
    checksFailed: list[str]
    ok: bool
    framingNote: str | None = None


class CentralizerResponse(BaseModel):
    name: str
    prime: int
    reflection: int
    elementIndex: int
    order: int
    weylDegrees: list[int]
    dimCentralizer: int
    rankOneQuotient: bool
    dimGroup: int


class EmbedResponse(BaseModel):
    name: str
    prime: int
    precision: int
    modulus: list[int]
    residueDegree: int
    matrices: list[list[list[int]]]


def _guard(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except PCFlagError as exc:
        raise HTTPException(
            status_code=400, detail={"error": exc.name, "message": str(exc)}
        )


@app.get("/catalog", response_model=CatalogResponse)
def get_catalog():
    return reports.catalog_report()


@app.post("/group/info", response_model=GroupInfoResponse)
def group_info(req: GroupRequest):
    return _guard(reports.group_info_report, req.group, req.prime, req.precision)


@app.post("/flag/poincare", response_model=FlagResponse)
def flag_poincare(req: FlagRequest):
    subset = [i - 1 for i in req.subset]
    return _guard(reports.flag_report, req.group, req.prime, subset, req.precision)


@app.post("/adjoint", response_model=AdjointResponse)
def adjoint(req: GroupRequest):
    return _guard(reports.adjoint_report, req.group, req.prime, req.precision)


@app.post("/splitting/verify", response_model=SplittingResponse)
def splitting_verify(req: SplittingRequest):
    return _guard(
        reports.splitting_report, req.prime, req.l, req.degree_bound, req.precision
    )


@app.post("/centralizer", response_model=CentralizerResponse)
def centralizer(req: CentralizerRequest):
    return _guard(
        reports.centralizer_report, req.group, req.prime, req.reflection, req.precision
    )


@app.post("/embed", response_model=EmbedResponse)
def embed(req: GroupRequest):
    return _guard(reports.embed_report, req.group, req.prime, req.precision)
