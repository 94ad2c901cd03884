"""FastAPI service exposing the two models and their bijections.

Every operation is a pure request/response computation, so the endpoints
are POST handlers over small pydantic payloads.  The CLI is a thin client
of this app; batch verification jobs (roundtrip, verify) are also wired
here so remote and in-process callers share one code path.
"""

from __future__ import annotations

from typing import Literal, Optional

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import verifiers
from .alcove import GuardExceeded, NotAdmissible, enumerate_admissible, fill, sfill
from .chains import ChainError, lambda_chain, validate_chain
from .inverse import invert
from .qbg import build_qbg
from .roots import LieType, RankError, RootError, Weight
from .tableaux import (
    ColumnError,
    NotInModelImage,
    enumerate_tensor,
)

app = FastAPI(title="krmodels", version="0.1.0")

_DOMAIN_ERRORS = (
    RankError,
    RootError,
    ChainError,
    ColumnError,
    NotInModelImage,
    NotAdmissible,
    GuardExceeded,
    ValueError,
)


async def _domain_error_handler(request: Request, exc: Exception):
    return JSONResponse(status_code=422, content={"detail": str(exc)})


for _err in _DOMAIN_ERRORS:
    app.add_exception_handler(_err, _domain_error_handler)


class JobBase(BaseModel):
    family: Literal["A", "B", "C", "D"]
    rank: int = Field(ge=2)
    shape: list[int] = Field(default_factory=list)

    def lie_type(self) -> LieType:
        return LieType(self.family, self.rank)

    def weight(self) -> Weight:
        return Weight(self.lie_type(), self.shape)


class ChainResponse(BaseModel):
    text: str
    roots: list[dict]
    segments: list[dict]
    length: int
    valid: bool
    reason: Optional[str] = None


@app.post("/chain", response_model=ChainResponse)
def chain_endpoint(job: JobBase) -> ChainResponse:
    lt = job.lie_type()
    chain = lambda_chain(lt, job.weight())
    verdict = validate_chain(lt, job.weight(), list(chain.entries))
    payload = chain.to_json()
    return ChainResponse(
        text=chain.to_text(),
        roots=payload["roots"],
        segments=payload["segments"],
        length=len(chain),
        valid=verdict.ok,
        reason=verdict.reason,
    )


class QbgRequest(BaseModel):
    family: Literal["A", "B", "C", "D"]
    rank: int = Field(ge=2)
    format: Literal["dot", "json"] = "json"
    guard: int = 100_000


class QbgResponse(BaseModel):
    vertices: int
    edges: int
    dot: Optional[str] = None
    graph: Optional[dict] = None


@app.post("/qbg", response_model=QbgResponse)
def qbg_endpoint(req: QbgRequest) -> QbgResponse:
    graph = build_qbg(LieType(req.family, req.rank), guard=req.guard)
    return QbgResponse(
        vertices=len(graph.vertices),
        edges=len(graph.edges),
        dot=graph.to_dot() if req.format == "dot" else None,
        graph=graph.to_json() if req.format == "json" else None,
    )


class EnumerateRequest(JobBase):
    model: Literal["alcove", "tableau"] = "alcove"
    guard_max_m: int = 26


class EnumerateResponse(BaseModel):
    count: int
    elements: list[dict]


@app.post("/enumerate", response_model=EnumerateResponse)
def enumerate_endpoint(req: EnumerateRequest) -> EnumerateResponse:
    lt = req.lie_type()
    weight = req.weight()
    if req.model == "alcove":
        chain = lambda_chain(lt, weight)
        elements = [
            {
                "J": list(J),
                "fill": fill(chain, J).to_json(),
                "sfill": sfill(chain, J).to_json(),
            }
            for J in enumerate_admissible(chain, req.guard_max_m)
        ]
    else:
        elements = [
            {"columns": [list(c) for c in b]}
            for b in enumerate_tensor(lt, weight.conjugate)
        ]
    return EnumerateResponse(count=len(elements), elements=elements)


class MapRequest(JobBase):
    positions: list[int]


class MapResponse(BaseModel):
    fill: list[list[int]]
    sfill: list[list[int]]
    fill_text: str
    sfill_text: str


@app.post("/map", response_model=MapResponse)
def map_endpoint(req: MapRequest) -> MapResponse:
    chain = lambda_chain(req.lie_type(), req.weight())
    filled = fill(chain, req.positions)
    sorted_fill = sfill(chain, req.positions)
    return MapResponse(
        fill=filled.to_json(),
        sfill=sorted_fill.to_json(),
        fill_text=filled.to_text(),
        sfill_text=sorted_fill.to_text(),
    )


class InvertRequest(JobBase):
    element: list[list[int]]
    trace: bool = False


class InvertResponse(BaseModel):
    positions: list[int]
    roots: list[dict]
    trace: Optional[list[dict]] = None


@app.post("/invert", response_model=InvertResponse)
def invert_endpoint(req: InvertRequest) -> InvertResponse:
    folding = invert(req.lie_type(), req.weight(), req.element)
    return InvertResponse(
        positions=list(folding.positions),
        roots=[r.to_json() for r in folding.roots],
        trace=[s.to_json() for s in folding.trace] if req.trace else None,
    )


class VerifyRequest(BaseModel):
    family: Literal["A", "B", "C", "D"]
    rank: int = Field(ge=2)
    checks: list[Literal["qbg", "blockoff"]] = Field(default_factory=lambda: ["qbg"])


class VerifyResponse(BaseModel):
    passed: bool
    details: list[str]


@app.post("/verify", response_model=VerifyResponse)
def verify_endpoint(req: VerifyRequest) -> VerifyResponse:
    lt = LieType(req.family, req.rank)
    passed = True
    details: list[str] = []
    for check in req.checks:
        if check == "qbg":
            result = verifiers.check_qbg_criteria(lt)
        else:
            result = verifiers.check_block_off(lt)
        passed = passed and result.passed
        details.extend(result.details)
    return VerifyResponse(passed=passed, details=details)


class RoundtripRequest(JobBase):
    guard_max_m: int = 26


class RoundtripResponse(BaseModel):
    alcove_count: int
    tableau_count: int
    counts_match: bool
    images_match: bool
    invert_after_sfill: bool
    sfill_after_invert: bool
    passed: bool
    details: list[str]


@app.post("/roundtrip", response_model=RoundtripResponse)
def roundtrip_endpoint(req: RoundtripRequest) -> RoundtripResponse:
    report = verifiers.roundtrip_report(
        req.lie_type(), req.weight(), guard_max_m=req.guard_max_m
    )
    return RoundtripResponse(**report.to_json())


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}
