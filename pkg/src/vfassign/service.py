"""HTTP service exposing the checker.

Every endpoint is a thin wrapper over the library; the /check response
carries both the structured report and the rendered text so clients can
print exactly what a local run would print.
"""

from __future__ import annotations

from fastapi import FastAPI
from fastapi.responses import JSONResponse, PlainTextResponse
from pydantic import BaseModel

from .corpus import render_corpus, run_corpus
from .errors import InconsistencyError, InvalidInputError
from .expressions import parse_construction
from .models import (CheckReport, CorpusReport, PolytopeDocument,
                     SelfDualModel, spec_to_document)
from .runner import run_check


class CheckRequest(BaseModel):
    expression: str | None = None
    document: PolytopeDocument | None = None
    incident: bool = False
    oracle: bool = False
    selfdual: bool = False
    with_dot: bool = False


class CheckResponse(BaseModel):
    report: CheckReport
    text: str
    dot: str | None
    exit_code: int


class ConstructRequest(BaseModel):
    expression: str


class CorpusResponse(BaseModel):
    report: CorpusReport
    text: str
    csv: str
    exit_code: int


def _source(request: CheckRequest) -> str | PolytopeDocument:
    if (request.expression is None) == (request.document is None):
        raise InvalidInputError(
            "provide exactly one of 'expression' or 'document'")
    if request.expression is not None:
        return request.expression
    return request.document


def create_app() -> FastAPI:
    app = FastAPI(title="vertex-facet assignment checker")

    @app.exception_handler(InvalidInputError)
    async def _invalid_input(request, exc):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.exception_handler(InconsistencyError)
    async def _inconsistency(request, exc):
        return JSONResponse(status_code=500, content={"detail": str(exc)})

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/check", response_model=CheckResponse)
    def check(request: CheckRequest) -> CheckResponse:
        result = run_check(_source(request), incident=request.incident,
                           oracle=request.oracle, selfdual=request.selfdual,
                           with_dot=request.with_dot)
        return CheckResponse(report=result.report, text=result.text,
                             dot=result.dot, exit_code=result.exit_code)

    @app.post("/construct", response_model=PolytopeDocument)
    def construct(request: ConstructRequest) -> PolytopeDocument:
        return spec_to_document(parse_construction(request.expression))

    @app.post("/dot", response_class=PlainTextResponse)
    def dot(request: CheckRequest) -> str:
        result = run_check(_source(request), incident=request.incident,
                           with_dot=True)
        return result.dot

    @app.get("/corpus", response_model=CorpusResponse)
    def corpus() -> CorpusResponse:
        report = run_corpus()
        return CorpusResponse(report=report,
                              text=render_corpus(report.rows),
                              csv=render_corpus(report.rows, as_csv=True),
                              exit_code=report.exit_code)

    @app.post("/selfdual", response_model=SelfDualModel)
    def selfdual(request: CheckRequest) -> SelfDualModel:
        result = run_check(_source(request), selfdual=True)
        return result.report.self_dual

    return app


app = create_app()
