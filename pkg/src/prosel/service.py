"""HTTP selection service wrapping the core package.

Loads a built index once and serves selection queries over JSON, for
long-running deployments where many synthesis workers share one corpus.
Module-level ``app`` reads the index path from PSEL_INDEX; tests and the
CLI build apps with an explicit index or in-memory corpus via create_app.
"""

from __future__ import annotations

import os
from typing import Literal

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, ConfigDict, Field

from . import selection
from .corpus import Corpus, load_index
from .errors import ProselError
from .similarity import SimilarityMode
from .sweep import DEFAULT_GRID, max_drop_segment, sweep as run_sweep
from .syndist import distance_vector
from .trees import parse_tree, tokens

Mode = Literal["syntactic", "cwe", "combined"]


class QueryIn(BaseModel):
    model_config = ConfigDict(extra="forbid")

    id: str | None = None
    text: str | None = None
    tree: str | None = None
    cwe: list[float] | None = None

    def to_row(self) -> dict:
        row = {}
        for name in ("id", "text", "tree", "cwe"):
            value = getattr(self, name)
            if value is not None:
                row[name] = value
        return row


class DistancesRequest(BaseModel):
    tree: str


class DistancesResponse(BaseModel):
    tokens: list[str]
    distances: list[int]


class RunnerUp(BaseModel):
    id: str
    loss: float


class SelectionOut(BaseModel):
    query_id: str | None = None
    index: int | None = None
    chosen_id: str
    ls: float
    d: float
    loss: float
    runner_ups: list[RunnerUp]


class SelectRequest(BaseModel):
    query: QueryIn
    mode: Mode = "syntactic"
    top_k: int = 5


class ParagraphRequest(BaseModel):
    queries: list[QueryIn]
    mode: Mode = "syntactic"
    lsw: float = 0.9
    normalize_d: bool = True
    top_k: int = 5


class ParagraphResponse(BaseModel):
    results: list[SelectionOut]


class SweepRequest(BaseModel):
    paragraphs: list[list[QueryIn]]
    mode: Mode = "syntactic"
    grid: list[float] = Field(default_factory=lambda: list(DEFAULT_GRID))
    normalize_d: bool = True


class SweepPointOut(BaseModel):
    lsw: float
    mean_linguistic_distance: float
    mean_acoustic_distance: float
    transitions: int


class MaxDropOut(BaseModel):
    lsw_high: float
    lsw_low: float
    drop: float


class SweepResponse(BaseModel):
    points: list[SweepPointOut]
    max_drop: MaxDropOut | None


class CorpusInfo(BaseModel):
    records: int
    d_cwe: int
    d_ac: int
    projector: bool


def _selection_out(result: selection.SelectionResult, **extra) -> SelectionOut:
    return SelectionOut(
        chosen_id=result.chosen_id,
        ls=result.ls,
        d=result.d,
        loss=result.loss,
        runner_ups=[RunnerUp(id=i, loss=l) for i, l in result.runner_ups],
        **extra,
    )


def create_app(index_path: str | None = None, corpus: Corpus | None = None) -> FastAPI:
    app = FastAPI(title="prosel", version="0.1.0")
    if index_path is not None:
        corpus = load_index(index_path)
    app.state.corpus = corpus

    def need_corpus() -> Corpus:
        if app.state.corpus is None:
            raise HTTPException(status_code=503, detail="no corpus loaded")
        return app.state.corpus

    @app.exception_handler(ProselError)
    async def prosel_error(_request, err: ProselError):
        from fastapi.responses import JSONResponse

        return JSONResponse(status_code=400, content={"detail": str(err)})

    @app.get("/health")
    def health():
        loaded = app.state.corpus is not None
        return {"status": "ok", "corpus_loaded": loaded}

    @app.get("/corpus/info", response_model=CorpusInfo)
    def corpus_info():
        corpus = need_corpus()
        return CorpusInfo(
            records=len(corpus),
            d_cwe=corpus.d_cwe,
            d_ac=corpus.d_ac,
            projector=corpus.projector is not None,
        )

    @app.post("/distances", response_model=DistancesResponse)
    def distances(request: DistancesRequest):
        tree = parse_tree(request.tree)
        return DistancesResponse(
            tokens=tokens(tree), distances=distance_vector(tree)
        )

    @app.post("/select", response_model=SelectionOut)
    def select(request: SelectRequest):
        corpus = need_corpus()
        repr_ = selection.repr_from_query(request.query.to_row())
        result = selection.select_sentence(
            corpus, repr_, SimilarityMode(request.mode), top_k=request.top_k
        )
        return _selection_out(result, query_id=request.query.id)

    @app.post("/select-paragraph", response_model=ParagraphResponse)
    def select_paragraph(request: ParagraphRequest):
        corpus = need_corpus()
        if corpus.projector is None:
            raise HTTPException(
                status_code=400,
                detail="index has no projector; rebuild with >= 3 records",
            )
        cfg = selection.SelectionConfig(
            mode=SimilarityMode(request.mode),
            lsw=request.lsw,
            normalize_d=request.normalize_d,
            top_k=request.top_k,
        )
        reprs = [selection.repr_from_query(q.to_row()) for q in request.queries]
        results = selection.select_paragraph(
            corpus, reprs, cfg, corpus.projector
        )
        return ParagraphResponse(
            results=[
                _selection_out(result, query_id=query.id, index=i)
                for i, (query, result) in enumerate(zip(request.queries, results))
            ]
        )

    @app.post("/sweep", response_model=SweepResponse)
    def sweep(request: SweepRequest):
        corpus = need_corpus()
        cfg = selection.SelectionConfig(
            mode=SimilarityMode(request.mode),
            normalize_d=request.normalize_d,
        )
        reprs = [
            [selection.repr_from_query(q.to_row()) for q in paragraph]
            for paragraph in request.paragraphs
        ]
        points = run_sweep(corpus, reprs, cfg, request.grid)
        segment = max_drop_segment(points)
        return SweepResponse(
            points=[SweepPointOut(**p.to_dict()) for p in points],
            max_drop=None if segment is None else MaxDropOut(
                lsw_high=segment[0], lsw_low=segment[1], drop=segment[2]
            ),
        )

    return app


app = create_app(index_path=os.environ.get("PSEL_INDEX"))
