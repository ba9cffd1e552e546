"""HTTP surface: every operation of the package behind a small JSON API.

The CLI is a thin client of this service; by default it mounts the app
in-process, so the wire format here is the single source of truth for all
machine output.
"""
from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import construct
from .classify import classify_full, report_to_dict
from .covers import (
    DEFAULT_BUDGET,
    cover_to_dict,
    enumerate_basic_covers,
    indecomposable_2covers,
    norm,
)
from .errors import BudgetExceededError, ConsistencyError, GraphParseError
from .graph import Graph
from .suite import run_suite, suite_to_dict

app = FastAPI(
    title="covergraph",
    description="Classifies finite simple graphs by the structure of their "
    "basic k-covers: unmixedness, the domain property, and the square "
    "conditions.",
)


class GraphModel(BaseModel):
    n: int
    edges: list = Field(default_factory=list)

    @classmethod
    def from_graph(cls, g: Graph) -> "GraphModel":
        return cls(n=g.n, edges=[list(e) for e in g.sorted_edges()])

    def to_graph(self) -> Graph:
        return Graph.of(self.n, [tuple(e) for e in self.edges])


class ClassifyRequest(BaseModel):
    graph: GraphModel
    k_max: int = 3
    budget: int = DEFAULT_BUDGET
    counterexample_max_level: int = 0


class CoversRequest(BaseModel):
    graph: GraphModel
    k: int = 1
    indecomposable: bool = False
    budget: int = DEFAULT_BUDGET


class IdealRequest(BaseModel):
    graph: GraphModel
    power: int = 1
    budget: int = DEFAULT_BUDGET


class ConstructRequest(BaseModel):
    family: str | None = None
    n: int | None = None
    a: int | None = None
    b: int | None = None
    edge_probability: float = 0.5
    seed: int = 0
    base: GraphModel | None = None
    plus: bool = False
    prime: bool = False
    budget: int = DEFAULT_BUDGET


class SuiteRequest(BaseModel):
    max_n: int = 6
    seed: int = 0
    samples: int = 100
    budget: int = DEFAULT_BUDGET


def _error(status: int, kind: str, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=status,
        content={"error": {"type": kind, "message": message}},
    )


@app.exception_handler(GraphParseError)
async def _parse_error(request: Request, exc: GraphParseError):
    return _error(400, "input", str(exc))


@app.exception_handler(ValueError)
async def _value_error(request: Request, exc: ValueError):
    return _error(400, "input", str(exc))


@app.exception_handler(BudgetExceededError)
async def _budget_error(request: Request, exc: BudgetExceededError):
    return _error(400, "budget", str(exc))


@app.exception_handler(ConsistencyError)
async def _consistency_error(request: Request, exc: ConsistencyError):
    return _error(500, "consistency", str(exc))


@app.get("/health")
def health():
    return {"status": "ok"}


@app.post("/classify")
def classify(req: ClassifyRequest):
    report = classify_full(
        req.graph.to_graph(),
        k_max=req.k_max,
        budget=req.budget,
        counterexample_max_level=req.counterexample_max_level,
    )
    return report_to_dict(report)


@app.post("/covers")
def covers(req: CoversRequest):
    g = req.graph.to_graph()
    if req.indecomposable:
        if req.k != 2:
            raise ValueError("indecomposable covers are defined at level 2")
        result = indecomposable_2covers(g, req.budget)
    else:
        result = enumerate_basic_covers(g, req.k, req.budget)
    return {"k": result.k, "covers": [cover_to_dict(c) for c in result]}


@app.post("/ideal")
def ideal(req: IdealRequest):
    g = req.graph.to_graph()
    covers = enumerate_basic_covers(g, req.power, req.budget)
    degrees = sorted(norm(c) for c in covers)
    payload = {
        "power": req.power,
        "generators": [list(c.prices) for c in covers],
        "degrees": degrees,
        "single_degree": len(set(degrees)) <= 1,
    }
    if req.power == 1:
        payload["edge_generators"] = [list(e) for e in g.sorted_edges()]
    return payload


@app.post("/construct")
def construct_graph(req: ConstructRequest):
    if req.plus or req.prime:
        if req.base is None:
            raise ValueError("pendant constructions need a base graph")
        g = req.base.to_graph()
        if req.plus:
            result, _ = construct.pendant_all(g)
        else:
            result = construct.pendant_g01_isolated(g, req.budget)
        return GraphModel.from_graph(result)
    if req.family is None:
        raise ValueError("either a family or a pendant construction is required")
    if req.family == "cycle":
        result = construct.cycle(_need(req.n, "n"))
    elif req.family == "path":
        result = construct.path(_need(req.n, "n"))
    elif req.family == "complete":
        result = construct.complete(_need(req.n, "n"))
    elif req.family == "complete-bipartite":
        result = construct.complete_bipartite(_need(req.a, "a"), _need(req.b, "b"))
    elif req.family == "random":
        result = construct.random_graph(
            _need(req.n, "n"), req.edge_probability, req.seed
        )
    elif req.family == "random-bipartite":
        result = construct.random_bipartite(
            _need(req.a, "a"), _need(req.b, "b"), req.edge_probability, req.seed
        )
    else:
        raise ValueError(f"unknown family {req.family!r}")
    return GraphModel.from_graph(result)


def _need(value, name):
    if value is None:
        raise ValueError(f"family parameter {name!r} is required")
    return value


@app.post("/suite")
def suite(req: SuiteRequest):
    checks = run_suite(
        max_n=req.max_n, seed=req.seed, samples=req.samples, budget=req.budget
    )
    return suite_to_dict(checks)
