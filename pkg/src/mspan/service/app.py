"""HTTP service exposing generation, solving and verification."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..dimacs import parse_dimacs
from ..buco import buco_brute, buco_dp
from ..errors import MspanError
from ..extreme import certificate_to_dict, extreme_dichotomic, extreme_from_front
from ..generators import (
    buco_metadata_to_dict,
    cai_metadata_to_dict,
    gen_cai,
    gen_from_buco,
    gen_intractable,
    intractable_layout,
)
from ..objectives import Spanner, evaluate
from ..pareto import DEFAULT_BUDGET, enumerate_front
from ..verifiers import (
    report_to_dict,
    verify_buco_reduction,
    verify_cai,
    verify_intractable,
    verify_unweighted_bound,
)
from .schemas import (
    BucoSolveRequest,
    CertificateModel,
    EvalRequest,
    ExtremeRequest,
    FrontModel,
    GenerateFromBucoRequest,
    GenerateFromCnfRequest,
    GenerateIntractableRequest,
    GenerateResponse,
    InstanceModel,
    ParetoRequest,
    ReportModel,
    ValueVectorModel,
    VerifyBucoRequest,
    VerifyCaiRequest,
    VerifyIntractableRequest,
    VerifyUnweightedRequest,
)


def create_app() -> FastAPI:
    app = FastAPI(title="mspan", version=__version__)

    @app.exception_handler(MspanError)
    async def domain_error(request: Request, exc: MspanError) -> JSONResponse:
        payload = {"code": exc.code, "message": exc.message}
        issues = getattr(exc, "issues", None)
        if issues is not None:
            payload["errors"] = [{"code": i.code, "message": i.message} for i in issues]
        return JSONResponse(status_code=400, content=payload)

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/generate/intractable", response_model=GenerateResponse)
    def generate_intractable(req: GenerateIntractableRequest) -> GenerateResponse:
        g = gen_intractable(req.n, req.directed)
        return GenerateResponse(
            instance=InstanceModel.from_graph(g),
            metadata=intractable_layout(req.n, req.directed),
        )

    @app.post("/generate/from-buco", response_model=GenerateResponse)
    def generate_from_buco(req: GenerateFromBucoRequest) -> GenerateResponse:
        g, meta = gen_from_buco(req.to_instance(), req.directed)
        return GenerateResponse(
            instance=InstanceModel.from_graph(g),
            metadata=buco_metadata_to_dict(meta),
        )

    @app.post("/generate/from-cnf", response_model=GenerateResponse)
    def generate_from_cnf(req: GenerateFromCnfRequest) -> GenerateResponse:
        g, meta = gen_cai(parse_dimacs(req.dimacs))
        return GenerateResponse(
            instance=InstanceModel.from_graph(g),
            metadata=cai_metadata_to_dict(meta),
        )

    @app.post("/eval", response_model=ValueVectorModel)
    def eval_spanner(req: EvalRequest) -> ValueVectorModel:
        g = req.instance.to_graph()
        value = evaluate(g, Spanner(g, frozenset(req.spanner.edges)), req.mode)
        return ValueVectorModel.from_value(value)

    @app.post("/pareto", response_model=FrontModel, response_model_exclude_none=False)
    def pareto(req: ParetoRequest) -> FrontModel:
        front = enumerate_front(
            req.instance.to_graph(),
            req.budget if req.budget is not None else DEFAULT_BUDGET,
            jobs=req.jobs if req.jobs is not None else 1,
        )
        return FrontModel.from_front(front, include_witnesses=req.witnesses)

    @app.post("/extreme", response_model=list[CertificateModel])
    def extreme(req: ExtremeRequest) -> list[CertificateModel]:
        g = req.instance.to_graph()
        budget = req.budget if req.budget is not None else DEFAULT_BUDGET
        jobs = req.jobs if req.jobs is not None else 1
        if req.method == "hull":
            certs = extreme_from_front(enumerate_front(g, budget, jobs=jobs))
        else:
            certs = extreme_dichotomic(g, budget, jobs=jobs)
        return [CertificateModel.model_validate(certificate_to_dict(c)) for c in certs]

    @app.post("/buco/solve", response_model=FrontModel)
    def buco_solve(req: BucoSolveRequest) -> FrontModel:
        inst = req.to_instance()
        front = buco_brute(inst) if req.method == "brute" else buco_dp(inst)
        return FrontModel.from_front(front, include_witnesses=False)

    @app.post("/verify/intractable", response_model=ReportModel)
    def verify_intractable_route(req: VerifyIntractableRequest) -> ReportModel:
        budget = req.budget if req.budget is not None else DEFAULT_BUDGET
        report = verify_intractable(req.n, req.directed, budget)
        return ReportModel.model_validate(report_to_dict(report))

    @app.post("/verify/buco", response_model=ReportModel)
    def verify_buco_route(req: VerifyBucoRequest) -> ReportModel:
        budget = req.budget if req.budget is not None else DEFAULT_BUDGET
        report = verify_buco_reduction(req.to_instance(), req.directed, budget)
        return ReportModel.model_validate(report_to_dict(report))

    @app.post("/verify/cai", response_model=ReportModel)
    def verify_cai_route(req: VerifyCaiRequest) -> ReportModel:
        report = verify_cai(parse_dimacs(req.dimacs), req.assignment)
        return ReportModel.model_validate(report_to_dict(report))

    @app.post("/verify/unweighted", response_model=ReportModel)
    def verify_unweighted_route(req: VerifyUnweightedRequest) -> ReportModel:
        budget = req.budget if req.budget is not None else DEFAULT_BUDGET
        report = verify_unweighted_bound(req.instance.to_graph(), budget)
        return ReportModel.model_validate(report_to_dict(report))

    return app


app = create_app()
