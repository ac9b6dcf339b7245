"""The compute service: one endpoint per CLI command.

All operations are pure, so the service is stateless and every response is a
deterministic function of the request body.  Errors split into two classes:
malformed requests (422, via pydantic or input parsing) and well-formed
requests the calculus cannot answer, such as a torsion coordinate system
(409).  The CLI maps these to exit codes 1 and 2.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from ..obstruction import (
    GradedCoefficients,
    UnsupportedSystemError,
    builtin_coefficients,
    coordinate_obstruction,
    format_group,
    parse_coefficients_text,
    parse_coordinate_text,
    pi0_factors,
    restriction_index,
    space_for_level,
)
from ..rings import poincare_ranks
from ..selftest import selftest_payload
from ..spaces import (
    BU1_RING,
    bott_pushforward,
    bsu_restriction_coefficient,
    bu6_generator_image,
)
from ..symmetric import BU_HOMOLOGY_RING, newton_polynomial, power_sum_s
from .models import (
    BottRequest,
    CommandResponse,
    CoefficientsSpec,
    IndexTableRequest,
    MapTableRequest,
    NewtonRequest,
    ObstructRequest,
    Pi0Request,
    PowerSumRequest,
    RanksRequest,
)

SCHEMA_VERSION = 1

app = FastAPI(
    title="bottlift",
    description="Symmetric-function and Bott-map calculus with lifting obstructions",
)


def envelope(command: str, inputs: dict, results: dict) -> CommandResponse:
    return CommandResponse(
        schema_version=SCHEMA_VERSION,
        command=command,
        inputs=inputs,
        results=results,
    )


def _resolve_coefficients(spec: CoefficientsSpec) -> GradedCoefficients:
    try:
        if spec.builtin is not None:
            return builtin_coefficients(spec.builtin)
        return parse_coefficients_text(spec.text)
    except UnsupportedSystemError:
        raise
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/newton")
def newton(req: NewtonRequest) -> CommandResponse:
    q = newton_polynomial(req.m)
    return envelope(
        "newton",
        req.model_dump(),
        {"ring": q.ring.name, "polynomial": str(q)},
    )


@app.post("/powersum")
def powersum(req: PowerSumRequest) -> CommandResponse:
    s = power_sum_s(req.m)
    return envelope(
        "powersum",
        req.model_dump(),
        {"ring": s.ring.name, "polynomial": str(s)},
    )


@app.post("/bott")
def bott(req: BottRequest) -> CommandResponse:
    image = bott_pushforward(BU_HOMOLOGY_RING.gen(f"b{req.m}"), req.iterate)
    return envelope(
        "bott",
        req.model_dump(),
        {"ring": image.ring.name, "polynomial": str(image)},
    )


@app.post("/bsu-map")
def bsu_map(req: MapTableRequest) -> CommandResponse:
    rows = []
    for m in range(1, req.max_m + 1):
        coeff = bsu_restriction_coefficient(m)
        rows.append(
            {
                "m": m,
                "source": f"c{m + 1}",
                "coefficient": coeff,
                "power": m,
                "image": str(BU1_RING.gen("x", exp=m, coeff=coeff)),
            }
        )
    return envelope("bsu-map", req.model_dump(), {"rows": rows})


@app.post("/bu6-map")
def bu6_map(req: MapTableRequest) -> CommandResponse:
    rows = []
    for m in range(1, req.max_m + 1):
        coeff, power = bu6_generator_image(m)
        rows.append(
            {
                "m": m,
                "source": f"y{m + 2}",
                "coefficient": coeff,
                "power": power,
                "image": str(BU1_RING.gen("x", exp=power, coeff=coeff)),
            }
        )
    return envelope("bu6-map", req.model_dump(), {"rows": rows})


@app.post("/ranks")
def ranks(req: RanksRequest) -> CommandResponse:
    space = space_for_level(req.n)
    rows = [
        {"degree": d, "rank": r} for d, r in poincare_ranks(space.ring, req.max_degree)
    ]
    return envelope(
        "ranks",
        req.model_dump(),
        {"space": space.name, "rows": rows},
    )


@app.post("/pi0")
def pi0(req: Pi0Request) -> CommandResponse:
    coeffs = _resolve_coefficients(req.coeffs)
    space = space_for_level(req.n)
    try:
        factors = pi0_factors(req.n, coeffs, req.max_degree)
    except UnsupportedSystemError as exc:
        raise HTTPException(status_code=409, detail=str(exc)) from exc
    rows = []
    for k, (rank, torsion) in factors:
        rows.append(
            {
                "k": k,
                "coefficient_degree": 2 * k,
                "cohomology_degree": req.n + 2 * k,
                "rank": rank,
                "torsion": list(torsion),
                "group": format_group((rank, torsion)),
            }
        )
    return envelope(
        "pi0",
        req.model_dump(),
        {"space": space.name, "coefficients": coeffs.name, "factors": rows},
    )


@app.post("/index-table")
def index_table(req: IndexTableRequest) -> CommandResponse:
    rows = [{"m": m, "index": restriction_index(req.n, m)} for m in range(1, req.max_m + 1)]
    return envelope("index-table", req.model_dump(), {"rows": rows})


@app.post("/obstruct")
def obstruct(req: ObstructRequest) -> CommandResponse:
    coeffs = _resolve_coefficients(req.coeffs)
    try:
        coord = parse_coordinate_text(coeffs, req.coordinate_text)
        report = coordinate_obstruction(coord, req.n)
    except UnsupportedSystemError as exc:
        raise HTTPException(status_code=409, detail=str(exc)) from exc
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    return envelope(
        "obstruct",
        req.model_dump(),
        {
            "coefficients": coeffs.name,
            "truncation": coord.truncation,
            "leading_m": coord.leading_degree(),
            "obstructed": report.has_obstruction(),
            "records": [
                {"m": r.m, "index": r.index, "verdict": r.verdict, "note": r.note}
                for r in report.records
            ],
        },
    )


@app.post("/selftest")
def selftest() -> CommandResponse:
    return envelope("selftest", {}, selftest_payload())
