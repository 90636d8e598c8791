"""FastAPI application exposing every table the engine computes.

All endpoints are GET and side-effect free; responses are
deterministic functions of the query parameters.
"""

from __future__ import annotations

from typing import Literal, Optional

from fastapi import FastAPI, HTTPException, Query

from .. import __version__, payloads
from . import schemas


def create_app() -> FastAPI:
    app = FastAPI(
        title="prymal",
        version=__version__,
        description="Exact-arithmetic verification engine: line "
                    "configurations, pairing tables, pushforward tables, "
                    "Hilbert polynomials, and Hodge-number machinery, all "
                    "over the rationals with zero tolerance.",
    )

    @app.get("/api/health", response_model=schemas.HealthResponse)
    def health():
        return payloads.health_payload()

    @app.get("/api/lines", response_model=schemas.LinesResponse)
    def lines():
        return payloads.lines_payload()

    @app.get("/api/pairings", response_model=schemas.PairingsResponse)
    def pairings(variant: Literal["surfaces", "curves"] = "surfaces"):
        return payloads.pairings_payload(variant)

    @app.get("/api/hodge", response_model=schemas.HodgeResponse)
    def hodge(g: int = Query(5, ge=2, le=payloads.HODGE_MAX_GENUS)):
        return payloads.hodge_payload(g)

    @app.get("/api/hilbert", response_model=schemas.HilbertResponse,
             response_model_exclude_none=True)
    def hilbert(which: Literal["S", "V", "W"] = "V"):
        return payloads.hilbert_payload(which)

    @app.get("/api/pushforward", response_model=schemas.PushforwardResponse)
    def pushforward(
            g: int = Query(6, ge=1, le=payloads.PUSHFORWARD_MAX_GENUS),
            d: int = Query(6, ge=1, le=payloads.PUSHFORWARD_MAX_DEGREE)):
        return payloads.pushforward_payload(g, d)

    @app.get("/api/verify", response_model=schemas.VerifyResponse)
    def verify(only: Optional[str] = None):
        names = [s for s in only.split(",") if s] if only else None
        flags = {"only": only} if only else {}
        try:
            return payloads.verify_payload(names, flags=flags)
        except KeyError as exc:
            raise HTTPException(status_code=422, detail=str(exc.args[0]))

    return app


app = create_app()
