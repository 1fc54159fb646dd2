"""FastAPI application speaking the nll wire protocol.

Responses are serialized with a fixed key order (tokens, nll, model_id,
truncated) so identical requests against the same model produce
byte-identical bodies.  The model is read-only after startup; request
handling keeps no shared mutable state.
"""

from __future__ import annotations

import json

from fastapi import FastAPI, Response
from pydantic import BaseModel


class NllRequest(BaseModel):
    text: str


def _json_response(payload, status_code=200):
    body = json.dumps(payload, ensure_ascii=False)
    return Response(content=body, status_code=status_code,
                    media_type="application/json")


def create_app(model):
    """Build the app around one model instance (None = not loaded)."""
    app = FastAPI(title="nllbridge", docs_url=None, redoc_url=None)
    app.state.model = model

    @app.get("/healthz")
    def healthz():
        m = app.state.model
        if m is None:
            return _json_response({"status": "unavailable", "model_id": None},
                                  status_code=503)
        return _json_response({"status": "ok", "model_id": m.model_id})

    @app.post("/v1/nll")
    def nll(req: NllRequest):
        m = app.state.model
        if m is None:
            return _json_response({"error": "model not loaded"},
                                  status_code=503)
        if req.text == "":
            return _json_response({"error": "text must be non-empty"},
                                  status_code=400)
        result = m.score(req.text)
        return _json_response({
            "tokens": result.tokens,
            "nll": result.nll,
            "model_id": m.model_id,
            "truncated": result.truncated,
        })

    return app
