"""REST webhook channel.

Wire contract: ``POST /webhooks/rest/webhook`` takes ``{"sender": str,
"message": str}`` and answers a JSON array of ``{"recipient_id", "text"
[, "media"]}`` covering the whole turn. ``GET /health`` reports the model
fingerprint. Malformed bodies get a 400; internal failures a 500 with an
error body; a hard cap keeps requests from hanging.
"""

from __future__ import annotations

import asyncio
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from ..core.engine import DialogueEngine
from .wake import DEFAULT_WAKE_WORD, WakeState

WEBHOOK_PATH = "/webhooks/rest/webhook"
REQUEST_CAP_S = 30.0


def create_app(
    engine: DialogueEngine,
    wake_word: str = DEFAULT_WAKE_WORD,
    console_dir: str | Path | None = None,
) -> FastAPI:
    app = FastAPI(title="vehicle-assistant", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    gate = WakeState(engine, wake_word)

    @app.post(WEBHOOK_PATH)
    async def webhook(request: Request):
        try:
            payload = await request.json()
        except Exception:
            return JSONResponse({"error": "body must be valid JSON"}, status_code=400)
        if not isinstance(payload, dict):
            return JSONResponse({"error": "body must be a JSON object"}, status_code=400)
        sender = payload.get("sender")
        message = payload.get("message")
        if not isinstance(sender, str) or not sender:
            return JSONResponse({"error": "missing or empty 'sender'"}, status_code=400)
        if not isinstance(message, str):
            return JSONResponse({"error": "missing 'message'"}, status_code=400)
        loop = asyncio.get_running_loop()
        try:
            responses = await asyncio.wait_for(
                loop.run_in_executor(None, gate.accept, sender, message), timeout=REQUEST_CAP_S
            )
        except asyncio.TimeoutError:
            return JSONResponse({"error": "turn processing timed out"}, status_code=500)
        except Exception as exc:  # never a hung or bodyless failure
            return JSONResponse({"error": f"internal error: {exc}"}, status_code=500)
        return [r.to_dict() for r in responses]

    @app.get("/health")
    def health():
        return {"status": "ok", "model_fingerprint": engine.model.fingerprint()}

    if console_dir is not None and Path(console_dir).is_dir():
        app.mount("/console", StaticFiles(directory=str(console_dir), html=True), name="console")

    return app
