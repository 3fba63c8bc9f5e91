"""HTTP API over the question bank and grading engine.

Routes:
    GET  /api/health                         -> {status, questions}
    GET  /api/questions                      -> [{id, prompt, lexer}]
    POST /api/questions/{id}/attempts        -> {grade, messages, mistakes,
                                                 chosen_answer_index}

Reference answers and their descriptions are never serialized; students only
ever see rendered mistake messages. The bank is loaded and validated before
the app exists, so a listening service always has a consistent bank.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .bank import AttemptLog, load_bank_dir
from .grading import Question, evaluate
from .lexers import LexError
from .mistakes import Mistake


def _mistake_to_wire(mistake: Mistake) -> dict:
    doc = {"kind": mistake.kind.value, "value": mistake.value}
    if mistake.span is not None:
        doc["span"] = [mistake.span.start, mistake.span.end]
    return doc


def create_app(
    bank_dir: str | None = None,
    *,
    questions: dict[str, Question] | None = None,
    log_path: str | None = None,
    ui_dir: str | None = None,
    cors_origins: tuple[str, ...] = (),
) -> FastAPI:
    """Build the service app. The bank comes from ``bank_dir`` or directly
    from ``questions`` (tests); loading errors propagate before startup."""
    if questions is None:
        if bank_dir is None:
            raise ValueError("either bank_dir or questions is required")
        questions = load_bank_dir(bank_dir)
    log = AttemptLog(log_path) if log_path else None

    app = FastAPI(title="tokengrade", docs_url=None, redoc_url=None)

    if cors_origins:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(
            CORSMiddleware,
            allow_origins=list(cors_origins),
            allow_methods=["GET", "POST"],
            allow_headers=["Content-Type"],
        )

    @app.get("/api/health")
    def health():
        return {"status": "ok", "questions": len(questions)}

    @app.get("/api/questions")
    def list_questions():
        return [
            {"id": q.id, "prompt": q.prompt, "lexer": q.lexer}
            for q in sorted(questions.values(), key=lambda q: q.id)
        ]

    @app.post("/api/questions/{question_id}/attempts")
    async def submit_attempt(question_id: str, request: Request):
        question = questions.get(question_id)
        if question is None:
            return JSONResponse(
                {"error": f"unknown question id {question_id!r}"}, status_code=404
            )
        try:
            body = await request.json()
        except Exception:
            return JSONResponse({"error": "body must be valid JSON"}, status_code=400)
        if not isinstance(body, dict) or not isinstance(body.get("response"), str):
            return JSONResponse(
                {"error": 'body must be {"response": <string>}'}, status_code=400
            )
        try:
            attempt = evaluate(question, body["response"])
        except LexError as err:
            return JSONResponse(
                {"error": err.message, "position": err.position}, status_code=422
            )
        if log is not None:
            log.append(attempt)
        return {
            "grade": attempt.report.grade,
            "messages": list(attempt.messages),
            "mistakes": [_mistake_to_wire(m) for m in attempt.report.mistakes],
            "chosen_answer_index": attempt.chosen_answer_index,
        }

    if ui_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
