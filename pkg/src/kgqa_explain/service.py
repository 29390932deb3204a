"""HTTP facade over the pipeline plus the survey instrument.

Endpoints: ask a question (with or without explanations), submit Likert
feedback on the four human-factor dimensions, and read aggregate
summaries. Feedback is persisted to an append-only JSON-lines log and
flushed before the request is acknowledged.
"""

from __future__ import annotations

import json
import os
import threading
import time
import uuid
from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .pipeline import PipelineConfig, answer_question, trace_to_dict

MAX_QUESTION_LENGTH = 1000

MODES = ("with_explanation", "without_explanation")
DIMENSIONS = ("justification", "education", "involvement", "acceptance")
LIKERT = (1, 2, 3, 4, 5)


class FeedbackLog:
    """Append-only JSON-lines store; writes are serialized and fsynced."""

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._lock = threading.Lock()

    def append(self, record: dict) -> str:
        record_id = uuid.uuid4().hex
        entry = dict(record, id=record_id, timestamp=time.time())
        line = json.dumps(entry, sort_keys=True)
        with self._lock:
            with open(self.path, "a", encoding="utf-8") as fh:
                fh.write(line + "\n")
                fh.flush()
                os.fsync(fh.fileno())
        return record_id

    def records(self) -> list[dict]:
        if not self.path.exists():
            return []
        out = []
        for line in self.path.read_text(encoding="utf-8").splitlines():
            if line.strip():
                out.append(json.loads(line))
        return out


def validate_feedback(body: dict) -> dict:
    if not isinstance(body, dict):
        raise ValueError("feedback body must be an object")
    session = body.get("session_id")
    question = body.get("question_id")
    mode = body.get("mode")
    ratings = body.get("ratings")
    if not session or not isinstance(session, str):
        raise ValueError("session_id is required")
    if not question or not isinstance(question, str):
        raise ValueError("question_id is required")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if not isinstance(ratings, dict):
        raise ValueError("ratings must be an object")
    missing = [d for d in DIMENSIONS if d not in ratings]
    if missing:
        raise ValueError(f"ratings missing dimensions: {missing}")
    extra = [d for d in ratings if d not in DIMENSIONS]
    if extra:
        raise ValueError(f"unknown rating dimensions: {extra}")
    clean = {}
    for dim in DIMENSIONS:
        value = ratings[dim]
        if not isinstance(value, int) or isinstance(value, bool) or value not in LIKERT:
            raise ValueError(f"rating {dim!r} must be an integer in 1..5")
        clean[dim] = value
    return {"session_id": session, "question_id": question, "mode": mode, "ratings": clean}


def summarize_feedback(records) -> dict:
    """Per dimension and mode: histogram over 1..5, count, and mean."""
    summary = {
        dim: {
            mode: {"histogram": [0, 0, 0, 0, 0], "count": 0, "mean": None}
            for mode in MODES
        }
        for dim in DIMENSIONS
    }
    for record in records:
        mode = record["mode"]
        for dim in DIMENSIONS:
            value = record["ratings"][dim]
            cell = summary[dim][mode]
            cell["histogram"][value - 1] += 1
            cell["count"] += 1
    for dim in DIMENSIONS:
        for mode in MODES:
            cell = summary[dim][mode]
            if cell["count"]:
                total = sum((i + 1) * n for i, n in enumerate(cell["histogram"]))
                cell["mean"] = total / cell["count"]
    return summary


def create_app(
    config: PipelineConfig | None,
    feedback_log: FeedbackLog | None = None,
    survey_questions: list[dict] | None = None,
    ui_dir: str | Path | None = None,
) -> FastAPI:
    app = FastAPI(title="kgqa-explain")
    survey_questions = survey_questions or []

    @app.post("/api/ask")
    def ask(body: dict):
        if config is None:
            raise HTTPException(status_code=503, detail="pipeline configuration not loaded")
        question = body.get("question")
        explain = bool(body.get("explain", True))
        if not isinstance(question, str) or not question.strip():
            raise HTTPException(status_code=400, detail="question must be a non-empty string")
        if len(question) > MAX_QUESTION_LENGTH:
            raise HTTPException(
                status_code=400, detail=f"question exceeds {MAX_QUESTION_LENGTH} characters"
            )
        trace = answer_question(question, config)
        return JSONResponse(
            trace_to_dict(trace, config.prefixes, include_explanations=explain)
        )

    @app.post("/api/feedback")
    def feedback(body: dict):
        if feedback_log is None:
            raise HTTPException(status_code=503, detail="feedback log not configured")
        try:
            record = validate_feedback(body)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        record_id = feedback_log.append(record)
        return {"id": record_id}

    @app.get("/api/survey/summary")
    def survey_summary():
        records = feedback_log.records() if feedback_log is not None else []
        return summarize_feedback(records)

    @app.get("/api/templates")
    def templates():
        if config is None:
            raise HTTPException(status_code=503, detail="pipeline configuration not loaded")
        return {
            "count": len(config.repo),
            "templates": [
                {
                    "id": t.id,
                    "task": t.task,
                    "class": t.outcome_class,
                    "arity": t.arity,
                    "variant": t.variant,
                    "pattern": t.pattern,
                }
                for t in config.repo.templates
            ],
        }

    @app.get("/api/questions")
    def questions():
        return {"questions": survey_questions}

    if ui_dir is not None and Path(ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app
