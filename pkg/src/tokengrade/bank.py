"""On-disk formats: question files, bank directories, and the attempt log.

A question is one UTF-8 JSON document with exactly the fields
``{id, prompt, lexer, case_sensitive?, answers: [{text, descriptions?}]}``;
anything else is rejected by name. The attempt log is append-only
newline-delimited JSON, one graded attempt per line, RFC 3339 timestamps.
"""

from __future__ import annotations

import json
import threading
from pathlib import Path

from .grading import GradedAttempt, Question, QuestionError, ReferenceAnswer, make_question
from .lcs import Alignment
from .mistakes import Mistake, MistakeKind, MistakeReport, ValueCounts
from .tokens import Span

_QUESTION_FIELDS = {"id", "prompt", "lexer", "case_sensitive", "answers"}
_REQUIRED_QUESTION_FIELDS = {"id", "prompt", "lexer", "answers"}
_ANSWER_FIELDS = {"text", "descriptions"}


def question_from_dict(doc: object) -> Question:
    if not isinstance(doc, dict):
        raise QuestionError("question document must be a JSON object")
    for field in doc:
        if field not in _QUESTION_FIELDS:
            raise QuestionError(f"unknown field {field!r}")
    for field in _REQUIRED_QUESTION_FIELDS:
        if field not in doc:
            raise QuestionError(f"missing field {field!r}")
    if not isinstance(doc["id"], str) or not isinstance(doc["prompt"], str):
        raise QuestionError("fields 'id' and 'prompt' must be strings")
    if not isinstance(doc["lexer"], str):
        raise QuestionError("field 'lexer' must be a string")
    case_sensitive = doc.get("case_sensitive")
    if case_sensitive is not None and not isinstance(case_sensitive, bool):
        raise QuestionError("field 'case_sensitive' must be a boolean")
    if not isinstance(doc["answers"], list) or not doc["answers"]:
        raise QuestionError("field 'answers' must be a non-empty array")

    answers = []
    for i, entry in enumerate(doc["answers"]):
        if not isinstance(entry, dict):
            raise QuestionError(f"answers[{i}] must be an object")
        for field in entry:
            if field not in _ANSWER_FIELDS:
                raise QuestionError(f"answers[{i}]: unknown field {field!r}")
        if not isinstance(entry.get("text"), str):
            raise QuestionError(f"answers[{i}]: field 'text' must be a string")
        descriptions = entry.get("descriptions")
        if descriptions is not None:
            if not isinstance(descriptions, list) or not all(
                isinstance(d, str) for d in descriptions
            ):
                raise QuestionError(
                    f"answers[{i}]: field 'descriptions' must be an array of strings"
                )
            descriptions = tuple(descriptions)
        answers.append(ReferenceAnswer(text=entry["text"], descriptions=descriptions))

    return make_question(
        id=doc["id"],
        prompt=doc["prompt"],
        lexer=doc["lexer"],
        answers=answers,
        case_sensitive=case_sensitive,
    )


def question_to_dict(question: Question) -> dict:
    answers = []
    for answer in question.answers:
        entry: dict = {"text": answer.text}
        if answer.descriptions is not None:
            entry["descriptions"] = list(answer.descriptions)
        answers.append(entry)
    return {
        "id": question.id,
        "prompt": question.prompt,
        "lexer": question.lexer,
        "case_sensitive": question.policy.case_sensitive,
        "answers": answers,
    }


def load_question_file(path: str | Path) -> Question:
    path = Path(path)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as err:
        raise QuestionError(f"{path}: not valid JSON: {err}") from None
    try:
        return question_from_dict(doc)
    except QuestionError as err:
        raise QuestionError(f"{path}: {err}") from None


def load_bank_dir(path: str | Path) -> dict[str, Question]:
    """Load every *.json question in a directory, keyed by question id."""
    path = Path(path)
    if not path.is_dir():
        raise QuestionError(f"{path}: not a directory")
    bank: dict[str, Question] = {}
    for file in sorted(path.glob("*.json")):
        question = load_question_file(file)
        if question.id in bank:
            raise QuestionError(f"{file}: duplicate question id {question.id!r}")
        bank[question.id] = question
    return bank


# --- graded-attempt documents ---------------------------------------------


def _span_to_json(span: Span | None) -> list[int] | None:
    return None if span is None else [span.start, span.end]


def _span_from_json(value) -> Span | None:
    return None if value is None else Span(value[0], value[1])


def mistake_to_dict(mistake: Mistake) -> dict:
    return {
        "kind": mistake.kind.value,
        "value": mistake.value,
        "raw": mistake.raw,
        "span": _span_to_json(mistake.span),
        "response_index": mistake.response_index,
        "answer_index": mistake.answer_index,
    }


def mistake_from_dict(doc: dict) -> Mistake:
    return Mistake(
        kind=MistakeKind(doc["kind"]),
        value=doc["value"],
        raw=doc["raw"],
        span=_span_from_json(doc["span"]),
        response_index=doc["response_index"],
        answer_index=doc["answer_index"],
    )


def report_to_dict(report: MistakeReport) -> dict:
    return {
        "alignment": {
            "pairs": [list(p) for p in report.alignment.pairs],
            "answer_len": report.alignment.answer_len,
            "response_len": report.alignment.response_len,
        },
        "counts": [
            {
                "value": c.value,
                "answer": c.in_answer,
                "response": c.in_response,
                "aligned": c.aligned,
            }
            for c in report.counts
        ],
        "mistakes": [mistake_to_dict(m) for m in report.mistakes],
        "grade": report.grade,
    }


def report_from_dict(doc: dict) -> MistakeReport:
    alignment = Alignment(
        pairs=tuple((p[0], p[1]) for p in doc["alignment"]["pairs"]),
        answer_len=doc["alignment"]["answer_len"],
        response_len=doc["alignment"]["response_len"],
    )
    counts = tuple(
        ValueCounts(
            value=c["value"],
            in_answer=c["answer"],
            in_response=c["response"],
            aligned=c["aligned"],
        )
        for c in doc["counts"]
    )
    mistakes = tuple(mistake_from_dict(m) for m in doc["mistakes"])
    return MistakeReport(
        alignment=alignment, counts=counts, mistakes=mistakes, grade=doc["grade"]
    )


def attempt_to_dict(attempt: GradedAttempt) -> dict:
    return {
        "question_id": attempt.question_id,
        "response_text": attempt.response_text,
        "chosen_answer_index": attempt.chosen_answer_index,
        "grade": attempt.report.grade,
        "messages": list(attempt.messages),
        "report": report_to_dict(attempt.report),
        "timestamp": attempt.timestamp,
    }


def attempt_from_dict(doc: dict) -> GradedAttempt:
    return GradedAttempt(
        question_id=doc["question_id"],
        response_text=doc["response_text"],
        chosen_answer_index=doc["chosen_answer_index"],
        report=report_from_dict(doc["report"]),
        messages=tuple(doc["messages"]),
        timestamp=doc["timestamp"],
    )


class AttemptLog:
    """Append-only NDJSON log of graded attempts. One writer; each append is
    a single complete line, so concurrent readers never see a torn record."""

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._lock = threading.Lock()

    def append(self, attempt: GradedAttempt) -> None:
        line = json.dumps(attempt_to_dict(attempt), ensure_ascii=False)
        with self._lock:
            with open(self.path, "a", encoding="utf-8") as fh:
                fh.write(line + "\n")
                fh.flush()

    def read_all(self) -> list[GradedAttempt]:
        if not self.path.exists():
            return []
        attempts = []
        with open(self.path, encoding="utf-8") as fh:
            for line in fh:
                if line.strip():
                    attempts.append(attempt_from_dict(json.loads(line)))
        return attempts
