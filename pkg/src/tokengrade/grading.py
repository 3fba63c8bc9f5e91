"""Question model, grading, best-answer selection, and message rendering.

A question carries one or more teacher-entered reference answers. Each answer
may attach a grammatical description to every one of its tokens ("return
value type" for ``void``); misplaced and missing messages then name the
token's role instead of its text, which pushes the student to think about the
grammar rather than pattern-match the answer. Extra tokens can't have been
described in advance, so their message always quotes the literal text.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from datetime import datetime, timezone

from .lcs import lcs_align
from .lexers import default_policy, tokenize
from .mistakes import MistakeKind, MistakeReport, classify
from .tokens import ComparisonPolicy, TokenSequence

# Central templates so a future localization pass has one place to touch.
MSG_MISPLACED = "{name} is misplaced"
MSG_MISSING = "{name} is missing"
MSG_EXTRA = 'there is extra "{token}"'


class QuestionError(ValueError):
    """A question definition violates the schema or its invariants."""


@dataclass(frozen=True)
class ReferenceAnswer:
    """One correct answer; ``descriptions`` (if given) has exactly one entry
    per token of the lexed answer text."""

    text: str
    descriptions: tuple[str, ...] | None = None


@dataclass(frozen=True)
class Question:
    id: str
    prompt: str
    lexer: str
    policy: ComparisonPolicy
    answers: tuple[ReferenceAnswer, ...]


@dataclass(frozen=True)
class GradedAttempt:
    question_id: str
    response_text: str
    chosen_answer_index: int
    report: MistakeReport
    messages: tuple[str, ...]
    timestamp: str


def make_question(
    id: str,
    prompt: str,
    lexer: str,
    answers: tuple[ReferenceAnswer, ...] | list[ReferenceAnswer],
    case_sensitive: bool | None = None,
) -> Question:
    """Build and validate a Question; the policy defaults to the lexer's."""
    policy = (
        default_policy(lexer)
        if case_sensitive is None
        else ComparisonPolicy(case_sensitive=case_sensitive)
    )
    question = Question(
        id=id, prompt=prompt, lexer=lexer, policy=policy, answers=tuple(answers)
    )
    validate_question(question)
    return question


def validate_question(question: Question) -> None:
    """Check the question invariants; raises QuestionError on violation."""
    if not question.id:
        raise QuestionError("question id must be non-empty")
    if not question.answers:
        raise QuestionError(f"question {question.id!r}: answers must be non-empty")
    for idx, answer in enumerate(question.answers):
        seq = _lex_answer(question, idx)
        if answer.descriptions is not None and len(answer.descriptions) != len(seq):
            raise QuestionError(
                f"question {question.id!r}: answer {idx} has "
                f"{len(answer.descriptions)} descriptions for {len(seq)} tokens"
            )


def _lex_answer(question: Question, index: int) -> TokenSequence:
    try:
        return tokenize(question.answers[index].text, question.lexer, question.policy)
    except Exception as err:
        raise QuestionError(
            f"question {question.id!r}: answer {index} does not lex: {err}"
        ) from err


def grade_fraction(report: MistakeReport, answer_len: int, response_len: int) -> float:
    """Grade = aligned tokens / max(answer length, response length).

    The max in the denominator means padding a response with junk lowers the
    grade instead of leaving a perfect score intact. An empty response grades
    0 because nothing aligns.
    """
    if answer_len < 1:
        raise ValueError("answer_len must be >= 1")
    return len(report.alignment.pairs) / max(answer_len, response_len)


def render_messages(report: MistakeReport, chosen: ReferenceAnswer) -> list[str]:
    """Render one message per mistake, in the report's canonical order.

    Misplaced and missing messages substitute the teacher's description of
    the anchored answer token when descriptions exist; otherwise they quote
    the token text. Extra messages always quote the literal response text.
    """
    descriptions = chosen.descriptions
    messages = []
    for mistake in report.mistakes:
        if mistake.kind is MistakeKind.EXTRA:
            messages.append(MSG_EXTRA.format(token=mistake.raw))
            continue
        if descriptions is not None:
            name = descriptions[mistake.answer_index]
        else:
            name = f'"{mistake.raw}"'
        template = (
            MSG_MISPLACED if mistake.kind is MistakeKind.MISPLACED else MSG_MISSING
        )
        messages.append(template.format(name=name))
    return messages


def evaluate(question: Question, response_text: str) -> GradedAttempt:
    """Grade a response against every reference answer and keep the best.

    The response is lexed once. Ties on grade go to the answer with fewer
    mistakes, then to the lowest answer index. LexError propagates: a
    response that does not lex is an input problem, not a mistake report.
    """
    response = tokenize(response_text, question.lexer, question.policy)

    best: tuple[int, MistakeReport] | None = None
    for idx in range(len(question.answers)):
        answer_seq = _lex_answer(question, idx)
        alignment = lcs_align(answer_seq, response, question.policy)
        report = classify(answer_seq, response, alignment)
        grade = grade_fraction(report, len(answer_seq), len(response))
        report = replace(report, grade=grade)
        if (
            best is None
            or grade > best[1].grade
            or (grade == best[1].grade and len(report.mistakes) < len(best[1].mistakes))
        ):
            best = (idx, report)

    chosen_index, chosen_report = best
    messages = render_messages(chosen_report, question.answers[chosen_index])
    return GradedAttempt(
        question_id=question.id,
        response_text=response_text,
        chosen_answer_index=chosen_index,
        report=chosen_report,
        messages=tuple(messages),
        timestamp=datetime.now(timezone.utc).isoformat(),
    )
