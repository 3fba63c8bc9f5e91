import json

import pytest

from tokengrade import QuestionError, evaluate
from tokengrade.bank import (
    AttemptLog,
    attempt_from_dict,
    attempt_to_dict,
    load_bank_dir,
    load_question_file,
    question_from_dict,
    question_to_dict,
)
from conftest import HEADER_ANSWER, HEADER_RESPONSE

GOOD = {
    "id": "function-header",
    "prompt": "Write the function header.",
    "lexer": "c-family",
    "answers": [{"text": HEADER_ANSWER}],
}


def write_question(tmp_path, doc, name="q.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return path


def test_minimal_question_parses():
    question = question_from_dict(GOOD)
    assert question.id == "function-header"
    assert question.policy.case_sensitive  # c-family default


def test_case_sensitive_override():
    doc = dict(GOOD, case_sensitive=False)
    assert not question_from_dict(doc).policy.case_sensitive


def test_unknown_top_level_field_rejected_by_name():
    doc = dict(GOOD, hint="no such field")
    with pytest.raises(QuestionError, match="'hint'"):
        question_from_dict(doc)


def test_unknown_answer_field_rejected_by_name():
    doc = dict(GOOD, answers=[{"text": "a", "weight": 2}])
    with pytest.raises(QuestionError, match="'weight'"):
        question_from_dict(doc)


def test_missing_required_field_rejected_by_name():
    doc = {k: v for k, v in GOOD.items() if k != "prompt"}
    with pytest.raises(QuestionError, match="'prompt'"):
        question_from_dict(doc)


def test_empty_answers_rejected():
    with pytest.raises(QuestionError, match="answers"):
        question_from_dict(dict(GOOD, answers=[]))


def test_bad_descriptions_type_rejected():
    doc = dict(GOOD, answers=[{"text": "a", "descriptions": "oops"}])
    with pytest.raises(QuestionError, match="descriptions"):
        question_from_dict(doc)


def test_description_length_checked_at_load():
    doc = dict(GOOD, answers=[{"text": "a b", "descriptions": ["only one"]}])
    with pytest.raises(QuestionError, match="descriptions"):
        question_from_dict(doc)


def test_question_roundtrip():
    doc = dict(GOOD, case_sensitive=True)
    question = question_from_dict(doc)
    assert question_from_dict(question_to_dict(question)) == question


def test_load_question_file(tmp_path):
    path = write_question(tmp_path, GOOD)
    assert load_question_file(path).id == "function-header"


def test_load_question_file_bad_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(QuestionError, match="JSON"):
        load_question_file(path)


def test_load_bank_dir(tmp_path):
    write_question(tmp_path, GOOD, "a.json")
    write_question(tmp_path, dict(GOOD, id="other"), "b.json")
    bank = load_bank_dir(tmp_path)
    assert sorted(bank) == ["function-header", "other"]


def test_load_bank_dir_duplicate_ids(tmp_path):
    write_question(tmp_path, GOOD, "a.json")
    write_question(tmp_path, GOOD, "b.json")
    with pytest.raises(QuestionError, match="duplicate"):
        load_bank_dir(tmp_path)


def test_load_bank_dir_not_a_dir(tmp_path):
    with pytest.raises(QuestionError):
        load_bank_dir(tmp_path / "nope")


# --- attempt documents -------------------------------------------------------


def graded_attempt():
    return evaluate(question_from_dict(GOOD), HEADER_RESPONSE)


def test_attempt_roundtrip():
    attempt = graded_attempt()
    doc = attempt_to_dict(attempt)
    assert attempt_from_dict(doc) == attempt
    # and through an actual JSON encode/decode
    assert attempt_from_dict(json.loads(json.dumps(doc))) == attempt


def test_attempt_document_shape():
    doc = attempt_to_dict(graded_attempt())
    assert set(doc) == {
        "question_id",
        "response_text",
        "chosen_answer_index",
        "grade",
        "messages",
        "report",
        "timestamp",
    }
    assert doc["grade"] == pytest.approx(6 / 9)
    assert len(doc["messages"]) == 4
    kinds = [m["kind"] for m in doc["report"]["mistakes"]]
    assert kinds == ["misplaced", "extra", "missing", "missing"]
    missing = doc["report"]["mistakes"][2]
    assert missing["span"] is None


def test_attempt_log_append_and_read(tmp_path):
    log = AttemptLog(tmp_path / "attempts.ndjson")
    first = graded_attempt()
    second = graded_attempt()
    log.append(first)
    log.append(second)
    lines = (tmp_path / "attempts.ndjson").read_text().splitlines()
    assert len(lines) == 2
    for line in lines:
        json.loads(line)  # each line is one standalone document
    assert log.read_all() == [first, second]


def test_attempt_log_read_missing_file(tmp_path):
    assert AttemptLog(tmp_path / "absent.ndjson").read_all() == []
