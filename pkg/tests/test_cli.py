import json

import pytest

from tokengrade.cli import EXIT_IMPERFECT, EXIT_LEX, EXIT_OK, EXIT_USAGE, main
from conftest import HEADER_ANSWER, HEADER_DESCRIPTIONS, HEADER_RESPONSE


@pytest.fixture
def question_file(tmp_path):
    doc = {
        "id": "function-header",
        "prompt": "Write the function header.",
        "lexer": "c-family",
        "answers": [
            {"text": HEADER_ANSWER, "descriptions": list(HEADER_DESCRIPTIONS)}
        ],
    }
    path = tmp_path / "question.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


@pytest.fixture
def plain_question_file(tmp_path):
    doc = {
        "id": "plain",
        "prompt": "p",
        "lexer": "c-family",
        "answers": [{"text": HEADER_ANSWER}],
    }
    path = tmp_path / "plain.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


# --- tokenize ----------------------------------------------------------------


def test_tokenize_two_tokens(capsys):
    code = main(["tokenize", "--lexer", "c-family", "--text", "int abc"])
    assert code == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 2
    assert lines[0] == "0\tidentifier\tint\t0:3"
    assert lines[1] == "1\tidentifier\tabc\t4:7"


def test_tokenize_empty_text(capsys):
    assert main(["tokenize", "--lexer", "c-family", "--text", ""]) == EXIT_OK
    assert capsys.readouterr().out == ""


def test_tokenize_lex_error_exit_2(capsys):
    code = main(["tokenize", "--lexer", "c-family", "--text", '"unterminated'])
    assert code == EXIT_LEX
    err = capsys.readouterr().err
    assert "byte 0" in err


def test_tokenize_unknown_lexer_exit_1(capsys):
    assert main(["tokenize", "--lexer", "nope", "--text", "x"]) == EXIT_USAGE


def test_tokenize_case_flag(capsys):
    main(["tokenize", "--lexer", "english", "--text", "The", "--case-sensitive"])
    assert capsys.readouterr().out.splitlines()[0].split("\t")[2] == "The"


def test_tokenize_from_file(tmp_path, capsys):
    src = tmp_path / "code.txt"
    src.write_text("a + b", encoding="utf-8")
    assert main(["tokenize", "--lexer", "c-family", "--file", str(src)]) == EXIT_OK
    assert len(capsys.readouterr().out.splitlines()) == 3


def test_usage_error_exit_1():
    with pytest.raises(SystemExit) as exc:
        main(["tokenize", "--lexer", "c-family"])  # no --text/--file
    assert exc.value.code == EXIT_USAGE


# --- grade -------------------------------------------------------------------


def test_grade_header_example_human(question_file, capsys):
    code = main(["grade", question_file, "--response", HEADER_RESPONSE])
    assert code == EXIT_IMPERFECT
    out = capsys.readouterr().out.splitlines()
    assert out == [
        "grade 0.6667",
        "1) return value type is misplaced",
        '2) there is extra ","',
        "3) opening bracket for arguments list is missing",
        "4) closing bracket for arguments list is missing",
    ]


def test_grade_plain_question_human(plain_question_file, capsys):
    code = main(["grade", plain_question_file, "--response", HEADER_RESPONSE])
    assert code == EXIT_IMPERFECT
    out = capsys.readouterr().out.splitlines()
    assert out == [
        "grade 0.6667",
        '1) "void" is misplaced',
        '2) there is extra ","',
        '3) "(" is missing',
        '4) ")" is missing',
    ]


def test_grade_perfect_response(question_file, capsys):
    code = main(["grade", question_file, "--response", HEADER_ANSWER])
    assert code == EXIT_OK
    assert capsys.readouterr().out.splitlines() == ["grade 1.0000"]


def test_grade_json_roundtrips(question_file, capsys):
    from tokengrade.bank import attempt_from_dict

    code = main(
        ["grade", question_file, "--response", HEADER_RESPONSE, "--format", "json"]
    )
    assert code == EXIT_IMPERFECT
    doc = json.loads(capsys.readouterr().out)
    attempt = attempt_from_dict(doc)
    assert attempt.report.grade == pytest.approx(6 / 9)
    assert len(attempt.messages) == 4


def test_grade_malformed_question_names_field(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"id": "x", "prompt": "p", "lexer": "c-family",
                                "answers": [{"text": "a"}], "bonus": 1}))
    code = main(["grade", str(path), "--response", "a"])
    assert code == EXIT_USAGE
    assert "'bonus'" in capsys.readouterr().err


def test_grade_lex_error_exit_2(question_file, capsys):
    code = main(["grade", question_file, "--response", '"broken'])
    assert code == EXIT_LEX


def test_grade_response_from_file(question_file, tmp_path, capsys):
    rf = tmp_path / "resp.txt"
    rf.write_text(HEADER_ANSWER, encoding="utf-8")
    assert main(["grade", question_file, "--response-file", str(rf)]) == EXIT_OK


# --- batch -------------------------------------------------------------------


def test_batch_three_correct(plain_question_file, tmp_path, capsys):
    responses = tmp_path / "responses.txt"
    responses.write_text("\n".join([HEADER_ANSWER] * 3) + "\n", encoding="utf-8")
    code = main(["batch", plain_question_file, str(responses)])
    assert code == EXIT_OK
    captured = capsys.readouterr()
    records = [json.loads(line) for line in captured.out.splitlines()]
    assert len(records) == 3
    assert all(r["grade"] == 1.0 for r in records)
    assert captured.err.strip() == "count 3 mean 1.0000"


def test_batch_single_mistaken_response(plain_question_file, tmp_path, capsys):
    responses = tmp_path / "responses.txt"
    responses.write_text(HEADER_RESPONSE + "\n", encoding="utf-8")
    main(["batch", plain_question_file, str(responses)])
    captured = capsys.readouterr()
    records = [json.loads(line) for line in captured.out.splitlines()]
    assert len(records) == 1
    assert len(records[0]["report"]["mistakes"]) == 4


def test_batch_empty_file(plain_question_file, tmp_path, capsys):
    responses = tmp_path / "responses.txt"
    responses.write_text("", encoding="utf-8")
    code = main(["batch", plain_question_file, str(responses)])
    assert code == EXIT_OK
    captured = capsys.readouterr()
    assert captured.out == ""
    assert captured.err.strip() == "count 0 mean 0.0000"


def test_batch_lex_error_line_continues(plain_question_file, tmp_path, capsys):
    responses = tmp_path / "responses.txt"
    responses.write_text('"broken\n' + HEADER_ANSWER + "\n", encoding="utf-8")
    code = main(["batch", plain_question_file, str(responses)])
    assert code == EXIT_OK
    captured = capsys.readouterr()
    lines = captured.out.splitlines()
    assert len(lines) == 2  # line order preserved: error record then grade
    error_record = json.loads(lines[0])
    assert error_record["line"] == 1 and "position" in error_record
    assert json.loads(lines[1])["grade"] == 1.0
    assert captured.err.strip() == "count 1 mean 1.0000"


def test_batch_json_lines_mode(plain_question_file, tmp_path, capsys):
    responses = tmp_path / "responses.jsonl"
    responses.write_text(
        json.dumps({"response": HEADER_ANSWER}) + "\n" + json.dumps({"oops": 1}) + "\n",
        encoding="utf-8",
    )
    main(["batch", plain_question_file, str(responses), "--json-lines"])
    lines = capsys.readouterr().out.splitlines()
    assert json.loads(lines[0])["grade"] == 1.0
    assert "error" in json.loads(lines[1])


# --- validate ----------------------------------------------------------------


def test_validate_ok_and_bad(tmp_path, capsys, plain_question_file):
    bad = tmp_path / "bad.json"
    bad.write_text("{", encoding="utf-8")
    assert main(["validate", plain_question_file]) == EXIT_OK
    assert main(["validate", str(bad)]) == EXIT_USAGE


def test_validate_directory_with_duplicates(tmp_path, capsys):
    doc = {"id": "same", "prompt": "p", "lexer": "c-family",
           "answers": [{"text": "a"}]}
    (tmp_path / "a.json").write_text(json.dumps(doc))
    (tmp_path / "b.json").write_text(json.dumps(doc))
    assert main(["validate", str(tmp_path)]) == EXIT_USAGE
    assert "duplicate" in capsys.readouterr().err
