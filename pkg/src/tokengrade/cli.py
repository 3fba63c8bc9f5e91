"""Command-line interface: tokenize, grade, batch, validate, serve.

Exit codes are one per outcome class: 0 perfect / success, 1 usage or input
error, 2 lex error, 3 graded with mistakes.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bank import attempt_to_dict, load_bank_dir, load_question_file
from .grading import QuestionError, evaluate
from .lexers import LexError, UnknownLexerError, tokenize
from .tokens import ComparisonPolicy

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_LEX = 2
EXIT_IMPERFECT = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; this artifact reserves 2 for lex errors.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> _Parser:
    parser = _Parser(prog="tokengrade", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_tok = sub.add_parser("tokenize", help="print the token listing of a text")
    p_tok.add_argument("--lexer", required=True)
    src = p_tok.add_mutually_exclusive_group(required=True)
    src.add_argument("--text")
    src.add_argument("--file")
    case = p_tok.add_mutually_exclusive_group()
    case.add_argument("--case-sensitive", dest="case_sensitive", action="store_true", default=None)
    case.add_argument("--case-insensitive", dest="case_sensitive", action="store_false")

    p_grade = sub.add_parser("grade", help="grade one response against a question file")
    p_grade.add_argument("question", help="question JSON file")
    src = p_grade.add_mutually_exclusive_group(required=True)
    src.add_argument("--response")
    src.add_argument("--response-file")
    p_grade.add_argument("--format", choices=("human", "json"), default="human")

    p_batch = sub.add_parser("batch", help="grade a file of responses, one per line")
    p_batch.add_argument("question", help="question JSON file")
    p_batch.add_argument("responses", help="responses file")
    p_batch.add_argument(
        "--json-lines",
        action="store_true",
        help='each input line is {"response": ...} (for multi-line responses)',
    )

    p_val = sub.add_parser("validate", help="validate question files or bank directories")
    p_val.add_argument("paths", nargs="+")

    p_serve = sub.add_parser("serve", help="run the HTTP grading service")
    p_serve.add_argument("--bank", required=True, help="question bank directory")
    p_serve.add_argument("--port", type=int, default=8080)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--log", help="append graded attempts to this NDJSON file")
    p_serve.add_argument("--ui-dir", help="serve static UI assets at /")
    p_serve.add_argument("--cors-origin", action="append", default=[])

    return parser


def _read_arg_or_file(text: str | None, path: str | None) -> str:
    if text is not None:
        return text
    return Path(path).read_text(encoding="utf-8")


def _cmd_tokenize(args) -> int:
    policy = None
    if args.case_sensitive is not None:
        policy = ComparisonPolicy(case_sensitive=args.case_sensitive)
    try:
        source = _read_arg_or_file(args.text, args.file)
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    try:
        seq = tokenize(source, args.lexer, policy)
    except UnknownLexerError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except LexError as err:
        print(f"lex error: {err}", file=sys.stderr)
        return EXIT_LEX
    for tok in seq:
        print(f"{tok.index}\t{tok.kind.value}\t{tok.normalized}\t{tok.span.start}:{tok.span.end}")
    return EXIT_OK


def _print_human(attempt) -> None:
    print(f"grade {attempt.report.grade:.4f}")
    for i, message in enumerate(attempt.messages, 1):
        print(f"{i}) {message}")


def _cmd_grade(args) -> int:
    try:
        question = load_question_file(args.question)
        response = _read_arg_or_file(args.response, args.response_file)
    except (QuestionError, UnknownLexerError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    try:
        attempt = evaluate(question, response)
    except LexError as err:
        print(f"lex error: {err}", file=sys.stderr)
        return EXIT_LEX
    if args.format == "json":
        print(json.dumps(attempt_to_dict(attempt), ensure_ascii=False))
    else:
        _print_human(attempt)
    return EXIT_OK if attempt.report.grade == 1.0 else EXIT_IMPERFECT


def _cmd_batch(args) -> int:
    try:
        question = load_question_file(args.question)
        lines = Path(args.responses).read_text(encoding="utf-8").splitlines()
    except (QuestionError, UnknownLexerError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE

    count = 0
    total = 0.0
    for lineno, line in enumerate(lines, 1):
        if args.json_lines:
            try:
                doc = json.loads(line)
                response = doc["response"]
                if not isinstance(response, str):
                    raise TypeError("'response' must be a string")
            except (json.JSONDecodeError, KeyError, TypeError) as err:
                print(json.dumps({"line": lineno, "error": f"bad input line: {err}"}))
                continue
        else:
            response = line
        try:
            attempt = evaluate(question, response)
        except LexError as err:
            print(json.dumps({"line": lineno, "error": err.message, "position": err.position}))
            continue
        print(json.dumps(attempt_to_dict(attempt), ensure_ascii=False))
        count += 1
        total += attempt.report.grade
    mean = total / count if count else 0.0
    print(f"count {count} mean {mean:.4f}", file=sys.stderr)
    return EXIT_OK


def _cmd_validate(args) -> int:
    failures = 0
    seen_ids: dict[str, str] = {}
    files: list[Path] = []
    for raw in args.paths:
        path = Path(raw)
        if path.is_dir():
            files.extend(sorted(path.glob("*.json")))
        else:
            files.append(path)
    for file in files:
        try:
            question = load_question_file(file)
        except QuestionError as err:
            print(f"{file}: error: {err}", file=sys.stderr)
            failures += 1
            continue
        if question.id in seen_ids:
            print(
                f"{file}: error: duplicate id {question.id!r} "
                f"(also in {seen_ids[question.id]})",
                file=sys.stderr,
            )
            failures += 1
            continue
        seen_ids[question.id] = str(file)
        print(f"{file}: ok id={question.id}")
    return EXIT_USAGE if failures else EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    try:
        app = create_app(
            bank_dir=args.bank,
            log_path=args.log,
            ui_dir=args.ui_dir,
            cors_origins=tuple(args.cors_origin),
        )
    except QuestionError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


_COMMANDS = {
    "tokenize": _cmd_tokenize,
    "grade": _cmd_grade,
    "batch": _cmd_batch,
    "validate": _cmd_validate,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    return _COMMANDS[args.command](args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
