#!/usr/bin/env python3
"""Walk the bundled function-header exercise through the whole pipeline.

Usage: python3 scripts/demo_grading.py [response text]
"""

import sys
from pathlib import Path

from tokengrade import evaluate, tokenize
from tokengrade.bank import load_question_file

BANK = Path(__file__).resolve().parent.parent / "bank"


def main() -> None:
    question = load_question_file(BANK / "function-header.json")
    response = (
        " ".join(sys.argv[1:]) if len(sys.argv) > 1 else "function int abc, int def, void"
    )
    answer = question.answers[0]

    print(f"question : {question.prompt}")
    print(f"answer   : {answer.text}")
    print(f"response : {response}\n")

    seq = tokenize(response, question.lexer, question.policy)
    print("response tokens:", " | ".join(seq.normalized_texts()))

    attempt = evaluate(question, response)
    pairs = attempt.report.alignment.pairs
    print(f"aligned  : {len(pairs)} of {len(seq)} response tokens")
    print(f"grade    : {attempt.report.grade:.4f}\n")
    if attempt.messages:
        for i, message in enumerate(attempt.messages, 1):
            print(f"{i}) {message}")
    else:
        print("no mistakes")


if __name__ == "__main__":
    main()
