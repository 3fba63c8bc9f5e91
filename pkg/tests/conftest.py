import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # makes oracles/corpus importable

from tokengrade import ReferenceAnswer, default_policy, make_question, tokenize

# The function-header exercise used as the golden case throughout the suite.
HEADER_ANSWER = "void function(int abc, int def)"
HEADER_RESPONSE = "function int abc, int def, void"
HEADER_DESCRIPTIONS = (
    "return value type",
    "function name",
    "opening bracket for arguments list",
    "first argument type",
    "first argument name",
    "argument list separator",
    "second argument type",
    "second argument name",
    "closing bracket for arguments list",
)


def seq(text, lexer="c-family", case_sensitive=None):
    policy = None
    if case_sensitive is not None:
        from tokengrade import ComparisonPolicy

        policy = ComparisonPolicy(case_sensitive=case_sensitive)
    return tokenize(text, lexer, policy)


def seq_of(values, lexer="c-family"):
    """Token sequence whose normalized texts are exactly `values`."""
    return tokenize(" ".join(values), lexer)


@pytest.fixture
def cpolicy():
    return default_policy("c-family")


@pytest.fixture
def header_question():
    return make_question(
        id="function-header",
        prompt="Write the header of a void function taking two ints, abc and def.",
        lexer="c-family",
        answers=[ReferenceAnswer(text=HEADER_ANSWER)],
    )


@pytest.fixture
def header_question_described():
    return make_question(
        id="function-header-described",
        prompt="Write the header of a void function taking two ints, abc and def.",
        lexer="c-family",
        answers=[
            ReferenceAnswer(text=HEADER_ANSWER, descriptions=HEADER_DESCRIPTIONS)
        ],
    )
