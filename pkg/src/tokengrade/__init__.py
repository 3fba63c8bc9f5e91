"""tokengrade: token-sequence grading for grammar exercises.

Responses are tokenized, aligned against teacher-entered reference answers by
longest common subsequence, and every token off the alignment is reported as
a misplaced, missing, or extra mistake -- optionally named by the teacher's
grammatical description of the answer token.
"""

from .grading import (
    GradedAttempt,
    Question,
    QuestionError,
    ReferenceAnswer,
    evaluate,
    grade_fraction,
    make_question,
    render_messages,
    validate_question,
)
from .lcs import MAX_TOKENS, Alignment, lcs_align, lcs_length
from .lexers import (
    LexError,
    UnknownLexerError,
    default_policy,
    register_lexer,
    registered_lexers,
    tokenize,
)
from .mistakes import (
    AlignmentMismatch,
    Mistake,
    MistakeKind,
    MistakeReport,
    ValueCounts,
    classify,
)
from .tokens import ComparisonPolicy, Span, Token, TokenKind, TokenSequence, tokens_equal

__version__ = "0.1.0"

__all__ = [
    "Alignment",
    "AlignmentMismatch",
    "ComparisonPolicy",
    "GradedAttempt",
    "LexError",
    "MAX_TOKENS",
    "Mistake",
    "MistakeKind",
    "MistakeReport",
    "Question",
    "QuestionError",
    "ReferenceAnswer",
    "Span",
    "Token",
    "TokenKind",
    "TokenSequence",
    "UnknownLexerError",
    "ValueCounts",
    "classify",
    "default_policy",
    "evaluate",
    "grade_fraction",
    "lcs_align",
    "lcs_length",
    "make_question",
    "register_lexer",
    "registered_lexers",
    "render_messages",
    "tokenize",
    "tokens_equal",
    "validate_question",
]
