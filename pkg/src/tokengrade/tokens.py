"""Token data model and the text-equality policy used for sequence comparison."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class TokenKind(str, Enum):
    IDENTIFIER = "identifier"
    KEYWORD_LIKE = "keyword-like"
    NUMBER_LITERAL = "number-literal"
    STRING_LITERAL = "string-literal"
    PUNCTUATION = "punctuation"
    WORD = "word"
    OTHER = "other"


@dataclass(frozen=True, slots=True)
class Span:
    """Half-open byte range [start, end) into the UTF-8 encoding of the source."""

    start: int
    end: int

    def __post_init__(self) -> None:
        if not 0 <= self.start < self.end:
            raise ValueError(f"invalid span [{self.start}, {self.end})")

    def __len__(self) -> int:
        return self.end - self.start


@dataclass(frozen=True, slots=True)
class ComparisonPolicy:
    """Normalization applied to token text before two tokens are compared."""

    case_sensitive: bool = True

    def normalize(self, text: str) -> str:
        return text if self.case_sensitive else text.lower()


@dataclass(frozen=True, slots=True)
class Token:
    """One lexeme: kind, original text, comparison text, byte span, ordinal."""

    kind: TokenKind
    raw: str
    normalized: str
    span: Span
    index: int


@dataclass(frozen=True)
class TokenSequence:
    """The tokens of one source text, in source order."""

    tokens: tuple[Token, ...]
    source: str
    lexer_id: str

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)

    def __getitem__(self, i: int) -> Token:
        return self.tokens[i]

    def normalized_texts(self) -> list[str]:
        return [t.normalized for t in self.tokens]


def tokens_equal(a: Token, b: Token, policy: ComparisonPolicy) -> bool:
    """True when the two tokens count as the same lexeme under the policy.

    Kind is deliberately ignored; equality is purely textual.
    """
    return policy.normalize(a.normalized) == policy.normalize(b.normalized)
