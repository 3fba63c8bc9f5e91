"""Pluggable tokenizers.

Tokenizing is the only language-dependent stage of the pipeline; everything
downstream (alignment, mistake classification, grading) works on the token
sequences produced here. Two lexers are registered out of the box:

* ``c-family`` -- identifiers, number literals, quote-delimited string/char
  literals, longest-match punctuation from a fixed operator table. Whitespace
  and ``//`` / ``/* */`` comments are skipped. There is no keyword table:
  ``void`` and ``int`` are plain identifiers, since equality is textual.
* ``english`` -- words (letters plus internal apostrophes/hyphens), one token
  per punctuation character, whitespace skipped. Never errors: characters it
  does not know become single-character tokens of kind ``other``.

New languages register through :func:`register_lexer` without touching the
comparison engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .tokens import ComparisonPolicy, Span, Token, TokenKind, TokenSequence


class LexError(Exception):
    """Lexing failure. ``position`` is a byte offset into the source text."""

    def __init__(self, position: int, message: str):
        super().__init__(f"{message} at byte {position}")
        self.position = position
        self.message = message


class UnknownLexerError(ValueError):
    """Raised when a lexer id is not present in the registry."""


# Scanners work in character space; tokenize() converts to byte offsets.
@dataclass(frozen=True)
class _RawToken:
    kind: TokenKind
    start: int  # char offset
    end: int


class _ScanError(Exception):
    def __init__(self, char_pos: int, message: str):
        self.char_pos = char_pos
        self.message = message


_C_TWO_CHAR_OPS = frozenset(
    {"->", "++", "--", "<<", ">>", "<=", ">=", "==", "!=", "&&", "||"}
)
_C_ONE_CHAR_OPS = frozenset("{}()[];,.+-*/%=<>!&|^~?:")
_ASCII_DIGITS = frozenset("0123456789")


def _scan_c_family(source: str) -> list[_RawToken]:
    out: list[_RawToken] = []
    i = 0
    n = len(source)
    while i < n:
        ch = source[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "/" and i + 1 < n and source[i + 1] == "/":
            while i < n and source[i] != "\n":
                i += 1
            continue
        if ch == "/" and i + 1 < n and source[i + 1] == "*":
            start = i
            i += 2
            while i < n:
                if source[i] == "*" and i + 1 < n and source[i + 1] == "/":
                    i += 2
                    break
                i += 1
            else:
                raise _ScanError(start, "unterminated block comment")
            continue
        if ch in "\"'":
            out.append(_scan_c_literal(source, i))
            i = out[-1].end
            continue
        if ch.isalpha() or ch == "_":
            start = i
            i += 1
            while i < n and (source[i].isalnum() or source[i] == "_"):
                i += 1
            out.append(_RawToken(TokenKind.IDENTIFIER, start, i))
            continue
        if ch in _ASCII_DIGITS:
            start = i
            i += 1
            while i < n and source[i] in _ASCII_DIGITS:
                i += 1
            # One dot, and only when a digit follows: "1.2.3" -> "1.2" "." "3"
            if i + 1 < n and source[i] == "." and source[i + 1] in _ASCII_DIGITS:
                i += 2
                while i < n and source[i] in _ASCII_DIGITS:
                    i += 1
            out.append(_RawToken(TokenKind.NUMBER_LITERAL, start, i))
            continue
        if source[i : i + 2] in _C_TWO_CHAR_OPS:
            out.append(_RawToken(TokenKind.PUNCTUATION, i, i + 2))
            i += 2
            continue
        if ch in _C_ONE_CHAR_OPS:
            out.append(_RawToken(TokenKind.PUNCTUATION, i, i + 1))
            i += 1
            continue
        out.append(_RawToken(TokenKind.OTHER, i, i + 1))
        i += 1
    return out


def _scan_c_literal(source: str, start: int) -> _RawToken:
    """String or char literal: quote-delimited, backslash escapes any char."""
    quote = source[start]
    what = "string" if quote == '"' else "char"
    n = len(source)
    i = start + 1
    while i < n:
        ch = source[i]
        if ch == "\\":
            if i + 1 >= n:
                break
            i += 2
            continue
        if ch == "\n":
            break
        if ch == quote:
            return _RawToken(TokenKind.STRING_LITERAL, start, i + 1)
        i += 1
    raise _ScanError(start, f"unterminated {what} literal")


_EN_PUNCT = frozenset(".,;:!?\"'()—")  # includes the em dash


def _scan_english(source: str) -> list[_RawToken]:
    out: list[_RawToken] = []
    i = 0
    n = len(source)
    while i < n:
        ch = source[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isalpha():
            start = i
            i += 1
            while i < n:
                c = source[i]
                if c.isalpha():
                    i += 1
                # Apostrophes and hyphens only join a word internally:
                # "cat's" is one word, the quote in "cats'" is punctuation.
                elif c in "'-" and i + 1 < n and source[i + 1].isalpha():
                    i += 2
                else:
                    break
            out.append(_RawToken(TokenKind.WORD, start, i))
            continue
        if ch in _EN_PUNCT:
            out.append(_RawToken(TokenKind.PUNCTUATION, i, i + 1))
        else:
            out.append(_RawToken(TokenKind.OTHER, i, i + 1))
        i += 1
    return out


@dataclass(frozen=True)
class _LexerEntry:
    scan: Callable[[str], list[_RawToken]]
    default_policy: ComparisonPolicy


_REGISTRY: dict[str, _LexerEntry] = {}


def register_lexer(
    lexer_id: str,
    scan: Callable[[str], list[_RawToken]],
    default_policy: ComparisonPolicy,
) -> None:
    _REGISTRY[lexer_id] = _LexerEntry(scan, default_policy)


def registered_lexers() -> list[str]:
    return sorted(_REGISTRY)


def default_policy(lexer_id: str) -> ComparisonPolicy:
    return _registry_entry(lexer_id).default_policy


def _registry_entry(lexer_id: str) -> _LexerEntry:
    try:
        return _REGISTRY[lexer_id]
    except KeyError:
        raise UnknownLexerError(
            f"unknown lexer {lexer_id!r}; registered: {registered_lexers()}"
        ) from None


def _byte_offsets(source: str) -> list[int]:
    """offsets[i] = byte length of source[:i] in UTF-8."""
    if source.isascii():
        return list(range(len(source) + 1))
    offsets = [0]
    total = 0
    for ch in source:
        total += len(ch.encode("utf-8"))
        offsets.append(total)
    return offsets


def tokenize(
    source: str, lexer_id: str, policy: ComparisonPolicy | None = None
) -> TokenSequence:
    """Tokenize ``source`` with the registered lexer.

    ``policy`` controls normalization of token text (case folding); when
    omitted, the lexer's default applies: c-family is case-sensitive, english
    is not. Token spans are byte offsets into the UTF-8 encoding of ``source``.

    Raises:
        UnknownLexerError: ``lexer_id`` is not registered.
        LexError: the c-family lexer met an unterminated string/char literal
            or an unterminated block comment.
    """
    entry = _registry_entry(lexer_id)
    if policy is None:
        policy = entry.default_policy
    offsets = _byte_offsets(source)
    try:
        raw_tokens = entry.scan(source)
    except _ScanError as err:
        raise LexError(offsets[err.char_pos], err.message) from None
    tokens = []
    for index, rt in enumerate(raw_tokens):
        raw = source[rt.start : rt.end]
        tokens.append(
            Token(
                kind=rt.kind,
                raw=raw,
                normalized=policy.normalize(raw),
                span=Span(offsets[rt.start], offsets[rt.end]),
                index=index,
            )
        )
    return TokenSequence(tokens=tuple(tokens), source=source, lexer_id=lexer_id)


register_lexer("c-family", _scan_c_family, ComparisonPolicy(case_sensitive=True))
register_lexer("english", _scan_english, ComparisonPolicy(case_sensitive=False))
