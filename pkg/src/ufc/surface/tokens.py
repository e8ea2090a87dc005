import enum
import re
from dataclasses import dataclass
from typing import Iterable, List

from ..diagnostics import IllegalCharacter, Span

__all__ = ["TokenKind", "Token", "KEYWORDS", "SYMBOLS", "tokenize", "detokenize"]


class TokenKind(str, enum.Enum):
    IDENT = "IDENT"
    NUMERAL = "NUMERAL"
    KEYWORD = "KEYWORD"
    SYMBOL = "SYMBOL"
    EOF = "EOF"


KEYWORDS = frozenset(
    {
        "def",
        "postulate",
        "fun",
        "Nat",
        "Id",
        "refl",
        "J",
        "natElim",
        "zero",
        "suc",
        "Empty",
        "emptyElim",
        "Unit",
        "triv",
        "unitElim",
        "Bool",
        "yes",
        "no",
        "boolElim",
        "Sig",
        "mk",
        "sigElim",
        "Sum",
        "inl",
        "inr",
        "sumElim",
    }
    | {f"U{level}" for level in range(10)}
)

# longest first, so ":=" wins over ":"
SYMBOLS = (":=", "=>", "->", ":", ";", "(", ")", ",")

_TOKEN_RE = re.compile(
    r"""
    (?P<newline>\n)
    |(?P<space>[ \t\r\f\v]+)
    |(?P<comment>--[^\n]*)
    |(?P<numeral>[0-9]+)
    |(?P<word>[A-Za-z_][A-Za-z0-9_']*)
    |(?P<symbol>{symbols})
    """.format(symbols="|".join(re.escape(s) for s in SYMBOLS)),
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    span: Span

    def is_symbol(self, text: str) -> bool:
        return self.kind == TokenKind.SYMBOL and self.text == text

    def is_keyword(self, text: str) -> bool:
        return self.kind == TokenKind.KEYWORD and self.text == text

    def __str__(self) -> str:
        return f"{self.kind.value} {self.text}" if self.text else self.kind.value


def tokenize(source: str) -> List[Token]:
    """
    Split ``source`` into tokens ending with an EOF token.
    Spans carry 1-based line and column plus the UTF-8 byte offset.
    """
    tokens: List[Token] = []
    pos = offset = 0
    line, line_start = 1, 0
    while pos < len(source):
        match = _TOKEN_RE.match(source, pos)
        if match is None:
            span = Span(line, pos - line_start + 1, offset, len(source[pos].encode()))
            raise IllegalCharacter(source[pos], span)
        text = match.group()
        group = match.lastgroup
        if group in ("numeral", "word", "symbol"):
            if group == "numeral":
                kind = TokenKind.NUMERAL
            elif group == "word":
                kind = TokenKind.KEYWORD if text in KEYWORDS else TokenKind.IDENT
            else:
                kind = TokenKind.SYMBOL
            tokens.append(
                Token(kind, text, Span(line, pos - line_start + 1, offset, len(text)))
            )
        pos = match.end()
        offset += len(text.encode())
        if group == "newline":
            line, line_start = line + 1, pos
    tokens.append(Token(TokenKind.EOF, "", Span(line, pos - line_start + 1, offset, 0)))
    return tokens


def detokenize(tokens: Iterable[Token]) -> str:
    return " ".join(token.text for token in tokens if token.kind != TokenKind.EOF)
