"""
Recursive-descent parser for the ``.uf`` input language.

    module  ::= decl*
    decl    ::= "def" IDENT ":" term ":=" term ";" | "postulate" IDENT ":" term ";"
    term    ::= "fun" binders "=>" term
              | binders "->" term
              | "Sig" binder "," term
              | appterm ("->" term)?
    binders ::= binder+            binder ::= "(" IDENT+ ":" term ")"
    appterm ::= atom+              atom   ::= IDENT | NUMERAL | builtin | "(" term ")"

Builtins take a fixed number of atom arguments by juxtaposition.
"""
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .. import conf
from ..diagnostics import (
    BuiltinArity,
    NumeralTooLarge,
    Span,
    UnexpectedToken,
    UnterminatedDecl,
)
from .tokens import Token, TokenKind

__all__ = [
    "Parser",
    "BUILTIN_ARITY",
    "SurfaceTerm",
    "SName",
    "SNumeral",
    "SBuiltin",
    "SApp",
    "SPi",
    "SLambda",
    "SSigma",
    "SurfaceDecl",
    "parse_module",
    "parse_term",
]

BUILTIN_ARITY = {
    "Nat": 0,
    "zero": 0,
    "suc": 1,
    "Id": 3,
    "refl": 2,
    "J": 6,
    "natElim": 4,
    "Empty": 0,
    "emptyElim": 2,
    "Unit": 0,
    "triv": 0,
    "unitElim": 3,
    "Bool": 0,
    "yes": 0,
    "no": 0,
    "boolElim": 4,
    "mk": 2,
    "sigElim": 5,
    "Sum": 2,
    "inl": 3,
    "inr": 3,
    "sumElim": 6,
    **{f"U{level}": 0 for level in range(10)},
}


@dataclass(frozen=True)
class SurfaceTerm:
    span: Span


@dataclass(frozen=True)
class SName(SurfaceTerm):
    name: str


@dataclass(frozen=True)
class SNumeral(SurfaceTerm):
    value: int


@dataclass(frozen=True)
class SBuiltin(SurfaceTerm):
    name: str
    args: Tuple[SurfaceTerm, ...] = ()


@dataclass(frozen=True)
class SApp(SurfaceTerm):
    fn: SurfaceTerm
    arg: SurfaceTerm


@dataclass(frozen=True)
class SPi(SurfaceTerm):
    # None for the non-dependent arrow
    name: Optional[str]
    domain: SurfaceTerm
    codomain: SurfaceTerm


@dataclass(frozen=True)
class SLambda(SurfaceTerm):
    name: str
    domain: SurfaceTerm
    body: SurfaceTerm


@dataclass(frozen=True)
class SSigma(SurfaceTerm):
    name: str
    first: SurfaceTerm
    second: SurfaceTerm


@dataclass(frozen=True)
class SurfaceDecl:
    kind: str
    name: str
    type: SurfaceTerm
    body: Optional[SurfaceTerm]
    span: Span
    name_span: Span

    @property
    def is_postulate(self) -> bool:
        return self.kind == "postulate"


Binder = Tuple[str, SurfaceTerm, Span]

ATOM_START = ("identifier", "numeral", "builtin", "(")


class Parser:
    def __init__(self, tokens: Sequence[Token]) -> None:
        self.tokens = tokens
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def peek(self, ahead: int) -> Token:
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def advance(self) -> Token:
        token = self.current
        if token.kind != TokenKind.EOF:
            self.pos += 1
        return token

    def unexpected(self, *expected: str) -> UnexpectedToken:
        return UnexpectedToken(self.current.text, expected, self.current.span)

    def expect_symbol(self, text: str) -> Token:
        if not self.current.is_symbol(text):
            raise self.unexpected(text)
        return self.advance()

    def expect_ident(self) -> Token:
        if self.current.kind != TokenKind.IDENT:
            raise self.unexpected("identifier")
        return self.advance()

    def parse_module(self) -> List[SurfaceDecl]:
        decls = []
        while self.current.kind != TokenKind.EOF:
            decls.append(self.parse_decl())
        return decls

    def parse_decl(self) -> SurfaceDecl:
        start = self.current
        if not (start.is_keyword("def") or start.is_keyword("postulate")):
            raise self.unexpected("def", "postulate")
        self.advance()
        name = self.expect_ident()
        self.expect_symbol(":")
        type = self.parse_term()
        body = None
        if start.is_keyword("def"):
            self.expect_symbol(":=")
            body = self.parse_term()
        end = self.current
        if not end.is_symbol(";"):
            if end.kind == TokenKind.EOF or end.text in ("def", "postulate"):
                last = self.tokens[self.pos - 1]
                raise UnterminatedDecl(name.text, start.span.cover(last.span))
            raise self.unexpected(";")
        self.advance()
        return SurfaceDecl(
            start.text, name.text, type, body, start.span.cover(end.span), name.span
        )

    def at_binder(self) -> bool:
        """Whether the input continues with ``( IDENT+ :``."""
        if not self.current.is_symbol("("):
            return False
        ahead = 1
        while self.peek(ahead).kind == TokenKind.IDENT:
            ahead += 1
        return ahead > 1 and self.peek(ahead).is_symbol(":")

    def parse_binder(self) -> List[Binder]:
        open_paren = self.expect_symbol("(")
        names = [self.expect_ident()]
        while self.current.kind == TokenKind.IDENT:
            names.append(self.advance())
        self.expect_symbol(":")
        domain = self.parse_term()
        self.expect_symbol(")")
        return [(name.text, domain, open_paren.span) for name in names]

    def parse_binders(self) -> List[Binder]:
        binders = self.parse_binder()
        while self.at_binder():
            binders.extend(self.parse_binder())
        return binders

    def parse_term(self) -> SurfaceTerm:
        token = self.current
        if token.is_keyword("fun"):
            self.advance()
            if not self.at_binder():
                raise self.unexpected("(")
            binders = self.parse_binders()
            self.expect_symbol("=>")
            body = self.parse_term()
            for name, domain, span in reversed(binders):
                body = SLambda(token.span.cover(body.span), name, domain, body)
            return body
        if token.is_keyword("Sig"):
            self.advance()
            binders = self.parse_binder()
            self.expect_symbol(",")
            second = self.parse_term()
            for name, first, span in reversed(binders):
                second = SSigma(token.span.cover(second.span), name, first, second)
            return second
        if self.at_binder():
            binders = self.parse_binders()
            self.expect_symbol("->")
            codomain = self.parse_term()
            for name, domain, span in reversed(binders):
                codomain = SPi(span.cover(codomain.span), name, domain, codomain)
            return codomain
        term = self.parse_app()
        if self.current.is_symbol("->"):
            self.advance()
            codomain = self.parse_term()
            return SPi(term.span.cover(codomain.span), None, term, codomain)
        return term

    def at_atom(self) -> bool:
        token = self.current
        return (
            token.kind in (TokenKind.IDENT, TokenKind.NUMERAL)
            or token.text in BUILTIN_ARITY
            and token.kind == TokenKind.KEYWORD
            or token.is_symbol("(")
        )

    def parse_app(self) -> SurfaceTerm:
        term = self.parse_atom()
        while self.at_atom():
            arg = self.parse_atom()
            term = SApp(term.span.cover(arg.span), term, arg)
        return term

    def parse_atom(self) -> SurfaceTerm:
        token = self.current
        if token.kind == TokenKind.IDENT:
            self.advance()
            return SName(token.span, token.text)
        if token.kind == TokenKind.NUMERAL:
            self.advance()
            digits = token.text.lstrip("0") or "0"
            if len(digits) > len(str(conf.MAX_NUMERAL)) or int(digits) > conf.MAX_NUMERAL:
                raise NumeralTooLarge(token.text, conf.MAX_NUMERAL, token.span)
            return SNumeral(token.span, int(digits))
        if token.kind == TokenKind.KEYWORD and token.text in BUILTIN_ARITY:
            self.advance()
            arity = BUILTIN_ARITY[token.text]
            args: List[SurfaceTerm] = []
            span = token.span
            while len(args) < arity:
                if not self.at_atom():
                    raise BuiltinArity(token.text, arity, len(args), span)
                args.append(self.parse_atom())
                span = span.cover(args[-1].span)
            return SBuiltin(span, token.text, tuple(args))
        if token.is_symbol("("):
            self.advance()
            term = self.parse_term()
            self.expect_symbol(")")
            return term
        raise self.unexpected(*ATOM_START)


def parse_module(tokens: Sequence[Token]) -> List[SurfaceDecl]:
    return Parser(tokens).parse_module()


def parse_term(tokens: Sequence[Token]) -> SurfaceTerm:
    """Parse a single term that spans the whole token stream."""
    parser = Parser(tokens)
    term = parser.parse_term()
    if parser.current.kind != TokenKind.EOF:
        raise parser.unexpected("end of input")
    return term
