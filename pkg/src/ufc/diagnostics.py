from dataclasses import dataclass
from typing import TYPE_CHECKING, Any, FrozenSet, Optional, Sequence

import django.core.checks
from django.utils import termcolors

from . import DiagnosticKind

if TYPE_CHECKING:
    from .syntax import Term


@dataclass(frozen=True)
class Span:
    line: int
    column: int
    offset: int
    length: int

    @property
    def end(self) -> int:
        return self.offset + self.length

    def contains(self, other: "Span") -> bool:
        return self.offset <= other.offset and other.end <= self.end

    def cover(self, other: "Span") -> "Span":
        if other.end <= self.end:
            return self
        return Span(self.line, self.column, self.offset, other.end - self.offset)


class Diagnostic(django.core.checks.CheckMessage):
    def __init__(
        self,
        kind: DiagnosticKind,
        message: str,
        *,
        span: Optional[Span] = None,
        filename: str = "<input>",
        expected: Optional[str] = None,
        actual: Optional[str] = None,
        obj: Any = None,
        level: int = django.core.checks.ERROR,
    ) -> None:
        super().__init__(level, message, obj=obj, id=kind.name)
        self.kind = kind
        self.span = span
        self.filename = filename
        self.expected = expected
        self.actual = actual

    def __eq__(self, other: object) -> bool:
        return (
            super().__eq__(other)
            and isinstance(other, Diagnostic)
            and self.render() == other.render()
        )

    def location(self) -> str:
        if self.span is None:
            return self.filename
        return f"{self.filename}:{self.span.line}:{self.span.column}"

    def render(self, color: bool = False) -> str:
        kind = self.kind.name
        if color:
            kind = termcolors.colorize(kind, fg="red", opts=("bold",))
        if self.expected is not None and self.actual is not None:
            detail = f"expected {self.expected}, got {self.actual}"
        else:
            detail = self.msg
        return f"{self.location()}: {kind}: {detail}"

    def __str__(self) -> str:
        return self.render()


class UfcError(Exception):
    kind: DiagnosticKind = DiagnosticKind.Parse
    exit_code = 1

    def __init__(self, message: str, span: Optional[Span] = None) -> None:
        super().__init__(message)
        self.message = message
        self.span = span
        # "type" or "body" once a declaration check attributes the failure
        self.part: Optional[str] = None

    def to_diagnostic(
        self, filename: str = "<input>", span: Optional[Span] = None, obj: Any = None
    ) -> Diagnostic:
        return Diagnostic(
            self.kind,
            self.message,
            span=self.span or span,
            filename=filename,
            obj=obj,
        )


class ShiftUnderflow(UfcError):
    def __init__(self, index: int, amount: int) -> None:
        super().__init__(f"shifting index {index} by {amount} underflows")


class ParseError(UfcError):
    kind = DiagnosticKind.Parse
    exit_code = 2


class IllegalCharacter(ParseError):
    def __init__(self, char: str, span: Span) -> None:
        super().__init__(f"illegal character {char!r}", span)


class UnexpectedToken(ParseError):
    def __init__(self, text: str, expected: Sequence[str], span: Span) -> None:
        self.expected = frozenset(expected)
        choices = ", ".join(sorted(self.expected))
        found = "end of input" if not text else repr(text)
        super().__init__(f"unexpected {found}, expected one of: {choices}", span)


class UnterminatedDecl(ParseError):
    def __init__(self, name: str, span: Span) -> None:
        super().__init__(f"declaration {name!r} is missing its terminating ';'", span)


class NumeralTooLarge(ParseError):
    def __init__(self, text: str, limit: int, span: Span) -> None:
        super().__init__(f"numeral {text} exceeds the limit {limit}", span)


class BuiltinArity(ParseError):
    def __init__(self, builtin: str, arity: int, given: int, span: Span) -> None:
        super().__init__(
            f"builtin {builtin!r} expects {arity} arguments, got {given}", span
        )


class ElaborationError(UfcError):
    pass


class UnboundName(ElaborationError):
    kind = DiagnosticKind.UnboundName

    def __init__(self, name: str, span: Optional[Span] = None) -> None:
        self.name = name
        super().__init__(f"unbound name {name!r}", span)


class DuplicateDefinition(ElaborationError):
    kind = DiagnosticKind.DuplicateDefinition

    def __init__(self, name: str, span: Optional[Span] = None) -> None:
        self.name = name
        super().__init__(f"{name!r} is already defined", span)


class UnknownName(UfcError, KeyError):
    kind = DiagnosticKind.UnboundName
    exit_code = 3

    def __init__(self, name: str) -> None:
        self.name = name
        super().__init__(f"no declaration named {name!r}")

    def __str__(self) -> str:
        return self.message


class FuelExhausted(UfcError):
    kind = DiagnosticKind.FuelExhausted
    exit_code = 4

    def __init__(self, limit: int) -> None:
        self.limit = limit
        super().__init__(f"reduction exceeded the fuel limit of {limit} steps")


class TypeCheckError(UfcError):
    kind = DiagnosticKind.TypeMismatch

    def __init__(
        self,
        kind: DiagnosticKind,
        message: str,
        *,
        expected: Optional["Term"] = None,
        actual: Optional["Term"] = None,
        names: Sequence[str] = (),
    ) -> None:
        super().__init__(message)
        self.kind = kind
        self.expected = expected
        self.actual = actual
        self.names = tuple(names)

    def to_diagnostic(
        self, filename: str = "<input>", span: Optional[Span] = None, obj: Any = None
    ) -> Diagnostic:
        from .surface.printer import print_term

        expected = actual = None
        if self.expected is not None:
            expected = print_term(self.expected, self.names)
        if self.actual is not None:
            actual = print_term(self.actual, self.names)
        return Diagnostic(
            self.kind,
            self.message,
            span=self.span or span,
            filename=filename,
            expected=expected,
            actual=actual,
            obj=obj,
        )


def exit_code_for(kinds: FrozenSet[DiagnosticKind]) -> int:
    if not kinds:
        return 0
    if DiagnosticKind.Parse in kinds:
        return ParseError.exit_code
    if DiagnosticKind.FuelExhausted in kinds:
        return FuelExhausted.exit_code
    return 1
