import logging
from dataclasses import dataclass
from functools import partial
from pathlib import Path
from typing import (
    TYPE_CHECKING,
    Callable,
    Dict,
    FrozenSet,
    Iterable,
    List,
    Optional,
    Sequence,
    Set,
    Type,
    Union,
)

from . import DiagnosticKind
from .checker import check_decl
from .conf import DEFAULT_FUEL, DEFAULT_MAX_LEVEL
from .diagnostics import Diagnostic, ParseError, UfcError, UnboundName, exit_code_for
from .environment import Environment
from .surface import Parser, SurfaceDecl, TokenKind, elaborate, tokenize

if TYPE_CHECKING:
    from .checks import BaseCheck

logger = logging.getLogger(__name__)


class Registry:
    def __init__(self) -> None:
        self.checks: Dict["Type[BaseCheck]", Sequence[str]] = {}

    def _register(
        self, tags: List[str], check_class: "Type[BaseCheck]"
    ) -> "Type[BaseCheck]":
        self.checks[check_class] = tags
        return check_class

    def register(self, *tags: str) -> Callable[["Type[BaseCheck]"], "Type[BaseCheck]"]:
        return partial(self._register, tags)

    def create_checks(self, tags: Optional[Iterable[str]] = None) -> List["BaseCheck"]:
        wanted = None if tags is None else set(tags)
        return [
            check_class()
            for check_class, check_tags in self.checks.items()
            if wanted is None or wanted.intersection(check_tags)
        ]


@dataclass
class DeclResult:
    name: str
    filename: str
    diagnostic: Optional[Diagnostic] = None
    # set when the declaration was not checked because a dependency failed
    skipped: bool = False

    @property
    def passed(self) -> bool:
        return self.diagnostic is None and not self.skipped


class CheckController:
    """
    Loads files in order into one flat Environment. Errors are collected per
    declaration and loading continues with the next one; a parse error ends
    the file it occurs in.
    """

    def __init__(
        self, max_level: int = DEFAULT_MAX_LEVEL, fuel: int = DEFAULT_FUEL
    ) -> None:
        self.env = Environment(max_level=max_level, fuel=fuel)
        self.diagnostics: List[Diagnostic] = []
        self.results: List[DeclResult] = []
        self.failed: Set[str] = set()

    @property
    def kinds(self) -> FrozenSet[DiagnosticKind]:
        return frozenset(d.kind for d in self.diagnostics)

    @property
    def exit_code(self) -> int:
        return exit_code_for(self.kinds)

    @property
    def is_healthy(self) -> bool:
        return not self.diagnostics

    def load_files(self, paths: Iterable[Union[str, Path]]) -> None:
        for path in paths:
            self.load_file(path)

    def load_file(self, path: Union[str, Path]) -> None:
        path = Path(path)
        logger.debug("loading %s", path)
        self.load_source(path.read_text(encoding="utf-8"), str(path))

    def load_source(self, source: str, filename: str = "<input>") -> None:
        try:
            parser = Parser(tokenize(source))
            while parser.current.kind != TokenKind.EOF:
                self.load_decl(parser.parse_decl(), filename)
        except ParseError as e:
            self.diagnostics.append(e.to_diagnostic(filename))

    def load_decl(self, decl: SurfaceDecl, filename: str) -> None:
        result = DeclResult(decl.name, filename)
        self.results.append(result)
        try:
            self.env = check_decl(self.env, elaborate(decl, self.env))
        except UnboundName as e:
            if e.name not in self.failed:
                self.fail(result, e, decl)
                return
            logger.warning(
                "skipping %s: it refers to %s, which failed to check", decl.name, e.name
            )
            result.skipped = True
            self.failed.add(decl.name)
        except UfcError as e:
            self.fail(result, e, decl)

    def fail(self, result: DeclResult, error: UfcError, decl: SurfaceDecl) -> None:
        span = decl.span
        if error.part == "type":
            span = decl.type.span
        elif error.part == "body" and decl.body is not None:
            span = decl.body.span
        diagnostic = error.to_diagnostic(result.filename, span=span, obj=decl.name)
        result.diagnostic = diagnostic
        self.diagnostics.append(diagnostic)
        self.failed.add(decl.name)


registry = Registry()
register = registry.register
