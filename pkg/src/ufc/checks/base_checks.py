from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, Any, Iterator, Optional

import django.core.checks

from .. import DiagnosticKind
from ..diagnostics import Diagnostic

if TYPE_CHECKING:
    from ..corpus import CorpusReport

__all__ = ["BaseCheck"]


class BaseCheck(ABC):
    Id: DiagnosticKind
    level = django.core.checks.ERROR

    def __init__(self, level: Optional[int] = None) -> None:
        self.level = level or self.level

    def __call__(self, report: "CorpusReport") -> Iterator[Diagnostic]:
        yield from self.apply(report)

    @abstractmethod
    def apply(self, report: "CorpusReport") -> Iterator[Diagnostic]:
        raise NotImplementedError

    def message(self, message: str, filename: str, obj: Any = None) -> Diagnostic:
        return Diagnostic(
            self.Id, message, filename=filename, obj=obj, level=self.level
        )
