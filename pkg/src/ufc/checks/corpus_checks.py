from typing import TYPE_CHECKING, Iterator

from .. import DiagnosticKind
from ..controller import register
from ..diagnostics import Diagnostic
from .base_checks import BaseCheck

if TYPE_CHECKING:
    from ..corpus import CorpusReport

__all__ = ["CheckManifestEntries", "CheckUnlistedDeclarations", "CheckAxiomSets"]


@register("manifest")
class CheckManifestEntries(BaseCheck):
    """Every manifest entry is declared in the file it names."""

    Id = DiagnosticKind.ManifestDrift

    def apply(self, report: "CorpusReport") -> Iterator[Diagnostic]:
        declared = {(item.file, item.name) for item in report.items}
        for entry in report.manifest.entries:
            if (entry.file, entry.name) not in declared:
                yield self.message(
                    f"{entry.name} is listed in the manifest but not declared in {entry.file}",
                    filename=entry.file,
                    obj=entry.name,
                )


@register("manifest")
class CheckUnlistedDeclarations(BaseCheck):
    """Every corpus declaration has a manifest entry."""

    Id = DiagnosticKind.ManifestDrift

    def apply(self, report: "CorpusReport") -> Iterator[Diagnostic]:
        listed = report.manifest.by_name()
        for item in report.items:
            if item.name not in listed:
                yield self.message(
                    f"{item.name} is declared but missing from the manifest",
                    filename=item.file,
                    obj=item.name,
                )


@register("axioms")
class CheckAxiomSets(BaseCheck):
    Id = DiagnosticKind.AxiomMismatch

    def apply(self, report: "CorpusReport") -> Iterator[Diagnostic]:
        listed = report.manifest.by_name()
        for item in report.items:
            entry = listed.get(item.name)
            if entry is None or not item.passed or entry.axioms == item.axioms:
                continue
            expected = ", ".join(sorted(entry.axioms)) or "none"
            actual = ", ".join(sorted(item.axioms)) or "none"
            yield self.message(
                f"{item.name} depends on axioms {actual}, the manifest expects {expected}",
                filename=item.file,
                obj=item.name,
            )
