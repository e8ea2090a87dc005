"""
The bundled ``.uf`` corpus and its manifest.
"""
import csv
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Union

from . import checks  # noqa: F401  registers the corpus checks
from .controller import CheckController, registry
from .diagnostics import Diagnostic

logger = logging.getLogger(__name__)

PRELUDE_DIR = Path(__file__).parent / "prelude"
MANIFEST_NAME = "manifest.tsv"
NO_AXIOMS = "-"


@dataclass(frozen=True)
class ManifestEntry:
    name: str
    file: str
    anchor: str
    axioms: FrozenSet[str] = frozenset()


@dataclass
class CorpusManifest:
    entries: List[ManifestEntry] = field(default_factory=list)

    @classmethod
    def load(cls, path: Union[str, Path]) -> "CorpusManifest":
        with open(path, newline="", encoding="utf-8") as f:
            rows = csv.DictReader(f, delimiter="\t", quoting=csv.QUOTE_NONE)
            entries = [
                ManifestEntry(
                    name=row["name"],
                    file=row["file"],
                    anchor=row["paper-anchor"],
                    axioms=parse_axioms(row["expected-axioms"]),
                )
                for row in rows
            ]
        return cls(entries)

    @property
    def files(self) -> List[str]:
        return list(dict.fromkeys(entry.file for entry in self.entries))

    def by_name(self) -> Dict[str, ManifestEntry]:
        return {entry.name: entry for entry in self.entries}


def parse_axioms(text: str) -> FrozenSet[str]:
    text = text.strip()
    if not text or text == NO_AXIOMS:
        return frozenset()
    return frozenset(name.strip() for name in text.split(","))


def corpus_files(directory: Union[str, Path] = PRELUDE_DIR) -> List[Path]:
    """Corpus files in the order they are checked (``NN_`` prefix)."""
    return sorted(Path(directory).glob("*.uf"))


@dataclass
class ReportItem:
    name: str
    file: str
    passed: bool
    axioms: FrozenSet[str] = frozenset()
    diagnostics: List[Diagnostic] = field(default_factory=list)


@dataclass
class CorpusReport:
    manifest: CorpusManifest
    controller: CheckController
    items: List[ReportItem] = field(default_factory=list)
    diagnostics: List[Diagnostic] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.diagnostics and all(item.passed for item in self.items)

    def item(self, name: str) -> ReportItem:
        for item in self.items:
            if item.name == name:
                return item
        raise KeyError(name)

    def failures(self) -> List[str]:
        return [item.name for item in self.items if not item.passed]


def verify_corpus(
    env_builder: Callable[[], CheckController] = CheckController,
    directory: Union[str, Path] = PRELUDE_DIR,
    manifest: Optional[CorpusManifest] = None,
    tags: Optional[Iterable[str]] = None,
) -> CorpusReport:
    """
    Check every corpus file in order and run the registered corpus checks on
    the outcome. Failures are reported per declaration, never raised.
    """
    directory = Path(directory)
    if manifest is None:
        manifest = CorpusManifest.load(directory / MANIFEST_NAME)
    controller = env_builder()
    for path in corpus_files(directory):
        controller.load_file(path)
    report = CorpusReport(manifest, controller)
    for result in controller.results:
        axioms: FrozenSet[str] = frozenset()
        if result.passed:
            axioms = controller.env.axioms_of(result.name)
        report.items.append(
            ReportItem(
                name=result.name,
                file=Path(result.filename).name,
                passed=result.passed,
                axioms=axioms,
                diagnostics=[result.diagnostic] if result.diagnostic else [],
            )
        )
    report.diagnostics.extend(controller.diagnostics)
    for check in registry.create_checks(tags):
        for diagnostic in check(report):
            logger.debug("%s: %s", type(check).__name__, diagnostic.msg)
            report.diagnostics.append(diagnostic)
            if diagnostic.obj is not None:
                for item in report.items:
                    if item.name == diagnostic.obj:
                        item.passed = False
                        item.diagnostics.append(diagnostic)
    return report
