from dataclasses import dataclass, field
from types import MappingProxyType
from typing import FrozenSet, Iterator, Mapping, Optional

from .conf import DEFAULT_FUEL, DEFAULT_MAX_LEVEL
from .diagnostics import UnknownName
from .syntax import Term


@dataclass(frozen=True)
class Declaration:
    name: str
    type: Term
    body: Optional[Term] = None
    axioms: FrozenSet[str] = frozenset()

    @property
    def is_postulate(self) -> bool:
        return self.body is None


@dataclass(frozen=True)
class Environment:
    """
    Global declarations in declaration order. Definitions unfold during
    conversion, postulates never do.
    """

    decls: Mapping[str, Declaration] = field(default_factory=dict)
    max_level: int = DEFAULT_MAX_LEVEL
    fuel: int = DEFAULT_FUEL

    def __contains__(self, name: object) -> bool:
        return name in self.decls

    def __iter__(self) -> Iterator[Declaration]:
        return iter(self.decls.values())

    def __len__(self) -> int:
        return len(self.decls)

    def lookup(self, name: str) -> Declaration:
        try:
            return self.decls[name]
        except KeyError:
            raise UnknownName(name) from None

    def unfold(self, name: str) -> Optional[Term]:
        decl = self.decls.get(name)
        return None if decl is None else decl.body

    @property
    def axiom_deps(self) -> Mapping[str, FrozenSet[str]]:
        """Transitive postulate dependencies of every declaration."""
        return MappingProxyType({name: d.axioms for name, d in self.decls.items()})

    def axioms_of(self, name: str) -> FrozenSet[str]:
        return self.lookup(name).axioms

    def extend(self, decl: Declaration) -> "Environment":
        decls = dict(self.decls)
        decls[decl.name] = decl
        return Environment(
            decls=MappingProxyType(decls), max_level=self.max_level, fuel=self.fuel
        )
