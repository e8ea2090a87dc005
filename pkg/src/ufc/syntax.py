"""
Core terms. Variables are binding-distance indices (innermost binder is 0),
so alpha-equivalence is plain structural equality.
"""
from dataclasses import dataclass
from typing import Callable, ClassVar, FrozenSet, Iterator, List, Optional, Set, Tuple

from .diagnostics import ShiftUnderflow


@dataclass(frozen=True, slots=True)
class Term:
    children: ClassVar[Tuple[str, ...]] = ()
    binding: ClassVar[FrozenSet[str]] = frozenset()

    def iter_children(self) -> Iterator[Tuple["Term", int]]:
        for name in self.children:
            yield getattr(self, name), 1 if name in self.binding else 0

    def map(self, fn: Callable[["Term", int], "Term"]) -> "Term":
        if not self.children:
            return self
        return type(self)(*(fn(child, binds) for child, binds in self.iter_children()))

    def __str__(self) -> str:
        from .surface.printer import print_term

        return print_term(self)


@dataclass(frozen=True, slots=True)
class Var(Term):
    index: int


@dataclass(frozen=True, slots=True)
class Global(Term):
    name: str


@dataclass(frozen=True, slots=True)
class Universe(Term):
    level: int


@dataclass(frozen=True, slots=True)
class Pi(Term):
    domain: Term
    codomain: Term
    children = ("domain", "codomain")
    binding = frozenset({"codomain"})


@dataclass(frozen=True, slots=True)
class Lambda(Term):
    domain: Term
    body: Term
    children = ("domain", "body")
    binding = frozenset({"body"})


@dataclass(frozen=True, slots=True)
class App(Term):
    fn: Term
    arg: Term
    children = ("fn", "arg")


@dataclass(frozen=True, slots=True)
class Sigma(Term):
    first: Term
    second: Term
    children = ("first", "second")
    binding = frozenset({"second"})


@dataclass(frozen=True, slots=True)
class Mk(Term):
    first: Term
    second: Term
    children = ("first", "second")


@dataclass(frozen=True, slots=True)
class SigElim(Term):
    first: Term
    family: Term
    motive: Term
    branch: Term
    scrutinee: Term
    children = ("first", "family", "motive", "branch", "scrutinee")
    binding = frozenset({"family"})


@dataclass(frozen=True, slots=True)
class Nat(Term):
    pass


@dataclass(frozen=True, slots=True)
class Zero(Term):
    pass


@dataclass(frozen=True, slots=True)
class Suc(Term):
    pred: Term
    children = ("pred",)


@dataclass(frozen=True, slots=True)
class NatElim(Term):
    motive: Term
    base: Term
    step: Term
    scrutinee: Term
    children = ("motive", "base", "step", "scrutinee")


@dataclass(frozen=True, slots=True)
class Id(Term):
    carrier: Term
    lhs: Term
    rhs: Term
    children = ("carrier", "lhs", "rhs")


@dataclass(frozen=True, slots=True)
class Refl(Term):
    carrier: Term
    point: Term
    children = ("carrier", "point")


@dataclass(frozen=True, slots=True)
class J(Term):
    carrier: Term
    base_point: Term
    motive: Term
    base_case: Term
    endpoint: Term
    path: Term
    children = ("carrier", "base_point", "motive", "base_case", "endpoint", "path")


@dataclass(frozen=True, slots=True)
class Empty(Term):
    pass


@dataclass(frozen=True, slots=True)
class EmptyElim(Term):
    motive: Term
    scrutinee: Term
    children = ("motive", "scrutinee")


@dataclass(frozen=True, slots=True)
class Unit(Term):
    pass


@dataclass(frozen=True, slots=True)
class Triv(Term):
    pass


@dataclass(frozen=True, slots=True)
class UnitElim(Term):
    motive: Term
    base: Term
    scrutinee: Term
    children = ("motive", "base", "scrutinee")


@dataclass(frozen=True, slots=True)
class Bool(Term):
    pass


@dataclass(frozen=True, slots=True)
class Yes(Term):
    pass


@dataclass(frozen=True, slots=True)
class No(Term):
    pass


@dataclass(frozen=True, slots=True)
class BoolElim(Term):
    motive: Term
    yes_branch: Term
    no_branch: Term
    scrutinee: Term
    children = ("motive", "yes_branch", "no_branch", "scrutinee")


@dataclass(frozen=True, slots=True)
class SumTy(Term):
    left: Term
    right: Term
    children = ("left", "right")


@dataclass(frozen=True, slots=True)
class Inl(Term):
    left: Term
    right: Term
    payload: Term
    children = ("left", "right", "payload")


@dataclass(frozen=True, slots=True)
class Inr(Term):
    left: Term
    right: Term
    payload: Term
    children = ("left", "right", "payload")


@dataclass(frozen=True, slots=True)
class SumElim(Term):
    left: Term
    right: Term
    motive: Term
    left_branch: Term
    right_branch: Term
    scrutinee: Term
    children = ("left", "right", "motive", "left_branch", "right_branch", "scrutinee")


ELIMINATORS = (SigElim, NatElim, J, EmptyElim, UnitElim, BoolElim, SumElim)


def unwind_suc(t: Term) -> Tuple[int, Term]:
    count = 0
    while isinstance(t, Suc):
        count += 1
        t = t.pred
    return count, t


def wind_suc(base: Term, count: int) -> Term:
    for _ in range(count):
        base = Suc(base)
    return base


def numeral(n: int) -> Term:
    return wind_suc(Zero(), n)


def as_numeral(t: Term) -> Optional[int]:
    count, base = unwind_suc(t)
    return count if isinstance(base, Zero) else None


def shift(t: Term, amount: int, cutoff: int = 0) -> Term:
    if amount == 0:
        return t
    return _shift(t, amount, cutoff)


def _shift(t: Term, amount: int, cutoff: int) -> Term:
    if isinstance(t, Var):
        if t.index < cutoff:
            return t
        if t.index + amount < 0:
            raise ShiftUnderflow(t.index, amount)
        return Var(t.index + amount)
    if isinstance(t, Suc):
        count, base = unwind_suc(t)
        return wind_suc(_shift(base, amount, cutoff), count)
    return t.map(lambda child, binds: _shift(child, amount, cutoff + binds))


def subst(t: Term, replacement: Term) -> Term:
    """Instantiate the outermost binder of scope ``t`` with ``replacement``."""
    return _subst(t, 0, replacement)


def _subst(t: Term, depth: int, replacement: Term) -> Term:
    if isinstance(t, Var):
        if t.index == depth:
            return shift(replacement, depth, 0)
        if t.index > depth:
            return Var(t.index - 1)
        return t
    if isinstance(t, Suc):
        count, base = unwind_suc(t)
        return wind_suc(_subst(base, depth, replacement), count)
    return t.map(lambda child, binds: _subst(child, depth + binds, replacement))


def alpha_eq(t1: Term, t2: Term) -> bool:
    stack: List[Tuple[Term, Term]] = [(t1, t2)]
    while stack:
        a, b = stack.pop()
        if a is b:
            continue
        if type(a) is not type(b):
            return False
        if not a.children:
            if a != b:
                return False
            continue
        stack.extend((getattr(a, name), getattr(b, name)) for name in a.children)
    return True


def free_in(t: Term, index: int) -> bool:
    stack: List[Tuple[Term, int]] = [(t, index)]
    while stack:
        term, target = stack.pop()
        if isinstance(term, Var):
            if term.index == target:
                return True
            continue
        stack.extend((child, target + binds) for child, binds in term.iter_children())
    return False


def is_closed(t: Term, depth: int = 0) -> bool:
    stack: List[Tuple[Term, int]] = [(t, depth)]
    while stack:
        term, bound = stack.pop()
        if isinstance(term, Var):
            if term.index >= bound:
                return False
            continue
        stack.extend((child, bound + binds) for child, binds in term.iter_children())
    return True


def globals_of(t: Term) -> Set[str]:
    found: Set[str] = set()
    stack = [t]
    while stack:
        term = stack.pop()
        if isinstance(term, Global):
            found.add(term.name)
            continue
        stack.extend(child for child, _ in term.iter_children())
    return found
