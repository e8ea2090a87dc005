"""
Pretty printer producing input syntax. Binder names are generated and
primed until they clash with nothing in scope, so printed output parses
back to an alpha-equivalent term.
"""
from typing import Iterable, Sequence, Set, Tuple

from .. import conf
from ..environment import Declaration
from ..syntax import (
    App,
    Global,
    Lambda,
    Pi,
    Sigma,
    SigElim,
    Suc,
    Term,
    Universe,
    Var,
    Zero,
    as_numeral,
    free_in,
    globals_of,
    unwind_suc,
)
from .tokens import KEYWORDS

__all__ = ["fresh_name", "print_term", "print_decl"]

# precedence levels
TERM, APP, ATOM = 0, 1, 2

KEYWORD_OF = {
    "Nat": "Nat",
    "Id": "Id",
    "Refl": "refl",
    "J": "J",
    "NatElim": "natElim",
    "Empty": "Empty",
    "EmptyElim": "emptyElim",
    "Unit": "Unit",
    "Triv": "triv",
    "UnitElim": "unitElim",
    "Bool": "Bool",
    "Yes": "yes",
    "No": "no",
    "BoolElim": "boolElim",
    "Mk": "mk",
    "SumTy": "Sum",
    "Inl": "inl",
    "Inr": "inr",
    "SumElim": "sumElim",
}


def fresh_name(base: str, taken: Iterable[str]) -> str:
    taken = set(taken)
    name = base
    while name in taken or name in KEYWORDS:
        name += "'"
    return name


class Printer:
    def __init__(self, reserved: Set[str]) -> None:
        # globals referenced anywhere in the printed term
        self.reserved = reserved

    def bind(self, domain: Term, names: Tuple[str, ...]) -> str:
        base = "A" if isinstance(domain, Universe) else "x"
        return fresh_name(base, self.reserved.union(names))

    def print(self, t: Term, names: Tuple[str, ...], level: int = TERM) -> str:
        text, own = self.render(t, names)
        return f"({text})" if own < level else text

    def render(self, t: Term, names: Tuple[str, ...]) -> Tuple[str, int]:
        if isinstance(t, Var):
            if t.index < len(names):
                return names[-1 - t.index], ATOM
            return f"#{t.index}", ATOM
        if isinstance(t, Global):
            return t.name, ATOM
        if isinstance(t, Universe):
            return f"U{t.level}", ATOM
        if isinstance(t, (Zero, Suc)):
            return self.render_suc(t, names)
        if isinstance(t, Pi):
            if not free_in(t.codomain, 0):
                domain = self.print(t.domain, names, APP)
                codomain = self.print(t.codomain, names + ("",))
                return f"{domain} -> {codomain}", TERM
            name = self.bind(t.domain, names)
            domain = self.print(t.domain, names)
            codomain = self.print(t.codomain, names + (name,))
            return f"({name} : {domain}) -> {codomain}", TERM
        if isinstance(t, Lambda):
            name = self.bind(t.domain, names)
            domain = self.print(t.domain, names)
            body = self.print(t.body, names + (name,))
            return f"fun ({name} : {domain}) => {body}", TERM
        if isinstance(t, Sigma):
            name = self.bind(t.first, names)
            first = self.print(t.first, names)
            second = self.print(t.second, names + (name,))
            return f"Sig ({name} : {first}), {second}", TERM
        if isinstance(t, App):
            fn = self.print(t.fn, names, APP)
            return f"{fn} {self.print(t.arg, names, ATOM)}", APP
        if isinstance(t, SigElim):
            name = self.bind(t.first, names)
            first = self.print(t.first, names)
            family = self.print(t.family, names + (name,))
            rest = " ".join(
                self.print(arg, names, ATOM) for arg in (t.motive, t.branch, t.scrutinee)
            )
            return (
                f"sigElim {self.print(t.first, names, ATOM)} "
                f"(fun ({name} : {first}) => {family}) {rest}",
                APP,
            )
        keyword = KEYWORD_OF[type(t).__name__]
        if not t.children:
            return keyword, ATOM
        args = " ".join(self.print(child, names, ATOM) for child, _ in t.iter_children())
        return f"{keyword} {args}", APP

    def render_suc(self, t: Term, names: Tuple[str, ...]) -> Tuple[str, int]:
        value = as_numeral(t)
        if value is not None and value <= conf.MAX_NUMERAL:
            return str(value), ATOM
        if value is not None:
            # the largest readable numeral under a suc chain
            count, text = value - conf.MAX_NUMERAL, str(conf.MAX_NUMERAL)
        else:
            count, base = unwind_suc(t)
            text = self.print(base, names, ATOM)
        for _ in range(count - 1):
            text = f"(suc {text})"
        return f"suc {text}", APP


def print_term(t: Term, names: Sequence[str] = ()) -> str:
    """Render ``t`` with ``names`` naming its free variables, innermost last."""
    return Printer(globals_of(t)).print(t, tuple(names))


def print_decl(decl: Declaration) -> str:
    type = print_term(decl.type)
    if decl.body is None:
        return f"postulate {decl.name} : {type};"
    return f"def {decl.name} : {type} := {print_term(decl.body)};"
