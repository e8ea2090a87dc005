"""
Name resolution and numeral desugaring from surface trees to core terms.
"""
from typing import Callable, Dict, Sequence, Tuple

from .. import DiagnosticKind
from ..diagnostics import DuplicateDefinition, TypeCheckError, UnboundName
from ..environment import Declaration, Environment
from ..evaluator import equal
from ..syntax import (
    App,
    Bool,
    BoolElim,
    Empty,
    EmptyElim,
    Global,
    Id,
    Inl,
    Inr,
    J,
    Lambda,
    Mk,
    Nat,
    NatElim,
    No,
    Pi,
    Refl,
    Sigma,
    SigElim,
    Suc,
    SumElim,
    SumTy,
    Term,
    Triv,
    Unit,
    UnitElim,
    Universe,
    Var,
    Yes,
    Zero,
    numeral,
    shift,
)
from .parser import (
    SApp,
    SBuiltin,
    SLambda,
    SName,
    SNumeral,
    SPi,
    SSigma,
    SurfaceDecl,
    SurfaceTerm,
)

__all__ = ["elaborate", "elaborate_term"]

CONSTRUCTORS: Dict[str, Callable[..., Term]] = {
    "Nat": Nat,
    "zero": Zero,
    "suc": Suc,
    "Id": Id,
    "refl": Refl,
    "J": J,
    "natElim": NatElim,
    "Empty": Empty,
    "emptyElim": EmptyElim,
    "Unit": Unit,
    "triv": Triv,
    "unitElim": UnitElim,
    "Bool": Bool,
    "yes": Yes,
    "no": No,
    "boolElim": BoolElim,
    "mk": Mk,
    "Sum": SumTy,
    "inl": Inl,
    "inr": Inr,
    "sumElim": SumElim,
    **{f"U{level}": (lambda level=level: Universe(level)) for level in range(10)},
}


class Elaborator:
    def __init__(self, env: Environment) -> None:
        self.env = env

    def resolve(self, term: SName, names: Tuple[str, ...]) -> Term:
        for distance, name in enumerate(reversed(names)):
            if name == term.name:
                return Var(distance)
        if term.name in self.env:
            return Global(term.name)
        raise UnboundName(term.name, term.span)

    def elaborate(self, term: SurfaceTerm, names: Tuple[str, ...]) -> Term:
        if isinstance(term, SName):
            return self.resolve(term, names)
        if isinstance(term, SNumeral):
            return numeral(term.value)
        if isinstance(term, SApp):
            return App(self.elaborate(term.fn, names), self.elaborate(term.arg, names))
        if isinstance(term, SPi):
            domain = self.elaborate(term.domain, names)
            # arrows bind a variable no identifier can refer to
            inner = names + (term.name or "",)
            return Pi(domain, self.elaborate(term.codomain, inner))
        if isinstance(term, SLambda):
            domain = self.elaborate(term.domain, names)
            return Lambda(domain, self.elaborate(term.body, names + (term.name,)))
        if isinstance(term, SSigma):
            first = self.elaborate(term.first, names)
            return Sigma(first, self.elaborate(term.second, names + (term.name,)))
        if isinstance(term, SBuiltin):
            if term.name == "sigElim":
                return self.elaborate_sig_elim(term, names)
            args = [self.elaborate(arg, names) for arg in term.args]
            return CONSTRUCTORS[term.name](*args)
        raise TypeError(f"unknown surface term {term!r}")

    def elaborate_sig_elim(self, term: SBuiltin, names: Tuple[str, ...]) -> Term:
        first, family, motive, branch, scrutinee = term.args
        first_term = self.elaborate(first, names)
        if isinstance(family, SLambda):
            annotation = self.elaborate(family.domain, names)
            if not equal(self.env, annotation, first_term):
                error = TypeCheckError(
                    DiagnosticKind.TypeMismatch,
                    "sigElim family domain does not match the first component type",
                    expected=first_term,
                    actual=annotation,
                    names=names,
                )
                error.span = family.domain.span
                raise error
            family_term = self.elaborate(family.body, names + (family.name,))
        else:
            family_term = App(shift(self.elaborate(family, names), 1), Var(0))
        return SigElim(
            first_term,
            family_term,
            self.elaborate(motive, names),
            self.elaborate(branch, names),
            self.elaborate(scrutinee, names),
        )


def elaborate_term(
    term: SurfaceTerm, env: Environment, names: Sequence[str] = ()
) -> Term:
    return Elaborator(env).elaborate(term, tuple(names))


def elaborate(decl: SurfaceDecl, env: Environment) -> Declaration:
    if decl.name in env:
        raise DuplicateDefinition(decl.name, decl.name_span)
    elaborator = Elaborator(env)
    type = elaborator.elaborate(decl.type, ())
    body = None if decl.body is None else elaborator.elaborate(decl.body, ())
    return Declaration(decl.name, type, body)
