"""
Bidirectional type checking. Lambdas and pairs are checked against their
expected Pi/Sigma types; everything else is inferred and compared with
definitional equality.
"""
import dataclasses
import logging
from typing import List, Optional, Sequence, Tuple

from . import DiagnosticKind
from .diagnostics import DuplicateDefinition, TypeCheckError, UfcError
from .environment import Declaration, Environment
from .evaluator import Evaluator, Fuel
from .syntax import (
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
    globals_of,
    shift,
    subst,
    unwind_suc,
)

logger = logging.getLogger(__name__)

__all__ = [
    "Context",
    "Declaration",
    "Checker",
    "infer",
    "check",
    "check_decl",
    "axioms_of",
]


@dataclasses.dataclass(frozen=True)
class Context:
    entries: Tuple[Tuple[str, Term], ...] = ()

    @property
    def depth(self) -> int:
        return len(self.entries)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.entries)

    def extend(self, type: Term, name: Optional[str] = None) -> "Context":
        if name is None:
            from .surface.printer import fresh_name

            name = fresh_name("A" if isinstance(type, Universe) else "x", self.names)
        return Context(self.entries + ((name, type),))

    def lookup(self, index: int) -> Term:
        _, type = self.entries[-1 - index]
        return shift(type, index + 1, 0)


class Checker:
    def __init__(self, env: Environment, fuel: Optional[Fuel] = None) -> None:
        self.env = env
        self.evaluator = Evaluator(env, fuel)

    def whnf(self, t: Term) -> Term:
        return self.evaluator.whnf(t)

    def equal(self, a: Term, b: Term) -> bool:
        return self.evaluator.equal(a, b)

    def error(
        self,
        ctx: Context,
        kind: DiagnosticKind,
        message: str,
        expected: Optional[Term] = None,
        actual: Optional[Term] = None,
    ) -> TypeCheckError:
        return TypeCheckError(
            kind, message, expected=expected, actual=actual, names=ctx.names
        )

    def infer_universe(self, ctx: Context, t: Term) -> int:
        type = self.whnf(self.infer(ctx, t))
        if not isinstance(type, Universe):
            raise self.error(
                ctx, DiagnosticKind.NotAUniverse, "expected a type", actual=type
            )
        return type.level

    def check_motive(
        self, ctx: Context, motive: Term, domains: Sequence[Term], eliminator: str
    ) -> int:
        """``motive`` must have type ``D1 -> ... -> Dn -> U_i``; returns ``i``."""
        type = self.infer(ctx, motive)
        for domain in domains:
            type = self.whnf(type)
            if not isinstance(type, Pi) or not self.equal(type.domain, domain):
                break
            type = type.codomain
        else:
            type = self.whnf(type)
            if isinstance(type, Universe):
                return type.level
        shape: Term = Universe(0)
        for domain in reversed(domains):
            shape = Pi(domain, shift(shape, 1, 0))
        raise self.error(
            ctx,
            DiagnosticKind.MotiveShape,
            f"motive of {eliminator} must land in a universe",
            expected=shape,
            actual=self.infer(ctx, motive),
        )

    def check(self, ctx: Context, t: Term, expected: Term) -> None:
        if isinstance(t, Lambda):
            target = self.whnf(expected)
            if isinstance(target, Pi):
                self.infer_universe(ctx, t.domain)
                if not self.equal(t.domain, target.domain):
                    raise self.error(
                        ctx,
                        DiagnosticKind.TypeMismatch,
                        "function domain does not match",
                        expected=target.domain,
                        actual=t.domain,
                    )
                self.check(ctx.extend(target.domain), t.body, target.codomain)
                return
        elif isinstance(t, Mk):
            target = self.whnf(expected)
            if isinstance(target, Sigma):
                self.check(ctx, t.first, target.first)
                self.check(ctx, t.second, subst(target.second, t.first))
                return
        actual = self.infer(ctx, t)
        if not self.equal(actual, expected):
            raise self.error(
                ctx,
                DiagnosticKind.TypeMismatch,
                "type mismatch",
                expected=expected,
                actual=actual,
            )

    def infer(self, ctx: Context, t: Term) -> Term:
        if isinstance(t, Var):
            return ctx.lookup(t.index)
        if isinstance(t, Global):
            decl = self.env.decls.get(t.name)
            if decl is None:
                raise self.error(
                    ctx, DiagnosticKind.UnboundName, f"unbound name {t.name!r}"
                )
            return decl.type
        if isinstance(t, Universe):
            if t.level + 1 > self.env.max_level:
                raise self.error(
                    ctx,
                    DiagnosticKind.UniverseOverflow,
                    f"U{t.level} has no type below the maximum level U{self.env.max_level}",
                )
            return Universe(t.level + 1)
        if isinstance(t, (Pi, Sigma)):
            first = t.domain if isinstance(t, Pi) else t.first
            second = t.codomain if isinstance(t, Pi) else t.second
            i = self.infer_universe(ctx, first)
            j = self.infer_universe(ctx.extend(first), second)
            return Universe(max(i, j))
        if isinstance(t, Lambda):
            self.infer_universe(ctx, t.domain)
            return Pi(t.domain, self.infer(ctx.extend(t.domain), t.body))
        if isinstance(t, App):
            fn_type = self.whnf(self.infer(ctx, t.fn))
            if not isinstance(fn_type, Pi):
                raise self.error(
                    ctx,
                    DiagnosticKind.NotAFunction,
                    "applied term is not a function",
                    actual=fn_type,
                )
            self.check(ctx, t.arg, fn_type.domain)
            return subst(fn_type.codomain, t.arg)
        if isinstance(t, Mk):
            first = self.infer(ctx, t.first)
            second = self.infer(ctx, t.second)
            return Sigma(first, shift(second, 1, 0))
        if isinstance(t, (Nat, Empty, Unit, Bool)):
            return Universe(0)
        if isinstance(t, Zero):
            return Nat()
        if isinstance(t, Suc):
            _, base = unwind_suc(t)
            self.check(ctx, base, Nat())
            return Nat()
        if isinstance(t, Triv):
            return Unit()
        if isinstance(t, (Yes, No)):
            return Bool()
        if isinstance(t, Id):
            level = self.infer_universe(ctx, t.carrier)
            for endpoint in (t.lhs, t.rhs):
                self.check_endpoint(ctx, endpoint, t.carrier)
            return Universe(level)
        if isinstance(t, Refl):
            self.infer_universe(ctx, t.carrier)
            self.check(ctx, t.point, t.carrier)
            return Id(t.carrier, t.point, t.point)
        if isinstance(t, SumTy):
            i = self.infer_universe(ctx, t.left)
            j = self.infer_universe(ctx, t.right)
            return Universe(max(i, j))
        if isinstance(t, (Inl, Inr)):
            self.infer_universe(ctx, t.left)
            self.infer_universe(ctx, t.right)
            side = t.left if isinstance(t, Inl) else t.right
            self.check(ctx, t.payload, side)
            return SumTy(t.left, t.right)
        return self.infer_eliminator(ctx, t)

    def check_endpoint(self, ctx: Context, endpoint: Term, carrier: Term) -> None:
        target = self.whnf(carrier)
        if isinstance(endpoint, Lambda) and isinstance(target, Pi):
            self.check(ctx, endpoint, carrier)
            return
        if isinstance(endpoint, Mk) and isinstance(target, Sigma):
            self.check(ctx, endpoint, carrier)
            return
        actual = self.infer(ctx, endpoint)
        if not self.equal(actual, carrier):
            raise self.error(
                ctx,
                DiagnosticKind.IdCarrierMismatch,
                "both sides of an identity type must share its carrier",
                expected=carrier,
                actual=actual,
            )

    def infer_eliminator(self, ctx: Context, t: Term) -> Term:
        if isinstance(t, NatElim):
            self.check_motive(ctx, t.motive, [Nat()], "natElim")
            self.check(ctx, t.base, App(t.motive, Zero()))
            step = Pi(
                Nat(),
                Pi(App(shift(t.motive, 1), Var(0)), App(shift(t.motive, 2), Suc(Var(1)))),
            )
            self.check(ctx, t.step, step)
            self.check(ctx, t.scrutinee, Nat())
            return App(t.motive, t.scrutinee)
        if isinstance(t, J):
            self.infer_universe(ctx, t.carrier)
            self.check(ctx, t.base_point, t.carrier)
            family = Id(shift(t.carrier, 1), shift(t.base_point, 1), Var(0))
            self.check_motive(ctx, t.motive, [t.carrier, family], "J")
            self.check(
                ctx, t.base_case, App(App(t.motive, t.base_point), Refl(t.carrier, t.base_point))
            )
            self.check(ctx, t.endpoint, t.carrier)
            self.check(ctx, t.path, Id(t.carrier, t.base_point, t.endpoint))
            return App(App(t.motive, t.endpoint), t.path)
        if isinstance(t, SigElim):
            self.infer_universe(ctx, t.first)
            self.infer_universe(ctx.extend(t.first), t.family)
            sigma = Sigma(t.first, t.family)
            self.check_motive(ctx, t.motive, [sigma], "sigElim")
            branch = Pi(t.first, Pi(t.family, App(shift(t.motive, 2), Mk(Var(1), Var(0)))))
            self.check(ctx, t.branch, branch)
            self.check(ctx, t.scrutinee, sigma)
            return App(t.motive, t.scrutinee)
        if isinstance(t, EmptyElim):
            self.check_motive(ctx, t.motive, [Empty()], "emptyElim")
            self.check(ctx, t.scrutinee, Empty())
            return App(t.motive, t.scrutinee)
        if isinstance(t, UnitElim):
            self.check_motive(ctx, t.motive, [Unit()], "unitElim")
            self.check(ctx, t.base, App(t.motive, Triv()))
            self.check(ctx, t.scrutinee, Unit())
            return App(t.motive, t.scrutinee)
        if isinstance(t, BoolElim):
            self.check_motive(ctx, t.motive, [Bool()], "boolElim")
            self.check(ctx, t.yes_branch, App(t.motive, Yes()))
            self.check(ctx, t.no_branch, App(t.motive, No()))
            self.check(ctx, t.scrutinee, Bool())
            return App(t.motive, t.scrutinee)
        if isinstance(t, SumElim):
            self.infer_universe(ctx, t.left)
            self.infer_universe(ctx, t.right)
            sum_type = SumTy(t.left, t.right)
            self.check_motive(ctx, t.motive, [sum_type], "sumElim")
            left, right = shift(t.left, 1), shift(t.right, 1)
            motive = shift(t.motive, 1)
            self.check(ctx, t.left_branch, Pi(t.left, App(motive, Inl(left, right, Var(0)))))
            self.check(ctx, t.right_branch, Pi(t.right, App(motive, Inr(left, right, Var(0)))))
            self.check(ctx, t.scrutinee, sum_type)
            return App(t.motive, t.scrutinee)
        raise TypeError(f"unknown term {t!r}")

    def check_decl(self, decl: Declaration) -> Environment:
        if decl.name in self.env:
            raise DuplicateDefinition(decl.name)
        ctx = Context()
        try:
            self.infer_universe(ctx, decl.type)
        except UfcError as e:
            e.part = "type"
            raise
        if decl.body is not None:
            try:
                self.check(ctx, decl.body, decl.type)
            except UfcError as e:
                e.part = "body"
                raise
        axioms = {decl.name} if decl.is_postulate else set()
        referenced = globals_of(decl.type)
        if decl.body is not None:
            referenced |= globals_of(decl.body)
        deps = self.env.axiom_deps
        for name in referenced:
            axioms |= deps[name]
        logger.debug(
            "checked %s in %d steps, axioms %s",
            decl.name,
            self.evaluator.fuel.used,
            sorted(axioms) or "none",
        )
        return self.env.extend(dataclasses.replace(decl, axioms=frozenset(axioms)))


def infer(env: Environment, ctx: Context, t: Term) -> Term:
    return Checker(env).infer(ctx, t)


def check(env: Environment, ctx: Context, t: Term, expected: Term) -> None:
    Checker(env).check(ctx, t, expected)


def check_decl(env: Environment, decl: Declaration) -> Environment:
    return Checker(env).check_decl(decl)


def axioms_of(env: Environment, name: str) -> List[str]:
    return sorted(env.axioms_of(name))
