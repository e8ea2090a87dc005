"""
Definitional equality: weak-head and full normalization by delta, beta and
iota, plus function eta in conversion. Reduction is leftmost-outermost and
bounded by fuel.
"""
import dataclasses
import logging
from typing import Iterator, Optional

from .diagnostics import FuelExhausted
from .environment import Environment
from .syntax import (
    ELIMINATORS,
    App,
    BoolElim,
    EmptyElim,
    Global,
    Inl,
    Inr,
    J,
    Lambda,
    Mk,
    NatElim,
    No,
    Refl,
    SigElim,
    Suc,
    SumElim,
    Term,
    Triv,
    UnitElim,
    Var,
    Yes,
    Zero,
    alpha_eq,
    shift,
    subst,
    unwind_suc,
    wind_suc,
)

logger = logging.getLogger(__name__)


class Fuel:
    def __init__(self, limit: int) -> None:
        self.limit = limit
        self.used = 0

    def tick(self) -> None:
        self.used += 1
        if self.used > self.limit:
            raise FuelExhausted(self.limit)


def scrutinee_field(t: Term) -> str:
    return "path" if isinstance(t, J) else "scrutinee"


def iota(t: Term, scrutinee: Term) -> Optional[Term]:
    """Fire the computation rule of eliminator ``t`` on ``scrutinee`` if it applies."""
    if isinstance(t, NatElim):
        if isinstance(scrutinee, Zero):
            return t.base
        if isinstance(scrutinee, Suc):
            recursive = NatElim(t.motive, t.base, t.step, scrutinee.pred)
            return App(App(t.step, scrutinee.pred), recursive)
    elif isinstance(t, J):
        if isinstance(scrutinee, Refl):
            return t.base_case
    elif isinstance(t, SigElim):
        if isinstance(scrutinee, Mk):
            return App(App(t.branch, scrutinee.first), scrutinee.second)
    elif isinstance(t, BoolElim):
        if isinstance(scrutinee, Yes):
            return t.yes_branch
        if isinstance(scrutinee, No):
            return t.no_branch
    elif isinstance(t, UnitElim):
        if isinstance(scrutinee, Triv):
            return t.base
    elif isinstance(t, SumElim):
        if isinstance(scrutinee, Inl):
            return App(t.left_branch, scrutinee.payload)
        if isinstance(scrutinee, Inr):
            return App(t.right_branch, scrutinee.payload)
    elif isinstance(t, EmptyElim):
        return None
    return None


class Evaluator:
    def __init__(self, env: Environment, fuel: Optional[Fuel] = None) -> None:
        self.env = env
        self.fuel = fuel or Fuel(env.fuel)

    def whnf(self, t: Term) -> Term:
        while True:
            if isinstance(t, Global):
                body = self.env.unfold(t.name)
                if body is None:
                    return t
                self.fuel.tick()
                t = body
            elif isinstance(t, App):
                fn = self.whnf(t.fn)
                if not isinstance(fn, Lambda):
                    return t if fn is t.fn else App(fn, t.arg)
                self.fuel.tick()
                t = subst(fn.body, t.arg)
            elif isinstance(t, ELIMINATORS):
                name = scrutinee_field(t)
                scrutinee = self.whnf(getattr(t, name))
                reduct = iota(t, scrutinee)
                if reduct is None:
                    return dataclasses.replace(t, **{name: scrutinee})
                self.fuel.tick()
                t = reduct
            else:
                return t

    def normalize(self, t: Term) -> Term:
        t = self.whnf(t)
        if isinstance(t, Suc):
            count, base = unwind_suc(t)
            while True:
                base = self.whnf(base)
                more, base = unwind_suc(base)
                if not more:
                    break
                count += more
            return wind_suc(self.normalize(base), count)
        return t.map(lambda child, _: self.normalize(child))

    def equal(self, a: Term, b: Term) -> bool:
        if alpha_eq(a, b):
            return True
        a, b = self.whnf(a), self.whnf(b)
        if isinstance(a, Lambda) or isinstance(b, Lambda):
            return self.equal(_eta_body(a), _eta_body(b))
        while isinstance(a, Suc) and isinstance(b, Suc):
            a, b = self.whnf(a.pred), self.whnf(b.pred)
        if type(a) is not type(b):
            return False
        if not a.children:
            return a == b
        return all(
            self.equal(getattr(a, name), getattr(b, name)) for name in a.children
        )


def _eta_body(t: Term) -> Term:
    if isinstance(t, Lambda):
        return t.body
    return App(shift(t, 1, 0), Var(0))


def head_step(env: Environment, t: Term) -> Optional[Term]:
    """One weak-head reduction step, or None when ``t`` is in weak-head normal form."""
    if isinstance(t, Global):
        return env.unfold(t.name)
    if isinstance(t, App):
        if isinstance(t.fn, Lambda):
            return subst(t.fn.body, t.arg)
        fn = head_step(env, t.fn)
        return None if fn is None else App(fn, t.arg)
    if isinstance(t, ELIMINATORS):
        name = scrutinee_field(t)
        scrutinee = getattr(t, name)
        reduct = iota(t, scrutinee)
        if reduct is not None:
            return reduct
        scrutinee = head_step(env, scrutinee)
        return None if scrutinee is None else dataclasses.replace(t, **{name: scrutinee})
    return None


def step(env: Environment, t: Term) -> Optional[Term]:
    reduct = head_step(env, t)
    if reduct is not None:
        return reduct
    if isinstance(t, Suc):
        count, base = unwind_suc(t)
        reduct = step(env, base)
        return None if reduct is None else wind_suc(reduct, count)
    for name in t.children:
        reduct = step(env, getattr(t, name))
        if reduct is not None:
            return dataclasses.replace(t, **{name: reduct})
    return None


def iterate_steps(env: Environment, t: Term) -> Iterator[Term]:
    """Yield every intermediate term of the reduction of ``t``, ending at its normal form."""
    fuel = Fuel(env.fuel)
    while True:
        reduct = step(env, t)
        if reduct is None:
            return
        fuel.tick()
        t = reduct
        yield t


def whnf(env: Environment, t: Term) -> Term:
    return Evaluator(env).whnf(t)


def normalize(env: Environment, t: Term) -> Term:
    evaluator = Evaluator(env)
    result = evaluator.normalize(t)
    logger.debug("normalized in %d steps", evaluator.fuel.used)
    return result


def equal(env: Environment, a: Term, b: Term) -> bool:
    return Evaluator(env).equal(a, b)
