import random

import pytest

from ufc.diagnostics import ShiftUnderflow
from ufc.syntax import (
    App,
    Bool,
    BoolElim,
    Global,
    Id,
    J,
    Lambda,
    Mk,
    Nat,
    NatElim,
    Pi,
    Refl,
    Sigma,
    SigElim,
    Suc,
    SumElim,
    Term,
    Universe,
    Var,
    Yes,
    Zero,
    alpha_eq,
    as_numeral,
    free_in,
    globals_of,
    is_closed,
    numeral,
    shift,
    subst,
)

LEAVES = [lambda: Nat(), lambda: Zero(), lambda: Bool(), lambda: Yes()]
NODES = [Pi, Lambda, App, Sigma, Mk, Suc, Id, Refl, NatElim, BoolElim, J, SigElim, SumElim]


def random_term(rng: random.Random, depth: int, bound: int) -> Term:
    if depth == 0 or rng.random() < 0.25:
        choice = rng.randrange(4)
        if choice == 0 and bound:
            return Var(rng.randrange(bound))
        if choice == 1:
            return Global(rng.choice(["f", "g", "add"]))
        if choice == 2:
            return Universe(rng.randrange(3))
        return rng.choice(LEAVES)()
    cls = rng.choice(NODES)
    args = [
        random_term(rng, depth - 1, bound + (1 if name in cls.binding else 0))
        for name in cls.children
    ]
    return cls(*args)


SEEDS = range(40)


def test_shift():
    assert shift(Var(0), 1, 0) == Var(1)
    assert shift(Lambda(Nat(), Var(0)), 1, 0) == Lambda(Nat(), Var(0))
    assert shift(Lambda(Nat(), Var(1)), 1, 0) == Lambda(Nat(), Var(2))
    assert shift(Var(3), -2, 0) == Var(1)
    assert shift(Var(0), 5, 1) == Var(0)


def test_shift_underflow():
    with pytest.raises(ShiftUnderflow):
        shift(Var(0), -1, 0)


def test_subst():
    assert subst(Var(0), Zero()) == Zero()
    assert subst(Suc(Var(0)), Zero()) == Suc(Zero())
    assert subst(Lambda(Nat(), App(Var(1), Var(0))), Global("f")) == Lambda(
        Nat(), App(Global("f"), Var(0))
    )
    # free variables above the substituted one move down
    assert subst(App(Var(0), Var(2)), Zero()) == App(Zero(), Var(1))
    # the replacement is shifted under binders
    assert subst(Lambda(Nat(), Var(1)), Var(4)) == Lambda(Nat(), Var(5))


def test_alpha_eq():
    assert alpha_eq(Lambda(Nat(), Var(0)), Lambda(Nat(), Var(0)))
    assert not alpha_eq(Zero(), Suc(Zero()))
    assert not alpha_eq(Universe(0), Universe(1))
    assert not alpha_eq(Var(0), Var(1))


def test_numerals():
    assert numeral(0) == Zero()
    assert numeral(2) == Suc(Suc(Zero()))
    assert as_numeral(numeral(999)) == 999
    assert as_numeral(Suc(Var(0))) is None
    # deep chains stay iterative
    assert alpha_eq(shift(numeral(999), 1), numeral(999))


def test_free_in_and_closedness():
    t = Pi(Nat(), App(Var(0), Var(2)))
    assert free_in(t, 1)
    assert not free_in(t, 0)
    assert is_closed(t, 2)
    assert not is_closed(t, 1)
    assert is_closed(Lambda(Nat(), Var(0)))


def test_globals_of():
    t = App(Global("add"), Lambda(Global("Nat'"), App(Global("f"), Var(0))))
    assert globals_of(t) == {"add", "Nat'", "f"}
    assert globals_of(Zero()) == set()


@pytest.mark.parametrize("seed", SEEDS)
def test_shift_laws(seed):
    rng = random.Random(seed)
    t = random_term(rng, 6, 2)
    a, b, c = rng.randrange(4), rng.randrange(4), rng.randrange(3)
    assert shift(t, 0, c) == t
    assert shift(shift(t, a, c), b, c) == shift(t, a + b, c)
    assert shift(shift(t, a, c), -a, c) == t


@pytest.mark.parametrize("seed", SEEDS)
def test_subst_cancels_weakening(seed):
    rng = random.Random(seed)
    t = random_term(rng, 6, 2)
    r = random_term(rng, 3, 2)
    assert subst(shift(t, 1, 0), r) == t


@pytest.mark.parametrize("seed", SEEDS)
def test_generated_terms_are_closed(seed):
    rng = random.Random(seed)
    t = random_term(rng, 6, 0)
    assert is_closed(t)
    assert is_closed(Lambda(Nat(), shift(t, 1)))


@pytest.mark.parametrize("seed", SEEDS)
def test_alpha_eq_is_an_equivalence(seed):
    rng = random.Random(seed)
    t = random_term(rng, 6, 1)
    u = random_term(rng, 6, 1)
    # a structurally equal copy built from fresh nodes
    copy = subst(shift(t, 1, 0), Zero())
    assert alpha_eq(t, t)
    assert alpha_eq(t, copy) and alpha_eq(copy, t)
    assert alpha_eq(u, t) == alpha_eq(t, u)
    if alpha_eq(t, u):
        assert alpha_eq(copy, u)
