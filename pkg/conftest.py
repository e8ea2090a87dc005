import sys

import pytest

from ufc.controller import CheckController
from ufc.corpus import corpus_files
from ufc.environment import Environment
from ufc.surface import elaborate_term, parse_term, tokenize
from ufc.syntax import Term

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20_000))


@pytest.fixture(scope="session")
def prelude() -> CheckController:
    controller = CheckController()
    controller.load_files(corpus_files())
    assert controller.is_healthy, [str(d) for d in controller.diagnostics]
    return controller


@pytest.fixture(scope="session")
def prelude_env(prelude) -> Environment:
    return prelude.env


@pytest.fixture
def load():
    """Check ``source`` on top of an optional environment, return the controller."""

    def f(source: str, env: Environment = None, **kwargs) -> CheckController:
        controller = CheckController(**kwargs)
        if env is not None:
            controller.env = env
        controller.load_source(source, "test.uf")
        return controller

    return f


@pytest.fixture
def term(prelude_env):
    def f(source: str, env: Environment = None, names=()) -> Term:
        return elaborate_term(
            parse_term(tokenize(source)),
            prelude_env if env is None else env,
            names,
        )

    return f
