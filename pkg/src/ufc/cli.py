"""
``ufc check|norm|trace|axioms``: batch front end over the checker.

Results go to stdout, diagnostics to stderr. Exit codes: 0 success,
1 type error, 2 parse error, 3 usage or I/O error, 4 fuel exhausted.
"""
import argparse
import logging
import os
import sys
from typing import List, NoReturn, Optional, Sequence, TextIO

from . import __version__, conf
from .controller import CheckController
from .diagnostics import FuelExhausted, UnknownName
from .evaluator import Evaluator, Fuel, iterate_steps
from .forms import COMMANDS, CliConfig, CliConfigForm, dict_to_text
from .surface import print_term
from .syntax import Global, Term

logger = logging.getLogger(__name__)

EXIT_USAGE = 3
RECURSION_LIMIT = 20_000


class UsageError(Exception):
    exit_code = EXIT_USAGE


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        raise UsageError(message)


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="ufc", description="Check .uf proof files.")
    parser.add_argument("--version", action="version", version=f"ufc {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)
    helps = {
        "check": "type check the files",
        "norm": "print the normal form of a definition",
        "trace": "print every reduction step of a definition",
        "axioms": "print the postulates a declaration depends on",
    }
    for command in COMMANDS:
        sub = commands.add_parser(command, help=helps[command])
        sub.add_argument("files", nargs="*", metavar="FILE")
        sub.add_argument("--def", dest="def_name", metavar="NAME")
        sub.add_argument("--max-level", type=int, default=conf.DEFAULT_MAX_LEVEL)
        sub.add_argument("--fuel", type=int, default=conf.DEFAULT_FUEL)
        sub.add_argument("--no-color", dest="color", action="store_false")
    return parser


def parse_config(argv: Optional[Sequence[str]] = None) -> CliConfig:
    args = build_parser().parse_args(argv)
    form = CliConfigForm(vars(args))
    if not form.is_valid():
        raise UsageError("invalid arguments:\n" + dict_to_text(form.errors))
    return form.to_config()


class Runner:
    def __init__(
        self,
        config: CliConfig,
        stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None,
    ) -> None:
        self.config = config
        self.stdout = stdout or sys.stdout
        self.stderr = stderr or sys.stderr
        self.controller = CheckController(config.max_level, config.fuel)

    @property
    def color(self) -> bool:
        return self.config.color and self.stderr.isatty()

    def out(self, text: str) -> None:
        print(text, file=self.stdout)

    def err(self, text: str) -> None:
        print(text, file=self.stderr)

    def run(self) -> int:
        for path in self.config.files:
            try:
                self.controller.load_file(path)
            except OSError as e:
                self.err(f"ufc: cannot read {e.filename}: {e.strerror}")
                return EXIT_USAGE
            except UnicodeDecodeError as e:
                self.err(f"ufc: cannot read {path}: not UTF-8 (byte {e.start})")
                return EXIT_USAGE
        for diagnostic in self.controller.diagnostics:
            self.err(diagnostic.render(self.color))
        if self.config.command == "check" or self.controller.diagnostics:
            return self.controller.exit_code
        assert self.config.def_name is not None
        try:
            if self.config.command == "axioms":
                self.axioms(self.config.def_name)
            elif self.config.command == "norm":
                self.norm(self.config.def_name)
            else:
                self.trace(self.config.def_name)
        except UnknownName as e:
            self.err(f"ufc: {e}")
            return e.exit_code
        except FuelExhausted as e:
            diagnostic = e.to_diagnostic(self.filename_of(self.config.def_name))
            self.err(diagnostic.render(self.color))
            return e.exit_code
        return 0

    def filename_of(self, name: str) -> str:
        for result in self.controller.results:
            if result.name == name:
                return result.filename
        return "<input>"

    def body_of(self, name: str) -> Term:
        decl = self.controller.env.lookup(name)
        # postulates are already normal
        return Global(name) if decl.body is None else decl.body

    def axioms(self, name: str) -> None:
        for axiom in sorted(self.controller.env.axioms_of(name)):
            self.out(axiom)

    def norm(self, name: str) -> None:
        env = self.controller.env
        evaluator = Evaluator(env, Fuel(env.fuel))
        self.out(print_term(evaluator.normalize(self.body_of(name))))
        logger.debug("normalized %s in %d steps", name, evaluator.fuel.used)

    def trace(self, name: str) -> None:
        term = self.body_of(name)
        self.out(f"0: {print_term(term)}")
        count = 0
        for count, term in enumerate(iterate_steps(self.controller.env, term), 1):
            if count <= conf.TRACE_LIMIT:
                self.out(f"{count}: {print_term(term)}")
        if count > conf.TRACE_LIMIT:
            self.out(
                f"... trace truncated after {conf.TRACE_LIMIT} steps "
                f"(normal form reached after {count} steps)"
            )


def run(
    config: CliConfig, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None
) -> int:
    return Runner(config, stdout, stderr).run()


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(
        level=os.environ.get("UFC_LOG_LEVEL", "WARNING").upper(),
        format="%(levelname)s %(name)s: %(message)s",
    )
    sys.setrecursionlimit(max(sys.getrecursionlimit(), RECURSION_LIMIT))
    conf.setup()
    try:
        config = parse_config(argv)
    except UsageError as e:
        print(f"ufc: {e}", file=sys.stderr)
        return e.exit_code
    return run(config)
