import pytest

from ufc import DiagnosticKind
from ufc.corpus import corpus_files
from ufc.diagnostics import (
    BuiltinArity,
    IllegalCharacter,
    NumeralTooLarge,
    Span,
    TypeCheckError,
    UnboundName,
    UnexpectedToken,
    UnterminatedDecl,
)
from ufc.environment import Declaration, Environment
from ufc.evaluator import normalize
from ufc.surface import (
    SApp,
    SBuiltin,
    SLambda,
    SName,
    SNumeral,
    SPi,
    SSigma,
    TokenKind,
    detokenize,
    elaborate_term,
    fresh_name,
    parse_module,
    parse_term,
    print_decl,
    print_term,
    tokenize,
)
from ufc.syntax import (
    App,
    Bool,
    Global,
    Lambda,
    Nat,
    Pi,
    Sigma,
    SigElim,
    Suc,
    Universe,
    Var,
    Zero,
    as_numeral,
    numeral,
)


def kinds(source):
    return [token.kind for token in tokenize(source)]


def texts(source):
    return [token.text for token in tokenize(source)]


def parse(source):
    return parse_term(tokenize(source))


def test_tokenize():
    assert texts("def x : Nat := 0;") == ["def", "x", ":", "Nat", ":=", "0", ";", ""]
    assert kinds("def x : Nat := 0;") == [
        TokenKind.KEYWORD,
        TokenKind.IDENT,
        TokenKind.SYMBOL,
        TokenKind.KEYWORD,
        TokenKind.SYMBOL,
        TokenKind.NUMERAL,
        TokenKind.SYMBOL,
        TokenKind.EOF,
    ]
    assert texts("f' x_1 => ->") == ["f'", "x_1", "=>", "->", ""]


def test_tokenize_skips_comments_and_whitespace():
    assert texts("-- a comment\n  foo -- trailing\n") == ["foo", ""]


def test_token_spans():
    tokens = tokenize("def x : Nat := 0;")
    assert tokens[0].span == Span(1, 1, 0, 3)
    assert tokens[1].span == Span(1, 5, 4, 1)
    tokens = tokenize("-- é\n  x")
    # offsets count UTF-8 bytes, columns count characters
    assert tokens[0].span == Span(2, 3, 8, 1)
    assert tokens[-1].kind == TokenKind.EOF


def test_tokenize_illegal_character():
    with pytest.raises(IllegalCharacter) as e:
        tokenize("def x : Nat := 0 + 1;")
    assert (e.value.span.line, e.value.span.column) == (1, 18)


def test_keywords_are_not_identifiers():
    assert kinds("U0 U9 Sig sigElim Sigma")[:-1] == [TokenKind.KEYWORD] * 4 + [
        TokenKind.IDENT
    ]


def test_parse_lambda():
    t = parse("fun (x : Nat) => x")
    assert isinstance(t, SLambda)
    assert t.name == "x"
    assert isinstance(t.domain, SBuiltin) and t.domain.name == "Nat"
    assert isinstance(t.body, SName) and t.body.name == "x"


def test_parse_binder_groups():
    t = parse("fun (A B : U0) (x : A) => x")
    names = []
    while isinstance(t, SLambda):
        names.append(t.name)
        t = t.body
    assert names == ["A", "B", "x"]


def test_parse_arrows_associate_right():
    t = parse("Nat -> Nat -> Nat")
    assert isinstance(t, SPi) and t.name is None
    assert isinstance(t.codomain, SPi)
    t = parse("(n : Nat) -> Id Nat n n")
    assert isinstance(t, SPi) and t.name == "n"


def test_parse_sigma_and_application():
    t = parse("Sig (x : Nat), f x 2")
    assert isinstance(t, SSigma)
    assert isinstance(t.second, SApp)
    assert isinstance(t.second.fn, SApp)
    assert isinstance(t.second.arg, SNumeral) and t.second.arg.value == 2


def test_parse_builtins_take_fixed_arity():
    t = parse("refl Nat (suc zero) f")
    assert isinstance(t, SApp)
    assert isinstance(t.fn, SBuiltin) and t.fn.name == "refl"
    assert len(t.fn.args) == 2


def test_parse_module():
    decls = parse_module(
        tokenize("def one : Nat := suc zero;\npostulate p : Nat;\n")
    )
    assert [(d.kind, d.name, d.is_postulate) for d in decls] == [
        ("def", "one", False),
        ("postulate", "p", True),
    ]
    assert decls[1].body is None
    assert decls[1].name_span == Span(2, 11, 37, 1)


def test_parse_missing_body():
    with pytest.raises(UnexpectedToken) as e:
        parse_module(tokenize("def bad : Nat := ;"))
    assert e.value.span.column == 18
    assert "identifier" in e.value.expected


def test_parse_unterminated_declaration():
    with pytest.raises(UnterminatedDecl):
        parse_module(tokenize("def a : Nat := 0\ndef b : Nat := 1;"))
    with pytest.raises(UnterminatedDecl):
        parse_module(tokenize("postulate a : Nat"))


def test_parse_numeral_limit():
    assert parse("999").value == 999
    assert parse("0007").value == 7
    with pytest.raises(NumeralTooLarge):
        parse("1000")
    with pytest.raises(NumeralTooLarge):
        parse("9" * 5000)


def test_parse_builtin_under_application():
    with pytest.raises(BuiltinArity):
        parse("suc")
    with pytest.raises(BuiltinArity):
        parse("(Id Nat 0)")


def test_parse_rejects_trailing_input():
    with pytest.raises(UnexpectedToken):
        parse("Nat )")


def test_elaborate_binders(term):
    assert term("fun (x y : Nat) => x") == Lambda(Nat(), Lambda(Nat(), Var(1)))
    assert term("fun (x : Nat) (x : Nat) => x") == Lambda(Nat(), Lambda(Nat(), Var(0)))
    assert term("(A : U0) -> A -> A") == Pi(Universe(0), Pi(Var(0), Var(1)))
    assert term("Sig (n : Nat), Id Nat n n").first == Nat()


def test_elaborate_arrow_binds_nothing(term):
    assert term("Nat -> Nat") == Pi(Nat(), Nat())
    # the arrow's binder shifts outer variables
    assert term("fun (x : Nat) => Nat -> Id Nat x x").body == Pi(
        Nat(), term("Id Nat x x", names=["x", ""])
    )


def test_elaborate_numerals_and_globals(term):
    assert term("2") == Suc(Suc(Zero()))
    assert term("add 2 0") == App(App(Global("add"), numeral(2)), Zero())


def test_elaborate_sig_elim_family(term):
    t = term(
        "sigElim Nat (fun (x : Nat) => Nat) (fun (p : Sig (x : Nat), Nat) => Nat) "
        "(fun (x y : Nat) => x) (mk 0 1)"
    )
    assert isinstance(t, SigElim)
    assert t.family == Nat()
    t = term(
        "sigElim Nat nat_code (fun (p : Sig (x : Nat), nat_code x) => Nat) "
        "(fun (x : Nat) (y : nat_code x) => x) (mk 0 triv)"
    )
    assert t.family == App(Global("nat_code"), Var(0))


def test_elaborate_sig_elim_family_domain_must_match(term):
    with pytest.raises(TypeCheckError) as e:
        term(
            "sigElim Nat (fun (x : Bool) => Nat) (fun (p : Sig (x : Nat), Nat) => Nat) "
            "(fun (x y : Nat) => x) (mk 0 1)"
        )
    assert e.value.kind == DiagnosticKind.TypeMismatch
    assert (e.value.expected, e.value.actual) == (Nat(), Bool())
    assert e.value.span.column == 23


def test_elaborate_unbound_name(term):
    with pytest.raises(UnboundName) as e:
        term("fun (x : Nat) => y")
    assert e.value.name == "y"
    assert e.value.span.column == 18


def test_elaborate_duplicate_definition(load, prelude_env):
    controller = load("def idfun : Nat := 0;", env=prelude_env)
    (diagnostic,) = controller.diagnostics
    assert diagnostic.id == "DuplicateDefinition"
    assert diagnostic.location() == "test.uf:1:5"


def test_print_term():
    assert print_term(numeral(2)) == "2"
    assert print_term(Lambda(Nat(), Var(0))) == "fun (x : Nat) => x"
    assert print_term(Pi(Nat(), Nat())) == "Nat -> Nat"
    assert print_term(Pi(Universe(0), Pi(Var(0), Var(1)))) == "(A : U0) -> A -> A"
    assert print_term(App(App(Global("add"), numeral(2)), numeral(2))) == "add 2 2"
    assert print_term(Suc(Suc(Global("f")))) == "suc (suc f)"
    assert print_term(Suc(Var(0)), ["n"]) == "suc n"
    assert print_term(Sigma(Nat(), Nat())) == "Sig (x : Nat), Nat"


def test_print_term_parenthesizes():
    assert print_term(Pi(Pi(Nat(), Nat()), Nat())) == "(Nat -> Nat) -> Nat"
    assert print_term(App(Global("f"), Lambda(Nat(), Var(0)))) == "f (fun (x : Nat) => x)"
    assert print_term(App(Global("f"), App(Global("g"), Zero()))) == "f (g 0)"


def test_print_term_avoids_capture():
    assert print_term(Lambda(Nat(), Lambda(Nat(), Var(1)))) == (
        "fun (x : Nat) => fun (x' : Nat) => x"
    )
    assert print_term(Lambda(Nat(), App(Global("x"), Var(0)))) == "fun (x' : Nat) => x x'"


def test_fresh_name():
    assert fresh_name("x", []) == "x"
    assert fresh_name("x", ["x", "x'"]) == "x''"


def test_print_decl():
    assert print_decl(Declaration("one", Nat(), Suc(Zero()))) == "def one : Nat := 1;"
    assert print_decl(Declaration("p", Nat())) == "postulate p : Nat;"


def test_printed_terms_parse_back(term):
    env = Environment()
    for source in [
        "fun (A : U0) (x : A) => x",
        "(A B : U0) -> (A -> B) -> Sig (a : A), B",
        "natElim (fun (k : Nat) => Nat) 0 (fun (k r : Nat) => suc (suc r)) 3",
        "fun (b : Bool) => boolElim (fun (c : Bool) => U0) Unit Empty b",
        "fun (A B : U0) (a : A) => inl A B a",
    ]:
        t = term(source, env=env)
        assert elaborate_term(parse(print_term(t)), env) == t


def test_large_numerals_print_as_readable_input(prelude_env, term):
    assert print_term(numeral(1000)) == "suc 999"
    assert print_term(numeral(1001)) == "suc (suc 999)"
    value = normalize(prelude_env, term("mul 40 40"))
    text = print_term(value)
    assert as_numeral(elaborate_term(parse(text), Environment())) == 1600


@pytest.mark.parametrize("path", corpus_files(), ids=lambda p: p.name)
def test_detokenize_preserves_tokens(path):
    tokens = tokenize(path.read_text(encoding="utf-8"))
    again = tokenize(detokenize(tokens))
    assert [(t.kind, t.text) for t in again] == [(t.kind, t.text) for t in tokens]
