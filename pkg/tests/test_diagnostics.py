from ufc import DiagnosticKind
from ufc.diagnostics import Diagnostic, Span, exit_code_for


def test_span():
    outer = Span(1, 1, 0, 10)
    inner = Span(1, 3, 2, 4)
    assert outer.contains(inner)
    assert not inner.contains(outer)
    assert inner.cover(Span(1, 12, 11, 2)) == Span(1, 3, 2, 11)
    assert outer.cover(inner) == outer


def test_render():
    diagnostic = Diagnostic(
        DiagnosticKind.TypeMismatch,
        "type mismatch",
        span=Span(3, 7, 40, 2),
        filename="a.uf",
        expected="Nat",
        actual="Bool",
    )
    assert diagnostic.render() == "a.uf:3:7: TypeMismatch: expected Nat, got Bool"
    assert str(diagnostic) == diagnostic.render()
    assert "\x1b[" in diagnostic.render(color=True)
    assert diagnostic.render(color=True).endswith("expected Nat, got Bool")


def test_render_without_types():
    diagnostic = Diagnostic(DiagnosticKind.ManifestDrift, "x is missing", filename="m.tsv")
    assert diagnostic.render() == "m.tsv: ManifestDrift: x is missing"
    assert diagnostic.id == "ManifestDrift"
    assert diagnostic.is_serious()


def test_exit_code_for():
    assert exit_code_for(frozenset()) == 0
    assert exit_code_for(frozenset({DiagnosticKind.TypeMismatch})) == 1
    assert exit_code_for(frozenset({DiagnosticKind.FuelExhausted})) == 4
    assert (
        exit_code_for(
            frozenset({DiagnosticKind.Parse, DiagnosticKind.FuelExhausted})
        )
        == 2
    )
