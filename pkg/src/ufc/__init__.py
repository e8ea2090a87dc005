import enum

__version__ = "0.1.0"


class DiagnosticKind(str, enum.Enum):
    TypeMismatch = "type-mismatch"
    UnboundName = "unbound-name"
    NotAFunction = "not-a-function"
    NotAUniverse = "not-a-universe"
    IdCarrierMismatch = "id-carrier-mismatch"
    UniverseOverflow = "universe-overflow"
    MotiveShape = "motive-shape"
    Parse = "parse"
    FuelExhausted = "fuel-exhausted"
    DuplicateDefinition = "duplicate-definition"
    ManifestDrift = "manifest-drift"
    AxiomMismatch = "axiom-mismatch"


__all__ = [
    "DiagnosticKind",
]
