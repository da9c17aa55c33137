"""Validation reports: a list of violation records."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Violation:
    kind: str
    witness: tuple = ()
    detail: str = ""

    def to_json(self) -> dict:
        return {"kind": self.kind, "witness": [_jsonable(w) for w in self.witness],
                "detail": self.detail}


def _jsonable(x):
    if isinstance(x, tuple):
        return [_jsonable(y) for y in x]
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return str(x)


@dataclass
class Report:
    violations: list[Violation] = field(default_factory=list)
    checked: int = 0  # number of cases examined, where that is meaningful

    def add(self, kind: str, *witness, detail: str = "") -> None:
        self.violations.append(Violation(kind, tuple(witness), detail))

    def extend(self, other: "Report") -> None:
        self.violations.extend(other.violations)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        # truthy when there is something to report
        return bool(self.violations)

    def __len__(self) -> int:
        return len(self.violations)

    def __iter__(self):
        return iter(self.violations)

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}

    def to_json(self) -> list[dict]:
        return [v.to_json() for v in self.violations]
