"""Knowledge bases of normal defaults and their text format.

A KB file holds one default per line, ``ANTECEDENT : CONSEQUENT``; an empty
antecedent (``: q``) stands for ``true``.  ``#`` starts a comment.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .formula import (
    TRUE,
    Formula,
    FormulaSyntaxError,
    Implies,
    World,
    evaluate,
    parse_formula,
    to_str,
    variables_of,
)


class KBSyntaxError(ValueError):
    def __init__(self, message: str, line: int):
        self.line = line
        super().__init__(f"line {line}: {message}")


class DuplicateDefaultError(ValueError):
    def __init__(self, default: "Default", first_line: int, second_line: int):
        self.default = default
        self.lines = (first_line, second_line)
        super().__init__(
            f"duplicate default ({default}) on lines {first_line} and {second_line}"
        )


@dataclass(frozen=True, slots=True)
class Default:
    """Normal default ``(antecedent : consequent)``."""

    antecedent: Formula
    consequent: Formula

    @property
    def material(self) -> Formula:
        return Implies(self.antecedent, self.consequent)

    def __str__(self) -> str:
        if self.antecedent == TRUE:
            return f": {to_str(self.consequent)}"
        return f"{to_str(self.antecedent)} : {to_str(self.consequent)}"


def material_counterpart(d: Default) -> Formula:
    return d.material


@dataclass(frozen=True)
class KnowledgeBase:
    """A finite set of defaults, kept in presentation order.

    Order is only used for reporting (default indices in explanations).
    """

    defaults: tuple[Default, ...] = ()
    variables: frozenset[str] = field(init=False, compare=False)

    def __post_init__(self) -> None:
        seen: dict[Default, int] = {}
        for i, d in enumerate(self.defaults):
            if d in seen:
                raise DuplicateDefaultError(d, seen[d] + 1, i + 1)
            seen[d] = i
        object.__setattr__(self, "defaults", tuple(self.defaults))
        object.__setattr__(
            self,
            "variables",
            variables_of(f for d in self.defaults for f in (d.antecedent, d.consequent)),
        )

    @classmethod
    def of(cls, pairs: Iterable[tuple[str, str]]) -> KnowledgeBase:
        """Build from ``(antecedent, consequent)`` strings; ``""`` means true."""
        return cls(
            tuple(
                Default(parse_formula(a) if a.strip() else TRUE, parse_formula(c))
                for a, c in pairs
            )
        )

    def __len__(self) -> int:
        return len(self.defaults)

    def __iter__(self):
        return iter(self.defaults)

    def index(self, d: Default) -> int:
        return self.defaults.index(d)

    def to_text(self) -> str:
        return "".join(f"{d}\n" for d in self.defaults)


def parse_kb(text: str) -> KnowledgeBase:
    defaults: list[Default] = []
    lines: dict[Default, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.count(":") != 1:
            raise KBSyntaxError("expected exactly one ':' separating antecedent and consequent", lineno)
        ante_text, cons_text = (part.strip() for part in line.split(":"))
        try:
            ante = parse_formula(ante_text) if ante_text else TRUE
            cons = parse_formula(cons_text)
        except FormulaSyntaxError as exc:
            raise KBSyntaxError(str(exc), lineno) from exc
        d = Default(ante, cons)
        if d in lines:
            raise DuplicateDefaultError(d, lines[d], lineno)
        lines[d] = lineno
        defaults.append(d)
    return KnowledgeBase(tuple(defaults))


def load_kb(path) -> KnowledgeBase:
    with open(path, encoding="utf-8") as fh:
        return parse_kb(fh.read())


def violated_defaults(w: World, kb: KnowledgeBase) -> frozenset[Default]:
    """Defaults whose antecedent holds and consequent fails in ``w``."""
    return frozenset(
        d for d in kb.defaults if evaluate(d.antecedent, w) and not evaluate(d.consequent, w)
    )
