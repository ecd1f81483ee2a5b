"""Propositional formulas: AST, parser, printer and evaluation.

Concrete syntax::

    iff  := impl ("<->" impl)*
    impl := or ("->" or)*          (right-associative)
    or   := and ("|" and)*
    and  := not ("&" not)*
    not  := "!" not | atom
    atom := "true" | "false" | ident | "(" iff ")"

``<->`` is right-associative as well.  ``&`` and ``|`` chains are
left-folded into binary nodes.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
KEYWORDS = frozenset({"true", "false"})

World = Mapping[str, bool]


class FormulaSyntaxError(ValueError):
    def __init__(self, message: str, pos: int, text: str = ""):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}")


class UnassignedVariableError(LookupError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"variable {name!r} is not assigned in the world")


class Formula:
    """Base class of all formula nodes.

    Nodes are immutable; the hash and the variable set are computed once at
    construction so that formulas are cheap dictionary keys.
    """

    __slots__ = ("_hash", "_vars")

    def __post_init__(self) -> None:
        values = self._values()
        object.__setattr__(self, "_hash", hash((type(self).__name__, values)))
        vs = frozenset().union(*(v._vars for v in values if isinstance(v, Formula)))
        object.__setattr__(self, "_vars", vs)

    def _values(self) -> tuple:
        return tuple(getattr(self, name) for name in self.__dataclass_fields__)

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if type(self) is not type(other) or self._hash != other._hash:
            return False
        return self._values() == other._values()

    def __str__(self) -> str:
        return to_str(self)

    # Operator sugar used by tests and the harness.
    def __and__(self, other: Formula) -> Formula:
        return And(self, other)

    def __or__(self, other: Formula) -> Formula:
        return Or(self, other)

    def __invert__(self) -> Formula:
        return Not(self)

    def __rshift__(self, other: Formula) -> Formula:
        return Implies(self, other)


@dataclass(frozen=True, slots=True, eq=False, repr=False)
class Var(Formula):
    name: str

    def __post_init__(self) -> None:
        if not IDENT_RE.fullmatch(self.name) or self.name in KEYWORDS:
            raise ValueError(f"invalid variable name {self.name!r}")
        object.__setattr__(self, "_hash", hash(("Var", self.name)))
        object.__setattr__(self, "_vars", frozenset((self.name,)))

    def __repr__(self) -> str:
        return f"Var({self.name!r})"


@dataclass(frozen=True, slots=True, eq=False, repr=False)
class Const(Formula):
    value: bool

    def __repr__(self) -> str:
        return f"Const({self.value})"


@dataclass(frozen=True, slots=True, eq=False, repr=False)
class Not(Formula):
    child: Formula

    def __repr__(self) -> str:
        return f"Not({self.child!r})"


@dataclass(frozen=True, slots=True, eq=False, repr=False)
class And(Formula):
    left: Formula
    right: Formula

    def __repr__(self) -> str:
        return f"And({self.left!r}, {self.right!r})"


@dataclass(frozen=True, slots=True, eq=False, repr=False)
class Or(Formula):
    left: Formula
    right: Formula

    def __repr__(self) -> str:
        return f"Or({self.left!r}, {self.right!r})"


@dataclass(frozen=True, slots=True, eq=False, repr=False)
class Implies(Formula):
    left: Formula
    right: Formula

    def __repr__(self) -> str:
        return f"Implies({self.left!r}, {self.right!r})"


@dataclass(frozen=True, slots=True, eq=False, repr=False)
class Iff(Formula):
    left: Formula
    right: Formula

    def __repr__(self) -> str:
        return f"Iff({self.left!r}, {self.right!r})"


TRUE = Const(True)
FALSE = Const(False)


def conj(*fs: Formula) -> Formula:
    """Left-folded conjunction; ``true`` for no arguments."""
    if not fs:
        return TRUE
    out = fs[0]
    for f in fs[1:]:
        out = And(out, f)
    return out


def disj(*fs: Formula) -> Formula:
    if not fs:
        return FALSE
    out = fs[0]
    for f in fs[1:]:
        out = Or(out, f)
    return out


# --------------------------------------------------------------------------
# Lexer / parser

_TOKEN_RE = re.compile(r"\s*(?:(<->)|(->)|([!&|()])|([A-Za-z_][A-Za-z0-9_]*))")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos, text)
        start = m.start(m.lastindex)
        tokens.append((m.group(m.lastindex), start))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> str | None:
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def pos(self) -> int:
        return self.tokens[self.i][1] if self.i < len(self.tokens) else len(self.text)

    def take(self) -> str:
        tok = self.tokens[self.i][0]
        self.i += 1
        return tok

    def expect(self, tok: str) -> None:
        if self.peek() != tok:
            found = self.peek()
            raise FormulaSyntaxError(
                f"expected {tok!r}, found {'end of input' if found is None else repr(found)}",
                self.pos(),
                self.text,
            )
        self.i += 1

    def parse(self) -> Formula:
        if not self.tokens:
            raise FormulaSyntaxError("empty formula", 0, self.text)
        f = self.iff()
        if self.peek() is not None:
            raise FormulaSyntaxError(f"unexpected token {self.peek()!r}", self.pos(), self.text)
        return f

    def iff(self) -> Formula:
        left = self.impl()
        if self.peek() == "<->":
            self.take()
            return Iff(left, self.iff())
        return left

    def impl(self) -> Formula:
        left = self.or_()
        if self.peek() == "->":
            self.take()
            return Implies(left, self.impl())
        return left

    def or_(self) -> Formula:
        f = self.and_()
        while self.peek() == "|":
            self.take()
            f = Or(f, self.and_())
        return f

    def and_(self) -> Formula:
        f = self.not_()
        while self.peek() == "&":
            self.take()
            f = And(f, self.not_())
        return f

    def not_(self) -> Formula:
        if self.peek() == "!":
            self.take()
            return Not(self.not_())
        return self.atom()

    def atom(self) -> Formula:
        tok = self.peek()
        if tok is None:
            raise FormulaSyntaxError("unexpected end of input", self.pos(), self.text)
        if tok == "(":
            self.take()
            f = self.iff()
            self.expect(")")
            return f
        if tok == "true":
            self.take()
            return TRUE
        if tok == "false":
            self.take()
            return FALSE
        if IDENT_RE.fullmatch(tok):
            self.take()
            return Var(tok)
        raise FormulaSyntaxError(f"unexpected token {tok!r}", self.pos(), self.text)


def parse_formula(text: str) -> Formula:
    """Parse ``text`` into a formula AST.

    >>> parse_formula("p & q -> r")
    Implies(And(Var('p'), Var('q')), Var('r'))
    """
    return _Parser(text).parse()


# --------------------------------------------------------------------------
# Printer

_PREC = {Iff: 1, Implies: 2, Or: 3, And: 4, Not: 5, Var: 6, Const: 6}
_SYMBOL = {Iff: "<->", Implies: "->", Or: "|", And: "&"}


def to_str(f: Formula) -> str:
    """Print with the minimal parentheses that re-parse to the same tree."""
    if isinstance(f, Var):
        return f.name
    if isinstance(f, Const):
        return "true" if f.value else "false"
    if isinstance(f, Not):
        inner = to_str(f.child)
        return "!" + (f"({inner})" if _PREC[type(f.child)] < _PREC[Not] else inner)
    prec = _PREC[type(f)]
    left, right = to_str(f.left), to_str(f.right)
    lp, rp = _PREC[type(f.left)], _PREC[type(f.right)]
    if isinstance(f, (Implies, Iff)):
        # right-associative
        wrap_left, wrap_right = lp <= prec, rp < prec
    else:
        # left-folded
        wrap_left, wrap_right = lp < prec, rp <= prec
    if wrap_left:
        left = f"({left})"
    if wrap_right:
        right = f"({right})"
    return f"{left} {_SYMBOL[type(f)]} {right}"


# --------------------------------------------------------------------------
# Semantics


def evaluate(f: Formula, w: World) -> bool:
    if isinstance(f, Var):
        try:
            return bool(w[f.name])
        except KeyError:
            raise UnassignedVariableError(f.name) from None
    if isinstance(f, Const):
        return f.value
    if isinstance(f, Not):
        return not evaluate(f.child, w)
    if isinstance(f, And):
        return evaluate(f.left, w) and evaluate(f.right, w)
    if isinstance(f, Or):
        return evaluate(f.left, w) or evaluate(f.right, w)
    if isinstance(f, Implies):
        return (not evaluate(f.left, w)) or evaluate(f.right, w)
    if isinstance(f, Iff):
        return evaluate(f.left, w) == evaluate(f.right, w)
    raise TypeError(f"not a formula: {f!r}")


def variables(f: Formula) -> frozenset[str]:
    return f._vars


def variables_of(fs: Iterable[Formula]) -> frozenset[str]:
    return frozenset().union(*(f._vars for f in fs))


def _py_expr(f: Formula, index: Mapping[str, int]) -> str:
    if isinstance(f, Var):
        return f"w[{index[f.name]}]"
    if isinstance(f, Const):
        return "True" if f.value else "False"
    if isinstance(f, Not):
        return f"(not {_py_expr(f.child, index)})"
    a, b = _py_expr(f.left, index), _py_expr(f.right, index)
    if isinstance(f, And):
        return f"({a} and {b})"
    if isinstance(f, Or):
        return f"({a} or {b})"
    if isinstance(f, Implies):
        return f"((not {a}) or {b})"
    return f"({a} == {b})"


def compile_formula(f: Formula, order: Sequence[str]) -> Callable[[Sequence[bool]], bool]:
    return _compile(f, tuple(order))


@functools.lru_cache(maxsize=16384)
def _compile(f: Formula, order: tuple[str, ...]) -> Callable[[Sequence[bool]], bool]:
    """Compile ``f`` into a predicate over bool tuples indexed like ``order``.

    Used in the world-enumeration loops; ``evaluate`` is the reference.
    """
    index = {v: i for i, v in enumerate(order)}
    missing = variables(f) - index.keys()
    if missing:
        raise UnassignedVariableError(sorted(missing)[0])
    return eval(f"lambda w: {_py_expr(f, index)}", {"__builtins__": {}})  # noqa: S307
