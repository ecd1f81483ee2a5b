"""Classical satisfiability over finite variable sets.

Two independent routes:

* ``"enumerate"`` walks every world (the oracle; capped at
  :data:`ENUMERATION_CAP` variables);
* ``"dpll"`` converts to clauses (Tseitin) and runs unit propagation with
  splitting.  No cap.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

from .formula import (
    And,
    Const,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Var,
    compile_formula,
    variables_of,
)

ENUMERATION_CAP = 24


class CapExceededError(RuntimeError):
    """A hard size cap was hit; results are never approximated."""

    def __init__(self, what: str, cap: int, count: int):
        self.what = what
        self.cap = cap
        self.count = count
        super().__init__(f"{what}: cap is {cap}, got {count}")


def enumerate_worlds(vars: Iterable[str], cap: int = ENUMERATION_CAP) -> Iterator[dict[str, bool]]:
    """Yield every assignment over ``vars``.

    Variables are sorted; the first is the most significant and ``False``
    comes before ``True``.
    """
    names = sorted(set(vars))
    if len(names) > cap:
        raise CapExceededError("world enumeration variable count", cap, len(names))
    for values in itertools.product((False, True), repeat=len(names)):
        yield dict(zip(names, values))


def world_tuples(names: list[str], cap: int = ENUMERATION_CAP) -> Iterator[tuple[bool, ...]]:
    """Like :func:`enumerate_worlds` but over a fixed order, as bool tuples."""
    if len(names) > cap:
        raise CapExceededError("world enumeration variable count", cap, len(names))
    return itertools.product((False, True), repeat=len(names))


# --------------------------------------------------------------------------
# Oracle route


def _sat_enumerate(fs: list[Formula]) -> bool:
    names = sorted(variables_of(fs))
    checks = [compile_formula(f, names) for f in fs]
    return any(all(c(w) for c in checks) for w in world_tuples(names))


# --------------------------------------------------------------------------
# Decision procedure route


class _Tseitin:
    def __init__(self) -> None:
        self.var_ids: dict[str, int] = {}
        self.n = 0
        self.clauses: list[list[int]] = []
        self._true: int | None = None

    def fresh(self) -> int:
        self.n += 1
        return self.n

    def true_lit(self) -> int:
        if self._true is None:
            self._true = self.fresh()
            self.clauses.append([self._true])
        return self._true

    def lit(self, f: Formula) -> int:
        if isinstance(f, Var):
            if f.name not in self.var_ids:
                self.var_ids[f.name] = self.fresh()
            return self.var_ids[f.name]
        if isinstance(f, Const):
            t = self.true_lit()
            return t if f.value else -t
        if isinstance(f, Not):
            return -self.lit(f.child)
        a, b = self.lit(f.left), self.lit(f.right)
        x = self.fresh()
        cl = self.clauses
        if isinstance(f, And):
            cl += [[-x, a], [-x, b], [x, -a, -b]]
        elif isinstance(f, Or):
            cl += [[-x, a, b], [x, -a], [x, -b]]
        elif isinstance(f, Implies):
            cl += [[-x, -a, b], [x, a], [x, -b]]
        elif isinstance(f, Iff):
            cl += [[-x, -a, b], [-x, a, -b], [x, a, b], [x, -a, -b]]
        else:
            raise TypeError(f"not a formula: {f!r}")
        return x


def to_clauses(fs: Iterable[Formula]) -> list[list[int]]:
    t = _Tseitin()
    for f in fs:
        t.clauses.append([t.lit(f)])
    return t.clauses


def _simplify(clauses: list[list[int]], lit: int) -> list[list[int]] | None:
    out = []
    for c in clauses:
        if lit in c:
            continue
        if -lit in c:
            reduced = [l for l in c if l != -lit]
            if not reduced:
                return None
            out.append(reduced)
        else:
            out.append(c)
    return out


def dpll(clauses: list[list[int]]) -> bool:
    """Unit propagation plus splitting on the first literal of the first clause."""
    while True:
        unit = next((c[0] for c in clauses if len(c) == 1), None)
        if unit is None:
            break
        clauses = _simplify(clauses, unit)
        if clauses is None:
            return False
    if not clauses:
        return True
    lit = clauses[0][0]
    for choice in (lit, -lit):
        reduced = _simplify(clauses, choice)
        if reduced is not None and dpll(reduced):
            return True
    return False


# --------------------------------------------------------------------------
# Public API


def is_satisfiable(fs: Iterable[Formula], method: str = "dpll") -> bool:
    fs = list(fs)
    if method == "dpll":
        return dpll(to_clauses(fs))
    if method == "enumerate":
        return _sat_enumerate(fs)
    raise ValueError(f"unknown satisfiability method {method!r}")


def entails(premises: Iterable[Formula], conclusion: Formula, method: str = "dpll") -> bool:
    return not is_satisfiable([*premises, Not(conclusion)], method=method)
