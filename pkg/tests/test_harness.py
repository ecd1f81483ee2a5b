import json

import pytest

from lexclosure.formula import TRUE, Var
from lexclosure.harness import (
    FormulaPool,
    check_properties,
    maximal_consistent_subsets,
    poole_entails,
    poole_entails_model,
    query_pool,
    random_corpus,
    random_kb,
)
from lexclosure.kb import Default
from lexclosure.lex import lex_entails_model

from golden import F, KB

import oracles

MUSICIANS_A = "(!p & !q) | !r"


@pytest.mark.parametrize(
    "a, b, expected",
    [(MUSICIANS_A, "p", False), (MUSICIANS_A, "p <-> q", True), (f"({MUSICIANS_A}) & !p", "p <-> q", False)],
)
def test_poole_musicians(musicians, a, b, expected):
    assert poole_entails(musicians, F(a), F(b)) is expected
    assert poole_entails_model(musicians, F(a), F(b)) is expected


def test_poole_musicians_subsets(musicians):
    subsets = maximal_consistent_subsets(musicians, F(MUSICIANS_A))
    p, q, r = (Default(TRUE, Var(v)) for v in "pqr")
    assert set(subsets) == {frozenset({p, q}), frozenset({r})}


SMALL = random_corpus(50, seed=5)


@pytest.mark.parametrize("i", range(len(SMALL)))
def test_poole_routes_match_oracle(i):
    kb = SMALL[i]
    for a, b in query_pool(kb, seed=i, n_pairs=12):
        assert set(maximal_consistent_subsets(kb, a)) == oracles.inclusion_maximal(kb, a)
        assert poole_entails(kb, a, b) == poole_entails_model(kb, a, b), (a, b)


@pytest.mark.parametrize(
    "kb, a, b", [("add_conclusions", "!p | !q", "p"), ("add_conclusions_plus", "!p | !q", "p"),
                 ("delete_conclusions", "!p", "q"), ("delete_conclusions_plus", "!p", "q")],
)
def test_poole_matches_lex_on_sensitivity_fixtures(kb, a, b):
    k = KB(kb)
    assert poole_entails(k, F(a), F(b)) == lex_entails_model(k, F(a), F(b))


def test_random_kb_deterministic():
    a, b = random_kb(1, 3, 3, 2), random_kb(1, 3, 3, 2)
    assert a == b and a.to_text() == b.to_text()
    assert len(a) == 3 and a.variables <= set("pqr")


def test_random_kb_seeds_differ():
    texts = {random_kb(seed, 3, 3, 2).to_text() for seed in range(100)}
    assert len(texts) >= 95


@pytest.mark.parametrize("args", [(0, 3, 9, 2), (0, 7, 3, 2), (0, 3, 0, 2), (0, 3, 3, -1)])
def test_random_kb_parameter_errors(args):
    with pytest.raises(ValueError):
        random_kb(*args)


def test_formula_pool_negations(penguins):
    pool = FormulaPool(penguins)
    assert F("r") in pool.base and F("!r") in pool.base and F("q") in pool.base


@pytest.mark.parametrize("name", ["penguins", "musicians"])
def test_lex_properties_clean(name):
    report = check_properties(KB(name), n_samples=500, seed=0)
    assert report.ok, report.to_text()
    assert all(report.checked[r] > 0 for r in ("reflexivity", "lle", "rw", "and", "cm", "rm"))
    js = report.to_json()
    assert json.loads(json.dumps(js))["status"] == "ok"


def test_poole_breaks_rational_monotonicity(musicians):
    report = check_properties(
        musicians, n_samples=150, seed=0, relation=poole_entails,
        extra_formulas=[F(MUSICIANS_A)],
    )
    assert report.violations["rm"]
    assert report.status == "violations"
    inst = report.violations["rm"][0]
    a, b, c = F(inst["a"]), F(inst["b"]), F(inst["c"])
    assert poole_entails(musicians, a, b)
    assert not poole_entails(musicians, a, ~c)
    assert not poole_entails(musicians, a & c, b)
    assert "VIOLATION" in report.to_text()


def test_check_properties_deterministic(penguins):
    r1 = check_properties(penguins, n_samples=60, seed=4)
    r2 = check_properties(penguins, n_samples=60, seed=4)
    assert r1.to_json() == r2.to_json()
