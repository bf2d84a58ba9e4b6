import os
from pathlib import Path

import pytest

import delsup

CORPUS = Path(os.environ.get("DELSUP_CORPUS_DIR", Path(__file__).resolve().parents[2] / "corpus"))

EX1 = """
cnf(c1, axiom, f(X, g(X)) != t).
cnf(c2, axiom, f(g(b), Y) = t).
"""


@pytest.mark.parametrize("mode", ["standard", "delayed", "delayed-fp", "delayed-eager"])
def test_ex1_refuted_in_every_mode(mode):
    out = delsup.prove(EX1, mode=mode)
    assert out["status"] == "Unsatisfiable"
    assert out["proof_problems"] == []
    assert out["proof"][-1].split()[1] == "$false"
    assert out["stats"]["generated"] > 0


def test_satisfiable_file():
    out = delsup.prove_file(str(CORPUS / "sat_distinct.p"))
    assert out["status"] == "Satisfiable"
    assert out["proof"] == []


def test_parse():
    clauses = delsup.parse("cnf(a, axiom, p(X) | ~q(X, b)).")
    assert clauses == [("a", "axiom", "p(X0) | ~q(X0,b)")]
    with pytest.raises(ValueError):
        delsup.parse("cnf(a, axiom, ).")
    with pytest.raises(delsup.ParseError):
        delsup.parse("fof(a, axiom, p).")


def test_unify():
    assert delsup.unify("f(X, g(X))", "f(g(b), Y)") == {"X": "g(b)", "Y": "g(g(b))"}
    assert delsup.unify("f(X)", "g(X, X)") is None
    assert delsup.unify("X", "f(X)") is None
    assert delsup.unify("a", "a") == {}


def test_compare():
    assert delsup.compare("f(a)", "a") == "Greater"
    assert delsup.compare("X", "Y") == "Incomparable"
    assert delsup.compare("g(X)", "g(X)") == "Equal"
    with pytest.raises(ValueError):
        delsup.compare("a", "b", precedence="bogus")


def test_check_lifting():
    report = delsup.check_lifting(EX1, selection="all-negative")
    assert report["violations"] == []
    assert report["lifted"] + report["exempt"] == report["ground_inferences"] > 0


def test_bad_mode():
    with pytest.raises(ValueError):
        delsup.prove(EX1, mode="nope")
