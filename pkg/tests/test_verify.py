import pytest

from chinoid import core, diagrams, reps, verify


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_suite_passes(n):
    results = verify.run_suite(n, 4)
    assert results and all(r.passed for r in results), [r.name for r in results if not r.passed]


def test_embedding_needs_every_leaf(monkeypatch):
    real = diagrams.enumerate_leaves
    monkeypatch.setattr(diagrams, "enumerate_leaves", lambda n: real(n)[:1])
    assert not verify.check_embedding(3, 4).passed


def test_uniqueness_detects_a_bad_parser(monkeypatch):
    monkeypatch.setattr(core, "is_canonical_word", lambda w, n: True)
    assert not verify.check_canonical_uniqueness(2, 3).passed


def test_mutations_detect_a_survivor(monkeypatch):
    V = reps.standard_module(4, [2, 3])
    monkeypatch.setattr(verify, "mutants", lambda rep: iter([("identity", V)]))
    r = verify.check_mutations(4)
    assert not r.passed and r.witness == {"mutant": "identity"}


def test_mutant_count():
    assert len(list(verify.mutants(reps.standard_module(4, [2, 3])))) == 24


def test_inductive_detects_a_wrong_parameter(monkeypatch):
    real = reps.inductive_extend
    monkeypatch.setattr(reps, "inductive_extend", lambda U, lam, box=4: real(U, lam + 1, box))
    assert not verify.check_inductive(3).passed


def test_tree_detects_a_wrong_count(monkeypatch):
    monkeypatch.setitem(verify.LEAF_COUNTS, 4, 6)
    assert not verify.check_tree(4).passed


def test_sample_parameters_cover_zero_patterns():
    fam = reps.family(4, "3.2")
    got = verify.sample_parameters(fam)
    assert all(kw["lam"] != 0 and kw["mu"] * kw["nu"] == 0 for kw in got)
    assert len(got) == 3
