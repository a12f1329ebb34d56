import json

import pytest

from heylab.corpus import all_posets_up_to_iso
from heylab.verify import (
    run_verification,
    verify_canonical_range,
    verify_collapse,
    verify_duality,
    verify_next_level,
    verify_non_colourable,
    verify_oracle_equivalence,
    verify_rank_type,
    verify_residuation,
    verify_strictness,
)


@pytest.fixture(scope="module")
def tiny_corpus():
    return all_posets_up_to_iso(4)


def test_residuation_report(tiny_corpus):
    r = verify_residuation(tiny_corpus)
    assert r["passed"] and not r["failures"]
    assert r["posets"] == 24
    assert r["triples"] > 0


def test_rank_type_report(tiny_corpus):
    r = verify_rank_type(tiny_corpus, gens_per_poset=5, max_stage=3, seed=1)
    assert r["passed"]
    assert r["checks"] == 24 * 5 * 4


def test_duality_report(tiny_corpus):
    r = verify_duality(tiny_corpus, gens_per_poset=5, seed=1)
    assert r["passed"] and r["checks"] == 120


def test_canonical_report():
    r = verify_canonical_range(cases=((0, 4), (1, 4)))
    assert r["passed"] and r["checks"] == 8


def test_collapse_report():
    r = verify_collapse(1, samples=10, seed=3)
    assert r["passed"] and r["depth"] == 8


def test_non_colourable_report():
    r = verify_non_colourable(1, 4)
    assert r["passed"]


def test_next_level_report():
    r = verify_next_level(1, 6, samples=10, seed=3)
    assert r["passed"]


def test_strictness_report():
    r = verify_strictness(1, (4, 5))
    assert r["passed"]
    assert r["max_generated_constant"]
    assert r["algebra_size_strictly_increasing"]


def test_oracle_report(tiny_corpus):
    r = verify_oracle_equivalence(tiny_corpus, gens_per_poset=5, seed=1)
    assert r["passed"] and r["checks"] == 120


def test_reports_are_deterministic(tiny_corpus):
    a = verify_rank_type(tiny_corpus, gens_per_poset=5, max_stage=2, seed=9)
    b = verify_rank_type(tiny_corpus, gens_per_poset=5, max_stage=2, seed=9)
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_run_verification_dispatch():
    r = run_verification("residuation", corpus="exhaustive3")
    assert r["lemma"] == "residuation" and r["passed"]
    r = run_verification("canonical", n=1, depth=3)
    assert r["passed"]
    with pytest.raises(ValueError):
        run_verification("no-such-lemma")


def test_run_verification_drops_none_kwargs():
    r = run_verification("non-colourable", n=1, depth=3, k=None, samples=None)
    assert r["passed"] and r["mode"] == "exhaustive"
