import pytest

from heylab.corpus import (
    DEFAULT_SEED,
    all_posets_up_to_iso,
    corpus_from_spec,
    random_poset,
    random_posets,
)
from heylab.poset import poset_to_json

import random


def test_exhaustive_counts():
    # number of posets on 1..5 points up to isomorphism: 1, 2, 5, 16, 63
    corpus = all_posets_up_to_iso(5)
    by_size = {}
    for P in corpus:
        by_size[P.n] = by_size.get(P.n, 0) + 1
    assert by_size == {1: 1, 2: 2, 3: 5, 4: 16, 5: 63}
    assert len(corpus) == 87


def test_exhaustive_no_duplicates():
    corpus = all_posets_up_to_iso(4)
    seen = {(P.points, P.up) for P in corpus}
    assert len(seen) == len(corpus)


def test_random_posets_deterministic():
    a = random_posets(15, seed=5)
    b = random_posets(15, seed=5)
    assert [poset_to_json(P) for P in a] == [poset_to_json(P) for P in b]
    c = random_posets(15, seed=6)
    assert [poset_to_json(P) for P in a] != [poset_to_json(P) for P in c]


def test_random_poset_is_valid():
    rng = random.Random(3)
    for _ in range(30):
        P = random_poset(rng, rng.randint(2, 7))
        for i in range(P.n):
            assert P.leq(i, i)
            for j in range(P.n):
                if i != j and P.leq(i, j):
                    assert not P.leq(j, i)


def test_corpus_from_spec():
    corpus = corpus_from_spec("exhaustive3,random5:42")
    assert len(corpus) == 8 + 5
    assert corpus_from_spec("random3") is not None
    assert len(corpus_from_spec("random4", seed=DEFAULT_SEED)) == 4
    with pytest.raises(ValueError):
        corpus_from_spec("bogus7")
