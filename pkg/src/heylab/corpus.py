"""Poset corpora for quantified checks: exhaustive enumeration up to
isomorphism at small sizes, and seeded random posets."""

from __future__ import annotations

import random
from itertools import permutations
from typing import Optional

from .poset import Poset, validate

DEFAULT_SEED = 2718


def _transitive(pairs: frozenset, n: int) -> bool:
    succ = {i: set() for i in range(n)}
    for a, b in pairs:
        succ[a].add(b)
    for a, b in pairs:
        for c in succ[b]:
            if c not in succ[a]:
                return False
    return True


def all_posets_up_to_iso(max_points: int) -> list:
    """All posets on 1..max_points points, one representative per
    isomorphism class, in a deterministic order.

    Every finite poset admits a linear extension, so enumerating strict
    transitive relations contained in the index order covers every class.
    """
    out = []
    for n in range(1, max_points + 1):
        slots = [(i, j) for i in range(n) for j in range(i + 1, n)]
        perms = list(permutations(range(n)))
        seen = set()
        for bits in range(1 << len(slots)):
            pairs = frozenset(
                slots[b] for b in range(len(slots)) if bits >> b & 1
            )
            if not _transitive(pairs, n):
                continue
            canon = min(
                tuple(sorted((p[a], p[b]) for a, b in pairs)) for p in perms
            )
            if canon in seen:
                continue
            seen.add(canon)
            out.append(validate([f"p{i}" for i in range(n)], sorted(pairs)))
    return out


def random_poset(rng: random.Random, n_points: int, edge_prob: float = 0.45) -> Poset:
    """A random poset: coin-flip a DAG over the index order and close it."""
    pairs = [
        (i, j)
        for i in range(n_points)
        for j in range(i + 1, n_points)
        if rng.random() < edge_prob
    ]
    return validate([f"p{i}" for i in range(n_points)], pairs)


def random_posets(
    count: int,
    seed: int = DEFAULT_SEED,
    min_points: int = 2,
    max_points: int = 7,
) -> list:
    rng = random.Random(seed)
    return [
        random_poset(rng, rng.randint(min_points, max_points)) for _ in range(count)
    ]


def corpus_from_spec(text: str, seed: Optional[int] = None) -> list:
    """Parse a corpus specifier into a poset list.

    Comma-separated items: 'exhaustiveK' enumerates all posets on <= K
    points up to isomorphism; 'randomN' or 'randomN:S' draws N random
    posets on <= 7 points (seed S, else the given or default seed).
    """
    posets = []
    for item in text.split(","):
        item = item.strip()
        if item.startswith("exhaustive"):
            posets.extend(all_posets_up_to_iso(int(item[len("exhaustive"):])))
        elif item.startswith("random"):
            rest = item[len("random"):]
            if ":" in rest:
                count_s, seed_s = rest.split(":", 1)
                posets.extend(random_posets(int(count_s), int(seed_s)))
            else:
                s = DEFAULT_SEED if seed is None else seed
                posets.extend(random_posets(int(rest), s))
        else:
            raise ValueError(f"unknown corpus item {item!r}")
    return posets
