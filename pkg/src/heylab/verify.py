"""Named verifications over poset corpora and ladder truncations.

Each function returns a JSON-able report dict with a "passed" flag and, on
failure, counterexample payloads sufficient to replay the offending
instance. All sampling is seeded, and the seed is recorded in the report,
so identical arguments give byte-identical reports.
"""

from __future__ import annotations

import random
from typing import Optional, Sequence

from .algebra import algebra_of, imp_mask
from .colouring import _omega_block_of
from .corpus import DEFAULT_SEED, corpus_from_spec
from .ladder import (
    LadderSpec,
    build_ladder,
    canonical_colouring,
    collapse_check,
    next_level_bound_check,
    non_colourability_scan,
    verify_canonical,
)
from .poset import Poset, iter_bits, poset_to_json, upset_masks
from .subalgebra import generate, rank_type_mismatches
from .variety import strictness_report

DEFAULT_CORPUS = "exhaustive5,random200:2718"


def _sample_generator_sets(masks, count: int, rng: random.Random, max_size: int = 2):
    """Seeded generator-set sample; the empty set is always included."""
    sets_ = [()]
    pool = list(masks)
    while len(sets_) < count:
        size = rng.randint(1, min(max_size, len(pool)))
        sets_.append(tuple(sorted(rng.sample(pool, size))))
    return sets_


def _upset_lists(P: Poset, masks) -> list:
    return [sorted(iter_bits(m)) for m in masks]


def verify_residuation(
    corpus: Sequence[Poset],
    budget_upsets: Optional[int] = None,
) -> dict:
    """Residuation and distributivity over every upset triple."""
    failures = []
    triples = 0
    for pi, P in enumerate(corpus):
        masks = upset_masks(P, budget_upsets)
        for b in masks:
            for c in masks:
                imp = imp_mask(P, b, c)
                not_imp = ~imp
                not_c = ~c
                for a in masks:
                    ok = ((a & b & not_c) == 0) == ((a & not_imp) == 0)
                    ok = ok and (a & (b | c)) == ((a & b) | (a & c))
                    if not ok:
                        failures.append(
                            {
                                "poset": poset_to_json(P),
                                "triple": _upset_lists(P, (a, b, c)),
                            }
                        )
                triples += len(masks)
    return {
        "lemma": "residuation",
        "posets": len(corpus),
        "triples": triples,
        "failures": failures,
        "passed": not failures,
    }


def _corpus_generator_runs(corpus, gens_per_poset, seed, budget_upsets):
    rng = random.Random(seed)
    for P in corpus:
        masks = upset_masks(P, budget_upsets)
        for G in _sample_generator_sets(masks, gens_per_poset, rng):
            yield P, G


def verify_rank_type(
    corpus: Sequence[Poset],
    gens_per_poset: int = 20,
    max_stage: int = 5,
    seed: int = DEFAULT_SEED,
    budget_upsets: Optional[int] = None,
    budget_alg: Optional[int] = None,
) -> dict:
    """Stage-n types against rank-<=n membership, all stages up to max_stage."""
    failures = []
    checks = 0
    for P, G in _corpus_generator_runs(corpus, gens_per_poset, seed, budget_upsets):
        bad = rank_type_mismatches(P, G, max_stage, budget_alg)
        checks += max_stage + 1
        if bad:
            failures.append(
                {
                    "poset": poset_to_json(P),
                    "generators": _upset_lists(P, G),
                    "stages": bad,
                }
            )
    return {
        "lemma": "rank-type",
        "seed": seed,
        "posets": len(corpus),
        "gens_per_poset": gens_per_poset,
        "max_stage": max_stage,
        "checks": checks,
        "failures": failures,
        "passed": not failures,
    }


def verify_duality(
    corpus: Sequence[Poset],
    gens_per_poset: int = 20,
    seed: int = DEFAULT_SEED,
    budget_upsets: Optional[int] = None,
    budget_alg: Optional[int] = None,
) -> dict:
    """The generation/colouring biconditional over a sampled corpus."""
    failures = []
    checks = 0
    for P, G in _corpus_generator_runs(corpus, gens_per_poset, seed, budget_upsets):
        ra = generate(P, G, budget_alg)
        generates_all = len(ra.elements) == len(upset_masks(P, budget_upsets))
        block_of, _ = _omega_block_of(P, G)
        coloured = max(block_of) + 1 == P.n
        checks += 1
        if generates_all != coloured:
            failures.append(
                {
                    "poset": poset_to_json(P),
                    "generators": _upset_lists(P, G),
                    "generates_all": generates_all,
                    "coloured": coloured,
                }
            )
    return {
        "lemma": "duality",
        "seed": seed,
        "posets": len(corpus),
        "gens_per_poset": gens_per_poset,
        "checks": checks,
        "failures": failures,
        "passed": not failures,
    }


def verify_canonical_range(cases=((0, 8), (1, 8), (2, 6))) -> dict:
    """Canonical colouring isolates everything, over a grid of truncations."""
    failures = []
    checks = 0
    for n, max_depth in cases:
        for depth in range(1, max_depth + 1):
            checks += 1
            if not verify_canonical(n, depth):
                failures.append({"n": n, "depth": depth})
    return {
        "lemma": "canonical",
        "cases": [list(c) for c in cases],
        "checks": checks,
        "failures": failures,
        "passed": not failures,
    }


def _support_restricted_masks(P: Poset, max_level: int):
    """Upsets whose nontrivial support stays within levels 0..max_level."""
    keep = []
    for m in upset_masks(P):
        if m in (0, P.full_mask):
            keep.append(m)
            continue
        levels = [P.level_tags.get(i) for i in iter_bits(m)]
        if all(lvl is not None and lvl <= max_level for lvl in levels):
            keep.append(m)
    return keep


def verify_collapse(
    n: int,
    samples: int = 100,
    seed: int = DEFAULT_SEED,
    support_levels: int = 3,
    depth: Optional[int] = None,
) -> dict:
    """Collapse bound for seeded random n-colourings supported near the top."""
    depth = (2 ** n + 6) if depth is None else depth
    spec = LadderSpec(n, depth, with_bottom=True)
    P = build_ladder(spec)
    pool = _support_restricted_masks(P, support_levels - 1)
    rng = random.Random(seed)
    failures = []
    for _ in range(samples):
        masks = tuple(pool[rng.randrange(len(pool))] for _ in range(n))
        report = collapse_check(spec, _colouring_from(P, masks))
        if not report.bound_satisfied:
            failures.append(
                {"colours": _upset_lists(P, masks), "report": report.to_json()}
            )
    return {
        "lemma": "collapse",
        "n": n,
        "depth": depth,
        "samples": samples,
        "seed": seed,
        "support_levels": support_levels,
        "failures": failures,
        "passed": not failures,
    }


def _colouring_from(P: Poset, masks):
    from .colouring import Colouring

    return Colouring.from_masks(P, masks)


def verify_non_colourable(
    n: int,
    depth: int,
    k: Optional[int] = None,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    budget_upsets: Optional[int] = None,
    budget_tuples: Optional[int] = None,
) -> dict:
    scan = non_colourability_scan(
        n, depth, k=k, samples=samples, seed=seed,
        budget_upsets=budget_upsets, budget_tuples=budget_tuples,
    )
    scan["lemma"] = "non-colourable"
    scan["passed"] = scan["coloured_found"] == 0
    return scan


def verify_next_level(
    n: int,
    depth: int,
    samples: int = 100,
    seed: int = DEFAULT_SEED,
    k: Optional[int] = None,
) -> dict:
    """Next-level class bound for seeded random colourings plus the
    canonical colouring."""
    spec = LadderSpec(n, depth, with_bottom=True)
    P = build_ladder(spec)
    masks_pool = upset_masks(P)
    k = n if k is None else k
    rng = random.Random(seed)
    trials = [tuple(canonical_colouring(P, n).masks)]
    for _ in range(samples):
        trials.append(
            tuple(masks_pool[rng.randrange(len(masks_pool))] for _ in range(k))
        )
    failures = []
    for masks in trials:
        if not next_level_bound_check(spec, _colouring_from(P, masks)):
            failures.append({"colours": _upset_lists(P, masks)})
    return {
        "lemma": "next-level",
        "n": n,
        "depth": depth,
        "k": k,
        "samples": samples,
        "seed": seed,
        "failures": failures,
        "passed": not failures,
    }


def verify_strictness(
    n: int = 1,
    depths: Sequence[int] = (4, 5, 6, 7, 8),
    budget_upsets: Optional[int] = None,
    budget_alg: Optional[int] = None,
) -> dict:
    """Constant max n-generated size, growing full algebra, canonical
    generation at every depth."""
    rows = strictness_report(n, depths, budget_upsets, budget_alg)
    sizes = [r["algebra_size"] for r in rows]
    maxgen = [r["max_k_generated_size"] for r in rows]
    constant = len(set(maxgen)) == 1
    increasing = all(a < b for a, b in zip(sizes, sizes[1:]))
    canonical = all(r["canonical_generates_full"] for r in rows)
    return {
        "lemma": "strictness",
        "n": n,
        "depths": list(depths),
        "rows": rows,
        "max_generated_constant": constant,
        "algebra_size_strictly_increasing": increasing,
        "canonical_generates_full_everywhere": canonical,
        "passed": constant and increasing and canonical,
    }


def verify_oracle_equivalence(
    corpus: Sequence[Poset],
    gens_per_poset: int = 20,
    seed: int = DEFAULT_SEED,
    budget_upsets: Optional[int] = None,
    budget_alg: Optional[int] = None,
) -> dict:
    """Table-based closure size against the rank-stratified closure size,
    on the same sampled instances as the rank-type check."""
    from .variety import generated_size

    failures = []
    checks = 0
    current: Optional[Poset] = None
    A = None
    mask_to_idx: dict = {}
    for P, G in _corpus_generator_runs(corpus, gens_per_poset, seed, budget_upsets):
        if P is not current:
            current = P
            A = algebra_of(P, budget_upsets)
            mask_to_idx = {m: i for i, m in enumerate(upset_masks(P))}
        table_size = generated_size(A, [mask_to_idx[m] for m in G])
        strata_size = len(generate(P, G, budget_alg).elements)
        checks += 1
        if table_size != strata_size:
            failures.append(
                {
                    "poset": poset_to_json(P),
                    "generators": _upset_lists(P, G),
                    "table_size": table_size,
                    "strata_size": strata_size,
                }
            )
    return {
        "lemma": "oracle-equivalence",
        "seed": seed,
        "posets": len(corpus),
        "gens_per_poset": gens_per_poset,
        "checks": checks,
        "failures": failures,
        "passed": not failures,
    }


def run_verification(name: str, **kwargs) -> dict:
    """Dispatch a verification by its CLI name."""
    corpus_spec = kwargs.pop("corpus", None)
    needs_corpus = name in ("rank-type", "duality", "residuation", "oracle")
    if needs_corpus:
        corpus = corpus_from_spec(corpus_spec or DEFAULT_CORPUS)
        kwargs["corpus"] = corpus
    dispatch = {
        "residuation": verify_residuation,
        "rank-type": verify_rank_type,
        "duality": verify_duality,
        "canonical": _verify_canonical_entry,
        "collapse": verify_collapse,
        "non-colourable": verify_non_colourable,
        "next-level": verify_next_level,
        "strictness": verify_strictness,
        "oracle": verify_oracle_equivalence,
    }
    if name not in dispatch:
        raise ValueError(f"unknown lemma {name!r}")
    kwargs = {k: v for k, v in kwargs.items() if v is not None}
    return dispatch[name](**kwargs)


def _verify_canonical_entry(n: Optional[int] = None, depth: Optional[int] = None) -> dict:
    if n is None:
        return verify_canonical_range()
    max_depth = depth if depth is not None else (6 if n >= 2 else 8)
    return verify_canonical_range(cases=((n, max_depth),))
