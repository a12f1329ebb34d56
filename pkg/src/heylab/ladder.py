"""Finite truncations of the ladder spaces and their verifiers.

A ladder of parameter n has levels of width 2**n + 1; level 0 is the top.
Each point of level i+1 is below every point of level i except the one with
the next colour index, below all of levels i-1 and above, and an optional
bottom point sits below everything (the truncation's stand-in for the point
at infinity).
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass
from itertools import product
from typing import Optional

from .colouring import Colouring, _omega_block_of
from .errors import BudgetExceeded, PosetMismatch, SupportTooDeep
from .poset import (
    DEFAULT_TUPLE_BUDGET,
    Poset,
    iter_bits,
    upset_masks,
    validate,
)

BOTTOM_NAME = "bot"


@dataclass(frozen=True)
class LadderSpec:
    n: int
    depth: int
    with_bottom: bool = True

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("ladder parameter n must be >= 0")
        if self.depth < 1:
            raise ValueError("depth must be >= 1")

    @property
    def width(self) -> int:
        return 2 ** self.n + 1

    @property
    def point_count(self) -> int:
        return self.width * self.depth + (1 if self.with_bottom else 0)


def point_name(l: int, i: int) -> str:
    return f"x{l}_{i}"


def ladder_rule_pairs(spec: LadderSpec) -> list:
    """The raw order pairs of the three construction rules, as index pairs."""
    w = spec.width

    def pid(l: int, i: int) -> int:
        return i * w + l

    pairs = []
    for i in range(1, spec.depth):
        for l in range(w):
            for lp in range(w):
                if lp != l + 1:
                    pairs.append((pid(l, i), pid(lp, i - 1)))
        for t in range(2, i + 1):
            for l in range(w):
                for lp in range(w):
                    pairs.append((pid(l, i), pid(lp, i - t)))
    if spec.with_bottom:
        b = w * spec.depth
        pairs.extend((b, p) for p in range(b))
    return pairs


def build_ladder(spec: LadderSpec, max_points: Optional[int] = None) -> Poset:
    """Build the truncated ladder poset, levels tagged, bottom untagged."""
    if max_points is not None and spec.point_count > max_points:
        raise BudgetExceeded(
            f"{spec.point_count} points exceed the budget of {max_points}"
        )
    w = spec.width
    names = [point_name(l, i) for i in range(spec.depth) for l in range(w)]
    if spec.with_bottom:
        names.append(BOTTOM_NAME)
    tags = {i * w + l: i for i in range(spec.depth) for l in range(w)}
    return validate(names, ladder_rule_pairs(spec), tags)


def level_points(P: Poset) -> dict:
    """Map level -> sorted point indices, from the poset's level tags."""
    if P.level_tags is None:
        raise ValueError("poset has no level tags")
    out: dict = {}
    for i, lvl in sorted(P.level_tags.items()):
        out.setdefault(lvl, []).append(i)
    return out


def canonical_colouring(P: Poset, n: int) -> Colouring:
    """The (n+1)-colouring of a parameter-n ladder: colour k holds the
    level-0 points whose column gets a subset containing k.

    Columns are mapped injectively into colour subsets by binary expansion
    of the column index (injective since every index is below 2**(n+1)).
    Width 2 is degenerate: a column-0 point sees a single upper neighbour,
    namely the column-0 point above it, so that column must carry the
    nonempty subset; for n = 0 the injection is therefore flipped.
    """
    width = 2 ** n + 1

    def e(l: int) -> int:
        if n == 0:
            return 1 - l
        return l

    masks = []
    for k in range(n + 1):
        m = 0
        for l in range(width):
            if e(l) >> k & 1:
                m |= 1 << P.index(point_name(l, 0))
        masks.append(m)
    return Colouring.from_masks(P, masks)


def verify_canonical(n: int, depth: int, max_points: Optional[int] = None) -> bool:
    """Is the canonical colouring an actual colouring of the truncation?"""
    P = build_ladder(LadderSpec(n, depth, with_bottom=True), max_points)
    block_of, _ = _omega_block_of(P, canonical_colouring(P, n).masks)
    return max(block_of) + 1 == P.n


@dataclass(frozen=True)
class CollapseReport:
    """Per-level omega-type statistics of a colouring on a ladder.

    first_merge_level is the least level holding two points of the same
    omega-type while all deeper levels agree on 0-types; collapse_level is
    the least level from which every level has a single omega-type. Both
    are None when no level qualifies. bound_satisfied records whether every
    level at least 2**n + 1 below the first merge is a single class.
    """

    n: int
    depth: int
    first_merge_level: Optional[int]
    collapse_level: Optional[int]
    classes_per_level: tuple
    bound_satisfied: bool

    def to_json(self) -> dict:
        d = asdict(self)
        d["classes_per_level"] = list(self.classes_per_level)
        return d


def _level_stats(P: Poset, masks, depth: int):
    block_of, _ = _omega_block_of(P, masks)
    levels = level_points(P)
    classes = []
    uniform0 = []
    for j in range(depth):
        pts = levels[j]
        classes.append(len({block_of[i] for i in pts}))
        sigs = {tuple(m >> i & 1 for m in masks) for i in pts}
        uniform0.append(len(sigs) <= 1)
    return classes, uniform0


def collapse_check(spec: LadderSpec, c: Colouring) -> CollapseReport:
    """Check the type-collapse bound on a truncation.

    The colouring's support must stay in the top levels, leaving at least
    2**n + 3 colour-free levels below, so the truncation has room for the
    collapse to play out; colours equal to the empty or full upset carry no
    information and are exempt.
    """
    P = c.parent
    if P.n != spec.point_count:
        raise PosetMismatch("colouring is not over a ladder of this spec")
    tail = 2 ** spec.n + 3
    max_support = spec.depth - 1 - tail
    for m in c.masks:
        if m in (0, P.full_mask):
            continue
        for i in iter_bits(m):
            lvl = P.level_tags.get(i) if P.level_tags else None
            if lvl is None or lvl > max_support:
                raise SupportTooDeep(
                    f"colour support must stay within levels 0..{max_support}"
                )
    classes, uniform0 = _level_stats(P, c.masks, spec.depth)
    width = spec.width
    first_merge = None
    for j in range(spec.depth):
        if classes[j] < width and all(uniform0[q] for q in range(j + 1, spec.depth)):
            first_merge = j
            break
    collapse = None
    for t0 in range(spec.depth):
        if all(classes[t] == 1 for t in range(t0, spec.depth)):
            collapse = t0
            break
    if first_merge is None:
        bound = True
    else:
        start = first_merge + 2 ** spec.n + 1
        bound = all(classes[t] == 1 for t in range(start, spec.depth))
    return CollapseReport(
        n=spec.n,
        depth=spec.depth,
        first_merge_level=first_merge,
        collapse_level=collapse,
        classes_per_level=tuple(classes),
        bound_satisfied=bound,
    )


def next_level_bound_check(spec: LadderSpec, c: Colouring) -> bool:
    """Whenever a level has at most 2**n omega-classes and the level below
    is 0-type-uniform, the level below has no more omega-classes."""
    P = c.parent
    if P.n != spec.point_count:
        raise PosetMismatch("colouring is not over a ladder of this spec")
    classes, uniform0 = _level_stats(P, c.masks, spec.depth)
    bound = 2 ** spec.n
    for i in range(spec.depth - 1):
        if classes[i] <= bound and uniform0[i + 1]:
            if classes[i + 1] > classes[i]:
                return False
    return True


def non_colourability_scan(
    n: int,
    depth: int,
    k: Optional[int] = None,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    budget_upsets: Optional[int] = None,
    budget_tuples: Optional[int] = None,
) -> dict:
    """Scan k-colourings of the bottomed truncation for isolated points.

    Exhaustive over all k-tuples of upsets when samples is None, otherwise
    a seeded random sample. Reports how many colourings isolate every point
    and the largest class count seen.
    """
    spec = LadderSpec(n, depth, with_bottom=True)
    P = build_ladder(spec)
    k = n if k is None else k
    masks = upset_masks(P, budget_upsets)
    if samples is None:
        cap = DEFAULT_TUPLE_BUDGET if budget_tuples is None else budget_tuples
        if len(masks) ** k > cap:
            raise BudgetExceeded(
                f"{len(masks)}^{k} colour tuples exceed the budget of {cap}"
            )
        tuples = product(masks, repeat=k)
        checked = len(masks) ** k
    else:
        rng = random.Random(seed)
        tuples = [
            tuple(masks[rng.randrange(len(masks))] for _ in range(k))
            for _ in range(samples)
        ]
        checked = samples
    max_classes = 0
    coloured_found = 0
    for tup in tuples:
        block_of, _ = _omega_block_of(P, tup)
        nb = max(block_of) + 1
        max_classes = max(max_classes, nb)
        if nb == P.n:
            coloured_found += 1
    return {
        "n": n,
        "depth": depth,
        "k": k,
        "mode": "exhaustive" if samples is None else "sampled",
        "seed": seed,
        "checked": checked,
        "upset_count": len(masks),
        "point_count": P.n,
        "max_classes": max_classes,
        "coloured_found": coloured_found,
    }


def exhaustive_non_colourability(
    n: int,
    depth: int,
    budget_upsets: Optional[int] = None,
    budget_tuples: Optional[int] = None,
) -> bool:
    """True when no n-tuple of upsets colours the bottomed truncation."""
    report = non_colourability_scan(
        n, depth, budget_upsets=budget_upsets, budget_tuples=budget_tuples
    )
    return report["coloured_found"] == 0
