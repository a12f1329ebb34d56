"""The Heyting algebra of upsets of a finite poset.

Meet and join are intersection and union; implication U -> V is computed as
the complement of the down-closure of U \\ V. Operation-table form
(FiniteHeytingAlgebra) lets products and abstract closures work without the
poset.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import PosetMismatch
from .poset import (
    Poset,
    Upset,
    _check_same_parent,
    down_closure_mask,
    iter_bits,
    upset_masks,
)


def imp_mask(P: Poset, u: int, v: int) -> int:
    """Heyting implication on masks: complement of (u \\ v) down-closed."""
    return P.full_mask & ~down_closure_mask(P, u & ~v)


def meet(U: Upset, V: Upset) -> Upset:
    _check_same_parent(U, V)
    return Upset(U.parent, U.mask & V.mask)


def join(U: Upset, V: Upset) -> Upset:
    _check_same_parent(U, V)
    return Upset(U.parent, U.mask | V.mask)


def implies(U: Upset, V: Upset) -> Upset:
    """The largest upset W with W meet U below V."""
    _check_same_parent(U, V)
    return Upset(U.parent, imp_mask(U.parent, U.mask, V.mask))


def neg(U: Upset) -> Upset:
    return Upset(U.parent, imp_mask(U.parent, U.mask, 0))


def top(P: Poset) -> Upset:
    return Upset(P, P.full_mask)


def bottom(P: Poset) -> Upset:
    return Upset(P, 0)


@dataclass(frozen=True)
class FiniteHeytingAlgebra:
    """A finite Heyting algebra in operation-table form.

    elements holds one hashable label per element (sorted point-index tuples
    for upset algebras, label pairs for products); the tables map element
    indices to element indices.
    """

    elements: tuple
    meet: tuple
    join: tuple
    imp: tuple
    bottom: int
    top: int

    @property
    def size(self) -> int:
        return len(self.elements)

    def leq(self, a: int, b: int) -> bool:
        return self.meet[a][b] == a

    def to_json(self) -> dict:
        def as_lists(label):
            if isinstance(label, tuple):
                return [as_lists(x) for x in label]
            return label

        return {
            "size": self.size,
            "elements": [as_lists(e) for e in self.elements],
            "meet": [list(r) for r in self.meet],
            "join": [list(r) for r in self.join],
            "imp": [list(r) for r in self.imp],
            "bottom": self.bottom,
            "top": self.top,
        }


def algebra_from_json(data: dict) -> FiniteHeytingAlgebra:
    def as_tuples(label):
        if isinstance(label, list):
            return tuple(as_tuples(x) for x in label)
        return label

    return FiniteHeytingAlgebra(
        elements=tuple(as_tuples(e) for e in data["elements"]),
        meet=tuple(tuple(r) for r in data["meet"]),
        join=tuple(tuple(r) for r in data["join"]),
        imp=tuple(tuple(r) for r in data["imp"]),
        bottom=data["bottom"],
        top=data["top"],
    )


def algebra_of(P: Poset, budget: Optional[int] = None) -> FiniteHeytingAlgebra:
    """The full Heyting algebra Up(P) with populated operation tables.

    Elements are ordered lexicographically on the bit-vector, so the table
    layout is reproducible across runs.
    """
    masks = upset_masks(P, budget)
    idx = {m: i for i, m in enumerate(masks)}
    size = len(masks)
    meet_t = tuple(
        tuple(idx[masks[a] & masks[b]] for b in range(size)) for a in range(size)
    )
    join_t = tuple(
        tuple(idx[masks[a] | masks[b]] for b in range(size)) for a in range(size)
    )
    imp_t = tuple(
        tuple(idx[imp_mask(P, masks[a], masks[b])] for b in range(size))
        for a in range(size)
    )
    elements = tuple(tuple(iter_bits(m)) for m in masks)
    return FiniteHeytingAlgebra(
        elements=elements,
        meet=meet_t,
        join=join_t,
        imp=imp_t,
        bottom=idx[0],
        top=idx[P.full_mask],
    )


def element_index(P: Poset, U: Upset, budget: Optional[int] = None) -> int:
    """Index of an upset in the canonical element order of algebra_of(P)."""
    if U.parent != P:
        raise PosetMismatch("upset does not live over this poset")
    masks = upset_masks(P, budget)
    return masks.index(U.mask)
