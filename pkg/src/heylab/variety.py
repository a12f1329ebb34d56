"""Generation bounds inside abstract finite algebras, products, and the
strict-generation report for ladder truncations."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import combinations_with_replacement, product
from typing import Iterable, Optional, Sequence

from .algebra import FiniteHeytingAlgebra
from .errors import BudgetExceeded, ForeignElement
from .ladder import LadderSpec, build_ladder, canonical_colouring
from .poset import DEFAULT_TUPLE_BUDGET, DEFAULT_UPSET_BUDGET, iter_bits, upset_masks
from .subalgebra import generate


@dataclass(frozen=True)
class GenerationReport:
    """Maximum size of a k-generated subalgebra.

    max_generated_size quantifies over k-tuples with repetition allowed;
    max_subset_generated_size over k-element subsets (the |G| = k reading),
    which coincides with the tuple reading whenever k <= algebra size.
    """

    algebra_size: int
    k: int
    max_generated_size: int
    witness_tuple: tuple
    max_subset_generated_size: int

    def to_json(self) -> dict:
        d = asdict(self)
        d["witness_tuple"] = list(self.witness_tuple)
        return d


def _check_elements(A: FiniteHeytingAlgebra, gens: Iterable[int]) -> list:
    out = []
    for g in gens:
        if not isinstance(g, int) or g < 0 or g >= A.size:
            raise ForeignElement(f"element index {g!r} not in the algebra")
        out.append(g)
    return out


def subalgebra_closure(A: FiniteHeytingAlgebra, gens: Iterable[int]) -> frozenset:
    """Indices of the subalgebra generated by gens with 0 and 1 seeded."""
    elems = sorted(set(_check_elements(A, gens)) | {A.bottom, A.top})
    seen = set(elems)
    i = 0
    while i < len(elems):
        a = elems[i]
        for j in range(i + 1):
            b = elems[j]
            for m in (A.meet[a][b], A.join[a][b], A.imp[a][b], A.imp[b][a]):
                if m not in seen:
                    seen.add(m)
                    elems.append(m)
        i += 1
    return frozenset(seen)


def generated_size(A: FiniteHeytingAlgebra, gens: Iterable[int]) -> int:
    return len(subalgebra_closure(A, gens))


def max_k_generated_size(
    A: FiniteHeytingAlgebra,
    k: int,
    budget_tuples: Optional[int] = None,
) -> GenerationReport:
    """Exact maximum of |<gens>| over all k-tuples of elements."""
    cap = DEFAULT_TUPLE_BUDGET if budget_tuples is None else budget_tuples
    if A.size ** k > cap:
        raise BudgetExceeded(f"{A.size}^{k} tuples exceed the budget of {cap}")
    memo: dict = {}

    def closure_size(gens) -> int:
        key = frozenset(gens)
        if key not in memo:
            memo[key] = len(subalgebra_closure(A, gens))
        return memo[key]

    best = -1
    witness: tuple = ()
    for tup in product(range(A.size), repeat=k):
        sz = closure_size(tup)
        if sz > best:
            best, witness = sz, tup
    subset_best = best
    if 0 < k <= A.size:
        subset_best = max(
            closure_size(c) for c in combinations_with_replacement(range(A.size), k)
            if len(set(c)) == k
        )
    return GenerationReport(
        algebra_size=A.size,
        k=k,
        max_generated_size=best,
        witness_tuple=witness,
        max_subset_generated_size=subset_best,
    )


def algebra_product(
    A: FiniteHeytingAlgebra,
    B: FiniteHeytingAlgebra,
    budget: Optional[int] = None,
) -> FiniteHeytingAlgebra:
    """Componentwise product; element labels are label pairs."""
    cap = DEFAULT_UPSET_BUDGET if budget is None else budget
    if A.size * B.size > cap:
        raise BudgetExceeded(f"product size {A.size * B.size} exceeds {cap}")
    nb = B.size
    elements = tuple(
        (A.elements[i], B.elements[j]) for i in range(A.size) for j in range(nb)
    )

    def table(ta, tb):
        rows = []
        for i in range(A.size):
            for j in range(nb):
                rows.append(
                    tuple(
                        ta[i][p] * nb + tb[j][q]
                        for p in range(A.size)
                        for q in range(nb)
                    )
                )
        return tuple(rows)

    return FiniteHeytingAlgebra(
        elements=elements,
        meet=table(A.meet, B.meet),
        join=table(A.join, B.join),
        imp=table(A.imp, B.imp),
        bottom=A.bottom * nb + B.bottom,
        top=A.top * nb + B.top,
    )


def strictness_report(
    n: int,
    depths: Sequence[int],
    budget_upsets: Optional[int] = None,
    budget_alg: Optional[int] = None,
) -> list:
    """Per-depth generation data for bottomed parameter-n ladders.

    For each depth: the full upset-algebra size, the largest subalgebra
    generated by any n upsets (scanned exhaustively at the upset level),
    and whether the canonical (n+1)-colouring generates everything.
    """
    rows = []
    for d in depths:
        P = build_ladder(LadderSpec(n, d, with_bottom=True))
        masks = upset_masks(P, budget_upsets)
        best = 0
        witness: tuple = ()
        for tup in combinations_with_replacement(masks, n):
            size = len(generate(P, sorted(set(tup)), budget_alg).elements)
            if size > best:
                best, witness = size, tup
        canonical = canonical_colouring(P, n)
        canonical_size = len(generate(P, canonical.masks, budget_alg).elements)
        rows.append(
            {
                "depth": d,
                "k": n,
                "algebra_size": len(masks),
                "max_k_generated_size": best,
                "witness": [sorted(iter_bits(m)) for m in witness],
                "canonical_generates_full": canonical_size == len(masks),
            }
        )
    return rows
