import pytest

from heylab import (
    algebra_of,
    generated_size,
    max_k_generated_size,
    strictness_report,
    validate,
)
from heylab.errors import BudgetExceeded, ForeignElement
from heylab.variety import algebra_product, subalgebra_closure


def test_subalgebra_closure_chain(chain2):
    A = algebra_of(chain2)  # three-element chain algebra
    assert A.size == 3
    assert subalgebra_closure(A, []) == {A.bottom, A.top}
    # the middle element generates everything: 0, a, 1
    mid = next(i for i in range(3) if i not in (A.bottom, A.top))
    assert generated_size(A, [mid]) == 3


def test_subalgebra_closure_guards(chain2):
    A = algebra_of(chain2)
    with pytest.raises(ForeignElement):
        subalgebra_closure(A, [99])
    with pytest.raises(ForeignElement):
        subalgebra_closure(A, ["x"])


def test_max_k_generated(fork):
    A = algebra_of(fork)
    r0 = max_k_generated_size(A, 0)
    assert r0.max_generated_size == 2  # constants only
    r1 = max_k_generated_size(A, 1)
    assert r1.algebra_size == 5
    assert r1.max_generated_size == 5  # the fork is 1-generated
    assert generated_size(A, r1.witness_tuple) == 5
    assert r1.max_subset_generated_size == 5
    j = r1.to_json()
    assert j["k"] == 1 and isinstance(j["witness_tuple"], list)


def test_max_k_generated_budget(fork):
    A = algebra_of(fork)
    with pytest.raises(BudgetExceeded):
        max_k_generated_size(A, 3, budget_tuples=10)


def test_subset_vs_tuple_semantics(chain2):
    A = algebra_of(chain2)
    r = max_k_generated_size(A, 2)
    # repeating an element never beats a genuine 2-subset here
    assert r.max_subset_generated_size == r.max_generated_size == 3


def test_product_matches_disjoint_union(point):
    # Up(P) x Up(Q) is the upset algebra of the disjoint union of P and Q
    A = algebra_of(point)
    prod = algebra_product(A, A)
    B = algebra_of(validate(["a", "b"], []))
    assert prod.size == B.size == 4
    assert len(prod.elements) == len(set(prod.elements))

    def order_profile(X):
        return sorted(
            sum(X.leq(b, a) for b in range(X.size)) for a in range(X.size)
        )

    # both are the four-element Boolean lattice: below-counts 1, 2, 2, 4
    assert order_profile(prod) == order_profile(B) == [1, 2, 2, 4]


def test_product_budget(fork):
    A = algebra_of(fork)
    with pytest.raises(BudgetExceeded):
        algebra_product(A, A, budget=10)


def test_product_laws(chain2):
    A = algebra_of(chain2)
    P = algebra_product(A, A)
    for a in range(P.size):
        assert P.meet[a][a] == a
        assert P.imp[a][a] == P.top
        for b in range(P.size):
            assert P.meet[a][b] == P.meet[b][a]
            # residuation inside the product
            for c in range(P.size):
                lhs = P.leq(P.meet[a][b], c)
                rhs = P.leq(a, P.imp[b][c])
                assert lhs == rhs


def test_strictness_report_depth4():
    rows = strictness_report(1, [4])
    (row,) = rows
    assert row["depth"] == 4 and row["k"] == 1
    assert row["algebra_size"] == 36
    assert row["max_k_generated_size"] == 9
    assert row["canonical_generates_full"] is True
