"""Property-based checks of the relational and rough-set invariants."""
from hypothesis import given, settings
from hypothesis import strategies as st

from roughnelson import relations as rel
from roughnelson import rough
from roughnelson.algebra import verify_demorgan, verify_kleene, verify_nelson
from roughnelson.relations import Universe, build_relation


@st.composite
def relations(draw, closure="none", max_n=6):
    n = draw(st.integers(1, max_n))
    u = Universe(tuple(f"u{i}" for i in range(n)))
    edges = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2 * n))
    return build_relation(u, [(u.elements[a], u.elements[b]) for a, b in edges], closure)


def quasiorders(max_n=6):
    return relations("reflexive_transitive", max_n)


def subsets(R):
    return st.integers(0, R.universe.full)


@given(relations())
def test_reflexivity_matches_self_membership(R):
    assert rel.is_reflexive(R) == all(x in rel.neighborhood(R, x) for x in R.universe)


@given(relations())
def test_inverse_neighborhood_duality(R):
    for x in R.universe:
        for y in R.universe:
            assert (y in rel.neighborhood(R, x)) == (x in rel.inverse_neighborhood(R, y))


@given(relations())
def test_components_ignore_inverse_pairs(R):
    sym = build_relation(R.universe, R.pairs() + [(b, a) for a, b in R.pairs()])
    assert rel.connected_components(sym) == rel.connected_components(R)


@given(relations("reflexive_transitive"))
def test_closure_idempotent(R):
    assert build_relation(R.universe, R.pairs(), "reflexive_transitive").rows == R.rows
    assert rel.is_quasiorder(R)


@given(st.data())
def test_monotone(data):
    R = data.draw(relations())
    X = data.draw(subsets(R))
    Y = X | data.draw(subsets(R))
    assert rough.lower_mask(R, X) & ~rough.lower_mask(R, Y) == 0
    assert rough.upper_mask(R, X) & ~rough.upper_mask(R, Y) == 0


@given(st.data())
def test_duality(data):
    R = data.draw(relations())
    X = data.draw(subsets(R))
    full = R.universe.full
    assert rough.lower_mask(R, X) == full & ~rough.upper_mask(R, full & ~X)


@given(st.data())
def test_quasiorder_approximations(data):
    R = data.draw(quasiorders())
    X = data.draw(subsets(R))
    lo, up = rough.lower_mask(R, X), rough.upper_mask(R, X)
    assert lo & ~X == 0 and X & ~up == 0
    assert rough.upper_mask(R, up) == up
    assert rough.lower_mask(R, lo) == lo


@settings(max_examples=60, deadline=None)
@given(quasiorders(5))
def test_generated_equals_bruteforce(R):
    gen = rough.enumerate_rs_generated(R)
    assert gen.pairs == rough.enumerate_rs_bruteforce(R).pairs
    assert rough.verify_rs_closure(gen)
    assert gen.bottom == rough.RoughPair(0, 0)
    assert gen.top == rough.RoughPair(R.universe.full, R.universe.full)


@settings(max_examples=40, deadline=None)
@given(quasiorders(5))
def test_negation_is_dual_involution(R):
    rs = rough.enumerate_rs_generated(R)
    c = rough.negation_table(rs)
    assert (c[c] == range(len(rs))).all()
    assert verify_demorgan(rough.rs_algebra(rs))


@settings(max_examples=40, deadline=None)
@given(quasiorders(5))
def test_rs_kleene_and_nelson(R):
    A = rough.rs_algebra(rough.enumerate_rs_generated(R))
    assert verify_kleene(A) and verify_nelson(A)


@settings(max_examples=40, deadline=None)
@given(quasiorders(6))
def test_decomposition_product(R):
    d = rough.decompose(R)
    assert d.verified and d.product_size == len(rough.enumerate_rs_generated(R))
