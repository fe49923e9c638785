import numpy as np
import pytest

from roughnelson import relations as rel
from roughnelson.errors import InputError
from roughnelson.relations import Universe, build_relation


def chain3():
    return build_relation(Universe(("1", "2", "3")), [("1", "2"), ("2", "3")], "reflexive_transitive")


class TestBuildRelation:
    def test_single_edge_closure(self):
        R = build_relation(Universe(("1", "2")), [("1", "2")], "reflexive_transitive")
        assert set(R.pairs()) == {("1", "1"), ("2", "2"), ("1", "2")}

    def test_chain_closure_is_usual_order(self):
        R = chain3()
        expected = {(a, b) for a in "123" for b in "123" if a <= b}
        assert set(R.pairs()) == expected
        assert R.rows == rel.chain_order(3).rows

    def test_empty_relation(self):
        R = build_relation(Universe(("a",)), [], "none")
        assert R.pairs() == []

    def test_unknown_atom_named(self):
        with pytest.raises(InputError, match="'z'"):
            build_relation(Universe(("a", "b")), [("a", "z")])

    def test_unknown_closure_mode(self):
        with pytest.raises(InputError):
            build_relation(Universe(("a",)), [], "symmetric")

    def test_duplicate_universe(self):
        with pytest.raises(InputError):
            Universe(("a", "a"))

    @pytest.mark.parametrize("mode", rel.CLOSURE_MODES)
    def test_closure_idempotent(self, mode):
        R = build_relation(Universe(tuple("abcd")), [("a", "b"), ("b", "c"), ("d", "a")], mode)
        again = build_relation(R.universe, R.pairs(), mode)
        assert again.rows == R.rows

    def test_transitive_only(self):
        R = build_relation(Universe(tuple("abc")), [("a", "b"), ("b", "c")], "transitive")
        assert set(R.pairs()) == {("a", "b"), ("b", "c"), ("a", "c")}


class TestNeighborhoods:
    def test_chain(self):
        R = chain3()
        assert rel.neighborhood(R, "1") == {"1", "2", "3"}
        assert rel.inverse_neighborhood(R, "2") == {"1", "2"}

    def test_identity_and_empty(self):
        u = Universe(("a", "b"))
        assert rel.neighborhood(rel.identity_relation(u), "b") == {"b"}
        assert rel.inverse_neighborhood(rel.identity_relation(u), "a") == {"a"}
        assert rel.neighborhood(build_relation(u, []), "a") == frozenset()

    def test_full(self):
        u = Universe(("a", "b"))
        assert rel.inverse_neighborhood(rel.full_relation(u), "a") == {"a", "b"}

    def test_unknown_element(self):
        with pytest.raises(InputError):
            rel.neighborhood(chain3(), "9")
        with pytest.raises(InputError):
            rel.inverse_neighborhood(chain3(), "9")


class TestPredicates:
    def test_identity(self):
        R = rel.identity_relation(Universe(("a", "b")))
        assert rel.is_quasiorder(R) and rel.is_equivalence(R) and rel.is_partial_order(R)

    def test_chain(self):
        R = chain3()
        assert rel.is_quasiorder(R)
        assert not rel.is_equivalence(R)
        assert rel.is_partial_order(R)

    def test_not_reflexive(self):
        R = build_relation(Universe(("1", "2")), [("1", "2")])
        assert not rel.is_quasiorder(R)

    def test_not_transitive(self):
        R = build_relation(Universe(tuple("abc")), [("a", "b"), ("b", "c")], "reflexive")
        assert rel.is_reflexive(R) and not rel.is_transitive(R)

    def test_full_relation_is_equivalence_not_order(self):
        R = rel.full_relation(Universe(("a", "b")))
        assert rel.is_equivalence(R) and not rel.is_partial_order(R)


class TestComponents:
    def test_identity(self):
        assert rel.connected_components(rel.identity_relation(Universe(("a", "b")))) == [
            frozenset({"a"}), frozenset({"b"})
        ]

    def test_chain(self):
        assert rel.connected_components(chain3()) == [frozenset({"1", "2", "3"})]

    def test_cliques(self):
        R = rel.equivalence_from_blocks([["a", "b"], ["c"]])
        assert rel.connected_components(R) == [frozenset({"a", "b"}), frozenset({"c"})]

    def test_one_way_edge_connects(self):
        R = build_relation(Universe(tuple("abc")), [("c", "a")])
        assert rel.connected_components(R) == [frozenset({"a", "c"}), frozenset({"b"})]


class TestEnumeration:
    # labeled preorders on n points: 1, 1, 4, 29, 355
    @pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (2, 4), (3, 29), (4, 355)])
    def test_counts(self, n, count):
        assert len(rel.enumerate_preorders(n)) == count

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_matches_filter_oracle(self, n):
        fast = {R.rows for R in rel.enumerate_preorders(n)}
        slow = {R.rows for R in rel.preorders_by_filter(n)}
        assert fast == slow
        assert all(rel.is_quasiorder(R) for R in rel.enumerate_preorders(n))

    def test_set_partitions_bell_numbers(self):
        assert [sum(1 for _ in rel.set_partitions(list("abcdef")[:k])) for k in range(1, 7)] == [
            1, 2, 5, 15, 52, 203
        ]

    def test_random_quasiorder_is_seeded(self):
        a = rel.random_quasiorder(6, np.random.default_rng(3))
        b = rel.random_quasiorder(6, np.random.default_rng(3))
        assert a.rows == b.rows and rel.is_quasiorder(a)


def test_restrict_and_relabel():
    R = chain3()
    S = rel.restrict(R, ["1", "3"])
    assert set(S.pairs()) == {("1", "1"), ("3", "3"), ("1", "3")}
    T = rel.relabel(S, ["x", "y"])
    assert set(T.pairs()) == {("x", "x"), ("y", "y"), ("x", "y")}


def test_matrix_and_inverse():
    R = chain3()
    m = R.matrix()
    assert m.dtype == bool and np.array_equal(m.T, R.inverse().matrix())
