import numpy as np
import pytest

from roughnelson import algebra as alg
from roughnelson import relations as rel
from roughnelson.algebra import DeMorganAlgebra, make_algebra
from roughnelson.catalog import (
    boolean_algebra,
    chain_algebra,
    crown_kleene_algebra,
    diamond_m3,
    nelson8,
    kleene_algebras,
    product_algebra,
    smallest_kleene_failing_M,
)
from roughnelson.errors import InputError, UnsupportedStructureError
from roughnelson.lattice import chain_lattice
from roughnelson.rough import enumerate_rs_generated, rs_algebra


def rs_alg(R):
    return rs_algebra(enumerate_rs_generated(R))


def named(A, xs):
    return {A.name(x) for x in xs}


class TestDeMorgan:
    def test_boolean(self):
        assert alg.verify_demorgan(boolean_algebra(2))

    def test_chain_identity_fails(self):
        L = chain_lattice(2)
        v = alg.verify_demorgan(L, np.array([0, 1]))
        assert not v and v.witness is not None

    def test_nelson8(self):
        A = nelson8()
        assert alg.verify_demorgan(A)
        assert [A.name(A.c(x)) for x in "0abcdef1"] == list("1fedcba0")

    def test_not_involutive(self):
        A = DeMorganAlgebra(chain_lattice(3), np.array([2, 2, 0]))
        v = alg.verify_demorgan(A)
        assert not v and v.parts[0].name == "involution" and not v.parts[0]

    def test_dual_isomorphism(self):
        A = nelson8()
        L, c = A.lattice, A.neg
        assert (c[L.join_table] == L.meet_table[c[:, None], c[None, :]]).all()
        assert (c[L.meet_table] == L.join_table[c[:, None], c[None, :]]).all()

    def test_partial_mapping(self):
        with pytest.raises(InputError):
            make_algebra(chain_lattice(3), {"0": "1"})

    def test_bad_table(self):
        with pytest.raises(InputError):
            DeMorganAlgebra(chain_lattice(2), np.array([1, 5]))


class TestKleene:
    def test_boolean_cones(self):
        A = boolean_algebra(2)
        k = alg.cones(A)
        assert named(A, k.negative_cone) == {"{}"} and named(A, k.positive_cone) == {"{a,b}"}
        assert A.name(k.alpha) == "{}" and A.name(k.beta) == "{a,b}"

    def test_nelson8_cones(self):
        A = nelson8()
        k = alg.cones(A)
        assert A.name(k.alpha) == "c" and A.name(k.beta) == "d"
        assert A.c(k.alpha) == k.beta
        assert named(A, k.negative_cone) == set("0abc")

    def test_rs_is_kleene(self):
        for R in rel.enumerate_preorders(3):
            assert alg.verify_kleene(rs_alg(R))

    def test_two_fixed_points_not_kleene(self):
        # c fixes both x and y: x ^ c(x) = x is not <= y v c(y) = y
        from roughnelson.lattice import lattice_from_hasse

        L = lattice_from_hasse("0 x y 1".split(), [("0", "x"), ("0", "y"), ("x", "1"), ("y", "1")])
        A = make_algebra(L, {"0": "1", "x": "x", "y": "y"})
        assert alg.verify_demorgan(A)
        assert not alg.verify_kleene(A)

    def test_cone_verdicts(self):
        assert all(alg.kleene_cone_verdicts(nelson8()))


class TestStar:
    def test_nelson8(self):
        A = nelson8()
        assert {x: A.name(alg.star(A, x)) for x in "abdef"} == dict(a="e", b="f", d="d", e="a", f="b")

    def test_partition(self):
        A = nelson8()
        p = alg.partition_J(A)
        assert named(A, p.j_minus) == {"a", "b"}
        assert named(A, p.j_star) == {"d"}
        assert named(A, p.j_plus) == {"e", "f"}
        assert p.klass(A.lattice.index("e")) == "J+"

    def test_boolean(self):
        A = boolean_algebra(3)
        assert all(alg.star(A, j) == j for j in A.join_irreducibles)

    def test_not_irreducible(self):
        with pytest.raises(InputError):
            alg.star(nelson8(), "c")

    def test_laws_on_every_small_kleene_algebra(self):
        count = 0
        for A in kleene_algebras(6):
            assert all(alg.star_law_verdicts(A)), A.names
            count += 1
        assert count >= 5


class TestConditionM:
    def test_nelson8(self):
        A = nelson8()
        v = alg.condition_M(A)
        assert v and v.data["interpolants"]
        assert alg.interpolation_prime_filters(A)

    def test_boolean(self):
        assert alg.condition_M(boolean_algebra(2)) and alg.interpolation_prime_filters(boolean_algebra(2))

    def test_crown_fails(self):
        A = crown_kleene_algebra()
        v = alg.condition_M(A)
        assert not v
        assert v.witness == ("{ps,qs,p}", "{ps,qs,q}")
        assert not alg.interpolation_prime_filters(A)

    def test_smallest_failing(self):
        A = smallest_kleene_failing_M(7)
        assert A is not None and A.size == 7
        assert not alg.condition_M(A) and not alg.interpolation_prime_filters(A)
        # nothing smaller fails
        assert all(alg.condition_M(B) for B in kleene_algebras(6))

    def test_interpolation_needs_distributive(self):
        with pytest.raises(UnsupportedStructureError):
            alg.interpolation_prime_filters(diamond_m3())

    def test_agreement_on_small_kleene_algebras(self):
        for A in kleene_algebras(7):
            assert bool(alg.condition_M(A)) == bool(alg.interpolation_prime_filters(A))


class TestNelson:
    def test_weak_implication_basics(self):
        A = nelson8()
        for a in range(A.size):
            assert alg.weak_impl(A, a, a) == A.lattice.top
            assert alg.weak_impl(A, A.lattice.bottom, a) == A.lattice.top

    def test_weak_implication_formula(self):
        A = nelson8()
        L = A.lattice
        from roughnelson.lattice import relative_pseudocomplement

        for a in range(A.size):
            for b in range(A.size):
                assert A.weak_impl_table[a, b] == relative_pseudocomplement(L, a, L.join(A.neg[a], b))

    def test_nelson8_nelson(self):
        v = alg.verify_nelson(nelson8())
        assert v and [p.name for p in v.parts] == ["N1", "N2", "N3", "N4", "N5"]

    def test_rs_nelson(self):
        for R in rel.enumerate_preorders(3):
            assert alg.verify_nelson(rs_alg(R))

    def test_crown_not_nelson(self):
        v = alg.verify_nelson(crown_kleene_algebra())
        assert not v and v.detail == "N5 fails"

    def test_nelson_iff_M(self):
        for A in kleene_algebras(7):
            assert bool(alg.verify_nelson(A)) == bool(alg.condition_M(A))

    def test_non_distributive(self):
        with pytest.raises(UnsupportedStructureError):
            alg.verify_nelson(diamond_m3())


class TestLukasiewicz:
    def test_chain_rs_has_no_delta(self):
        s = alg.find_delta(rs_alg(rel.chain_order(2)))
        assert s.delta is None and s.exhausted

    def test_equivalence_upper_delta(self):
        R = rel.equivalence_from_blocks([["a"], ["b", "c"]])
        rs = enumerate_rs_generated(R)
        A = rs_algebra(rs)
        delta = [rs.index(type(p)(p.upper, p.upper)) for p in rs.pairs]
        assert alg.verify_lukasiewicz(A, delta)
        assert alg.find_delta(A).delta is not None

    def test_boolean_identity(self):
        A = boolean_algebra(2)
        assert alg.verify_lukasiewicz(A, np.arange(A.size))
        assert alg.find_delta(A).delta == tuple(range(A.size))

    def test_nelson8_fails(self):
        assert alg.find_delta(nelson8()).delta is None

    def test_wrong_delta(self):
        A = boolean_algebra(2)
        v = alg.verify_lukasiewicz(A, np.zeros(A.size, dtype=int))
        assert not v

    def test_three_chain(self):
        A = chain_algebra(3)
        assert alg.find_delta(A).delta == (0, 2, 2)

    def test_product(self):
        A = product_algebra(chain_algebra(2), chain_algebra(3))
        assert alg.find_delta(A).delta is not None


class TestVerifyAll:
    def test_nelson8(self):
        r = alg.verify_all(nelson8())
        assert list(r) == [
            "distributive", "de_morgan", "kleene", "star_laws",
            "condition_M", "interpolation", "nelson", "lukasiewicz",
        ]
        assert r["nelson"].passed and r["lukasiewicz"].passed is False

    def test_boolean(self):
        r = alg.verify_all(boolean_algebra(2))
        assert all(v.passed for v in r.values())
        assert r["lukasiewicz"].data["delta"] == (0, 1, 2, 3)

    def test_m3(self):
        r = alg.verify_all(diamond_m3())
        assert r["distributive"].passed is False and r["distributive"].witness
        assert r["nelson"].passed is None

    def test_one_element(self):
        r = alg.verify_all(chain_algebra(1))
        assert all(v.passed for v in r.values())

    def test_json(self):
        doc = alg.verify_all(crown_kleene_algebra())["nelson"].to_json()
        assert doc["passed"] is False and doc["parts"][4]["witness"]

    def test_nelson_instance(self):
        inst = alg.nelson_instance(nelson8())
        assert inst.flags["nelson"] and inst.weak_impl.shape == (8, 8)
        with pytest.raises(UnsupportedStructureError):
            alg.nelson_instance(diamond_m3())


def test_abstract_copy_is_isomorphic():
    A = nelson8()
    B, perm = alg.as_abstract(A, np.random.default_rng(0))
    assert all(n.startswith("e") for n in B.names)
    assert alg.is_algebra_isomorphism(A, B, perm)
    assert not alg.is_algebra_isomorphism(A, B, np.arange(8)) or (perm == np.arange(8)).all()


def test_is_boolean_lattice():
    assert alg.is_boolean_lattice(boolean_algebra(3).lattice)
    assert not alg.is_boolean_lattice(chain_lattice(3))
    assert not alg.is_boolean_lattice(diamond_m3().lattice)
