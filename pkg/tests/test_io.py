import json

import numpy as np
import pytest

from roughnelson import io
from roughnelson import relations as rel
from roughnelson.catalog import boolean_algebra, nelson8
from roughnelson.errors import InputError, LatticeValidationError
from roughnelson.lattice import lattice_from_hasse
from roughnelson.relations import build_relation
from roughnelson.representation import represent
from roughnelson.rough import enumerate_rs_generated


class TestDocuments:
    def test_relation_roundtrip(self):
        R = rel.chain_order(3)
        doc = io.relation_to_doc(R)
        assert io.relation_from_doc(doc).rows == R.rows

    def test_relation_closure(self):
        doc = {"universe": ["1", "2", "3"], "pairs": [["1", "2"], ["2", "3"]], "closure": "reflexive_transitive"}
        assert io.relation_from_doc(doc).rows == rel.chain_order(3).rows

    def test_unknown_keys(self):
        with pytest.raises(InputError, match="unknown keys"):
            io.relation_from_doc({"universe": ["a"], "edges": []})
        with pytest.raises(InputError, match="unknown keys"):
            io.algebra_from_doc({"elements": ["0"], "hasse": [], "negation": {"0": "0"}, "extra": 1})

    def test_missing_universe(self):
        with pytest.raises(InputError):
            io.relation_from_doc({"pairs": []})

    def test_algebra_roundtrip(self):
        A = nelson8()
        B = io.algebra_from_doc(io.algebra_to_doc(A))
        assert B.names == A.names and (B.lattice.leq == A.lattice.leq).all() and (B.neg == A.neg).all()

    def test_leq_matrix(self):
        doc = {"elements": ["0", "1"], "leq_matrix": [[1, 1], [0, 1]]}
        assert io.lattice_from_doc(doc).top == 1

    def test_both_orders(self):
        with pytest.raises(InputError):
            io.lattice_from_doc({"elements": ["0"], "hasse": [], "leq_matrix": [[1]]})

    def test_invalid_lattice(self, data_dir):
        with pytest.raises(LatticeValidationError):
            io.load_algebra(data_dir / "not_a_lattice.json")

    def test_bad_json(self, tmp_path):
        p = tmp_path / "x.json"
        p.write_text("{nope")
        with pytest.raises(InputError):
            io.load_json(p)
        with pytest.raises(InputError):
            io.load_json(tmp_path / "missing.json")
        p.write_text("[1, 2]")
        with pytest.raises(InputError):
            io.load_json(p)

    def test_data_files_load(self, data_dir):
        assert io.load_relation(data_dir / "chain3.json").rows == rel.chain_order(3).rows
        assert io.load_algebra(data_dir / "nelson8.json").size == 8

    def test_save(self, tmp_path):
        io.save_json({"a": "∅"}, tmp_path / "o.json")
        assert json.loads((tmp_path / "o.json").read_text(encoding="utf-8")) == {"a": "∅"}


class TestDot:
    def test_lattice_roundtrip(self):
        for L in (nelson8().lattice, boolean_algebra(3).lattice):
            names, edges = io.parse_dot(io.lattice_dot(L))
            assert tuple(names) == L.names
            K = lattice_from_hasse(names, edges)
            assert np.array_equal(K.leq, L.leq)
            assert len(edges) == int(L.covers.sum())

    def test_rs_roundtrip(self):
        rs = enumerate_rs_generated(rel.equivalence_from_blocks([["a"], ["b", "c"]]))
        names, edges = io.parse_dot(io.rs_dot(rs))
        assert np.array_equal(lattice_from_hasse(names, edges).leq, rs.leq)

    def test_relation_roundtrip(self):
        for n in (2, 3, 4):
            for R in rel.enumerate_preorders(n):
                names, edges = io.parse_dot(io.relation_dot(R))
                assert all(a != b for a, b in edges)
                back = build_relation(rel.Universe(tuple(names)), edges, "reflexive_transitive")
                assert back.rows == R.rows

    def test_relation_drops_transitive_edges(self):
        text = io.relation_dot(rel.chain_order(3))
        _, edges = io.parse_dot(text)
        assert sorted(edges) == [("1", "2"), ("2", "3")]

    def test_nelson8_relation(self):
        res = represent(nelson8())
        _, edges = io.parse_dot(io.relation_dot(res.relation))
        assert sorted(edges) == [
            ("a", "d"), ("a", "e"), ("b", "d"), ("b", "f"),
            ("e", "a"), ("e", "d"), ("f", "b"), ("f", "d"),
        ]

    def test_quoting(self):
        L = lattice_from_hasse(['lo "x"', "hi\\"], [('lo "x"', "hi\\")])
        names, edges = io.parse_dot(io.lattice_dot(L))
        assert names == ['lo "x"', "hi\\"] and edges == [('lo "x"', "hi\\")]
