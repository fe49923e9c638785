from roughnelson import relations as rel
from roughnelson import sweep as sw


def test_check_relation_runs_every_suite():
    out = sw.check_relation(rel.chain_order(3))
    assert list(out) == list(sw.SUITES) and all(out.values())


def test_round_trip_optional():
    out = sw.check_relation(rel.chain_order(3), with_round_trip=False)
    assert "round_trip" not in out and "minimality" not in out


def test_exhaustive_counts():
    rep = sw.sweep(max_size=3)
    assert rep.tested == 34 and rep.by_size == {1: 1, 2: 4, 3: 29}
    assert rep.all_passed


def test_min_size():
    rep = sw.sweep(min_size=3, max_size=3)
    assert rep.tested == 29


def test_samples_are_seeded():
    a = [R.rows for R in sw.sample_quasiorders(20, range(5, 9), 7)]
    b = [R.rows for R in sw.sample_quasiorders(20, range(5, 9), 7)]
    assert a == b and {len(r) for r in a} <= {5, 6, 7, 8}


def test_report_records_counterexamples():
    rep = sw.SweepReport()
    R = rel.chain_order(2)
    rep.add(R, {"nelson": True, "kleene": False})
    doc = rep.to_json()
    assert not doc["all_passed"]
    assert doc["counterexamples"] == [{"relation": {"universe": ["1", "2"], "pairs": [["1", "1"], ["1", "2"], ["2", "2"]], "closure": "none"}, "failed": ["kleene"]}]
    assert doc["suites"] == {"kleene": {"runs": 1, "passes": 0}, "nelson": {"runs": 1, "passes": 1}}


def test_equivalence_count_formula():
    R = rel.equivalence_from_blocks([["a"], ["b", "c"], ["d"]])
    assert sw.equivalence_rs_count(R) == 2 * 2 * 3


def test_chain_sizes():
    assert sw.chain_rs_sizes(5) == {n: (2 * n, True) for n in range(1, 6)}
