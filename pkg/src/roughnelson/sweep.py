"""Run every invariant suite over enumerated and sampled quasiorders."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import relations as rel
from .algebra import (
    condition_M,
    find_delta,
    interpolation_prime_filters,
    kleene_cone_verdicts,
    partition_J,
    star_law_verdicts,
    verify_demorgan,
    verify_kleene,
    verify_lukasiewicz,
    verify_nelson,
)
from .io import relation_to_doc
from .lattice import is_distributive, join_irreducibles, join_irreducibles_bruteforce
from .relations import BinaryRelation
from .representation import minimality_check, round_trip
from .rough import (
    J_MINUS,
    J_PLUS,
    J_STAR,
    brute_force_bound,
    decompose,
    enumerate_rs_bruteforce,
    enumerate_rs_generated,
    rs_algebra,
    rs_join_irreducibles,
    verify_rs_closure,
)

SUITES = (
    "rs_oracle",
    "rs_closure",
    "distributive",
    "ji_oracle",
    "ji_formula",
    "de_morgan",
    "kleene",
    "star_laws",
    "j_classes",
    "condition_M",
    "interpolation_agrees",
    "nelson",
    "nelson_agrees_M",
    "lukasiewicz_iff_equivalence",
    "decomposition",
    "round_trip",
    "minimality",
)


def check_relation(R: BinaryRelation, with_round_trip: bool = True) -> dict[str, bool]:
    """Evaluate every suite on the RS algebra of a quasiorder ``R``."""
    out: dict[str, bool] = {}
    gen = enumerate_rs_generated(R)
    if R.size <= brute_force_bound():
        out["rs_oracle"] = gen.pairs == enumerate_rs_bruteforce(R).pairs
    out["rs_closure"] = verify_rs_closure(gen)
    L = gen.lattice
    out["distributive"] = is_distributive(L)
    ji = join_irreducibles(L).members
    out["ji_oracle"] = ji == join_irreducibles_bruteforce(L)
    tagged = rs_join_irreducibles(R)
    out["ji_formula"] = sorted(gen.index(p) for p, _ in tagged) == sorted(ji)

    A = rs_algebra(gen)
    out["de_morgan"] = bool(verify_demorgan(A))
    out["kleene"] = bool(verify_kleene(A))
    out["star_laws"] = all(v.passed for v in star_law_verdicts(A) + kleene_cone_verdicts(A))
    part = partition_J(A)
    want = {J_MINUS: part.j_minus, J_STAR: part.j_star, J_PLUS: part.j_plus}
    out["j_classes"] = all(gen.index(p) in want[tag] for p, tag in tagged)

    m = bool(condition_M(A))
    out["condition_M"] = m
    out["interpolation_agrees"] = bool(interpolation_prime_filters(A)) == m
    nelson = bool(verify_nelson(A))
    out["nelson"] = nelson
    out["nelson_agrees_M"] = nelson == m

    delta_found = find_delta(A, cap=1).delta is not None
    equivalence = rel.is_equivalence(R)
    ok = delta_found == equivalence
    if equivalence:
        # (X^up, X^up) is a Delta for equivalences
        pag = [gen.index(type(p)(p.upper, p.upper)) for p in gen.pairs]
        ok = ok and bool(verify_lukasiewicz(A, pag))
    out["lukasiewicz_iff_equivalence"] = ok

    dec = decompose(R)
    out["decomposition"] = dec.verified and dec.total == len(gen)

    if with_round_trip:
        verdict, result = round_trip(R, np.random.default_rng(len(gen)))
        out["round_trip"] = bool(verdict)
        out["minimality"] = bool(minimality_check(result))
    return out


@dataclass
class SweepReport:
    tested: int = 0
    by_size: dict[int, int] = field(default_factory=dict)
    passes: dict[str, int] = field(default_factory=lambda: {s: 0 for s in SUITES})
    runs: dict[str, int] = field(default_factory=lambda: {s: 0 for s in SUITES})
    counterexamples: list[dict] = field(default_factory=list)

    def add(self, R: BinaryRelation, results: dict[str, bool]):
        self.tested += 1
        self.by_size[R.size] = self.by_size.get(R.size, 0) + 1
        failed = []
        for name, ok in results.items():
            self.runs[name] += 1
            self.passes[name] += int(ok)
            if not ok:
                failed.append(name)
        if failed:
            self.counterexamples.append({"relation": relation_to_doc(R), "failed": failed})

    @property
    def all_passed(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "tested": self.tested,
            "by_size": {str(k): v for k, v in sorted(self.by_size.items())},
            "suites": {s: {"runs": self.runs[s], "passes": self.passes[s]} for s in SUITES if self.runs[s]},
            "all_passed": self.all_passed,
            "counterexamples": self.counterexamples,
        }


def _job(args):
    rows, n, with_rt = args
    R = BinaryRelation(rel.default_universe(n), rows)
    return check_relation(R, with_rt)


def sample_quasiorders(samples: int, sizes, seed: int) -> list[BinaryRelation]:
    rng = np.random.default_rng(seed)
    sizes = list(sizes)
    return [rel.random_quasiorder(int(rng.choice(sizes)), rng) for _ in range(samples)]


def sweep(
    max_size: int = 4,
    samples: int = 0,
    seed: int = 0,
    sample_sizes=None,
    round_trip_max: int = 4,
    workers: int = 1,
    min_size: int = 1,
) -> SweepReport:
    """Exhaustive over ``min_size..min(max_size, 4)`` elements, then ``samples`` random quasiorders.

    Random sizes default to ``5..max_size`` (or ``min_size..max_size`` when that
    range is empty). Results are aggregated in input order regardless of ``workers``.
    """
    exhaustive_max = min(max_size, 4)
    relations = [R for n in range(min_size, exhaustive_max + 1) for R in rel.enumerate_preorders(n)]
    if samples:
        if sample_sizes is None:
            lo = max(5, min_size) if max_size >= 5 else min_size
            sample_sizes = range(lo, max_size + 1)
        relations += sample_quasiorders(samples, sample_sizes, seed)
    jobs = [(R.rows, R.size, R.size <= round_trip_max) for R in relations]
    report = SweepReport()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_job, jobs, chunksize=8))
    else:
        results = [_job(j) for j in jobs]
    for R, res in zip(relations, results):
        report.add(R, res)
    return report


def equivalence_rs_count(R: BinaryRelation) -> int:
    """``2^s * 3^t`` for an equivalence with ``s`` singleton and ``t`` larger classes."""
    classes = rel.connected_components(R)
    s = sum(1 for c in classes if len(c) == 1)
    return 2 ** s * 3 ** (len(classes) - s)


def chain_rs_sizes(n_max: int = 10) -> dict[int, tuple[int, bool]]:
    out = {}
    for n in range(1, n_max + 1):
        rs = enumerate_rs_generated(rel.chain_order(n))
        out[n] = (len(rs), rs.is_chain())
    return out

