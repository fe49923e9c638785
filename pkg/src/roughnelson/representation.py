"""Representing a finite Nelson algebra as the rough-set algebra of a quasiorder.

Pipeline: join-irreducibles ``J`` become the universe; ``x R y`` iff
``rho(x) <= rho(y)``, where ``rho`` sends ``J+`` elements to their star; the
map ``phi`` sends ``J`` onto the join-irreducibles of RS, and its Birkhoff
extension ``Phi`` is the isomorphism. Every step is verified by table.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import relations as rel
from .algebra import (
    DeMorganAlgebra,
    JPartition,
    Verdict,
    as_abstract,
    find_delta,
    is_algebra_isomorphism,
    is_boolean_lattice,
    partition_J,
    verify_demorgan,
    verify_kleene,
    verify_nelson,
)
from .errors import ConsistencyError, InputError, PreconditionError
from .lattice import birkhoff_extend, distributivity_witness, join_irreducibles
from .relations import BinaryRelation, Universe
from .rough import (
    RoughPair,
    RoughSetLattice,
    enumerate_rs_generated,
    format_pair,
    rs_algebra,
    upper_mask,
)


def _check_preconditions(alg: DeMorganAlgebra):
    w = distributivity_witness(alg.lattice)
    if w is not None:
        raise PreconditionError(
            "lattice is not distributive", "distributivity", tuple(alg.name(i) for i in w)
        )
    for name, check in (("de_morgan", verify_demorgan), ("kleene", verify_kleene), ("nelson", verify_nelson)):
        v = check(alg)
        if not v.passed:
            raise PreconditionError(f"input fails the {name} axioms", name, v.witness)


def rho(alg: DeMorganAlgebra, j, partition: JPartition | None = None) -> int:
    """``j`` itself on ``J- u J*``, ``j*`` on ``J+``."""
    part = partition or partition_J(alg)
    j = alg.lattice.index(j)
    if j not in part.star:
        raise InputError(f"{alg.name(j)} is not join-irreducible")
    return part.star[j] if j in part.j_plus else j


def build_RJ(alg: DeMorganAlgebra, partition: JPartition | None = None) -> BinaryRelation:
    """Quasiorder on ``J``: ``x R y`` iff ``rho(x) <= rho(y)``."""
    part = partition or partition_J(alg)
    J = alg.join_irreducibles
    r = [rho(alg, j, part) for j in J]
    leq = alg.lattice.leq
    rows = tuple(sum(1 << k for k in range(len(J)) if leq[r[i], r[k]]) for i in range(len(J)))
    return BinaryRelation(Universe(tuple(alg.name(j) for j in J)), rows)


def _empty_rs(R: BinaryRelation) -> RoughSetLattice:
    return RoughSetLattice(R, (RoughPair(0, 0),))


def build_phi(
    alg: DeMorganAlgebra, R: BinaryRelation, rs: RoughSetLattice, partition: JPartition | None = None
) -> dict[int, RoughPair]:
    """``phi(x) = (empty, {x}^up)`` on ``J-`` and ``(R(x), R(x)^up)`` elsewhere.

    Verified to be an order-isomorphism onto the join-irreducibles of RS that
    commutes with the star maps.
    """
    part = partition or partition_J(alg)
    J = alg.join_irreducibles
    phi = {}
    for i, x in enumerate(J):
        if x in part.j_minus:
            phi[x] = RoughPair(0, R.cols[i])
        else:
            phi[x] = RoughPair(R.rows[i], upper_mask(R, R.rows[i]))

    K = rs.lattice
    JK = set(join_irreducibles(K).members)
    image = [rs.index(phi[x]) if phi[x] in rs else None for x in J]
    if None in image or set(image) != JK or len(image) != len(JK):
        raise ConsistencyError("phi is not a bijection onto J(RS)")
    leq = alg.lattice.leq
    for a, x in enumerate(J):
        for b, y in enumerate(J):
            if bool(leq[x, y]) != bool(phi[x] <= phi[y]):
                raise ConsistencyError(f"phi is not an order-isomorphism at ({alg.name(x)}, {alg.name(y)})")
    rs_alg = rs_algebra(rs)
    rs_star = rs_alg.star_map
    for x in J:
        if rs.index(phi[part.star[x]]) != rs_star[rs.index(phi[x])]:
            raise ConsistencyError(f"phi(j*) != phi(j)* at {alg.name(x)}")
    return phi


@dataclass(frozen=True, eq=False)
class RepresentationResult:
    source: DeMorganAlgebra
    partition: JPartition
    universe: Universe
    relation: BinaryRelation
    rho: dict[int, int]
    phi: dict[int, RoughPair]
    Phi: np.ndarray  # source index -> index in rs.pairs
    rs: RoughSetLattice
    rs_algebra: DeMorganAlgebra
    verdicts: dict[str, bool]

    def to_json(self) -> dict:
        A, u = self.source, self.universe
        pair = lambda p: {"lower": u.sorted_names(p.lower), "upper": u.sorted_names(p.upper)}
        return {
            "universe": list(u.elements),
            "relation": [list(p) for p in self.relation.pairs()],
            "rho": {A.name(j): A.name(r) for j, r in self.rho.items()},
            "phi": {A.name(j): pair(p) for j, p in self.phi.items()},
            "Phi": {A.name(x): format_pair(u, self.rs.pairs[int(i)]) for x, i in enumerate(self.Phi)},
            "rs": self.rs.to_json(),
            "verdicts": dict(self.verdicts),
        }


def represent(alg: DeMorganAlgebra) -> RepresentationResult:
    """Construct and verify the rough-set representation of a finite Nelson algebra."""
    _check_preconditions(alg)
    part = partition_J(alg)
    R = build_RJ(alg, part)
    if not rel.is_quasiorder(R):
        raise ConsistencyError("constructed relation is not a quasiorder")
    rs = enumerate_rs_generated(R) if R.size else _empty_rs(R)
    J = alg.join_irreducibles
    phi = build_phi(alg, R, rs, part)
    try:
        Phi = birkhoff_extend(alg.lattice, rs.lattice, {x: rs.index(phi[x]) for x in J})
    except InputError as e:
        raise ConsistencyError(f"Birkhoff extension failed: {e}") from e
    rs_alg = rs_algebra(rs)
    iso = is_algebra_isomorphism(alg, rs_alg, Phi)
    if not iso:
        raise ConsistencyError("Phi does not commute with the negation or implication")
    result = RepresentationResult(
        source=alg,
        partition=part,
        universe=R.universe,
        relation=R,
        rho={j: rho(alg, j, part) for j in J},
        phi=phi,
        Phi=Phi,
        rs=rs,
        rs_algebra=rs_alg,
        verdicts={"quasiorder": True, "order_iso": True, "star_compatible": True, "algebra_iso": iso},
    )
    result.verdicts["minimality"] = bool(minimality_check(result))
    return result


def minimality_check(result: RepresentationResult) -> Verdict:
    """Every class of ``R n R^-1`` is ``{j, j*}`` for some ``j``."""
    R, J, st = result.relation, result.source.join_irreducibles, result.partition.star
    pos = {j: i for i, j in enumerate(J)}
    classes = []
    for i, j in enumerate(J):
        cls = R.rows[i] & R.cols[i]
        expected = 1 << i | 1 << pos[st[j]]
        if cls != expected:
            return Verdict("minimality", False, (result.source.name(j),))
        if cls not in classes:
            classes.append(cls)
    return Verdict(
        "minimality", True,
        data={"classes": [sorted(R.universe.names(m)) for m in classes]},
    )


def equivalence_classes(R: BinaryRelation) -> list[frozenset[str]]:
    """Classes of ``R n R^-1`` in order of first member."""
    seen, out = set(), []
    for i in range(R.size):
        m = R.rows[i] & R.cols[i]
        if m not in seen:
            seen.add(m)
            out.append(R.universe.names(m))
    return out


def boolean_characterization(alg: DeMorganAlgebra) -> dict[str, bool]:
    """Evaluate the four equivalent Boolean conditions and insist they agree."""
    _check_preconditions(alg)
    part = partition_J(alg)
    R = build_RJ(alg, part)
    rs = enumerate_rs_generated(R) if R.size else _empty_rs(R)
    full = R.universe.full
    powerset = len(rs) == 1 << R.size and all(p.lower == p.upper for p in rs.pairs) and all(
        rs_algebra(rs).neg[i] == rs.index(RoughPair(full & ~p.lower, full & ~p.lower))
        for i, p in enumerate(rs.pairs)
    )
    out = {
        "partial_order": rel.is_partial_order(R),
        "identity": R.rows == tuple(1 << i for i in range(R.size)),
        "powerset": powerset,
        "boolean": is_boolean_lattice(alg.lattice),
    }
    if len(set(out.values())) != 1:
        raise ConsistencyError(f"Boolean characterization conditions disagree: {out}")
    return out


def semisimple_check(alg: DeMorganAlgebra) -> Verdict:
    """For a three-valued Lukasiewicz input, the constructed relation is an equivalence."""
    _check_preconditions(alg)
    if find_delta(alg, cap=1).delta is None:
        raise PreconditionError("input not semisimple", "lukasiewicz")
    R = build_RJ(alg)
    return Verdict("semisimple_equivalence", rel.is_equivalence(R))


def round_trip(R: BinaryRelation, rng: np.random.Generator | None = None):
    """Represent RS(R) after forgetting its names; return the composite-isomorphism verdict and the result."""
    rs = enumerate_rs_generated(R)
    A = rs_algebra(rs)
    abstract, perm = as_abstract(A, rng)
    result = represent(abstract)
    f = result.Phi[perm]
    ok = is_algebra_isomorphism(A, result.rs_algebra, f)
    return Verdict("round_trip", ok), result
