"""Standard small algebras and an exhaustive finder for small De Morgan algebras."""
from __future__ import annotations

from itertools import permutations
from itertools import product as _product
from typing import Iterator, Mapping

import numpy as np

from .algebra import DeMorganAlgebra, condition_M, make_algebra, verify_kleene
from .lattice import (
    FiniteLattice,
    chain_lattice,
    distributivity_witness,
    lattice_from_hasse,
    powerset_lattice,
    product_lattice,
    validate_lattice,
)
from .relations import BinaryRelation, build_relation, enumerate_preorders, is_antisymmetric, iter_bits


def nelson8() -> DeMorganAlgebra:
    """Eight-element algebra ``0 < a,b < c < d < e,f < 1`` with ``c(a)=f, c(b)=e, c(c)=d``."""
    L = lattice_from_hasse(
        "0 a b c d e f 1".split(),
        [("0", "a"), ("0", "b"), ("a", "c"), ("b", "c"), ("c", "d"),
         ("d", "e"), ("d", "f"), ("e", "1"), ("f", "1")],
    )
    return make_algebra(L, {"0": "1", "a": "f", "b": "e", "c": "d"})


def chain_algebra(n: int) -> DeMorganAlgebra:
    """``n``-element chain with the order-reversing involution."""
    L = chain_lattice(n)
    return DeMorganAlgebra(L, np.arange(n)[::-1].copy())


def boolean_algebra(k: int) -> DeMorganAlgebra:
    """Power set of ``k`` atoms with set complement."""
    atoms = [chr(ord("a") + i) for i in range(k)] if k <= 26 else [f"x{i}" for i in range(k)]
    L = powerset_lattice(atoms)
    sets = [frozenset(n.strip("{}").split(",")) - {""} for n in L.names]
    full = frozenset(atoms)
    where = {s: i for i, s in enumerate(sets)}
    return DeMorganAlgebra(L, np.array([where[full - s] for s in sets]))


def product_algebra(A: DeMorganAlgebra, B: DeMorganAlgebra) -> DeMorganAlgebra:
    L = product_lattice(A.lattice, B.lattice)
    nb = B.size
    neg = np.array([A.neg[i] * nb + B.neg[j] for i in range(A.size) for j in range(nb)])
    return DeMorganAlgebra(L, neg)


def diamond_m3() -> DeMorganAlgebra:
    """Non-distributive ``M3`` with an antitone involution fixing ``z``."""
    L = lattice_from_hasse(
        "0 x y z 1".split(),
        [("0", "x"), ("0", "y"), ("0", "z"), ("x", "1"), ("y", "1"), ("z", "1")],
    )
    return make_algebra(L, {"0": "1", "x": "y", "z": "z"})


def downset_lattice(order: BinaryRelation) -> tuple[FiniteLattice, list[int]]:
    """Lattice of down-sets of a partial order; returns the lattice and the down-set bitsets."""
    n = order.size
    cols = order.cols
    downsets = [m for m in range(1 << n) if all(cols[j] & ~m == 0 for j in iter_bits(m))]
    downsets.sort(key=lambda m: (bin(m).count("1"), m))
    arr = np.array(downsets, dtype=np.int64)
    leq = (arr[:, None] & ~arr[None, :]) == 0
    names = ["{" + ",".join(order.universe.sorted_names(m)) + "}" for m in downsets]
    return validate_lattice(names, leq), downsets


def downset_algebra(order: BinaryRelation, star: Mapping[str, str]) -> DeMorganAlgebra:
    """De Morgan algebra on the down-sets of ``order`` from an involutive antiautomorphism.

    ``c(D) = {j | star(j) not in D}``.
    """
    L, downsets = downset_lattice(order)
    u = order.universe
    s = [u.index(star[x]) for x in u]
    where = {m: i for i, m in enumerate(downsets)}
    neg = []
    for m in downsets:
        image = sum(1 << j for j in range(u.size) if not m >> s[j] & 1)
        neg.append(where[image])
    return DeMorganAlgebra(L, np.array(neg))


# -- exhaustive search ------------------------------------------------------------

def demorgan_negations(L: FiniteLattice) -> Iterator[np.ndarray]:
    """Every involutive order-reversing map on ``L``, by backtracking."""
    n = L.size
    leq = L.leq
    c = [-1] * n

    def consistent(x):
        for y in range(n):
            if c[y] >= 0 and leq[x, y] != leq[c[y], c[x]]:
                return False
        return True

    def rec(x):
        if x == n:
            yield np.array(c)
            return
        if c[x] >= 0:
            yield from rec(x + 1)
            return
        for v in range(n):
            if c[v] >= 0 and not (v == x):
                continue
            c[x], c[v] = v, x
            if consistent(x) and consistent(v):
                yield from rec(x + 1)
            c[x] = -1
            c[v] = -1

    yield from rec(0)


def small_distributive_lattices(max_size: int, max_points: int = 5) -> list[FiniteLattice]:
    """Down-set lattices of labeled posets on at most ``max_points`` points, smallest first.

    Complete up to isomorphism for lattice sizes ``<= max_points + 1``; chains of
    every size up to ``max_size`` are added so that size ``max_points + 2`` is
    covered too (the only distributive lattice there with more join-irreducibles
    is the chain).
    """
    seen = {}
    for k in range(0, max_points + 1):
        for R in enumerate_preorders(k):
            if not is_antisymmetric(R):
                continue
            L, _ = downset_lattice(R)
            if L.size > max_size:
                continue
            key = _shape_key(L)
            seen.setdefault(key, L)
    for s in range(1, max_size + 1):
        L = chain_lattice(s)
        seen.setdefault(_shape_key(L), L)
    return sorted(seen.values(), key=lambda L: L.size)


def _shape_key(L: FiniteLattice):
    """Isomorphism-invariant fingerprint; exact for the tiny lattices used here."""
    rank = L.leq.sum(axis=0)
    up = L.leq.sum(axis=1)
    cov = L.covers.astype(int)
    profile = sorted(zip(rank.tolist(), up.tolist(), cov.sum(axis=0).tolist(), cov.sum(axis=1).tolist()))
    return (L.size, tuple(profile), _canon_matrix(L))


def _canon_matrix(L: FiniteLattice):
    n = L.size
    if n > 8:
        return None
    best = None
    m = L.leq
    order = np.argsort(m.sum(axis=0), kind="stable")
    # permutations consistent with rank keep this cheap for n <= 8
    ranks = m.sum(axis=0)
    groups = {}
    for i in order:
        groups.setdefault(int(ranks[i]), []).append(int(i))
    keys = sorted(groups)
    for combo in _product(*(permutations(groups[k]) for k in keys)):
        perm = [i for grp in combo for i in grp]
        code = m[np.ix_(perm, perm)].tobytes()
        if best is None or code < best:
            best = code
    return best


def kleene_algebras(max_size: int, max_points: int = 5) -> Iterator[DeMorganAlgebra]:
    """All Kleene algebras on small distributive lattices, smallest lattices first."""
    for L in small_distributive_lattices(max_size, max_points):
        assert distributivity_witness(L) is None
        for neg in demorgan_negations(L):
            A = DeMorganAlgebra(L, neg)
            if verify_kleene(A):
                yield A


def smallest_kleene_failing_M(max_size: int = 7) -> DeMorganAlgebra | None:
    for A in kleene_algebras(max_size):
        if not condition_M(A):
            return A
    return None


def crown_kleene_algebra() -> DeMorganAlgebra:
    """Kleene algebra whose join-irreducibles form the 2+2 crown ``p*, q* < p, q``.

    Condition (M) fails at ``(p, q)``: nothing in ``J`` lies between.
    """
    order = build_relation(
        ["ps", "qs", "p", "q"],
        [("ps", "p"), ("ps", "q"), ("qs", "p"), ("qs", "q")],
        "reflexive_transitive",
    )
    return downset_algebra(order, {"ps": "p", "p": "ps", "qs": "q", "q": "qs"})
