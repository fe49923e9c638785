"""Rough-set approximations of a relation and the lattice RS of all rough sets.

Subsets of the universe are bitsets (see :mod:`roughnelson.relations`). A
:class:`RoughPair` sorts lexicographically on ``(lower, upper)`` as integers,
which is a linear extension of the coordinatewise order.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

import numpy as np

from . import relations as rel
from .algebra import DeMorganAlgebra
from .errors import CapacityError, ConsistencyError, InputError, RelationClassError
from .lattice import FiniteLattice, validate_lattice
from .relations import BinaryRelation, popcount

DEFAULT_BRUTE_FORCE_BOUND = 20
BRUTE_FORCE_ENV = "ROUGHNELSON_BRUTE_BOUND"

J_MINUS, J_STAR, J_PLUS = "J-", "J*", "J+"


def brute_force_bound() -> int:
    raw = os.environ.get(BRUTE_FORCE_ENV)
    return int(raw) if raw else DEFAULT_BRUTE_FORCE_BOUND


class RoughPair(NamedTuple):
    lower: int
    upper: int

    def __le__(self, other):  # coordinatewise, not the tuple order
        return self.lower & ~other.lower == 0 and self.upper & ~other.upper == 0

    def __lt__(self, other):
        return self != other and self <= other

    def __ge__(self, other):
        return other <= self

    def __gt__(self, other):
        return other < self

    def sort_key(self):
        return (self.lower, self.upper)

    def join(self, other) -> RoughPair:
        return RoughPair(self.lower | other.lower, self.upper | other.upper)

    def meet(self, other) -> RoughPair:
        return RoughPair(self.lower & other.lower, self.upper & other.upper)


def _subset(R: BinaryRelation, X) -> int:
    if isinstance(X, (int, np.integer)) and not isinstance(X, bool):
        if X < 0 or X & ~R.universe.full:
            raise InputError("subset bitset contains elements outside the universe")
        return int(X)
    return R.universe.mask(X)


def _require_nonempty(R: BinaryRelation):
    if R.size == 0:
        raise InputError("rough-set operations need a non-empty universe")


def _require_quasiorder(R: BinaryRelation):
    if not rel.is_quasiorder(R):
        raise RelationClassError("relation is not a quasiorder (reflexive and transitive)")


def lower_mask(R: BinaryRelation, X: int) -> int:
    return sum(1 << i for i, r in enumerate(R.rows) if r & ~X == 0)


def upper_mask(R: BinaryRelation, X: int) -> int:
    return sum(1 << i for i, r in enumerate(R.rows) if r & X)


def lower_approx(R: BinaryRelation, X) -> frozenset[str]:
    """``{x | R(x) is a subset of X}``."""
    _require_nonempty(R)
    return R.universe.names(lower_mask(R, _subset(R, X)))


def upper_approx(R: BinaryRelation, X) -> frozenset[str]:
    """``{x | R(x) meets X}``."""
    _require_nonempty(R)
    return R.universe.names(upper_mask(R, _subset(R, X)))


def rough_pair(R: BinaryRelation, X) -> RoughPair:
    _require_nonempty(R)
    m = _subset(R, X)
    return RoughPair(lower_mask(R, m), upper_mask(R, m))


def format_set(universe: rel.Universe, mask: int) -> str:
    if mask == 0:
        return "∅"
    return "{" + ",".join(universe.sorted_names(mask)) + "}"


def format_pair(universe: rel.Universe, p: RoughPair) -> str:
    return f"({format_set(universe, p.lower)}, {format_set(universe, p.upper)})"


# -- the lattice RS ----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class RoughSetLattice:
    relation: BinaryRelation
    pairs: tuple[RoughPair, ...]

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __contains__(self, p):
        return p in self._index

    @cached_property
    def _index(self) -> dict[RoughPair, int]:
        return {p: i for i, p in enumerate(self.pairs)}

    def index(self, p: RoughPair) -> int:
        try:
            return self._index[p]
        except KeyError:
            raise InputError(f"{p} is not a member of this rough-set lattice") from None

    @property
    def universe(self) -> rel.Universe:
        return self.relation.universe

    @property
    def bottom(self) -> RoughPair:
        return RoughPair(0, 0)

    @property
    def top(self) -> RoughPair:
        full = self.universe.full
        return RoughPair(full, full)

    def names(self) -> list[str]:
        return [format_pair(self.universe, p) for p in self.pairs]

    @cached_property
    def leq(self) -> np.ndarray:
        lo = np.array([p.lower for p in self.pairs], dtype=object)
        up = np.array([p.upper for p in self.pairs], dtype=object)
        below = ((lo[:, None] & ~lo[None, :]) == 0) & ((up[:, None] & ~up[None, :]) == 0)
        return below.astype(bool)

    @cached_property
    def lattice(self) -> FiniteLattice:
        return validate_lattice(self.names(), self.leq)

    def is_chain(self) -> bool:
        return all(a <= b for a, b in zip(self.pairs, self.pairs[1:]))

    def to_json(self) -> list[dict]:
        u = self.universe
        return [{"lower": u.sorted_names(p.lower), "upper": u.sorted_names(p.upper)} for p in self.pairs]


def _canonical(R: BinaryRelation, pairs: Iterable[RoughPair]) -> RoughSetLattice:
    return RoughSetLattice(R, tuple(sorted(set(pairs), key=RoughPair.sort_key)))


def enumerate_rs_bruteforce(R: BinaryRelation, bound: int | None = None) -> RoughSetLattice:
    """``{A(X) | X subset of U}`` by approximating every subset."""
    _require_nonempty(R)
    _require_quasiorder(R)
    bound = brute_force_bound() if bound is None else bound
    n = R.size
    if n > bound:
        raise CapacityError(
            f"universe of size {n} exceeds the brute-force bound {bound}; use enumerate_rs_generated"
        )
    X = np.arange(1 << n, dtype=np.int64)
    lower = np.zeros_like(X)
    upper = np.zeros_like(X)
    for i, r in enumerate(R.rows):
        lower |= np.where((X & r) == r, 1 << i, 0)
        upper |= np.where((X & r) != 0, 1 << i, 0)
    found = set(zip(lower.tolist(), upper.tolist()))
    return _canonical(R, (RoughPair(a, b) for a, b in found))


def rs_join_irreducibles(R: BinaryRelation) -> list[tuple[RoughPair, str]]:
    """Join-irreducibles of RS with their class tag ``J-``, ``J*`` or ``J+``.

    ``(empty, {x}^up)`` for ``|R(x)| >= 2`` are in ``J-``; ``(R(x), R(x)^up)`` is in
    ``J+`` when ``|R(x)| >= 2`` and in ``J*`` when ``R(x) = {x}``.
    """
    _require_nonempty(R)
    _require_quasiorder(R)
    tagged: dict[RoughPair, str] = {}
    for x, row in enumerate(R.rows):
        big = popcount(row) >= 2
        if big:
            tagged[RoughPair(0, R.cols[x])] = J_MINUS
        tagged[RoughPair(row, upper_mask(R, row))] = J_PLUS if big else J_STAR
    return sorted(tagged.items(), key=lambda kv: kv[0].sort_key())


def _downsets(items: list[RoughPair]):
    """Yield the down-closed subfamilies of ``items`` (given in a linear extension)."""
    below = [[i for i in range(k) if items[i] < items[k]] for k in range(len(items))]
    chosen = [False] * len(items)

    def rec(k):
        if k == len(items):
            yield [items[i] for i in range(k) if chosen[i]]
            return
        chosen[k] = False
        yield from rec(k + 1)
        if all(chosen[i] for i in below[k]):
            chosen[k] = True
            yield from rec(k + 1)
            chosen[k] = False

    yield from rec(0)


def enumerate_rs_generated(R: BinaryRelation) -> RoughSetLattice:
    """RS as the joins of down-closed families of its join-irreducibles."""
    jis = [p for p, _ in rs_join_irreducibles(R)]
    out = set()
    for family in _downsets(jis):
        lo = up = 0
        for p in family:
            lo |= p.lower
            up |= p.upper
        out.add(RoughPair(lo, up))
    return _canonical(R, out)


def enumerate_rs(R: BinaryRelation, method: str = "generated") -> RoughSetLattice:
    if method == "brute":
        return enumerate_rs_bruteforce(R)
    if method == "generated":
        return enumerate_rs_generated(R)
    if method == "both":
        a, b = enumerate_rs_bruteforce(R), enumerate_rs_generated(R)
        if a.pairs != b.pairs:
            raise ConsistencyError("generated and brute-force enumerations of RS differ")
        return b
    raise InputError(f"unknown enumeration method {method!r}")


def rs_negation(L: RoughSetLattice, p: RoughPair) -> RoughPair:
    """``c(A(X)) = A(X')``, computed as ``(upper', lower')``."""
    if p not in L:
        raise InputError(f"{p} is not a member of this rough-set lattice")
    full = L.universe.full
    q = RoughPair(full & ~p.upper, full & ~p.lower)
    if q not in L:
        raise RelationClassError("negation left RS; the relation is not a quasiorder")
    return q


def negation_table(L: RoughSetLattice) -> np.ndarray:
    return np.array([L.index(rs_negation(L, p)) for p in L.pairs], dtype=np.int64)


def stone_pseudocomplements(L: RoughSetLattice, p: RoughPair) -> tuple[RoughPair, RoughPair]:
    """Pseudocomplement and dual pseudocomplement of ``p`` in RS of an equivalence."""
    if not rel.is_equivalence(L.relation):
        raise RelationClassError("Stone pseudocomplements are defined here only for equivalences")
    if p not in L:
        raise InputError(f"{p} is not a member of this rough-set lattice")
    full = L.universe.full
    pc = RoughPair(full & ~p.upper, full & ~p.upper)
    dpc = RoughPair(full & ~p.lower, full & ~p.lower)
    bottom, top = L.bottom, L.top
    disjoint = [q for q in L.pairs if p.meet(q) == bottom]
    covering = [q for q in L.pairs if p.join(q) == top]
    if pc not in disjoint or not all(q <= pc for q in disjoint):
        raise RelationClassError(f"{pc} is not the pseudocomplement of {p}")
    if dpc not in covering or not all(dpc <= q for q in covering):
        raise RelationClassError(f"{dpc} is not the dual pseudocomplement of {p}")
    return pc, dpc


@dataclass(frozen=True)
class Decomposition:
    parts: tuple[tuple[frozenset[str], RoughSetLattice], ...]
    total: int  # |RS(R)|

    @property
    def product_size(self) -> int:
        return math.prod(len(rs) for _, rs in self.parts)

    @property
    def verified(self) -> bool:
        return self.product_size == self.total


def decompose(R: BinaryRelation) -> Decomposition:
    """RS of each connected component, with the product-cardinality check."""
    _require_nonempty(R)
    if not rel.is_left_total(R):
        raise RelationClassError("decomposition requires a left-total relation")
    parts = []
    for comp in rel.connected_components(R):
        sub = rel.restrict(R, comp)
        parts.append((comp, enumerate_rs_generated(sub)))
    return Decomposition(tuple(parts), len(enumerate_rs_generated(R)))


def verify_rs_closure(L: RoughSetLattice) -> bool:
    """Every pair of members has its coordinatewise union and intersection in RS."""
    members = L._index
    return all(p.join(q) in members and p.meet(q) in members for p in L.pairs for q in L.pairs)


def rs_algebra(L: RoughSetLattice) -> DeMorganAlgebra:
    """RS as a De Morgan algebra over its materialized lattice."""
    return DeMorganAlgebra(L.lattice, negation_table(L))
